#include "cobkit/finset.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace cobkit {

FinMap::FinMap(int dom_, int cod_, std::vector<int> tab_)
    : dom(dom_), cod(cod_), tab(std::move(tab_)) {
    if (dom < 0 || cod < 0)
        throw std::invalid_argument("FinMap: negative set size");
    if (static_cast<int>(tab.size()) != dom)
        throw std::invalid_argument("FinMap: table length " + std::to_string(tab.size()) +
                                    " does not match domain size " + std::to_string(dom));
    for (int v : tab)
        if (v < 0 || v >= cod)
            throw std::invalid_argument("FinMap: entry " + std::to_string(v) +
                                        " outside codomain of size " + std::to_string(cod));
}

FinMap identity_map(int n) {
    std::vector<int> tab(n);
    std::iota(tab.begin(), tab.end(), 0);
    return FinMap(n, n, std::move(tab));
}

FinMap compose_maps(const FinMap& f, const FinMap& g) {
    if (f.cod != g.dom)
        throw std::invalid_argument("compose_maps: boundary mismatch (" + std::to_string(f.cod) +
                                    " vs " + std::to_string(g.dom) + ")");
    std::vector<int> tab(f.dom);
    for (int i = 0; i < f.dom; ++i) tab[i] = g.tab[f.tab[i]];
    return FinMap(f.dom, g.cod, std::move(tab));
}

bool is_injective(const FinMap& f) {
    std::vector<char> seen(f.cod, 0);
    for (int v : f.tab) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool is_surjective(const FinMap& f) {
    std::vector<char> seen(f.cod, 0);
    for (int v : f.tab) seen[v] = 1;
    for (char s : seen)
        if (!s) return false;
    return true;
}

FinMap inverse_permutation(const FinMap& f) {
    if (f.dom != f.cod || !is_injective(f))
        throw std::invalid_argument("inverse_permutation: map is not a bijection");
    std::vector<int> tab(f.dom);
    for (int i = 0; i < f.dom; ++i) tab[f.tab[i]] = i;
    return FinMap(f.cod, f.dom, std::move(tab));
}

FinMap disjoint_union_map(const FinMap& f1, const FinMap& f2) {
    std::vector<int> tab;
    tab.reserve(f1.tab.size() + f2.tab.size());
    for (int v : f1.tab) tab.push_back(v);
    for (int v : f2.tab) tab.push_back(v + f1.cod);
    return FinMap(f1.dom + f2.dom, f1.cod + f2.cod, std::move(tab));
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void merge(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

PushoutResult pushout(const Span& s) {
    if (s.left.dom != s.right.dom)
        throw std::invalid_argument("pushout: span legs have different domains");
    const int a = s.left.cod;
    const int b = s.right.cod;

    UnionFind uf(a + b);
    for (int z = 0; z < s.left.dom; ++z) uf.merge(s.left(z), a + s.right(z));

    // Number classes by smallest representative, A elements first.
    std::vector<int> label(a + b, -1);
    int size = 0;
    for (int i = 0; i < a + b; ++i) {
        int r = uf.find(i);
        if (label[r] < 0) label[r] = size++;
    }

    std::vector<int> into_left(a);
    std::vector<int> into_right(b);
    for (int i = 0; i < a; ++i) into_left[i] = label[uf.find(i)];
    for (int j = 0; j < b; ++j) into_right[j] = label[uf.find(a + j)];

    return PushoutResult{size, FinMap(a, size, std::move(into_left)),
                         FinMap(b, size, std::move(into_right))};
}

PullbackResult pullback(const Cospan& c) {
    if (c.left.cod != c.right.cod)
        throw std::invalid_argument("pullback: cospan legs have different codomains");
    std::vector<int> proj_left;
    std::vector<int> proj_right;
    for (int a = 0; a < c.left.dom; ++a)
        for (int b = 0; b < c.right.dom; ++b)
            if (c.left(a) == c.right(b)) {
                proj_left.push_back(a);
                proj_right.push_back(b);
            }
    const int size = static_cast<int>(proj_left.size());
    return PullbackResult{size, FinMap(size, c.left.dom, std::move(proj_left)),
                          FinMap(size, c.right.dom, std::move(proj_right))};
}

bool is_pushout_square(const Span& s, const PushoutResult& q) {
    if (q.into_left.dom != s.left.cod || q.into_right.dom != s.right.cod ||
        q.into_left.cod != q.size || q.into_right.cod != q.size)
        throw std::invalid_argument("is_pushout_square: square shape mismatch");
    if (compose_maps(s.left, q.into_left) != compose_maps(s.right, q.into_right))
        throw std::invalid_argument("is_pushout_square: square does not commute");

    const PushoutResult canon = pushout(s);
    if (q.size != canon.size) return false;

    // The mediating map canon -> q must be well-defined and bijective.
    std::vector<int> med(canon.size, -1);
    auto assign = [&](int cls, int target) {
        if (med[cls] < 0) med[cls] = target;
        return med[cls] == target;
    };
    for (int a = 0; a < s.left.cod; ++a)
        if (!assign(canon.into_left(a), q.into_left(a))) return false;
    for (int b = 0; b < s.right.cod; ++b)
        if (!assign(canon.into_right(b), q.into_right(b))) return false;

    std::vector<char> hit(q.size, 0);
    for (int v : med) {
        if (v < 0 || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

bool is_pullback_square(const Cospan& c, const PullbackResult& q) {
    if (q.proj_left.dom != q.size || q.proj_right.dom != q.size ||
        q.proj_left.cod != c.left.dom || q.proj_right.cod != c.right.dom)
        throw std::invalid_argument("is_pullback_square: square shape mismatch");
    if (compose_maps(q.proj_left, c.left) != compose_maps(q.proj_right, c.right))
        throw std::invalid_argument("is_pullback_square: square does not commute");

    const PullbackResult canon = pullback(c);
    if (q.size != canon.size) return false;

    std::map<std::pair<int, int>, int> pair_index;
    for (int i = 0; i < canon.size; ++i)
        pair_index.emplace(std::make_pair(canon.proj_left(i), canon.proj_right(i)), i);

    std::vector<char> hit(canon.size, 0);
    for (int x = 0; x < q.size; ++x) {
        auto it = pair_index.find({q.proj_left(x), q.proj_right(x)});
        if (it == pair_index.end() || hit[it->second]) return false;
        hit[it->second] = 1;
    }
    return true;
}

std::optional<FinMap> find_lift(const FinMap& f, const FinMap& h) {
    if (f.cod != h.cod) throw std::invalid_argument("find_lift: codomains differ");
    std::vector<int> first(f.cod, -1);
    for (int i = f.dom - 1; i >= 0; --i) first[f.tab[i]] = i;
    std::vector<int> tab(h.dom);
    for (int j = 0; j < h.dom; ++j) {
        int i = first[h.tab[j]];
        if (i < 0) return std::nullopt;
        tab[j] = i;
    }
    return FinMap(h.dom, f.dom, std::move(tab));
}

}  // namespace cobkit
