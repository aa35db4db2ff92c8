#pragma once

// Shared test helpers: literal-style builders, an independent pushout
// oracle, and exhaustive enumerators for small instances. Everything here
// is test-only and deliberately avoids the library's union-find path where
// it acts as an oracle.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobkit/cob1.hpp"
#include "cobkit/cob2.hpp"
#include "cobkit/finset.hpp"

namespace support {

inline void require_assigned(int v) {
    if (v < 0) throw std::invalid_argument("builder: unassigned boundary index");
}

struct Comp2 {
    long long genus = 0;
    std::vector<int> ins;
    std::vector<int> outs;
};

inline cobkit::Cobordism2 build2(int m, int n, const std::vector<Comp2>& comps) {
    std::vector<int> lm(m, -1), ln(n, -1);
    std::vector<long long> genus;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (int i : comps[c].ins) lm[i] = static_cast<int>(c);
        for (int j : comps[c].outs) ln[j] = static_cast<int>(c);
        genus.push_back(comps[c].genus);
    }
    for (int v : lm) require_assigned(v);
    for (int v : ln) require_assigned(v);
    const int count = static_cast<int>(comps.size());
    return cobkit::Cobordism2{m, n, count, cobkit::FinMap(m, count, lm),
                              cobkit::FinMap(n, count, ln), genus};
}

inline cobkit::SignedSet signs(const std::string& s) {
    cobkit::SignedSet set;
    for (char ch : s) {
        if (ch != '+' && ch != '-') throw std::invalid_argument("signs: use '+' and '-'");
        set.signs.push_back(ch == '+' ? cobkit::Sign::plus : cobkit::Sign::minus);
    }
    return set;
}

struct Comp1 {
    std::vector<int> ins;
    std::vector<int> outs;
};

inline cobkit::Cobordism1 build1(const std::string& m, const std::string& n,
                                 const std::vector<Comp1>& comps, int loop_count = 0) {
    cobkit::SignedSet ms = signs(m), ns = signs(n);
    std::vector<int> lm(ms.size(), -1), ln(ns.size(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (int i : comps[c].ins) lm[i] = static_cast<int>(c);
        for (int j : comps[c].outs) ln[j] = static_cast<int>(c);
    }
    for (int v : lm) require_assigned(v);
    for (int v : ln) require_assigned(v);
    const int count = static_cast<int>(comps.size()) + loop_count;
    return cobkit::Cobordism1{ms, ns, count, cobkit::FinMap(ms.size(), count, lm),
                              cobkit::FinMap(ns.size(), count, ln)};
}

// Independent pushout oracle: repeated label rewriting to a fixed point
// instead of union-find, then the same smallest-representative numbering.
inline cobkit::PushoutResult naive_pushout(const cobkit::Span& s) {
    const int a = s.left.cod;
    const int b = s.right.cod;
    std::vector<int> cls(a + b);
    std::iota(cls.begin(), cls.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int z = 0; z < s.left.dom; ++z) {
            int x = cls[s.left(z)];
            int y = cls[a + s.right(z)];
            if (x == y) continue;
            int lo = std::min(x, y), hi = std::max(x, y);
            for (int& v : cls)
                if (v == hi) v = lo;
            changed = true;
        }
    }
    std::map<int, int> relabel;
    for (int i = 0; i < a + b; ++i)
        if (!relabel.count(cls[i])) relabel.emplace(cls[i], static_cast<int>(relabel.size()));
    std::vector<int> into_left(a), into_right(b);
    for (int i = 0; i < a; ++i) into_left[i] = relabel[cls[i]];
    for (int j = 0; j < b; ++j) into_right[j] = relabel[cls[a + j]];
    const int size = static_cast<int>(relabel.size());
    return cobkit::PushoutResult{size, cobkit::FinMap(a, size, into_left),
                                 cobkit::FinMap(b, size, into_right)};
}

// Set partitions of {0..n-1} as restricted growth strings; blocks come out
// ordered by smallest member. Calls cb(assignment, block_count).
template <typename F>
void for_each_partition(int n, int max_blocks, F&& cb) {
    std::vector<int> rgs(n, 0);
    if (n == 0) {
        cb(rgs, 0);
        return;
    }
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            cb(rgs, used);
            return;
        }
        for (int b = 0; b <= used && b < max_blocks; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
}

template <typename F>
void for_each_vector(int len, long long max_value, F&& cb) {
    std::vector<long long> v(len, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == len) {
            cb(v);
            return;
        }
        for (long long x = 0; x <= max_value; ++x) {
            v[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
}

// Non-decreasing sequences: closed-surface genus multisets.
template <typename F>
void for_each_multiset(int len, long long max_value, F&& cb) {
    std::vector<long long> v(len, 0);
    std::function<void(int, long long)> rec = [&](int i, long long lo) {
        if (i == len) {
            cb(v);
            return;
        }
        for (long long x = lo; x <= max_value; ++x) {
            v[i] = x;
            rec(i + 1, x);
        }
    };
    rec(0, 0);
}

// Ordered injections {0..k-1} -> {0..target-1}.
template <typename F>
void for_each_injection(int k, int target, F&& cb) {
    std::vector<int> pick;
    std::vector<char> used(target, 0);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(pick.size()) == k) {
            cb(pick);
            return;
        }
        for (int t = 0; t < target; ++t) {
            if (used[t]) continue;
            used[t] = 1;
            pick.push_back(t);
            rec();
            pick.pop_back();
            used[t] = 0;
        }
    };
    if (k <= target) rec();
}

// Every 2-cobordism m -> n with at most max_comps components (closed ones
// included) and genus bounded by max_genus, one representative per strict
// equality class.
template <typename F>
void for_each_cob2(int m, int n, int max_comps, long long max_genus, F&& cb) {
    for_each_partition(m + n, max_comps, [&](const std::vector<int>& rgs, int blocks) {
        for (int closed = 0; closed + blocks <= max_comps; ++closed) {
            for_each_vector(blocks, max_genus, [&](const std::vector<long long>& block_genus) {
                for_each_multiset(closed, max_genus, [&](const std::vector<long long>& closed_genus) {
                    const int count = blocks + closed;
                    std::vector<int> lm(m), ln(n);
                    for (int i = 0; i < m; ++i) lm[i] = rgs[i];
                    for (int j = 0; j < n; ++j) ln[j] = rgs[m + j];
                    std::vector<long long> genus = block_genus;
                    genus.insert(genus.end(), closed_genus.begin(), closed_genus.end());
                    cb(cobkit::Cobordism2{m, n, count, cobkit::FinMap(m, count, lm),
                                          cobkit::FinMap(n, count, ln), genus});
                });
            });
        }
    });
}

// Every cofibration m -> k within the bounds, one representative per strict
// class with a labeled middle. Any cofibration's components split into the
// image of the incoming attachment and closed surfaces, so this sweep is
// complete.
template <typename F>
void for_each_cofib2(int m, int k, long long max_genus, int max_closed, F&& cb) {
    for_each_partition(m, m, [&](const std::vector<int>& rgs, int blocks) {
        if (k > blocks) return;
        for_each_injection(k, blocks, [&](const std::vector<int>& ln) {
            for (int closed = 0; closed <= max_closed; ++closed) {
                for_each_vector(blocks, max_genus, [&](const std::vector<long long>& bg) {
                    for_each_multiset(closed, max_genus, [&](const std::vector<long long>& cg) {
                        const int count = blocks + closed;
                        std::vector<int> lm(m);
                        for (int i = 0; i < m; ++i) lm[i] = rgs[i];
                        std::vector<long long> genus = bg;
                        genus.insert(genus.end(), cg.begin(), cg.end());
                        cb(cobkit::Cobordism2{m, k, count, cobkit::FinMap(m, count, lm),
                                              cobkit::FinMap(k, count, ln), genus});
                    });
                });
            }
        });
    });
}

// Every fibration k -> n within the bounds: components are exactly the
// image of the outgoing attachment, the middle attaches injectively, and
// genus vanishes on its image.
template <typename F>
void for_each_fib2(int k, int n, long long max_genus, F&& cb) {
    for_each_partition(n, n, [&](const std::vector<int>& rgs, int blocks) {
        if (k > blocks) return;
        for_each_injection(k, blocks, [&](const std::vector<int>& lm) {
            std::vector<char> on_middle(blocks, 0);
            for (int v : lm) on_middle[v] = 1;
            std::vector<int> free_comps;
            for (int x = 0; x < blocks; ++x)
                if (!on_middle[x]) free_comps.push_back(x);
            for_each_vector(static_cast<int>(free_comps.size()), max_genus,
                            [&](const std::vector<long long>& fg) {
                                std::vector<long long> genus(blocks, 0);
                                for (std::size_t t = 0; t < free_comps.size(); ++t)
                                    genus[free_comps[t]] = fg[t];
                                std::vector<int> ln(n);
                                for (int j = 0; j < n; ++j) ln[j] = rgs[j];
                                cb(cobkit::Cobordism2{k, n, blocks,
                                                      cobkit::FinMap(k, blocks, lm),
                                                      cobkit::FinMap(n, blocks, ln), genus});
                            });
        });
    });
}

// Every oriented 1-cobordism between the given signed boundaries with at
// most max_loops loops: all bijections sources -> sinks.
template <typename F>
void for_each_cob1(const cobkit::SignedSet& m, const cobkit::SignedSet& n, int max_loops,
                   F&& cb) {
    std::vector<std::pair<bool, int>> sources, sinks;
    for (int i = 0; i < m.size(); ++i)
        (m.signs[i] == cobkit::Sign::plus ? sources : sinks).push_back({false, i});
    for (int j = 0; j < n.size(); ++j)
        (n.signs[j] == cobkit::Sign::minus ? sources : sinks).push_back({true, j});
    if (sources.size() != sinks.size()) return;

    std::vector<int> order(sinks.size());
    std::iota(order.begin(), order.end(), 0);
    do {
        for (int loop_count = 0; loop_count <= max_loops; ++loop_count) {
            const int count = static_cast<int>(sources.size()) + loop_count;
            std::vector<int> lm(m.size()), ln(n.size());
            for (std::size_t c = 0; c < sources.size(); ++c) {
                for (auto [on_out, idx] : {sources[c], sinks[order[c]]}) {
                    if (on_out)
                        ln[idx] = static_cast<int>(c);
                    else
                        lm[idx] = static_cast<int>(c);
                }
            }
            cb(cobkit::Cobordism1{m, n, count, cobkit::FinMap(m.size(), count, lm),
                                  cobkit::FinMap(n.size(), count, ln)});
        }
    } while (std::next_permutation(order.begin(), order.end()));
}

// All sign sequences up to the given length.
template <typename F>
void for_each_signed_set(int max_points, F&& cb) {
    for (int len = 0; len <= max_points; ++len) {
        for (int bits = 0; bits < (1 << len); ++bits) {
            cobkit::SignedSet s;
            for (int i = 0; i < len; ++i)
                s.signs.push_back((bits >> i) & 1 ? cobkit::Sign::minus : cobkit::Sign::plus);
            cb(s);
        }
    }
}

// A 2-cobordism lies in the functor image iff every component is a genus-0
// cap, cup or strand shape, or a genus-1 closed surface.
inline bool is_phi_image_shape(const cobkit::Cobordism2& c) {
    std::vector<int> in_deg(c.comp_count, 0), out_deg(c.comp_count, 0);
    for (int v : c.l_m.tab) ++in_deg[v];
    for (int v : c.l_n.tab) ++out_deg[v];
    for (int x = 0; x < c.comp_count; ++x) {
        const long long g = c.genus[x];
        const int i = in_deg[x], o = out_deg[x];
        const bool ok = (i == 2 && o == 0 && g == 0) || (i == 0 && o == 2 && g == 0) ||
                        (i == 1 && o == 1 && g == 0) || (i == 0 && o == 0 && g == 1);
        if (!ok) return false;
    }
    return true;
}

}  // namespace support
