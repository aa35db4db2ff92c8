#include "cobkit/cob1.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace cobkit {

namespace {

struct CompPoints {
    std::vector<int> ins;
    std::vector<int> outs;
};

std::vector<CompPoints> gather_points(const Cobordism1& c) {
    std::vector<CompPoints> pts(c.comp_count);
    for (int i = 0; i < c.l_m.dom; ++i) pts[c.l_m(i)].ins.push_back(i);
    for (int i = 0; i < c.l_n.dom; ++i) pts[c.l_n(i)].outs.push_back(i);
    return pts;
}

// Classifies one component, or returns nullopt when it fits none of the
// five legal shapes.
std::optional<CompKind1> classify(const Cobordism1& c, const CompPoints& p) {
    if (p.ins.size() == 2 && p.outs.empty()) {
        if (c.m.signs[p.ins[0]] != c.m.signs[p.ins[1]]) return CompKind1::cap;
        return std::nullopt;
    }
    if (p.outs.size() == 2 && p.ins.empty()) {
        if (c.n.signs[p.outs[0]] != c.n.signs[p.outs[1]]) return CompKind1::cup;
        return std::nullopt;
    }
    if (p.ins.size() == 1 && p.outs.size() == 1) {
        Sign sm = c.m.signs[p.ins[0]];
        if (sm != c.n.signs[p.outs[0]]) return std::nullopt;
        return sm == Sign::plus ? CompKind1::strand_plus : CompKind1::strand_minus;
    }
    if (p.ins.empty() && p.outs.empty()) return CompKind1::loop;
    return std::nullopt;
}

}  // namespace

std::vector<std::string> validate(const Cobordism1& c) {
    std::vector<std::string> violations;
    if (c.l_m.dom != c.m.size())
        violations.push_back("l_m domain is " + std::to_string(c.l_m.dom) + ", expected " +
                             std::to_string(c.m.size()));
    if (c.l_n.dom != c.n.size())
        violations.push_back("l_n domain is " + std::to_string(c.l_n.dom) + ", expected " +
                             std::to_string(c.n.size()));
    if (c.l_m.cod != c.comp_count || c.l_n.cod != c.comp_count)
        violations.push_back("attachment codomain differs from component count");
    for (int v : c.l_m.tab)
        if (v < 0 || v >= c.comp_count) {
            violations.push_back("non-total map: l_m entry " + std::to_string(v));
            return violations;
        }
    for (int v : c.l_n.tab)
        if (v < 0 || v >= c.comp_count) {
            violations.push_back("non-total map: l_n entry " + std::to_string(v));
            return violations;
        }
    if (!violations.empty()) return violations;

    auto pts = gather_points(c);
    for (int x = 0; x < c.comp_count; ++x) {
        const auto& p = pts[x];
        if (classify(c, p)) continue;
        std::string where = "component " + std::to_string(x) + ": ";
        if (p.ins.size() == 2 && p.outs.empty())
            violations.push_back(where + "two incoming points of the same sign");
        else if (p.outs.size() == 2 && p.ins.empty())
            violations.push_back(where + "two outgoing points of the same sign");
        else if (p.ins.size() == 1 && p.outs.size() == 1)
            violations.push_back(where + "through-strand endpoints have different signs");
        else
            violations.push_back(where + "carries " + std::to_string(p.ins.size()) +
                                 " incoming and " + std::to_string(p.outs.size()) +
                                 " outgoing points");
    }
    return violations;
}

std::vector<CompKind1> component_kinds(const Cobordism1& c) {
    if (auto violations = validate(c); !violations.empty())
        throw std::invalid_argument("invalid 1-cobordism: " + violations.front());
    auto pts = gather_points(c);
    std::vector<CompKind1> kinds(c.comp_count);
    for (int x = 0; x < c.comp_count; ++x) kinds[x] = *classify(c, pts[x]);
    return kinds;
}

Cobordism1 identity1(const SignedSet& s) {
    int n = s.size();
    return Cobordism1{s, s, n, identity_map(n), identity_map(n)};
}

Cobordism1 disjoint_union1(const Cobordism1& c1, const Cobordism1& c2) {
    SignedSet m = c1.m;
    m.signs.insert(m.signs.end(), c2.m.signs.begin(), c2.m.signs.end());
    SignedSet n = c1.n;
    n.signs.insert(n.signs.end(), c2.n.signs.begin(), c2.n.signs.end());
    return Cobordism1{std::move(m), std::move(n), c1.comp_count + c2.comp_count,
                      disjoint_union_map(c1.l_m, c2.l_m),
                      disjoint_union_map(c1.l_n, c2.l_n)};
}

Cobordism1 compose_pushout(const Cobordism1& f, const Cobordism1& g) {
    if (f.n != g.m)
        throw std::invalid_argument("compose: signed boundary mismatch");
    PushoutResult po = pushout(Span{f.l_n, g.l_m});
    Cobordism1 result{f.m, g.n, po.size, compose_maps(f.l_m, po.into_left),
                      compose_maps(g.l_n, po.into_right)};
    if (auto violations = validate(result); !violations.empty())
        throw std::logic_error("compose_pushout produced an invalid cobordism: " +
                               violations.front());
    return result;
}

int loops(const Cobordism1& c) {
    std::vector<char> hit(c.comp_count, 0);
    for (int v : c.l_m.tab) hit[v] = 1;
    for (int v : c.l_n.tab) hit[v] = 1;
    int count = 0;
    for (int x = 0; x < c.comp_count; ++x)
        if (!hit[x]) ++count;
    return count;
}

namespace {

struct Endpoint {
    bool on_out;  // false: incoming boundary, true: outgoing boundary
    int idx;
};

// partner_in[i] / partner_out[j]: the other endpoint of the component the
// point sits on; loops contribute nothing.
struct Partners {
    std::vector<Endpoint> in;
    std::vector<Endpoint> out;
};

Partners partners(const Cobordism1& c) {
    auto pts = gather_points(c);
    Partners p;
    p.in.resize(c.m.size());
    p.out.resize(c.n.size());
    for (const auto& cp : pts) {
        std::vector<Endpoint> ends;
        for (int i : cp.ins) ends.push_back({false, i});
        for (int j : cp.outs) ends.push_back({true, j});
        if (ends.size() != 2) continue;
        auto store = [&](Endpoint at, Endpoint other) {
            if (at.on_out)
                p.out[at.idx] = other;
            else
                p.in[at.idx] = other;
        };
        store(ends[0], ends[1]);
        store(ends[1], ends[0]);
    }
    return p;
}

}  // namespace

Cobordism1 compose_execution(const Cobordism1& f, const Cobordism1& g) {
    if (f.n != g.m)
        throw std::invalid_argument("compose: signed boundary mismatch");
    if (auto violations = validate(f); !violations.empty())
        throw std::invalid_argument("compose_execution: invalid left factor: " + violations.front());
    if (auto violations = validate(g); !violations.empty())
        throw std::invalid_argument("compose_execution: invalid right factor: " + violations.front());

    const Partners pf = partners(f);
    const Partners pg = partners(g);
    const int k = f.n.size();
    std::vector<char> visited(k, 0);
    auto visit = [&](int j) {
        if (visited[j])
            throw std::logic_error("compose_execution: middle point visited twice");
        visited[j] = 1;
    };

    // (endpoint on the composite boundary, endpoint) pairs.
    std::vector<std::pair<Endpoint, Endpoint>> pairs;

    // Enter the middle from the f side at circle j and run until a terminal
    // boundary point shows up.
    auto run_from_f_side = [&](int j) -> Endpoint {
        while (true) {
            visit(j);
            Endpoint q = pg.in[j];
            if (q.on_out) return {true, q.idx};  // lands in n
            visit(q.idx);
            Endpoint r = pf.out[q.idx];
            if (!r.on_out) return {false, r.idx};  // lands in m
            j = r.idx;
        }
    };
    auto run_from_g_side = [&](int j) -> Endpoint {
        while (true) {
            visit(j);
            Endpoint r = pf.out[j];
            if (!r.on_out) return {false, r.idx};
            visit(r.idx);
            Endpoint q = pg.in[r.idx];
            if (q.on_out) return {true, q.idx};
            j = q.idx;
        }
    };

    for (int x = 0; x < f.m.size(); ++x) {
        if (f.m.signs[x] != Sign::plus) continue;
        Endpoint first = pf.in[x];
        Endpoint end = first.on_out ? run_from_f_side(first.idx) : first;
        pairs.push_back({{false, x}, end});
    }
    for (int y = 0; y < g.n.size(); ++y) {
        if (g.n.signs[y] != Sign::minus) continue;
        Endpoint first = pg.out[y];
        Endpoint end = first.on_out ? Endpoint{true, first.idx} : run_from_g_side(first.idx);
        // A cup inside g keeps both points on the outgoing boundary.
        pairs.push_back({{true, y}, end});
    }

    // Unreached middle points form alternating cup/cap cycles: new loops.
    int new_loops = 0;
    for (int j0 = 0; j0 < k; ++j0) {
        if (visited[j0]) continue;
        int cur = j0;
        do {
            visit(cur);
            Endpoint q = pg.in[cur];
            if (q.on_out)
                throw std::logic_error("compose_execution: boundary point in a middle cycle");
            visit(q.idx);
            Endpoint r = pf.out[q.idx];
            if (!r.on_out)
                throw std::logic_error("compose_execution: boundary point in a middle cycle");
            cur = r.idx;
        } while (cur != j0);
        ++new_loops;
    }

    const int total_loops = new_loops + loops(f) + loops(g);
    const int comp_count = static_cast<int>(pairs.size()) + total_loops;
    std::vector<int> lm(f.m.size());
    std::vector<int> ln(g.n.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (Endpoint ep : {pairs[p].first, pairs[p].second}) {
            if (ep.on_out)
                ln[ep.idx] = static_cast<int>(p);
            else
                lm[ep.idx] = static_cast<int>(p);
        }
    }
    Cobordism1 result{f.m, g.n, comp_count,
                      FinMap(f.m.size(), comp_count, std::move(lm)),
                      FinMap(g.n.size(), comp_count, std::move(ln))};
    if (auto violations = validate(result); !violations.empty())
        throw std::logic_error("compose_execution produced an invalid cobordism: " +
                               violations.front());
    return result;
}

MatchingView to_matching(const Cobordism1& c) {
    if (auto violations = validate(c); !violations.empty())
        throw std::invalid_argument("to_matching: invalid cobordism: " + violations.front());

    // Domain: m+ then n-, codomain: n+ then m-, each ascending.
    std::vector<int> dom_pos_in(c.m.size(), -1), dom_pos_out(c.n.size(), -1);
    std::vector<int> cod_pos_in(c.m.size(), -1), cod_pos_out(c.n.size(), -1);
    int dom_size = 0, cod_size = 0;
    for (int i = 0; i < c.m.size(); ++i)
        if (c.m.signs[i] == Sign::plus) dom_pos_in[i] = dom_size++;
    for (int j = 0; j < c.n.size(); ++j)
        if (c.n.signs[j] == Sign::minus) dom_pos_out[j] = dom_size++;
    for (int j = 0; j < c.n.size(); ++j)
        if (c.n.signs[j] == Sign::plus) cod_pos_out[j] = cod_size++;
    for (int i = 0; i < c.m.size(); ++i)
        if (c.m.signs[i] == Sign::minus) cod_pos_in[i] = cod_size++;

    const Partners p = partners(c);
    std::vector<int> tab(dom_size, -1);
    auto codomain_position = [&](Endpoint ep) {
        return ep.on_out ? cod_pos_out[ep.idx] : cod_pos_in[ep.idx];
    };
    for (int i = 0; i < c.m.size(); ++i)
        if (dom_pos_in[i] >= 0) tab[dom_pos_in[i]] = codomain_position(p.in[i]);
    for (int j = 0; j < c.n.size(); ++j)
        if (dom_pos_out[j] >= 0) tab[dom_pos_out[j]] = codomain_position(p.out[j]);

    return MatchingView{FinMap(dom_size, cod_size, std::move(tab)), loops(c)};
}

Cobordism1 from_matching(const MatchingView& mv, const SignedSet& m, const SignedSet& n) {
    std::vector<Endpoint> dom_points, cod_points;
    for (int i = 0; i < m.size(); ++i)
        if (m.signs[i] == Sign::plus) dom_points.push_back({false, i});
    for (int j = 0; j < n.size(); ++j)
        if (n.signs[j] == Sign::minus) dom_points.push_back({true, j});
    for (int j = 0; j < n.size(); ++j)
        if (n.signs[j] == Sign::plus) cod_points.push_back({true, j});
    for (int i = 0; i < m.size(); ++i)
        if (m.signs[i] == Sign::minus) cod_points.push_back({false, i});

    if (mv.loops < 0 || mv.bijection.dom != static_cast<int>(dom_points.size()) ||
        mv.bijection.cod != static_cast<int>(cod_points.size()) ||
        mv.bijection.dom != mv.bijection.cod || !is_injective(mv.bijection))
        throw std::invalid_argument("from_matching: not a bijection for these boundaries");

    const int comp_count = mv.bijection.dom + mv.loops;
    std::vector<int> lm(m.size());
    std::vector<int> ln(n.size());
    for (int d = 0; d < mv.bijection.dom; ++d) {
        for (Endpoint ep : {dom_points[d], cod_points[mv.bijection(d)]}) {
            if (ep.on_out)
                ln[ep.idx] = d;
            else
                lm[ep.idx] = d;
        }
    }
    Cobordism1 result{m, n, comp_count, FinMap(m.size(), comp_count, std::move(lm)),
                      FinMap(n.size(), comp_count, std::move(ln))};
    if (auto violations = validate(result); !violations.empty())
        throw std::invalid_argument("from_matching: resulting cobordism is invalid: " +
                                    violations.front());
    return result;
}

Cobordism2 phi_to_2cob(const Cobordism1& c) {
    auto kinds = component_kinds(c);
    std::vector<long long> genus(c.comp_count, 0);
    for (int x = 0; x < c.comp_count; ++x)
        if (kinds[x] == CompKind1::loop) genus[x] = 1;
    return Cobordism2{c.m.size(), c.n.size(), c.comp_count, c.l_m, c.l_n, std::move(genus)};
}

bool is_cofibration1(const Cobordism1& c) {
    for (CompKind1 k : component_kinds(c))
        if (k == CompKind1::cup) return false;
    return true;
}

bool is_fibration1(const Cobordism1& c) {
    for (CompKind1 k : component_kinds(c))
        if (k == CompKind1::cap || k == CompKind1::loop) return false;
    return true;
}

Factorization1 factorize1(const Cobordism1& c) {
    auto kinds = component_kinds(c);
    auto pts = gather_points(c);

    std::vector<int> a_comps, b_comps, k_comps;
    std::vector<int> pos_a(c.comp_count, -1), pos_b(c.comp_count, -1);
    SignedSet middle;
    for (int x = 0; x < c.comp_count; ++x) {
        bool in_a = kinds[x] == CompKind1::cap || kinds[x] == CompKind1::loop ||
                    kinds[x] == CompKind1::strand_plus || kinds[x] == CompKind1::strand_minus;
        bool in_b = kinds[x] == CompKind1::cup || kinds[x] == CompKind1::strand_plus ||
                    kinds[x] == CompKind1::strand_minus;
        if (in_a) {
            pos_a[x] = static_cast<int>(a_comps.size());
            a_comps.push_back(x);
        }
        if (in_b) {
            pos_b[x] = static_cast<int>(b_comps.size());
            b_comps.push_back(x);
        }
        if (in_a && in_b) {
            k_comps.push_back(x);
            middle.signs.push_back(c.m.signs[pts[x].ins[0]]);
        }
    }
    const int k = static_cast<int>(k_comps.size());

    std::vector<int> cofib_lm(c.m.size());
    for (int i = 0; i < c.m.size(); ++i) cofib_lm[i] = pos_a[c.l_m(i)];
    std::vector<int> cofib_ln(k), fib_lm(k);
    for (int j = 0; j < k; ++j) {
        cofib_ln[j] = pos_a[k_comps[j]];
        fib_lm[j] = pos_b[k_comps[j]];
    }
    std::vector<int> fib_ln(c.n.size());
    for (int i = 0; i < c.n.size(); ++i) fib_ln[i] = pos_b[c.l_n(i)];

    const int a_size = static_cast<int>(a_comps.size());
    const int b_size = static_cast<int>(b_comps.size());
    Cobordism1 cofib{c.m, middle, a_size, FinMap(c.m.size(), a_size, std::move(cofib_lm)),
                     FinMap(k, a_size, std::move(cofib_ln))};
    Cobordism1 fib{middle, c.n, b_size, FinMap(k, b_size, std::move(fib_lm)),
                   FinMap(c.n.size(), b_size, std::move(fib_ln))};
    return Factorization1{std::move(cofib), std::move(fib), std::move(middle)};
}

namespace {

struct CanonicalForm1 {
    std::vector<Sign> m_signs;
    std::vector<Sign> n_signs;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> boundary_components;
    int loop_count = 0;

    bool operator==(const CanonicalForm1&) const = default;
};

CanonicalForm1 canonical_form1(const Cobordism1& c) {
    auto pts = gather_points(c);
    CanonicalForm1 form;
    form.m_signs = c.m.signs;
    form.n_signs = c.n.signs;
    std::vector<std::pair<int, int>> order;
    for (int x = 0; x < c.comp_count; ++x) {
        if (pts[x].ins.empty() && pts[x].outs.empty())
            ++form.loop_count;
        else
            order.emplace_back(pts[x].ins.empty() ? c.m.size() + pts[x].outs.front()
                                                  : pts[x].ins.front(),
                               x);
    }
    std::sort(order.begin(), order.end());
    for (auto [key, x] : order)
        form.boundary_components.emplace_back(pts[x].ins, pts[x].outs);
    return form;
}

}  // namespace

bool strict_equals1(const Cobordism1& c1, const Cobordism1& c2) {
    return canonical_form1(c1) == canonical_form1(c2);
}

std::optional<LaxEquivalence1Witness> lax_equivalent1(const Cobordism1& c1,
                                                      const Cobordism1& c2) {
    if (c1.m != c2.m || c1.n != c2.n || c1.comp_count != c2.comp_count)
        return std::nullopt;

    auto kinds1 = component_kinds(c1);
    auto kinds2 = component_kinds(c2);
    std::map<CompKind1, std::vector<int>> by_kind1, by_kind2;
    for (int x = 0; x < c1.comp_count; ++x) by_kind1[kinds1[x]].push_back(x);
    for (int x = 0; x < c2.comp_count; ++x) by_kind2[kinds2[x]].push_back(x);
    for (auto& [kind, comps] : by_kind1)
        if (by_kind2[kind].size() != comps.size()) return std::nullopt;

    auto pts1 = gather_points(c1);
    auto pts2 = gather_points(c2);
    std::vector<int> chi(c1.comp_count), phi(c1.m.size()), psi(c1.n.size());
    auto wire = [&](const std::vector<Sign>& signs, const std::vector<int>& a,
                    const std::vector<int>& b, std::vector<int>& out) {
        // Both lists carry one point per sign or a single same-signed point;
        // match sign to sign.
        for (int pa : a)
            for (int pb : b)
                if (signs[pa] == signs[pb]) out[pa] = pb;
    };
    for (auto& [kind, comps1] : by_kind1) {
        const auto& comps2 = by_kind2[kind];
        for (std::size_t i = 0; i < comps1.size(); ++i) {
            int x1 = comps1[i], x2 = comps2[i];
            chi[x1] = x2;
            wire(c1.m.signs, pts1[x1].ins, pts2[x2].ins, phi);
            wire(c1.n.signs, pts1[x1].outs, pts2[x2].outs, psi);
        }
    }

    LaxEquivalence1Witness w{FinMap(c1.m.size(), c1.m.size(), std::move(phi)),
                             FinMap(c1.n.size(), c1.n.size(), std::move(psi)),
                             FinMap(c1.comp_count, c1.comp_count, std::move(chi))};
    if (compose_maps(w.phi, c2.l_m) != compose_maps(c1.l_m, w.chi) ||
        compose_maps(w.psi, c2.l_n) != compose_maps(c1.l_n, w.chi))
        throw std::logic_error("lax_equivalent1: constructed witness fails its equations");
    for (int i = 0; i < c1.m.size(); ++i)
        if (c1.m.signs[i] != c2.m.signs[w.phi(i)])
            throw std::logic_error("lax_equivalent1: witness is not sign-preserving");
    return w;
}

Cobordism1 permutation_cobordism1(const SignedSet& dom, const FinMap& tau) {
    if (tau.dom != dom.size())
        throw std::invalid_argument("permutation_cobordism1: size mismatch");
    FinMap inv = inverse_permutation(tau);
    SignedSet cod;
    cod.signs.resize(dom.signs.size());
    for (int i = 0; i < tau.dom; ++i) cod.signs[tau(i)] = dom.signs[i];
    return Cobordism1{dom, std::move(cod), tau.dom, identity_map(tau.dom), std::move(inv)};
}

FinMap align_factorizations1(const Factorization1& f1, const Factorization1& f2) {
    if (f1.middle.size() != f2.middle.size())
        throw std::invalid_argument("align_factorizations1: middle sizes differ");

    // In a fibration every middle point rides a through-strand; the strand's
    // outgoing endpoint identifies it.
    auto middle_keys = [](const Factorization1& f) {
        auto pts = gather_points(f.fib);
        std::vector<int> keys(f.middle.size());
        for (int i = 0; i < f.middle.size(); ++i) {
            const auto& outs = pts[f.fib.l_m(i)].outs;
            if (outs.size() != 1)
                throw std::invalid_argument(
                    "align_factorizations1: right factor is not a fibration");
            keys[i] = outs[0];
        }
        return keys;
    };

    auto keys1 = middle_keys(f1);
    auto keys2 = middle_keys(f2);
    std::map<int, int> index2;
    for (int j = 0; j < f2.middle.size(); ++j)
        if (!index2.emplace(keys2[j], j).second)
            throw std::logic_error("align_factorizations1: ambiguous alignment");

    std::vector<int> tau(f1.middle.size());
    for (int i = 0; i < f1.middle.size(); ++i) {
        auto it = index2.find(keys1[i]);
        if (it == index2.end())
            throw std::invalid_argument("align_factorizations1: no alignment exists");
        tau[i] = it->second;
    }
    FinMap result(f1.middle.size(), f2.middle.size(), std::move(tau));

    Cobordism1 perm = permutation_cobordism1(f1.middle, result);
    if (perm.n != f2.middle ||
        !strict_equals1(compose_pushout(f1.cofib, perm), f2.cofib) ||
        !strict_equals1(compose_pushout(perm, f2.fib), f1.fib))
        throw std::invalid_argument("align_factorizations1: no alignment exists");
    return result;
}

Cobordism1 lift1(const Cobordism1& e, const Cobordism1& m, const Cobordism1& u,
                 const Cobordism1& v) {
    if (!is_cofibration1(e)) throw std::invalid_argument("lift1: e is not a cofibration");
    if (!is_fibration1(m)) throw std::invalid_argument("lift1: m is not a fibration");
    if (e.m != u.m || e.n != v.m || u.n != m.m || v.n != m.n)
        throw std::invalid_argument("lift1: boundary mismatch in the square");
    if (!strict_equals1(compose_pushout(e, v), compose_pushout(u, m)))
        throw std::invalid_argument("lift1: square does not commute");

    Factorization1 fu = factorize1(u);
    Factorization1 fv = factorize1(v);
    Factorization1 through_v{compose_pushout(e, fv.cofib), fv.fib, fv.middle};
    Factorization1 through_u{fu.cofib, compose_pushout(fu.fib, m), fu.middle};
    FinMap tau = align_factorizations1(through_v, through_u);
    return compose_pushout(fv.cofib,
                           compose_pushout(permutation_cobordism1(fv.middle, tau), fu.fib));
}

}  // namespace cobkit
