#include "cobkit/cob2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cobkit {

std::vector<std::string> validate(const Cobordism2& c) {
    std::vector<std::string> violations;
    if (c.m < 0 || c.n < 0 || c.comp_count < 0) violations.push_back("negative size");
    if (c.l_m.dom != c.m)
        violations.push_back("l_m domain is " + std::to_string(c.l_m.dom) + ", expected " +
                             std::to_string(c.m));
    if (c.l_n.dom != c.n)
        violations.push_back("l_n domain is " + std::to_string(c.l_n.dom) + ", expected " +
                             std::to_string(c.n));
    if (c.l_m.cod != c.comp_count)
        violations.push_back("non-total map: l_m codomain differs from component count");
    if (c.l_n.cod != c.comp_count)
        violations.push_back("non-total map: l_n codomain differs from component count");
    for (int v : c.l_m.tab)
        if (v < 0 || v >= c.comp_count) {
            violations.push_back("non-total map: l_m entry " + std::to_string(v));
            break;
        }
    for (int v : c.l_n.tab)
        if (v < 0 || v >= c.comp_count) {
            violations.push_back("non-total map: l_n entry " + std::to_string(v));
            break;
        }
    if (static_cast<int>(c.genus.size()) != c.comp_count)
        violations.push_back("genus table length differs from component count");
    for (std::size_t x = 0; x < c.genus.size(); ++x)
        if (c.genus[x] < 0)
            violations.push_back("component " + std::to_string(x) + ": negative genus");
    return violations;
}

Cobordism2 identity2(int n) {
    return Cobordism2{n, n, n, identity_map(n), identity_map(n),
                      std::vector<long long>(n, 0)};
}

std::pair<Cobordism2, CompositionWitness> compose_with_witness(const Cobordism2& f,
                                                               const Cobordism2& g) {
    if (f.n != g.m)
        throw std::invalid_argument("compose: boundary mismatch (" + std::to_string(f.n) +
                                    " outgoing vs " + std::to_string(g.m) + " incoming)");
    Span span{f.l_n, g.l_m};
    PushoutResult po = pushout(span);

    // g(x) = 1 + sum_A (g1 - 1) + sum_B (g2 - 1) + #{middle circles over x}
    std::vector<long long> genus(po.size, 1);
    for (int a = 0; a < f.comp_count; ++a) genus[po.into_left(a)] += f.genus[a] - 1;
    for (int b = 0; b < g.comp_count; ++b) genus[po.into_right(b)] += g.genus[b] - 1;
    for (int z = 0; z < f.n; ++z) genus[po.into_left(f.l_n(z))] += 1;

    Cobordism2 result{f.m, g.n, po.size, compose_maps(f.l_m, po.into_left),
                      compose_maps(g.l_n, po.into_right), std::move(genus)};
    CompositionWitness witness{po, f.n, f.l_n, g.l_m};
    return {std::move(result), std::move(witness)};
}

Cobordism2 compose(const Cobordism2& f, const Cobordism2& g) {
    return compose_with_witness(f, g).first;
}

std::vector<int> closed_surfaces(const Cobordism2& c) {
    std::vector<char> hit(c.comp_count, 0);
    for (int v : c.l_m.tab) hit[v] = 1;
    for (int v : c.l_n.tab) hit[v] = 1;
    std::vector<int> closed;
    for (int x = 0; x < c.comp_count; ++x)
        if (!hit[x]) closed.push_back(x);
    return closed;
}

bool is_cofibration(const Cobordism2& c) {
    return is_injective(c.l_n) && find_lift(c.l_m, c.l_n).has_value();
}

bool is_fibration(const Cobordism2& c) {
    if (!is_injective(c.l_m) || !is_surjective(c.l_n)) return false;
    for (int i = 0; i < c.m; ++i)
        if (c.genus[c.l_m(i)] != 0) return false;
    return true;
}

Cobordism2 disjoint_union(const Cobordism2& c1, const Cobordism2& c2) {
    std::vector<long long> genus = c1.genus;
    genus.insert(genus.end(), c2.genus.begin(), c2.genus.end());
    return Cobordism2{c1.m + c2.m, c1.n + c2.n, c1.comp_count + c2.comp_count,
                      disjoint_union_map(c1.l_m, c2.l_m),
                      disjoint_union_map(c1.l_n, c2.l_n), std::move(genus)};
}

Cobordism2 eta(int n) {
    std::vector<int> tab(2 * n);
    for (int x = 0; x < 2 * n; ++x) tab[x] = x % n;
    return Cobordism2{0, 2 * n, n, FinMap(0, n, {}), FinMap(2 * n, n, std::move(tab)),
                      std::vector<long long>(n, 0)};
}

Cobordism2 epsilon(int n) {
    std::vector<int> tab(2 * n);
    for (int x = 0; x < 2 * n; ++x) tab[x] = x % n;
    return Cobordism2{2 * n, 0, n, FinMap(2 * n, n, std::move(tab)), FinMap(0, n, {}),
                      std::vector<long long>(n, 0)};
}

Factorization2 factorize(const Cobordism2& c) {
    if (auto violations = validate(c); !violations.empty())
        throw std::invalid_argument("factorize: invalid cobordism: " + violations.front());

    std::vector<char> in_im(c.comp_count, 0);
    std::vector<char> out_im(c.comp_count, 0);
    for (int v : c.l_m.tab) in_im[v] = 1;
    for (int v : c.l_n.tab) out_im[v] = 1;

    // A = im(l_m) plus closed surfaces, B = im(l_n), K = the overlap,
    // each listed in ascending component order.
    std::vector<int> a_comps, b_comps, k_comps;
    std::vector<int> pos_a(c.comp_count, -1);
    std::vector<int> pos_b(c.comp_count, -1);
    for (int x = 0; x < c.comp_count; ++x) {
        if (in_im[x] || !out_im[x]) {
            pos_a[x] = static_cast<int>(a_comps.size());
            a_comps.push_back(x);
        }
        if (out_im[x]) {
            pos_b[x] = static_cast<int>(b_comps.size());
            b_comps.push_back(x);
        }
        if (in_im[x] && out_im[x]) k_comps.push_back(x);
    }
    const int k = static_cast<int>(k_comps.size());
    const int a_size = static_cast<int>(a_comps.size());
    const int b_size = static_cast<int>(b_comps.size());

    std::vector<int> cofib_lm(c.m);
    for (int i = 0; i < c.m; ++i) cofib_lm[i] = pos_a[c.l_m(i)];
    std::vector<int> cofib_ln(k);
    std::vector<int> fib_lm(k);
    for (int j = 0; j < k; ++j) {
        cofib_ln[j] = pos_a[k_comps[j]];
        fib_lm[j] = pos_b[k_comps[j]];
    }
    std::vector<int> fib_ln(c.n);
    for (int i = 0; i < c.n; ++i) fib_ln[i] = pos_b[c.l_n(i)];

    std::vector<long long> cofib_genus(a_size);
    for (int a = 0; a < a_size; ++a) cofib_genus[a] = c.genus[a_comps[a]];
    // The composition formula forces genus zero on the shared components.
    std::vector<long long> fib_genus(b_size);
    for (int b = 0; b < b_size; ++b)
        fib_genus[b] = in_im[b_comps[b]] ? 0 : c.genus[b_comps[b]];

    Cobordism2 cofib{c.m, k, a_size, FinMap(c.m, a_size, std::move(cofib_lm)),
                     FinMap(k, a_size, std::move(cofib_ln)), std::move(cofib_genus)};
    Cobordism2 fib{k, c.n, b_size, FinMap(k, b_size, std::move(fib_lm)),
                   FinMap(c.n, b_size, std::move(fib_ln)), std::move(fib_genus)};
    return Factorization2{std::move(cofib), std::move(fib), k};
}

CanonicalForm2 canonical_form(const Cobordism2& c) {
    std::vector<std::vector<int>> ins(c.comp_count);
    std::vector<std::vector<int>> outs(c.comp_count);
    for (int i = 0; i < c.m; ++i) ins[c.l_m(i)].push_back(i);
    for (int i = 0; i < c.n; ++i) outs[c.l_n(i)].push_back(i);

    CanonicalForm2 form;
    form.m = c.m;
    form.n = c.n;
    std::vector<std::pair<int, int>> order;  // (smallest boundary index, component)
    for (int x = 0; x < c.comp_count; ++x) {
        if (ins[x].empty() && outs[x].empty())
            form.closed_genera.push_back(c.genus[x]);
        else
            order.emplace_back(ins[x].empty() ? c.m + outs[x].front() : ins[x].front(), x);
    }
    std::sort(order.begin(), order.end());
    std::sort(form.closed_genera.begin(), form.closed_genera.end());
    for (auto [key, x] : order)
        form.boundary_components.emplace_back(ins[x], outs[x], c.genus[x]);
    return form;
}

bool strict_equals(const Cobordism2& c1, const Cobordism2& c2) {
    return canonical_form(c1) == canonical_form(c2);
}

std::optional<LaxEquivalence2Witness> lax_equivalent(const Cobordism2& c1,
                                                     const Cobordism2& c2) {
    if (c1.m != c2.m || c1.n != c2.n || c1.comp_count != c2.comp_count)
        return std::nullopt;

    // Components are interchangeable exactly when their
    // (genus, in-degree, out-degree) profiles match, because the boundary
    // permutations are otherwise unconstrained.
    auto boundary_lists = [](const Cobordism2& c) {
        std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> r;
        r.first.resize(c.comp_count);
        r.second.resize(c.comp_count);
        for (int i = 0; i < c.m; ++i) r.first[c.l_m(i)].push_back(i);
        for (int i = 0; i < c.n; ++i) r.second[c.l_n(i)].push_back(i);
        return r;
    };
    auto profile_order = [](const Cobordism2& c, const std::vector<std::vector<int>>& ins,
                            const std::vector<std::vector<int>>& outs) {
        std::vector<std::tuple<long long, std::size_t, std::size_t, int>> keys;
        for (int x = 0; x < c.comp_count; ++x)
            keys.emplace_back(c.genus[x], ins[x].size(), outs[x].size(), x);
        std::sort(keys.begin(), keys.end());
        return keys;
    };

    auto [ins1, outs1] = boundary_lists(c1);
    auto [ins2, outs2] = boundary_lists(c2);
    auto keys1 = profile_order(c1, ins1, outs1);
    auto keys2 = profile_order(c2, ins2, outs2);
    for (std::size_t i = 0; i < keys1.size(); ++i) {
        if (std::get<0>(keys1[i]) != std::get<0>(keys2[i]) ||
            std::get<1>(keys1[i]) != std::get<1>(keys2[i]) ||
            std::get<2>(keys1[i]) != std::get<2>(keys2[i]))
            return std::nullopt;
    }

    std::vector<int> chi(c1.comp_count);
    std::vector<int> phi(c1.m);
    std::vector<int> psi(c1.n);
    for (std::size_t i = 0; i < keys1.size(); ++i) {
        int x1 = std::get<3>(keys1[i]);
        int x2 = std::get<3>(keys2[i]);
        chi[x1] = x2;
        for (std::size_t t = 0; t < ins1[x1].size(); ++t) phi[ins1[x1][t]] = ins2[x2][t];
        for (std::size_t t = 0; t < outs1[x1].size(); ++t) psi[outs1[x1][t]] = outs2[x2][t];
    }

    LaxEquivalence2Witness w{FinMap(c1.m, c1.m, std::move(phi)),
                             FinMap(c1.n, c1.n, std::move(psi)),
                             FinMap(c1.comp_count, c1.comp_count, std::move(chi))};
    // Witness equations: l_m'∘φ = χ∘l_m, l_n'∘ψ = χ∘l_n, g'∘χ = g.
    if (compose_maps(w.phi, c2.l_m) != compose_maps(c1.l_m, w.chi) ||
        compose_maps(w.psi, c2.l_n) != compose_maps(c1.l_n, w.chi))
        throw std::logic_error("lax_equivalent: constructed witness fails its equations");
    for (int x = 0; x < c1.comp_count; ++x)
        if (c2.genus[w.chi(x)] != c1.genus[x])
            throw std::logic_error("lax_equivalent: constructed witness fails genus equation");
    return w;
}

Cobordism2 permutation_cobordism(const FinMap& tau) {
    FinMap inv = inverse_permutation(tau);
    return Cobordism2{tau.dom, tau.dom, tau.dom, identity_map(tau.dom), std::move(inv),
                      std::vector<long long>(tau.dom, 0)};
}

namespace {

// Middle circle i of a factorization sits on a unique fibration component,
// identified by that component's set of outgoing circles.
std::vector<std::vector<int>> middle_keys(const Factorization2& f) {
    std::vector<std::vector<int>> outs(f.fib.comp_count);
    for (int i = 0; i < f.fib.n; ++i) outs[f.fib.l_n(i)].push_back(i);
    std::vector<std::vector<int>> keys(f.middle);
    for (int i = 0; i < f.middle; ++i) keys[i] = outs[f.fib.l_m(i)];
    return keys;
}

}  // namespace

FinMap align_factorizations(const Factorization2& f1, const Factorization2& f2) {
    if (f1.middle != f2.middle)
        throw std::invalid_argument("align_factorizations: middle sizes differ");

    auto keys1 = middle_keys(f1);
    auto keys2 = middle_keys(f2);
    std::map<std::vector<int>, int> index2;
    for (int j = 0; j < f2.middle; ++j)
        if (!index2.emplace(keys2[j], j).second)
            throw std::logic_error("align_factorizations: ambiguous alignment");

    std::vector<int> tau(f1.middle);
    for (int i = 0; i < f1.middle; ++i) {
        auto it = index2.find(keys1[i]);
        if (it == index2.end())
            throw std::invalid_argument("align_factorizations: no alignment exists");
        tau[i] = it->second;
    }
    FinMap result(f1.middle, f2.middle, std::move(tau));

    Cobordism2 perm = permutation_cobordism(result);
    if (!strict_equals(compose(f1.cofib, perm), f2.cofib) ||
        !strict_equals(compose(perm, f2.fib), f1.fib))
        throw std::invalid_argument("align_factorizations: no alignment exists");
    return result;
}

Cobordism2 lift(const Cobordism2& e, const Cobordism2& m, const Cobordism2& u,
                const Cobordism2& v) {
    if (!is_cofibration(e)) throw std::invalid_argument("lift: e is not a cofibration");
    if (!is_fibration(m)) throw std::invalid_argument("lift: m is not a fibration");
    if (e.m != u.m || e.n != v.m || u.n != m.m || v.n != m.n)
        throw std::invalid_argument("lift: boundary mismatch in the square");
    if (!strict_equals(compose(e, v), compose(u, m)))
        throw std::invalid_argument("lift: square does not commute");

    // Factor both routes through the square and align their middles; the
    // diagonal is cofactor-of-v, middle permutation, then fib-factor-of-u.
    Factorization2 fu = factorize(u);
    Factorization2 fv = factorize(v);
    Factorization2 through_v{compose(e, fv.cofib), fv.fib, fv.middle};
    Factorization2 through_u{fu.cofib, compose(fu.fib, m), fu.middle};
    FinMap tau = align_factorizations(through_v, through_u);
    return compose(fv.cofib, compose(permutation_cobordism(tau), fu.fib));
}

}  // namespace cobkit
