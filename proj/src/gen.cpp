#include "cobkit/gen.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cobkit {

namespace {

int genus_bound(const GenParams& p) {
    long long g = p.max_genus < 0 ? 0 : p.max_genus;
    return static_cast<int>(std::min<long long>(g, 1 << 20));
}

// Partial Fisher-Yates: leaves a uniform k-prefix of distinct values.
void shuffle_prefix(std::vector<int>& v, int k, SplitMix64& rng) {
    const int n = static_cast<int>(v.size());
    for (int t = 0; t < k && t < n; ++t) std::swap(v[t], v[t + rng.below(n - t)]);
}

std::vector<int> iota_vector(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

Cobordism2 gen_cobordism2_rng(int m, int n, const GenParams& p, SplitMix64& rng) {
    const int maxc = std::max(1, p.max_components);
    const int comp_count = (m + n > 0) ? 1 + rng.below(maxc) : rng.below(maxc + 1);
    std::vector<int> lm(m), ln(n);
    for (int i = 0; i < m; ++i) lm[i] = rng.below(comp_count);
    for (int i = 0; i < n; ++i) ln[i] = rng.below(comp_count);
    std::vector<long long> genus(comp_count);
    for (auto& g : genus) g = rng.below(genus_bound(p) + 1);
    return Cobordism2{m, n, comp_count, FinMap(m, comp_count, std::move(lm)),
                      FinMap(n, comp_count, std::move(ln)), std::move(genus)};
}

Cobordism2 gen_cofibration2_rng(int m, const GenParams& p, SplitMix64& rng) {
    const int maxc = std::max(1, p.max_components);
    const int hit = m > 0 ? 1 + rng.below(std::min(maxc, m)) : 0;

    std::vector<int> lm(m);
    for (int i = 0; i < m; ++i) lm[i] = rng.below(hit);
    std::vector<int> slots = iota_vector(m);
    shuffle_prefix(slots, hit, rng);
    for (int t = 0; t < hit; ++t) lm[slots[t]] = t;  // forces surjectivity onto the hit part

    const int k = rng.below(hit + 1);
    std::vector<int> targets = iota_vector(hit);
    shuffle_prefix(targets, k, rng);
    std::vector<int> ln(targets.begin(), targets.begin() + k);

    const int closed = rng.chance(p.loop_rate) ? 1 + rng.below(2) : 0;
    const int comp_count = hit + closed;
    std::vector<long long> genus(comp_count);
    for (auto& g : genus) g = rng.below(genus_bound(p) + 1);
    return Cobordism2{m, k, comp_count, FinMap(m, comp_count, std::move(lm)),
                      FinMap(k, comp_count, std::move(ln)), std::move(genus)};
}

Cobordism2 gen_fibration2_rng(int n, const GenParams& p, SplitMix64& rng) {
    const int maxc = std::max(1, p.max_components);
    const int comp_count = n > 0 ? 1 + rng.below(std::min(maxc, n)) : 0;

    std::vector<int> ln(n);
    for (int i = 0; i < n; ++i) ln[i] = rng.below(comp_count);
    std::vector<int> slots = iota_vector(n);
    shuffle_prefix(slots, comp_count, rng);
    for (int t = 0; t < comp_count; ++t) ln[slots[t]] = t;

    const int k = rng.below(comp_count + 1);
    std::vector<int> targets = iota_vector(comp_count);
    shuffle_prefix(targets, k, rng);
    std::vector<int> lm(targets.begin(), targets.begin() + k);

    std::vector<long long> genus(comp_count);
    for (auto& g : genus) g = rng.below(genus_bound(p) + 1);
    for (int j = 0; j < k; ++j) genus[lm[j]] = 0;
    return Cobordism2{k, n, comp_count, FinMap(k, comp_count, std::move(lm)),
                      FinMap(n, comp_count, std::move(ln)), std::move(genus)};
}

SignedSet gen_signed_set_rng(int max_points, SplitMix64& rng) {
    SignedSet s;
    const int size = rng.below(max_points + 1);
    s.signs.resize(size);
    for (auto& sign : s.signs) sign = rng.below(2) ? Sign::minus : Sign::plus;
    return s;
}

int sign_surplus(const SignedSet& s) {
    int d = 0;
    for (Sign sign : s.signs) d += sign == Sign::plus ? 1 : -1;
    return d;
}

SignedSet gen_signed_set_matching_rng(const SignedSet& left, int max_points, SplitMix64& rng) {
    const int d = sign_surplus(left);
    const int base = std::abs(d);
    const int room = std::max(0, (max_points - base) / 2);
    const int size = base + 2 * rng.below(room + 1);
    const int pluses = (size + d) / 2;

    SignedSet s;
    s.signs.assign(size, Sign::minus);
    std::vector<int> slots = iota_vector(size);
    shuffle_prefix(slots, pluses, rng);
    for (int t = 0; t < pluses; ++t) s.signs[slots[t]] = Sign::plus;
    return s;
}

int draw_loops(const GenParams& p, SplitMix64& rng) {
    int count = 0;
    while (count < 3 && rng.chance(p.loop_rate)) ++count;
    return count;
}

Cobordism1 gen_cobordism1_rng(const SignedSet& m, const SignedSet& n, const GenParams& p,
                              SplitMix64& rng) {
    // Sources are m+ and n-, sinks are m- and n+; any bijection yields a
    // valid cobordism.
    std::vector<std::pair<bool, int>> sources, sinks;  // (on outgoing boundary, index)
    for (int i = 0; i < m.size(); ++i)
        (m.signs[i] == Sign::plus ? sources : sinks).push_back({false, i});
    for (int j = 0; j < n.size(); ++j)
        (n.signs[j] == Sign::minus ? sources : sinks).push_back({true, j});
    if (sources.size() != sinks.size())
        throw std::invalid_argument("gen_cobordism1: infeasible sign profile");

    std::vector<int> order = iota_vector(static_cast<int>(sinks.size()));
    shuffle_prefix(order, static_cast<int>(order.size()), rng);

    const int strands = static_cast<int>(sources.size());
    const int comp_count = strands + draw_loops(p, rng);
    std::vector<int> lm(m.size()), ln(n.size());
    for (int c = 0; c < strands; ++c) {
        for (auto [on_out, idx] : {sources[c], sinks[order[c]]}) {
            if (on_out)
                ln[idx] = c;
            else
                lm[idx] = c;
        }
    }
    return Cobordism1{m, n, comp_count, FinMap(m.size(), comp_count, std::move(lm)),
                      FinMap(n.size(), comp_count, std::move(ln))};
}

Cobordism1 gen_cofibration1_rng(const SignedSet& m, const GenParams& p, SplitMix64& rng) {
    std::vector<int> mp, mm;
    for (int i = 0; i < m.size(); ++i) (m.signs[i] == Sign::plus ? mp : mm).push_back(i);
    const int caps = rng.below(static_cast<int>(std::min(mp.size(), mm.size())) + 1);
    shuffle_prefix(mp, static_cast<int>(mp.size()), rng);
    shuffle_prefix(mm, static_cast<int>(mm.size()), rng);

    const int through_plus = static_cast<int>(mp.size()) - caps;
    const int through_minus = static_cast<int>(mm.size()) - caps;
    SignedSet n;
    n.signs.assign(through_plus + through_minus, Sign::minus);
    std::vector<int> slots = iota_vector(n.size());
    shuffle_prefix(slots, through_plus, rng);
    for (int t = 0; t < through_plus; ++t) n.signs[slots[t]] = Sign::plus;

    const int comp_count = caps + through_plus + through_minus + draw_loops(p, rng);
    std::vector<int> lm(m.size()), ln(n.size());
    int comp = 0;
    for (int c = 0; c < caps; ++c, ++comp) {
        lm[mp[c]] = comp;
        lm[mm[c]] = comp;
    }
    int next_plus = caps, next_minus = caps;
    for (int j = 0; j < n.size(); ++j, ++comp) {
        ln[j] = comp;
        lm[n.signs[j] == Sign::plus ? mp[next_plus++] : mm[next_minus++]] = comp;
    }
    return Cobordism1{m, std::move(n), comp_count, FinMap(m.size(), comp_count, std::move(lm)),
                      FinMap(through_plus + through_minus, comp_count, std::move(ln))};
}

Cobordism1 gen_fibration1_from_rng(const SignedSet& m, const GenParams&, SplitMix64& rng) {
    const int cups = rng.below(3);
    std::vector<Sign> extra;
    for (int c = 0; c < cups; ++c) {
        extra.push_back(Sign::plus);
        extra.push_back(Sign::minus);
    }
    SignedSet n;
    n.signs = m.signs;
    n.signs.insert(n.signs.end(), extra.begin(), extra.end());
    // Shuffle outgoing positions, then hand them out: one per strand in
    // order, then cup pairs.
    std::vector<int> order = iota_vector(n.size());
    shuffle_prefix(order, n.size(), rng);
    std::vector<int> strand_out(m.size(), -1);
    std::vector<std::vector<int>> remaining(2);  // unassigned positions, by sign
    for (int t = 0; t < n.size(); ++t)
        remaining[n.signs[order[t]] == Sign::plus ? 0 : 1].push_back(order[t]);
    for (int i = 0; i < m.size(); ++i) {
        auto& pool = remaining[m.signs[i] == Sign::plus ? 0 : 1];
        strand_out[i] = pool.back();
        pool.pop_back();
    }

    const int comp_count = m.size() + cups;
    std::vector<int> lm(m.size()), ln(n.size());
    for (int i = 0; i < m.size(); ++i) {
        lm[i] = i;
        ln[strand_out[i]] = i;
    }
    for (int c = 0; c < cups; ++c) {
        int comp = m.size() + c;
        ln[remaining[0][c]] = comp;
        ln[remaining[1][c]] = comp;
    }
    const int out_size = static_cast<int>(ln.size());
    return Cobordism1{m, std::move(n), comp_count,
                      FinMap(m.size(), comp_count, identity_map(m.size()).tab),
                      FinMap(out_size, comp_count, std::move(ln))};
}

}  // namespace

Cobordism2 gen_cobordism2(int m, int n, const GenParams& p) {
    SplitMix64 rng(p.seed);
    return gen_cobordism2_rng(m, n, p, rng);
}

Cobordism2 gen_cofibration2(int m, const GenParams& p) {
    SplitMix64 rng(p.seed);
    return gen_cofibration2_rng(m, p, rng);
}

Cobordism2 gen_fibration2(int n, const GenParams& p) {
    SplitMix64 rng(p.seed);
    return gen_fibration2_rng(n, p, rng);
}

Square2 gen_square2(const GenParams& p) {
    SplitMix64 rng(p.seed);
    const Cobordism2 e = gen_cofibration2_rng(rng.below(p.max_circles + 1), p, rng);
    const Cobordism2 m = gen_fibration2_rng(rng.below(p.max_circles + 1), p, rng);
    const Cobordism2 w = gen_cobordism2_rng(e.n, m.m, p, rng);
    return Square2{e, m, compose(e, w), compose(w, m), w};
}

SignedSet gen_signed_set(int max_points, const GenParams& p) {
    SplitMix64 rng(p.seed);
    return gen_signed_set_rng(max_points, rng);
}

SignedSet gen_signed_set_matching(const SignedSet& left, int max_points, const GenParams& p) {
    SplitMix64 rng(p.seed);
    return gen_signed_set_matching_rng(left, max_points, rng);
}

Cobordism1 gen_cobordism1(const SignedSet& m, const SignedSet& n, const GenParams& p) {
    SplitMix64 rng(p.seed);
    return gen_cobordism1_rng(m, n, p, rng);
}

Cobordism1 gen_cofibration1(const SignedSet& m, const GenParams& p) {
    SplitMix64 rng(p.seed);
    return gen_cofibration1_rng(m, p, rng);
}

Cobordism1 gen_fibration1_from(const SignedSet& m, const GenParams& p) {
    SplitMix64 rng(p.seed);
    return gen_fibration1_from_rng(m, p, rng);
}

std::pair<Cobordism1, Cobordism1> gen_composable_pair1(const GenParams& p) {
    SplitMix64 rng(p.seed);
    const SignedSet a = gen_signed_set_rng(p.max_circles, rng);
    const SignedSet b = gen_signed_set_matching_rng(a, p.max_circles, rng);
    const SignedSet c = gen_signed_set_matching_rng(b, p.max_circles, rng);
    Cobordism1 f = gen_cobordism1_rng(a, b, p, rng);
    Cobordism1 g = gen_cobordism1_rng(b, c, p, rng);
    return {std::move(f), std::move(g)};
}

Square1 gen_square1(const GenParams& p) {
    SplitMix64 rng(p.seed);
    const Cobordism1 e = gen_cofibration1_rng(gen_signed_set_rng(p.max_circles, rng), p, rng);
    const SignedSet xprime = gen_signed_set_matching_rng(e.n, p.max_circles, rng);
    const Cobordism1 w = gen_cobordism1_rng(e.n, xprime, p, rng);
    const Cobordism1 m = gen_fibration1_from_rng(xprime, p, rng);
    return Square1{e, m, compose_pushout(e, w), compose_pushout(w, m), w};
}

}  // namespace cobkit
