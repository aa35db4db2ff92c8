#pragma once

#include <optional>
#include <vector>

namespace cobkit {

/// A total function between finite index sets {0..dom-1} -> {0..cod-1},
/// stored as its value table. The substrate for all boundary-attachment
/// maps.
struct FinMap {
    int dom = 0;
    int cod = 0;
    std::vector<int> tab;

    FinMap() = default;
    FinMap(int dom, int cod, std::vector<int> tab);

    int operator()(int i) const { return tab[static_cast<std::size_t>(i)]; }
    bool operator==(const FinMap&) const = default;
};

FinMap identity_map(int n);

/// g after f; requires f.cod == g.dom.
FinMap compose_maps(const FinMap& f, const FinMap& g);

bool is_injective(const FinMap& f);
bool is_surjective(const FinMap& f);

/// Inverse of a bijection; throws if f is not bijective.
FinMap inverse_permutation(const FinMap& f);

/// Block map on dom1+dom2 -> cod1+cod2, second block offset by (dom1, cod1).
FinMap disjoint_union_map(const FinMap& f1, const FinMap& f2);

/// A span A <- k -> B; left and right share the domain k.
struct Span {
    FinMap left;
    FinMap right;
};

/// A cospan A -> D <- B; left and right share the codomain D.
struct Cospan {
    FinMap left;
    FinMap right;
};

struct PushoutResult {
    int size = 0;        // |C|
    FinMap into_left;    // A -> C
    FinMap into_right;   // B -> C

    bool operator==(const PushoutResult&) const = default;
};

struct PullbackResult {
    int size = 0;        // |k|
    FinMap proj_left;    // k -> A
    FinMap proj_right;   // k -> B

    bool operator==(const PullbackResult&) const = default;
};

/// Canonical pushout C = (A + B)/~ where left(z) ~ right(z), computed by
/// union-find. Classes are numbered in increasing order of their smallest
/// representative in A + B, A elements first.
PushoutResult pushout(const Span& s);

/// Canonical pullback k = {(a,b) : left(a) = right(b)}, ordered
/// lexicographically by (a,b); projections are the coordinate maps.
PullbackResult pullback(const Cospan& c);

/// True iff the square satisfies the pushout universal property, decided by
/// comparison against the canonical pushout up to unique bijection. Throws
/// if the square does not commute.
bool is_pushout_square(const Span& s, const PushoutResult& q);

/// Pullback analogue of is_pushout_square.
bool is_pullback_square(const Cospan& c, const PullbackResult& q);

/// Given f: m -> C and h: n -> C with equal codomains, returns u: n -> m
/// with f∘u = h when im(h) ⊆ im(f), choosing the smallest f-preimage for
/// each point; absent otherwise.
std::optional<FinMap> find_lift(const FinMap& f, const FinMap& h);

}  // namespace cobkit
