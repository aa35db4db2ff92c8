#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobkit/finset.hpp"
#include "cobkit/cob2.hpp"

namespace cobkit {

enum class Sign : unsigned char { plus, minus };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

struct SignedSet {
    std::vector<Sign> signs;

    SignedSet() = default;
    explicit SignedSet(std::vector<Sign> signs_) : signs(std::move(signs_)) {}

    int size() const { return static_cast<int>(signs.size()); }
    bool operator==(const SignedSet&) const = default;
};

/// An oriented 1-cobordism: signed boundary points attached to components,
/// where every component is one of five shapes — a cap (two incoming points
/// of opposite sign), a cup (two outgoing points of opposite sign), a
/// through-strand joining same-signed points, or a closed loop.
struct Cobordism1 {
    SignedSet m;
    SignedSet n;
    int comp_count = 0;
    FinMap l_m;  // m -> components
    FinMap l_n;  // n -> components

    bool operator==(const Cobordism1&) const = default;
};

enum class CompKind1 : unsigned char { cap, cup, strand_plus, strand_minus, loop };

/// The (loop count, bijection) presentation: a pairing of m+ then n- with
/// n+ then m-, indexed in ascending boundary order on both sides.
struct MatchingView {
    FinMap bijection;
    int loops = 0;
};

struct Factorization1 {
    Cobordism1 cofib;
    Cobordism1 fib;
    SignedSet middle;
};

struct LaxEquivalence1Witness {
    FinMap phi;  // m -> m, sign-preserving
    FinMap psi;  // n -> n, sign-preserving
    FinMap chi;  // components -> components
};

std::vector<std::string> validate(const Cobordism1& c);

/// Component shapes of a valid cobordism; throws on invalid input.
std::vector<CompKind1> component_kinds(const Cobordism1& c);

Cobordism1 identity1(const SignedSet& s);
Cobordism1 disjoint_union1(const Cobordism1& c1, const Cobordism1& c2);

/// Gluing composition via the canonical pushout of the middle attachments.
Cobordism1 compose_pushout(const Cobordism1& f, const Cobordism1& g);

/// The same composition computed by path-following: from each starting
/// point, alternately apply the two pairings through the middle until a
/// terminal point is reached; middle cycles become new loops. Strictly
/// equal to compose_pushout by construction of the pushout.
Cobordism1 compose_execution(const Cobordism1& f, const Cobordism1& g);

/// Number of closed-loop components.
int loops(const Cobordism1& c);

MatchingView to_matching(const Cobordism1& c);
Cobordism1 from_matching(const MatchingView& mv, const SignedSet& m, const SignedSet& n);

/// The functor into 2-Cob: points become circles (signs forgotten), caps,
/// cups and strands become genus-0 components, and a closed loop becomes a
/// closed surface of genus one (the composite of the coevaluation and
/// evaluation tubes), which is what makes the assignment functorial.
Cobordism2 phi_to_2cob(const Cobordism1& c);

/// Left class: no cup components.
bool is_cofibration1(const Cobordism1& c);
/// Right class: no cap components and no loops.
bool is_fibration1(const Cobordism1& c);

/// Cofibration-fibration factorization mirroring the 2-Cob one: the middle
/// is one point per through-strand, signed like the strand.
Factorization1 factorize1(const Cobordism1& c);

bool strict_equals1(const Cobordism1& c1, const Cobordism1& c2);
std::optional<LaxEquivalence1Witness> lax_equivalent1(const Cobordism1& c1,
                                                      const Cobordism1& c2);

/// Strand-only relabeling cobordism of a sign-preserving bijection tau.
Cobordism1 permutation_cobordism1(const SignedSet& dom, const FinMap& tau);

FinMap align_factorizations1(const Factorization1& f1, const Factorization1& f2);

/// Unique diagonal fill-in, as in 2-Cob.
Cobordism1 lift1(const Cobordism1& e, const Cobordism1& m, const Cobordism1& u,
                 const Cobordism1& v);

}  // namespace cobkit
