#pragma once

#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cobkit/finset.hpp"

namespace cobkit {

/// A 2-cobordism between m incoming and n outgoing boundary circles: a
/// finite set of connected components carrying a genus label, with the two
/// boundary attachment maps.
struct Cobordism2 {
    int m = 0;
    int n = 0;
    int comp_count = 0;
    FinMap l_m;                    // m -> components
    FinMap l_n;                    // n -> components
    std::vector<long long> genus;  // one entry per component

    bool operator==(const Cobordism2&) const = default;
};

/// Everything the composition pushout produced, kept for genus bookkeeping
/// checks: the glued component set with its injections and the two
/// middle-circle attachments.
struct CompositionWitness {
    PushoutResult pushout;
    int middle = 0;
    FinMap middle_attach_left;   // k -> components of the first factor
    FinMap middle_attach_right;  // k -> components of the second factor
};

struct Factorization2 {
    Cobordism2 cofib;
    Cobordism2 fib;
    int middle = 0;
};

/// Boundary-label-preserving normal form: components are identified only by
/// which boundary circles they carry and their genus, so comparing forms
/// decides equality up to component relabeling.
struct CanonicalForm2 {
    int m = 0;
    int n = 0;
    // (sorted in-indices, sorted out-indices, genus), ordered by smallest
    // boundary index (in-circles first).
    std::vector<std::tuple<std::vector<int>, std::vector<int>, long long>> boundary_components;
    std::vector<long long> closed_genera;  // sorted

    friend auto operator<=>(const CanonicalForm2&, const CanonicalForm2&) = default;
};

struct LaxEquivalence2Witness {
    FinMap phi;  // m -> m
    FinMap psi;  // n -> n
    FinMap chi;  // components -> components
};

std::vector<std::string> validate(const Cobordism2& c);

/// Genus-0 tube per circle; the two-sided unit for compose.
Cobordism2 identity2(int n);

/// Gluing composition: the component set is the pushout of the two middle
/// attachments, and the genus of a glued component with parts of total
/// genus G, t parts and s middle circles is G + s - t + 1.
std::pair<Cobordism2, CompositionWitness> compose_with_witness(const Cobordism2& f,
                                                               const Cobordism2& g);
Cobordism2 compose(const Cobordism2& f, const Cobordism2& g);

/// Components hit by no boundary circle.
std::vector<int> closed_surfaces(const Cobordism2& c);

/// Left class: outgoing attachment injective and lifting through the
/// incoming attachment (merging/annihilation components, closed surfaces).
bool is_cofibration(const Cobordism2& c);

/// Right class: incoming attachment injective with genus zero on its image,
/// outgoing attachment surjective (genus-0 splitting and creation
/// components, no closed surfaces).
bool is_fibration(const Cobordism2& c);

Cobordism2 disjoint_union(const Cobordism2& c1, const Cobordism2& c2);

/// Coevaluation 0 -> 2n: n genus-0 components, out-circle x attached to
/// component x mod n.
Cobordism2 eta(int n);
/// Evaluation 2n -> 0, the mirror of eta.
Cobordism2 epsilon(int n);

/// Unique cofibration-fibration factorization. The middle is
/// im(l_m) ∩ im(l_n) in ascending component order; the cofibration keeps
/// the incoming image and the closed surfaces, the fibration keeps the
/// outgoing image with genus zero on the shared part.
Factorization2 factorize(const Cobordism2& c);

CanonicalForm2 canonical_form(const Cobordism2& c);
bool strict_equals(const Cobordism2& c1, const Cobordism2& c2);

/// Equality up to permutations of both boundaries and components.
std::optional<LaxEquivalence2Witness> lax_equivalent(const Cobordism2& c1,
                                                     const Cobordism2& c2);

/// The permutation cobordism of a bijection tau: a genus-0 tube from
/// in-circle i to out-circle tau(i).
Cobordism2 permutation_cobordism(const FinMap& tau);

/// For two factorizations of strictly equal cobordisms, the unique middle
/// bijection tau with compose(f1.cofib, permutation_cobordism(tau)) =
/// f2.cofib and compose(permutation_cobordism(tau), f2.fib) = f1.fib.
/// Throws if no alignment exists.
FinMap align_factorizations(const Factorization2& f1, const Factorization2& f2);

/// Unique diagonal fill-in for a commuting square u∘e = m∘v with e a
/// cofibration and m a fibration: returns w with compose(e, w) = u and
/// compose(w, m) = v.
Cobordism2 lift(const Cobordism2& e, const Cobordism2& m, const Cobordism2& u,
                const Cobordism2& v);

}  // namespace cobkit
