#pragma once

#include <cstdint>
#include <utility>

#include "cobkit/cob1.hpp"
#include "cobkit/cob2.hpp"

namespace cobkit {

/// Fixed 64-bit mixing generator (splitmix-style), so generated fixtures are
/// reproducible across platforms. The state update and output mix are part
/// of the contract; see README.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); 0 when n <= 0.
    int below(int n) { return n <= 0 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    /// Bernoulli draw with probability p.
    bool chance(double p) {
        return p > 0.0 && static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }
};

struct GenParams {
    int max_circles = 6;
    int max_components = 4;
    long long max_genus = 3;
    double loop_rate = 0.25;
    std::uint64_t seed = 0;
};

struct Square2 {
    Cobordism2 e;  // cofibration X -> Y
    Cobordism2 m;  // fibration X' -> Y'
    Cobordism2 u;  // X -> X'
    Cobordism2 v;  // Y -> Y'
    Cobordism2 w;  // the planted diagonal Y -> X'
};

struct Square1 {
    Cobordism1 e;
    Cobordism1 m;
    Cobordism1 u;
    Cobordism1 v;
    Cobordism1 w;
};

Cobordism2 gen_cobordism2(int m, int n, const GenParams& p);
Cobordism2 gen_cofibration2(int m, const GenParams& p);
Cobordism2 gen_fibration2(int n, const GenParams& p);
Square2 gen_square2(const GenParams& p);

SignedSet gen_signed_set(int max_points, const GenParams& p);
/// A signed set composable after `left` as the codomain of a 1-cobordism:
/// the sign surplus is repaired to match left's.
SignedSet gen_signed_set_matching(const SignedSet& left, int max_points, const GenParams& p);

Cobordism1 gen_cobordism1(const SignedSet& m, const SignedSet& n, const GenParams& p);
Cobordism1 gen_cofibration1(const SignedSet& m, const GenParams& p);
Cobordism1 gen_fibration1_from(const SignedSet& m, const GenParams& p);
std::pair<Cobordism1, Cobordism1> gen_composable_pair1(const GenParams& p);
Square1 gen_square1(const GenParams& p);

}  // namespace cobkit
