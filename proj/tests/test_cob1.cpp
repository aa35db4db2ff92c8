#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "cobkit/cob1.hpp"
#include "cobkit/gen.hpp"
#include "support.hpp"

using namespace cobkit;
using support::build1;
using support::signs;

namespace {

// The worked oriented composition: a four-point boundary threaded through
// an eight-point middle, closing one loop.
Cobordism1 lower() {
    return build1("+-+-", "++-+--+-",
                  {{{0}, {0}}, {{1}, {5}}, {{2, 3}, {}}, {{}, {1, 2}}, {{}, {3, 4}}, {{}, {6, 7}}});
}

Cobordism1 upper() {
    return build1("++-+--+-", "++--",
                  {{{0}, {0}}, {{1}, {1}}, {{2, 3}, {}}, {{4}, {2}}, {{5}, {3}}, {{6, 7}, {}}});
}

Cobordism1 worked_composite() {
    return build1("+-+-", "++--", {{{0}, {0}}, {{1}, {3}}, {{2, 3}, {}}, {{}, {1, 2}}}, 1);
}

Cobordism1 cup() { return build1("", "+-", {{{}, {0, 1}}}); }
Cobordism1 cap() { return build1("+-", "", {{{0, 1}, {}}}); }

}  // namespace

TEST_CASE("validate and the five shapes") {
    CHECK(validate(identity1(signs("+"))).empty());
    CHECK(validate(lower()).empty());

    // Two same-signed incoming points on one component.
    Cobordism1 bad = build1("++", "", {{{0, 1}, {}}});
    auto violations = validate(bad);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations.front().find("same sign") != std::string::npos);

    auto kinds = component_kinds(worked_composite());
    CHECK(kinds == std::vector<CompKind1>{CompKind1::strand_plus, CompKind1::strand_minus,
                                          CompKind1::cap, CompKind1::cup, CompKind1::loop});
}

TEST_CASE("pushout composition reproduces the worked composite") {
    Cobordism1 result = compose_pushout(lower(), upper());
    CHECK(strict_equals1(result, worked_composite()));
    CHECK(loops(result) == 1);
}

TEST_CASE("cup then cap closes one loop") {
    Cobordism1 result = compose_pushout(cup(), cap());
    CHECK(result.m.size() == 0);
    CHECK(result.n.size() == 0);
    CHECK(loops(result) == 1);
}

TEST_CASE("identity laws") {
    Cobordism1 c = lower();
    CHECK(strict_equals1(compose_pushout(identity1(c.m), c), c));
    CHECK(strict_equals1(compose_pushout(c, identity1(c.n)), c));
    CHECK(identity1(SignedSet{}).comp_count == 0);
    CHECK(strict_equals1(compose_pushout(identity1(signs("+-")), identity1(signs("+-"))),
                         identity1(signs("+-"))));
}

TEST_CASE("signed boundary mismatch is rejected") {
    CHECK_THROWS_AS(compose_pushout(identity1(signs("+")), identity1(signs("-"))),
                    std::invalid_argument);
}

TEST_CASE("execution-formula composition agrees with the pushout") {
    CHECK(strict_equals1(compose_execution(lower(), upper()), worked_composite()));
    CHECK(loops(compose_execution(cup(), cap())) == 1);

    GenParams p;
    p.max_circles = 8;
    for (int trial = 0; trial < 300; ++trial) {
        p.seed = 100000 + trial;
        auto [f, g] = gen_composable_pair1(p);
        Cobordism1 a = compose_pushout(f, g);
        Cobordism1 b = compose_execution(f, g);
        CHECK(strict_equals1(a, b));
        CHECK(loops(a) == loops(b));
    }
}

TEST_CASE("loops") {
    CHECK(loops(identity1(signs("+-"))) == 0);
    CHECK(loops(build1("", "", {}, 3)) == 3);
    CHECK(loops(worked_composite()) == 1);
}

TEST_CASE("matching view") {
    MatchingView mv = to_matching(identity1(signs("+-")));
    CHECK(mv.bijection == identity_map(2));
    CHECK(mv.loops == 0);

    MatchingView worked = to_matching(worked_composite());
    CHECK(worked.loops == 1);
    // Sources: m0, m2, then sinks-side starts t2, t3; targets listed as
    // n+ (t0, t1) then m- (m1, m3).
    CHECK(worked.bijection == FinMap(4, 4, {0, 3, 1, 2}));

    GenParams p;
    p.max_circles = 7;
    for (int trial = 0; trial < 200; ++trial) {
        SplitMix64 rng(300000 + trial);
        p.seed = rng.next();
        SignedSet a = gen_signed_set(7, p);
        p.seed = rng.next();
        SignedSet b = gen_signed_set_matching(a, 7, p);
        p.seed = rng.next();
        Cobordism1 c = gen_cobordism1(a, b, p);
        CHECK(strict_equals1(from_matching(to_matching(c), c.m, c.n), c));
    }
}

TEST_CASE("functor to 2-Cob on generators") {
    CHECK(strict_equals(phi_to_2cob(identity1(signs("+"))), identity2(1)));
    CHECK(strict_equals(phi_to_2cob(cup()), support::build2(0, 2, {{0, {}, {0, 1}}})));
    CHECK(strict_equals(phi_to_2cob(cap()), support::build2(2, 0, {{0, {0, 1}, {}}})));
    // A closed loop maps to the composite of the coevaluation and
    // evaluation tubes, a torus.
    Cobordism1 loop = build1("", "", {}, 1);
    CHECK(strict_equals(phi_to_2cob(loop), compose(eta(1), epsilon(1))));
    CHECK(phi_to_2cob(loop).genus == std::vector<long long>{1});
}

TEST_CASE("functoriality on random pairs") {
    GenParams p;
    for (int trial = 0; trial < 200; ++trial) {
        p.seed = 400000 + trial;
        auto [f, g] = gen_composable_pair1(p);
        CHECK(strict_equals(phi_to_2cob(compose_pushout(f, g)),
                            compose(phi_to_2cob(f), phi_to_2cob(g))));
    }
    CHECK(strict_equals(phi_to_2cob(identity1(signs("+-+"))), identity2(3)));
}

TEST_CASE("class predicates and their 2-Cob agreement") {
    CHECK(is_cofibration1(identity1(signs("+-"))));
    CHECK(is_fibration1(identity1(signs("+-"))));
    CHECK(is_cofibration1(cap()));
    CHECK_FALSE(is_fibration1(cap()));
    CHECK_FALSE(is_cofibration1(cup()));
    CHECK(is_fibration1(cup()));

    GenParams p;
    for (int trial = 0; trial < 200; ++trial) {
        p.seed = 500000 + trial;
        auto [f, g] = gen_composable_pair1(p);
        for (const Cobordism1& c : {f, g}) {
            CHECK(is_cofibration1(c) == is_cofibration(phi_to_2cob(c)));
            CHECK(is_fibration1(c) == is_fibration(phi_to_2cob(c)));
        }
    }
}

TEST_CASE("factorize1 worked examples") {
    {
        Cobordism1 id = identity1(signs("+-"));
        auto f = factorize1(id);
        CHECK(strict_equals1(f.cofib, id));
        CHECK(strict_equals1(f.fib, id));
        CHECK(f.middle == id.m);
    }
    {
        auto f = factorize1(cap());
        CHECK(strict_equals1(f.cofib, cap()));
        CHECK(f.fib.comp_count == 0);
        CHECK(f.middle.size() == 0);
    }
    {
        Cobordism1 c = build1("+-", "+-", {{{0, 1}, {}}, {{}, {0, 1}}});
        auto f = factorize1(c);
        CHECK(strict_equals1(f.cofib, cap()));
        CHECK(strict_equals1(f.fib, cup()));
        CHECK(strict_equals1(compose_pushout(f.cofib, f.fib), c));
    }
}

TEST_CASE("factorize1 commutes with the functor") {
    GenParams p;
    for (int trial = 0; trial < 200; ++trial) {
        p.seed = 600000 + trial;
        auto [c, unused] = gen_composable_pair1(p);
        auto f1 = factorize1(c);
        CHECK(is_cofibration1(f1.cofib));
        CHECK(is_fibration1(f1.fib));
        CHECK(strict_equals1(compose_pushout(f1.cofib, f1.fib), c));
        CHECK(static_cast<int>(f1.middle.signs.size()) ==
              static_cast<int>(factorize(phi_to_2cob(c)).middle));

        auto f2 = factorize(phi_to_2cob(c));
        CHECK(strict_equals(phi_to_2cob(f1.cofib), f2.cofib));
        CHECK(strict_equals(phi_to_2cob(f1.fib), f2.fib));
    }
}

TEST_CASE("lift1 on identity squares") {
    Cobordism1 u = lower();
    CHECK(strict_equals1(lift1(identity1(u.m), identity1(u.n), u, u), u));
}

TEST_CASE("lift1 recovers a planted strand against a cup-augmented fibration") {
    Cobordism1 w = build1("+", "+", {{{0}, {0}}});
    Cobordism1 e = identity1(signs("+"));
    Cobordism1 m = disjoint_union1(identity1(signs("+")), cup());
    Cobordism1 u = compose_pushout(e, w);
    Cobordism1 v = compose_pushout(w, m);
    CHECK(strict_equals1(lift1(e, m, u, v), w));
}

TEST_CASE("lift1 recovers a planted swap behind a cap") {
    Cobordism1 w = build1("++", "++", {{{0}, {1}}, {{1}, {0}}});
    Cobordism1 e = build1("+-++", "++", {{{0, 1}, {}}, {{2}, {0}}, {{3}, {1}}});
    Cobordism1 m = identity1(signs("++"));
    Cobordism1 u = compose_pushout(e, w);
    Cobordism1 v = compose_pushout(w, m);
    CHECK(strict_equals1(lift1(e, m, u, v), w));
}

TEST_CASE("lift1 rejects bad squares") {
    CHECK_THROWS_AS(lift1(cup(), identity1(signs("+-")), cup(), identity1(signs("+-"))),
                    std::invalid_argument);
}

TEST_CASE("strict vs lax equality") {
    Cobordism1 c = lower();
    CHECK(strict_equals1(c, c));

    Cobordism1 caps_a = build1("+-+-", "", {{{0, 1}, {}}, {{2, 3}, {}}});
    Cobordism1 caps_b = build1("+-+-", "", {{{0, 3}, {}}, {{2, 1}, {}}});
    CHECK_FALSE(strict_equals1(caps_a, caps_b));
    CHECK(lax_equivalent1(caps_a, caps_b).has_value());

    Cobordism1 one_loop = build1("", "", {}, 1);
    Cobordism1 two_loops = build1("", "", {}, 2);
    CHECK_FALSE(lax_equivalent1(one_loop, two_loops).has_value());
}

TEST_CASE("disjoint unions interchange with composition") {
    GenParams p;
    p.max_circles = 5;
    for (int trial = 0; trial < 150; ++trial) {
        p.seed = 700000 + trial;
        auto [f1, g1] = gen_composable_pair1(p);
        p.seed = 700000 + trial + 7919;
        auto [f2, g2] = gen_composable_pair1(p);
        CHECK(strict_equals1(compose_pushout(disjoint_union1(f1, f2), disjoint_union1(g1, g2)),
                             disjoint_union1(compose_pushout(f1, g1), compose_pushout(f2, g2))));
    }
}

TEST_CASE("associativity of pushout composition") {
    GenParams p;
    for (int trial = 0; trial < 150; ++trial) {
        SplitMix64 rng(800000 + trial);
        p.seed = rng.next();
        SignedSet a = gen_signed_set(6, p);
        p.seed = rng.next();
        SignedSet b = gen_signed_set_matching(a, 6, p);
        p.seed = rng.next();
        SignedSet c = gen_signed_set_matching(b, 6, p);
        p.seed = rng.next();
        SignedSet d = gen_signed_set_matching(c, 6, p);
        p.seed = rng.next();
        Cobordism1 f = gen_cobordism1(a, b, p);
        p.seed = rng.next();
        Cobordism1 g = gen_cobordism1(b, c, p);
        p.seed = rng.next();
        Cobordism1 h = gen_cobordism1(c, d, p);
        CHECK(strict_equals1(compose_pushout(compose_pushout(f, g), h),
                             compose_pushout(f, compose_pushout(g, h))));
    }
}

TEST_CASE("minimal middle equals the attachment-image overlap") {
    GenParams p;
    for (int trial = 0; trial < 100; ++trial) {
        p.seed = 900000 + trial;
        auto [c, unused] = gen_composable_pair1(p);
        std::vector<char> in_im(c.comp_count, 0), out_im(c.comp_count, 0);
        for (int v : c.l_m.tab) in_im[v] = 1;
        for (int v : c.l_n.tab) out_im[v] = 1;
        int overlap = 0;
        for (int x = 0; x < c.comp_count; ++x)
            if (in_im[x] && out_im[x]) ++overlap;
        CHECK(factorize1(c).middle.size() == overlap);
    }
}
