#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "biell/elliptic.hpp"

using namespace biell;

namespace {
EllipticCurveQ mordell(long s) { return curve_from_coeffs(Int(0), Int(0), Int(s)); }
}  // namespace

TEST_CASE("normalize scales twisted cubics to integral models") {
    // d = 1, x^3 + 9 stays as is
    auto e1 = normalize(Int(1), Poly({Rat(9), Rat(0), Rat(0), Rat(1)}));
    CHECK(e1.a == 0);
    CHECK(e1.b == 0);
    CHECK(e1.c == 9);
    // d = 5, x^3 - x becomes y^2 = x^3 - 25x
    auto e2 = normalize(Int(5), Poly({Rat(0), Rat(-1), Rat(0), Rat(1)}));
    CHECK(e2.a == 0);
    CHECK(e2.b == -25);
    CHECK(e2.c == 0);
    // the recorded map sends curve points to curve points
    // (1, 0) on 5y^2 = x^3 - x maps to (5*1, 25*0)
    CHECK(e2.from_input.xscale == Rat(5));
    CHECK(e2.from_input.yscale == Rat(25));
    // repeated root
    CHECK_THROWS_AS(normalize(Int(1), Poly({Rat(0), Rat(0), Rat(-1), Rat(1)})),
                    SingularCurve);
}

TEST_CASE("group law on y^2 = x^3 + 9") {
    auto e = mordell(9);
    ECPoint p(Rat(-2), Rat(1));
    REQUIRE(on_curve(e, p));
    ECPoint d = add(e, p, p);
    CHECK(d == ECPoint(Rat(40), Rat(-253)));
    CHECK(on_curve(e, d));
    CHECK(add(e, p, ECPoint::infinity()) == p);
    // 2-torsion doubles to O
    auto e125 = mordell(125);
    ECPoint t(Rat(-5), Rat(0));
    CHECK(add(e125, t, t).inf);
}

TEST_CASE("group law properties on searched points") {
    auto e = mordell(17);  // rank 2 curve with many small points
    auto pts = search_points(e, Int(30));
    REQUIRE(pts.size() >= 4);
    // associativity / commutativity on assorted triples
    for (size_t i = 0; i + 2 < pts.size(); ++i) {
        const auto &P = pts[i], &Q = pts[i + 1], &R = pts[i + 2];
        CHECK(add(e, P, Q) == add(e, Q, P));
        CHECK(add(e, add(e, P, Q), R) == add(e, P, add(e, Q, R)));
        CHECK(on_curve(e, add(e, P, Q)));
    }
}

TEST_CASE("discriminant and j-invariant") {
    auto e = curve_from_coeffs(Int(0), Int(-9), Int(0));  // y^2 = x^3 - 9x
    CHECK(e.disc() == 46656);
    CHECK(j_invariant(e) == Rat(1728));
    CHECK(j_invariant(mordell(7)) == Rat(0));
}

TEST_CASE("quadratic twists") {
    auto e = mordell(1);
    auto t5 = quadratic_twist(e, Int(5));
    CHECK(t5.c == 125);
    CHECK(t5.a == 0);
    CHECK(t5.b == 0);
    // twist by 1 is isomorphic
    CHECK(is_isomorphic_over_Q(quadratic_twist(e, Int(1)), e).has_value());
    // twisting twice by t returns an isomorphic curve
    auto back = quadratic_twist(t5, Int(5));
    CHECK(is_isomorphic_over_Q(back, e).has_value());
    // self-twist of y^2 = x^3 - x by -1
    auto cong = curve_from_coeffs(Int(0), Int(-1), Int(0));
    CHECK(is_isomorphic_over_Q(quadratic_twist(cong, Int(-1)), cong).has_value());
    CHECK_THROWS_AS(quadratic_twist(e, Int(12)), ParameterViolation);
}

TEST_CASE("isomorphism testing") {
    auto u1 = is_isomorphic_over_Q(mordell(4), mordell(4));
    REQUIRE(u1.has_value());
    CHECK(u1->u == Rat(1));
    auto u2 = is_isomorphic_over_Q(mordell(1), mordell(64));
    REQUIRE(u2.has_value());
    CHECK(u2->u == Rat(2));
    CHECK_FALSE(is_isomorphic_over_Q(mordell(1), mordell(2)).has_value());
    CHECK_FALSE(is_isomorphic_over_Q(mordell(1), mordell(-1)).has_value());
    // shifted model: Y^2 = (X+1)^3 + 1 is x^3 + 1 with X = x - 1
    auto sh = curve_from_coeffs(Int(3), Int(3), Int(2));
    auto iso = is_isomorphic_over_Q(mordell(1), sh);
    REQUIRE(iso.has_value());
    CHECK(iso->u == Rat(1));
    CHECK(iso->r == Rat(-1));
    // and the recorded map sends points to points: (2, 3) -> (1, 3)
    CHECK(on_curve(sh, ECPoint(iso->u * iso->u * Rat(2) + iso->r,
                               iso->u * iso->u * iso->u * Rat(3))));
}

TEST_CASE("isomorphism is an equivalence on a pool of curves") {
    std::vector<EllipticCurveQ> pool;
    for (long s : {1, 2, 3, 4, 8, 9, 64, -1, -8, 125})
        pool.push_back(mordell(s));
    for (long n : {1, 5, 7})
        pool.push_back(curve_from_coeffs(Int(0), Int(-n * n), Int(0)));
    for (auto t : {2, 3})
        pool.push_back(quadratic_twist(mordell(1), Int(t)));
    for (size_t i = 0; i < pool.size(); ++i) {
        CHECK(is_isomorphic_over_Q(pool[i], pool[i]).has_value());
        for (size_t j = 0; j < pool.size(); ++j) {
            bool ij = is_isomorphic_over_Q(pool[i], pool[j]).has_value();
            bool ji = is_isomorphic_over_Q(pool[j], pool[i]).has_value();
            CHECK(ij == ji);
            if (!ij) continue;
            for (size_t k = 0; k < pool.size(); ++k) {
                bool jk = is_isomorphic_over_Q(pool[j], pool[k]).has_value();
                bool ik = is_isomorphic_over_Q(pool[i], pool[k]).has_value();
                if (jk) CHECK(ik);
            }
        }
    }
}

TEST_CASE("torsion subgroups of Mordell curves") {
    auto t125 = torsion_subgroup(mordell(125));
    CHECK(t125.name() == "Z/2");
    REQUIRE(t125.points.size() == 2);
    CHECK(t125.points[1] == ECPoint(Rat(-5), Rat(0)));

    auto t4 = torsion_subgroup(mordell(4));
    CHECK(t4.name() == "Z/3");
    CHECK(scalar_mul(mordell(4), Int(3), ECPoint(Rat(0), Rat(2))).inf);

    auto t1 = torsion_subgroup(mordell(1));
    CHECK(t1.name() == "Z/6");
    REQUIRE(t1.generators.size() == 1);
    CHECK(point_order(mordell(1), t1.generators[0]) == 6);

    auto tm432 = torsion_subgroup(mordell(-432));
    CHECK(tm432.name() == "Z/3");
}

TEST_CASE("torsion with full 2-torsion") {
    // y^2 = x(x-1)(x+1): Z/2 x Z/2
    auto e = curve_from_coeffs(Int(0), Int(-1), Int(0));
    auto t = torsion_subgroup(e);
    CHECK(t.name() == "Z/2 x Z/2");
    CHECK(t.points.size() == 4);
    // y^2 = (x+2)(x+3)(x+6) has a point of order 4 over the 2-torsion
    auto e2 = curve_from_coeffs(Int(11), Int(36), Int(36));
    auto t2 = torsion_subgroup(e2);
    CHECK(t2.name() == "Z/2 x Z/4");
    CHECK(t2.order() == 8);
}

TEST_CASE("torsion generator orders are exact") {
    for (long s : {1, 4, 125, -432, 16, -27}) {
        auto e = mordell(s);
        auto t = torsion_subgroup(e);
        for (const auto& g : t.generators) {
            int n = point_order(e, g);
            REQUIRE(n > 0);
            for (int m = 1; m < n; ++m)
                CHECK_FALSE(scalar_mul(e, Int(m), g).inf);
            CHECK(scalar_mul(e, Int(n), g).inf);
        }
    }
}

TEST_CASE("mordell torsion classification agrees with the generic machinery") {
    for (long s = -100; s <= 100; ++s) {
        if (s == 0 || !ntheory::is_sixth_power_free(Int(s))) continue;
        auto cls = mordell_torsion_classify(Int(s));
        auto grp = torsion_subgroup(mordell(s));
        INFO("s = ", s);
        CHECK(cls.name() == grp.name());
    }
    CHECK(mordell_torsion_classify(Int(-432)).name() ==
          torsion_subgroup(mordell(-432)).name());
    CHECK(mordell_torsion_classify(Int(2)).name() == "trivial");
}

TEST_CASE("point search finds the expected small points") {
    auto p343 = search_points(mordell(343), Int(100));
    CHECK(std::find(p343.begin(), p343.end(), ECPoint(Rat(21), Rat(98))) !=
          p343.end());
    auto p9 = search_points(mordell(9), Int(10));
    CHECK(std::find(p9.begin(), p9.end(), ECPoint(Rat(-2), Rat(1))) != p9.end());
    auto p2 = search_points(mordell(2), Int(10));
    CHECK(std::find(p2.begin(), p2.end(), ECPoint(Rat(-1), Rat(1))) != p2.end());
    // y^2 = x^3 + 17 has (1/4, 33/8): denominator-2 points are enumerated
    auto p17 = search_points(mordell(17), Int(10));
    CHECK(std::find(p17.begin(), p17.end(), ECPoint(Rat(1, 4), Rat(33, 8))) !=
          p17.end());
    // all returned points lie on the curve and are sorted and unique
    for (size_t i = 0; i < p343.size(); ++i) {
        CHECK(on_curve(mordell(343), p343[i]));
        if (i) CHECK(p343[i - 1] < p343[i]);
        CHECK(sign(p343[i].y) >= 0);
    }
}

TEST_CASE("reduction types") {
    auto e9 = curve_from_coeffs(Int(0), Int(-9), Int(0));
    CHECK(reduction_type(e9, Int(5)) == Reduction::Good);
    CHECK(reduction_type(e9, Int(3)) == Reduction::Additive);
    CHECK(reduction_type(mordell(1), Int(7)) == Reduction::Good);
    CHECK(reduction_type(mordell(1), Int(2)) == Reduction::Additive);
    // multiplicative example: y^2 = x^3 - x^2 (singular)... use y^2 = x^3 + x^2 - x,
    // disc = ... pick the classical y^2 = x^3 - x + 1? Simpler known case:
    // y^2 = x(x-1)(x+1) at p = 2: disc = 64, c4 = 16*3 -> v2(c4) = 4 ... additive.
    // y^2 = x^3 + x^2 - 2x: roots 0, 1, -2: disc nonzero; at p = 3:
    auto em = curve_from_coeffs(Int(1), Int(-2), Int(0));
    CHECK(divides(Int(3), em.disc()));
    CHECK(reduction_type(em, Int(3)) == Reduction::Multiplicative);
    // scaled-up model minimalizes back before classification
    auto big = curve_from_coeffs(Int(25 * 1), Int(-2 * 625), Int(0));
    CHECK(reduction_type(big, Int(5)) == reduction_type(em, Int(5)));
}

TEST_CASE("twisting introduces additive reduction at twist primes") {
    auto e = mordell(1);  // disc -432 = -2^4 3^3
    for (long t : {5, 7, 35}) {
        auto tw = quadratic_twist(e, Int(t));
        for (const auto& [p, ex] : ntheory::factorize(Int(t)).factors) {
            (void)ex;
            if (divides(p, 6 * e.disc())) continue;
            CHECK(reduction_type(tw, p) == Reduction::Additive);
        }
    }
}
