#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "biell/families.hpp"

using namespace biell;
using namespace biell::families;

TEST_CASE("g2-no2tors instances") {
    auto i1 = g2_no_two_torsion(Int(2), Int(1));
    CHECK(i1.curve.str() == "y^2 = x^6 + 2");
    REQUIRE(i1.factors.size() == 2);
    CHECK(std::get<EllipticCurveQ>(i1.factors[1].model) ==
          curve_from_coeffs(Int(0), Int(0), Int(4)));
    REQUIRE(i1.expected_rank.value.has_value());
    CHECK(*i1.expected_rank.value == 0);
    CHECK(i1.expected_rank.provenance == Provenance::Literature);

    auto i2 = g2_no_two_torsion(Int(3), Int(2));
    CHECK(i2.curve.str() == "y^2 = x^6 + 24");
    CHECK(std::get<EllipticCurveQ>(i2.factors[1].model) ==
          curve_from_coeffs(Int(0), Int(0), Int(9)));

    CHECK_THROWS_AS(g2_no_two_torsion(Int(8), Int(1)), ParameterViolation);
    CHECK_THROWS_AS(g2_no_two_torsion(Int(2), Int(12)), ParameterViolation);
}

TEST_CASE("g2-no2tors fixed factor is m-independent") {
    EllipticCurveQ first;
    bool have = false;
    for (long m : {1L, 2L, 3L, 5L, -1L}) {
        auto inst = g2_no_two_torsion(Int(3), Int(m));
        auto e = std::get<EllipticCurveQ>(inst.factors[1].model);
        if (!have) {
            first = e;
            have = true;
        } else {
            CHECK(e == first);
        }
        CHECK(verify_map(inst.factors[0].map));
        CHECK(verify_map(inst.factors[1].map));
    }
}

TEST_CASE("g2-partial instances and expected ranks") {
    auto i5 = g2_partial(Int(1), Int(5));
    REQUIRE(i5.expected_rank.value.has_value());
    CHECK(*i5.expected_rank.value == 0);

    auto i7 = g2_partial(Int(1), Int(7));
    REQUIRE(i7.expected_rank.value.has_value());
    CHECK(*i7.expected_rank.value == 1);

    FamilyOptions lit;
    lit.literature_hint = 4;
    lit.literature_ref = "published rank computation for d = 506";
    auto i506 = g2_partial(Int(506), Int(7), lit);
    REQUIRE(i506.expected_rank.value.has_value());
    CHECK(*i506.expected_rank.value == 5);
    CHECK(i506.expected_rank.provenance == Provenance::Literature);

    CHECK_THROWS_AS(g2_partial(Int(1), Int(13)), ParameterViolation);  // 1 mod 12
    CHECK_THROWS_AS(g2_partial(Int(1), Int(3)), ParameterViolation);   // p = 3
    CHECK_THROWS_AS(g2_partial(Int(5), Int(5)), ParameterViolation);   // p | d
    CHECK_THROWS_AS(g2_partial(Int(4), Int(5)), ParameterViolation);   // d square
}

TEST_CASE("g2-partial factors are the two Mordell curves") {
    auto inst = g2_partial(Int(2), Int(5));
    auto ep = std::get<EllipticCurveQ>(inst.factors[0].model);
    auto ed = std::get<EllipticCurveQ>(inst.factors[1].model);
    CHECK(ep == curve_from_coeffs(Int(0), Int(0), Int(125)));
    CHECK(ed == curve_from_coeffs(Int(0), Int(0), Int(8)));
    CHECK(verify_map(inst.factors[0].map));
    CHECK(verify_map(inst.factors[1].map));
}

TEST_CASE("g2-full instance coefficients and quotients") {
    auto inst = g2_full(Int(1), Int(2), Int(3));
    CHECK(inst.curve.f == Poly({Rat(210), Rat(0), Rat(107), Rat(0), Rat(18),
                                Rat(0), Rat(1)}));
    REQUIRE(inst.factors.size() == 2);
    CHECK(verify_map(inst.factors[0].map));
    CHECK(verify_map(inst.factors[1].map));
    // the even-substitution quotient is isomorphic to y^2 = x^3 - x here
    CHECK(inst.factors[0].matched.find("x^3 - x") != std::string::npos);
    // expected rank = rank of the k-model, certified by descent
    REQUIRE(inst.expected_rank.value.has_value());
    CHECK(inst.expected_rank.provenance == Provenance::Stated);

    CHECK_THROWS_AS(g2_full(Int(1), Int(1), Int(3)), ParameterViolation);
    CHECK_THROWS_AS(g2_full(Int(1), Int(2), Int(5)), ParameterViolation);
}

TEST_CASE("g3 instances") {
    FamilyOptions opt;
    opt.literature_hint = 0;
    auto inst = g3(Int(1), Int(2), Int(3), Int(8), Int(1), opt);
    REQUIRE(inst.factors.size() == 2);
    CHECK(verify_map(inst.factors[0].map));
    CHECK(verify_map(inst.factors[1].map));
    CHECK(inst.congruence_class_checked);
    auto c2 = std::get<HyperellipticModel>(inst.factors[1].model);
    CHECK(c2.f == Poly::from_roots({Rat(0), Rat(1), Rat(2), Rat(3), Rat(8)}));
    // E_1 has full 2-torsion and its rank bound is finite
    REQUIRE(inst.factors[0].rank.has_value());
    REQUIRE(inst.factors[0].rank->rank_upper.has_value());

    CHECK_THROWS_AS(g3(Int(1), Int(1), Int(3), Int(8), Int(1)), ParameterViolation);
    CHECK_THROWS_AS(g3(Int(1), Int(2), Int(3), Int(8), Int(4)), ParameterViolation);
}

TEST_CASE("g3 genus-2 factor is stable across D") {
    HyperellipticModel first;
    bool have = false;
    for (long D : {1L, 2L, 3L}) {
        auto inst = g3(Int(1), Int(2), Int(3), Int(8), Int(D),
                       FamilyOptions{false, 100, 1e-8, std::nullopt, ""});
        auto c2 = std::get<HyperellipticModel>(inst.factors[1].model);
        auto base = make_hyperelliptic(
            Int(1), Poly::from_roots({Rat(0), Rat(1), Rat(2), Rat(3), Rat(8)}));
        auto iso = hyper_isomorphic_scaling(c2, base);
        REQUIRE(iso.has_value());
        if (!have) {
            first = c2;
            have = true;
        }
    }
}

TEST_CASE("corollary tables") {
    CHECK(corollary22_params(2).a == 15);
    CHECK(corollary22_params(4).a == Int(13) * 19 * 23 * 43);
    auto r8 = corollary22_params(8);
    Int k = 1;
    for (const Int& f : r8.k_factors) k *= f;
    CHECK(r8.a == 4 * k);
    CHECK(r8.k_factors.front() == 2);
    CHECK_THROWS_AS(corollary22_params(12), ParameterViolation);

    auto c0 = corollary32_params(0);
    CHECK(c0.d == 8);
    auto c1 = corollary32_params(1);
    CHECK(c1.d == 9);
    auto c2 = corollary32_params(2);
    CHECK(c2.d == 36);
    CHECK_THROWS_AS(corollary32_params(3), ParameterViolation);
    // the table rows satisfy the square-triple condition
    for (int r = 0; r <= 2; ++r) {
        auto row = corollary32_params(r);
        CHECK(square_triple_check(row.a, row.b, row.c, row.d));
    }
}

TEST_CASE("square triple check") {
    CHECK(square_triple_check(Int(1), Int(2), Int(3), Int(8)));
    // (0,1,2,3): t2 = (3-0)(3-2)(1-2)(1-0) = -3, t1 = (3-0)(3-1)(2-1)(2-0) = 12,
    // t3 = (3-1)(3-2)(0-2)(0-1) = 4 -> square
    CHECK_FALSE(square_triple_check(Int(0), Int(1), Int(2), Int(3)));
}

TEST_CASE("bad reduction sets") {
    auto c51 = g2_partial(Int(1), Int(5), FamilyOptions{false, 100, 1e-8,
                                                        std::nullopt, ""});
    auto bad = bad_reduction_set(c51.curve);
    CHECK(std::find(bad.begin(), bad.end(), Int(5)) != bad.end());

    auto c2 = make_hyperelliptic(
        Int(1), Poly({Rat(2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
    auto bad2 = bad_reduction_set(c2);
    CHECK(std::find(bad2.begin(), bad2.end(), Int(2)) != bad2.end());
    CHECK(std::find(bad2.begin(), bad2.end(), Int(3)) != bad2.end());
    // good odd primes are not flagged
    CHECK(std::find(bad2.begin(), bad2.end(), Int(5)) == bad2.end());
}

TEST_CASE("non-isomorphy certificates") {
    FamilyOptions quick{false, 100, 1e-8, std::nullopt, ""};
    std::vector<FamilyInstance> insts;
    for (const Int& p : ntheory::primes_in_class(Int(5), Int(12), 5, Int(2)))
        insts.push_back(g2_partial(Int(1), p, quick));
    auto cert = non_isomorphy_certificate(insts);
    CHECK(cert.all_distinguished);
    CHECK(cert.pairs.size() == 10);
    for (const auto& pr : cert.pairs) CHECK(pr.prime.has_value());

    // identical instances are reported undistinguished, not an error
    std::vector<FamilyInstance> same{insts[0], insts[0]};
    auto cert2 = non_isomorphy_certificate(same);
    CHECK_FALSE(cert2.all_distinguished);
    CHECK_FALSE(cert2.pairs[0].prime.has_value());
}
