#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "biell/points.hpp"

using namespace biell;
using namespace biell::points;
using namespace biell::families;

namespace {

std::vector<descent2::RankCertificate> factor_certs(const FamilyInstance& inst,
                                                    const Int& H = Int(100)) {
    std::vector<descent2::RankCertificate> certs;
    for (const auto& f : inst.factors) {
        if (std::holds_alternative<EllipticCurveQ>(f.model)) {
            certs.push_back(descent2::rank_certificate(
                std::get<EllipticCurveQ>(f.model), H, 1e-8));
        } else {
            certs.push_back(descent2::RankCertificate{});
            certs.back().status = descent2::CertStatus::Interval;
        }
    }
    return certs;
}

}  // namespace

TEST_CASE("infinity points") {
    auto c1 = make_hyperelliptic(
        Int(1), Poly({Rat(2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(infinity_points(c1).size() == 2);
    auto c2 = make_hyperelliptic(
        Int(5), Poly({Rat(2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(infinity_points(c2).empty());
    auto c3 = make_hyperelliptic(
        Int(1), Poly({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(infinity_points(c3).size() == 1);
}

TEST_CASE("pullback through the x^2 quotient of C(5,1)") {
    auto inst = g2_partial(Int(1), Int(5),
                           FamilyOptions{false, 100, 1e-8, std::nullopt, ""});
    // E_p = y^2 = x^3 + 125 with points {O, (-5, 0)}
    std::vector<ECPoint> mw{ECPoint::infinity(), ECPoint(Rat(-5), Rat(0))};
    auto pts = pullback_points(inst.curve, inst.factors[0].map, mw);
    // preimage of O: the two infinity points; (-5, 0) pulls back to x^2 = -5
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == CurvePoint::infinity(+1));
    CHECK(pts[1] == CurvePoint::infinity(-1));
}

TEST_CASE("pullback through the reversal quotient") {
    // y^2 = x^6 + 2 -> E_2' : y^2 = x^3 + 4 via (2/x^2, 2y/x^3);
    // MW(x^3 + 4) = {O, (0, 2), (0, -2)} and the infinity points map to
    // (0, +-2), while O pulls back to x = 0 (no rational y there)
    auto inst = g2_no_two_torsion(Int(2), Int(1));
    auto e2 = std::get<EllipticCurveQ>(inst.factors[1].model);
    auto tors = torsion_subgroup(e2);
    REQUIRE(tors.points.size() == 3);
    auto pts = pullback_points(inst.curve, inst.factors[1].map, tors.points);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].at_infinity);
    CHECK(pts[1].at_infinity);
}

TEST_CASE("naive search on hyperelliptic models") {
    // y^2 = x^6 - 1 has (+-1, 0)
    std::vector<Rat> c(7, Rat(0));
    c[0] = Rat(-1);
    c[6] = Rat(1);
    auto m = make_hyperelliptic(Int(1), Poly(std::move(c)));
    auto pts = naive_curve_search(m, Int(50));
    CHECK(std::find(pts.begin(), pts.end(),
                    CurvePoint::affine(Rat(1), Rat(0))) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(),
                    CurvePoint::affine(Rat(-1), Rat(0))) != pts.end());

    // y^2 = x^6 + 2 has no affine points up to 50
    auto c2 = make_hyperelliptic(
        Int(1), Poly({Rat(2), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(naive_curve_search(c2, Int(50)).empty());

    // Weierstrass points of the genus-2 quintic
    auto c3 = make_hyperelliptic(
        Int(1), Poly::from_roots({Rat(0), Rat(1), Rat(2), Rat(3), Rat(8)}));
    auto pts3 = naive_curve_search(c3, Int(50));
    for (long r : {0L, 1L, 2L, 3L, 8L})
        CHECK(std::find(pts3.begin(), pts3.end(),
                        CurvePoint::affine(Rat(r), Rat(0))) != pts3.end());
}

TEST_CASE("determine_points: C(5,1) has exactly the two infinity points") {
    auto inst = g2_partial(Int(1), Int(5));
    auto res = determine_points(inst, factor_certs(inst), Int(100));
    CHECK(res.status == PointSetStatus::Exact);
    CHECK_FALSE(res.conditional_on_literature);
    REQUIRE(res.points.size() == 2);
    CHECK(res.points[0].at_infinity);
    CHECK(res.points[1].at_infinity);
}

TEST_CASE("determine_points: d = 5 twist has no rational points") {
    auto inst = g2_partial(Int(5), Int(17));
    auto res = determine_points(inst, factor_certs(inst), Int(100));
    CHECK(res.status == PointSetStatus::Exact);
    CHECK(res.points.empty());
}

TEST_CASE("determine_points: undetermined when no factor has rank 0") {
    // p = 7: E_7 has rank 1 and E_1 has rank 0... E_1 certifies rank 0, so
    // use a curve where both factors have positive rank: d = 7^3? Instead,
    // drop the certificates to force the undetermined path.
    auto inst = g2_partial(Int(1), Int(7));
    std::vector<descent2::RankCertificate> empty_certs(2);
    empty_certs[0].status = descent2::CertStatus::Interval;
    empty_certs[1].status = descent2::CertStatus::Interval;
    auto res = determine_points(inst, empty_certs, Int(60));
    CHECK(res.status == PointSetStatus::Undetermined);
}

TEST_CASE("determine_points with a literature-tagged rank 0") {
    auto inst = g2_no_two_torsion(Int(2), Int(1));
    std::vector<descent2::RankCertificate> certs;
    for (const auto& f : inst.factors) {
        if (std::holds_alternative<EllipticCurveQ>(f.model)) {
            auto e = std::get<EllipticCurveQ>(f.model);
            // fixed factor y^2 = x^3 + 4 has rank 0 per the published table
            std::optional<int> hint;
            if (e.c == 4) hint = 0;
            certs.push_back(descent2::rank_certificate(e, Int(60), 1e-8, hint,
                                                       "rank-0 table row"));
        }
    }
    auto res = determine_points(inst, certs, Int(60));
    CHECK(res.status == PointSetStatus::Exact);
    CHECK(res.conditional_on_literature);
    REQUIRE(res.points.size() == 2);
    CHECK(res.points[0].at_infinity);
}

TEST_CASE("exact sets are closed under the hyperelliptic involution") {
    auto inst = g2_partial(Int(1), Int(5));
    auto res = determine_points(inst, factor_certs(inst), Int(80));
    for (const auto& p : res.points) {
        if (p.at_infinity) {
            CHECK(std::find(res.points.begin(), res.points.end(),
                            CurvePoint::infinity(-p.inf_sign)) != res.points.end());
        } else {
            CHECK(std::find(res.points.begin(), res.points.end(),
                            CurvePoint::affine(p.x, -p.y)) != res.points.end());
        }
    }
}

TEST_CASE("exact results are stable under a larger search bound") {
    auto inst = g2_partial(Int(1), Int(5));
    auto certs = factor_certs(inst);
    auto r1 = determine_points(inst, certs, Int(40));
    auto r2 = determine_points(inst, certs, Int(120));
    CHECK(r1.points == r2.points);
}
