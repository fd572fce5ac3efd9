#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biell/elliptic.hpp"
#include "biell/heights.hpp"

namespace biell {
namespace descent2 {

// Evidence that a torsor is solvable at one place. For a finite prime the
// residue is a point of the certified class mod p^depth; for the real place
// (place = 0) real_sample is a rational t = u^2 with all constraints >= 0.
struct LocalWitness {
    Int place = 0;           // 0 encodes the real place
    bool inverted = false;   // parameter is 1/u with u in p Z_p
    Int residue = 0;
    int depth = 0;
    Rat real_sample = 0;
    bool exact_zero = false; // residue is an exact root of one constraint
};

struct TorsorClassReport {
    Int d1 = 1, d2 = 1;      // d2 stays 1 for isogeny descent
    bool survives = false;
    Int failed_place = 0;    // meaningful when !survives (0 = real place)
    bool failed_inverted = false;
    std::vector<LocalWitness> witnesses;
};

enum class DescentMethod { FullTwoDescent, TwoIsogenyDescent, Literature };
std::string method_name(DescentMethod m);

struct SelmerReport {
    DescentMethod method = DescentMethod::Literature;
    std::vector<int> dimensions;  // [dim] for full, [dim_phi, dim_phihat] for isogeny
    std::vector<std::pair<Int, Int>> surviving;       // full: (d1, d2); isogeny: (d, 1)
    std::vector<std::pair<Int, Int>> surviving_dual;  // isogeny only
    int rank_upper = 0;
    std::string literature_tag;
    std::vector<TorsorClassReport> classes;       // deterministic order
    std::vector<TorsorClassReport> classes_dual;  // isogeny only
};

// Full 2-descent on y^2 = (x - e1)(x - e2)(x - e3) with integer roots.
// Enumerates square classes (d1, d2) supported on 2 and the root differences,
// keeps the everywhere-locally-solvable ones, and reports
// rank_upper = dim_F2(surviving) - 2.
SelmerReport full_two_descent(const EllipticCurveQ& e,
                              const ntheory::Config& cfg = ntheory::default_config());

// Descent via the 2-isogeny with kernel (0,0) on y^2 = x^3 + a x^2 + b x.
// Torsors d w^2 = d^2 t^4 + a d t^2 + b on each side of the isogeny;
// rank_upper = dim_phi + dim_phihat - 2.
SelmerReport two_isogeny_descent(const EllipticCurveQ& e,
                                 const ntheory::Config& cfg = ntheory::default_config());

// Re-run the certified check recorded in a witness. Used by tests and by
// certificate consumers; never needed for the computation itself.
bool verify_witness(const Poly& F, const Poly& G, const Int& place,
                    const LocalWitness& w);

// The torsor constraint polynomials of a class, in the direct branch.
// Full descent: F = d2 (d1 u^2 - (e2-e1)), G = d1 d2 (d1 u^2 - (e3-e1)).
// Isogeny: F = d (d^2 u^4 + a d u^2 + b), G = 1.
std::pair<Poly, Poly> torsor_pair_full(const Int& d1, const Int& d2,
                                       const Int& alpha, const Int& beta);
Poly torsor_quartic(const Int& d, const Int& a, const Int& b);

enum class CertStatus { Exact, Interval };

struct RankCertificate {
    EllipticCurveQ curve;
    TorsionGroup torsion;
    RankLowerBound lower;
    Int search_height = 0;
    double precision = 0;
    std::optional<SelmerReport> upper;            // strongest applicable
    std::optional<SelmerReport> upper_secondary;  // when both descents apply
    CertStatus status = CertStatus::Interval;
    int rank_lower = 0;
    std::optional<int> rank_upper;
    bool literature_flagged = false;
    std::string literature_tag;
    bool probable_prime_used = false;

    int exact_rank() const;  // requires status == Exact
};

// Search + heights for the lower bound, the strongest applicable descent for
// the upper bound (literature hint when the curve has no rational 2-torsion).
RankCertificate rank_certificate(const EllipticCurveQ& e, const Int& search_height,
                                 double precision,
                                 std::optional<int> literature_hint = std::nullopt,
                                 const std::string& literature_ref = "",
                                 const ntheory::Config& cfg = ntheory::default_config());

}  // namespace descent2
}  // namespace biell
