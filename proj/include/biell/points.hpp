#pragma once

#include <string>
#include <vector>

#include "biell/families.hpp"

namespace biell {
namespace points {

// A rational point on a hyperelliptic model: affine, or one of the points at
// infinity (sign distinguishes the two branches on even-degree models).
struct CurvePoint {
    bool at_infinity = false;
    int inf_sign = 0;  // +1 / -1 for even-degree models, 0 for odd degree
    Rat x, y;

    static CurvePoint infinity(int s) {
        CurvePoint p;
        p.at_infinity = true;
        p.inf_sign = s;
        return p;
    }
    static CurvePoint affine(Rat px, Rat py) {
        CurvePoint p;
        p.x = std::move(px);
        p.y = std::move(py);
        return p;
    }
    bool operator==(const CurvePoint& o) const;
    bool operator<(const CurvePoint& o) const;
    std::string str() const;
};

bool on_model(const HyperellipticModel& c, const CurvePoint& p);

// Rational points at infinity: for even degree, two iff lead(f)/d is a
// square, else none; for odd degree, one.
std::vector<CurvePoint> infinity_points(const HyperellipticModel& c);

// All rational preimages on the source curve of the given target points
// under a quotient map with a recognized shape. Exact; includes the points
// at infinity on both sides.
std::vector<CurvePoint> pullback_points(const HyperellipticModel& c,
                                        const QuotientMap& phi,
                                        const std::vector<ECPoint>& targets);

// All affine points x = m/e with gcd(m, e) = 1, e <= ceil(sqrt(bound)),
// |m| <= bound; both y signs listed; deterministic order.
std::vector<CurvePoint> naive_curve_search(const HyperellipticModel& c,
                                           const Int& bound);

enum class PointSetStatus { Exact, Undetermined };

struct PointSetResult {
    PointSetStatus status = PointSetStatus::Undetermined;
    bool conditional_on_literature = false;
    std::vector<CurvePoint> points;       // the full set when Exact
    std::vector<std::string> trace;       // which quotient, which group, why
};

// Exact rational point set via the pullback of the full Mordell-Weil group
// of a rank-0 elliptic factor; Undetermined when no factor certifies rank 0.
// A naive search up to search_bound cross-checks the result and any
// discrepancy is a hard error.
PointSetResult determine_points(
    const families::FamilyInstance& inst,
    const std::vector<descent2::RankCertificate>& factor_certificates,
    const Int& search_bound);

}  // namespace points
}  // namespace biell
