#pragma once

#include <vector>

#include "biell/elliptic.hpp"

namespace biell {

// A real value with a rigorous absolute error bound.
struct HeightValue {
    double value = 0.0;
    double error = 0.0;
};

// Canonical height in the normalization with h(P) ~ (1/2) log H(x(P)) and
// h(2P) = 4 h(P). Decomposed over places: an archimedean series for the
// duplication map plus exact p-adic valuation corrections at bad primes.
// Exactly 0 for torsion points.
HeightValue canonical_height(const EllipticCurveQ& e, const ECPoint& p,
                             double precision);

// <P, Q> = (h(P+Q) - h(P) - h(Q)) / 2, so <P, P> = h(P).
HeightValue height_pairing(const EllipticCurveQ& e, const ECPoint& p,
                           const ECPoint& q, double precision);

struct RankLowerBound {
    int rank = 0;
    double regulator = 1.0;  // Gram determinant of the chosen subset
    double regulator_error = 0.0;
    std::vector<ECPoint> subset;
    std::vector<HeightValue> heights;
};

// Greedy maximal subset with Gram determinant provably above the
// independence threshold; its size is a rank lower bound.
RankLowerBound rank_lower_bound(const EllipticCurveQ& e,
                                const std::vector<ECPoint>& points,
                                double precision);

inline constexpr double kIndependenceThreshold = 1e-6;

}  // namespace biell
