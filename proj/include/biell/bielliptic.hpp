#pragma once

#include <optional>
#include <string>
#include <variant>

#include "biell/elliptic.hpp"

namespace biell {

// d * y^2 = f(x) with integer coefficients, deg f in 5..8, f squarefree.
struct HyperellipticModel {
    Int d = 1;
    Poly f;

    int genus() const { return (f.degree() - 1) / 2; }
    bool even_monomials_only() const;
    std::string str() const;
    bool operator==(const HyperellipticModel& o) const {
        return d == o.d && f == o.f;
    }
};

// genus-1 quartic model d * y^2 = g(x), deg g = 4, g squarefree
struct QuarticModel {
    Int d = 1;
    Poly g;
    std::string str() const;
};

HyperellipticModel make_hyperelliptic(const Int& d, const Poly& f);
QuarticModel make_quartic(const Int& d, const Poly& g);

using SourceModel = std::variant<HyperellipticModel, QuarticModel>;
using TargetModel = std::variant<EllipticCurveQ, HyperellipticModel, QuarticModel>;

// The x-component shapes our quotient maps take; used for exact pullback of
// rational points through a map.
enum class MapShape {
    SquareScaled,         // X = kx x^2,          Y = ky y
    InverseSquareScaled,  // X = kx / x^2,        Y = ky y / x^3
    SquareTimesY,         // X = x^2,             Y = ky x y
    InverseSquareShifted, // X = kx / (x^2 - rho), Y = ky y / (x^2 - rho)^2
    Other
};

struct ShapeData {
    MapShape shape = MapShape::Other;
    Rat kx = 1, ky = 1, rho = 0;
};

struct QuotientMap {
    SourceModel source;
    TargetModel target;
    RatMap formulas;  // (X(x,y), Y(x,y))
    int degree = 2;   // 2 for the quotients, 1 for birational reductions
    ShapeData shape;
};

// Exact identity check: substituting the component formulas into the target
// equation and clearing denominators yields a multiple of the source equation.
bool verify_map(const QuotientMap& m);

// Defining polynomial T(x, y) of a model, zero on its points.
BiPoly defining_bipoly(const TargetModel& m);

struct SexticSplit {
    EllipticCurveQ q1;  // from d Y^2 = a6 X^3 + a4 X^2 + a2 X + a0, X = x^2
    QuotientMap phi1;
    EllipticCurveQ q2;  // from the reversed cubic, X = 1/x^2
    QuotientMap phi2;
};

// Split d y^2 = a6 x^6 + a4 x^4 + a2 x^2 + a0 into its two elliptic quotients.
// Both maps are verified exactly before returning.
SexticSplit split_even_sextic(const HyperellipticModel& c);

struct OcticSplit {
    QuarticModel quartic;       // d Y^2 = q(X) under X = x^2
    QuotientMap phi_e;
    HyperellipticModel genus2;  // d W^2 = X q(X) under (X, W) = (x^2, x y)
    QuotientMap phi2;
};

// Split d y^2 = q(x^2), q quartic with q(0) != 0, into a genus-1 quartic and
// a genus-2 quotient.
OcticSplit split_even_octic(const HyperellipticModel& c);

struct QuarticReduction {
    EllipticCurveQ e;
    QuotientMap psi;  // birational, degree 1
};

// d y^2 = g(x) with a rational root g(r) = 0: birational Weierstrass model
// via U = 1/(x - r), V = y/(x - r)^2 and normalization.
QuarticReduction quartic_to_weierstrass(const QuarticModel& m, const Rat& root);

// Scaling isomorphism (x, y) -> (lambda x, mu y) identifying two
// hyperelliptic models; nullopt when none exists.
std::optional<std::pair<Rat, Rat>> hyper_isomorphic_scaling(
    const HyperellipticModel& from, const HyperellipticModel& to);

}  // namespace biell
