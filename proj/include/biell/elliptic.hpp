#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biell/errors.hpp"
#include "biell/ntheory.hpp"
#include "biell/poly.hpp"

namespace biell {

// Affine change of variables X = xscale * x + xshift, Y = yscale * y.
struct ModelMap {
    Rat xscale = 1, xshift = 0, yscale = 1;

    ModelMap then(const ModelMap& outer) const {
        return {outer.xscale * xscale, outer.xscale * xshift + outer.xshift,
                outer.yscale * yscale};
    }
    RatMap as_ratmap() const { return RatMap::linear(xscale, xshift, yscale); }
};

// y^2 = x^3 + a x^2 + b x + c with integer coefficients and nonzero
// discriminant. Carries the (possibly twisted) model it was normalized from.
struct EllipticCurveQ {
    Int a = 0, b = 0, c = 0;

    // provenance: original model d * y^2 = rhs(x) and the map onto this one
    Int input_twist = 1;
    Poly input_rhs;
    ModelMap from_input;  // maps input coordinates to this model's

    Poly rhs() const;  // x^3 + a x^2 + b x + c over Q

    Int b2() const { return 4 * a; }
    Int b4() const { return 2 * b; }
    Int b6() const { return 4 * c; }
    Int b8() const { return 4 * a * c - b * b; }
    Int c4() const { return b2() * b2() - 24 * b4(); }
    Int c6() const;
    Int disc() const;
    Rat j() const;

    bool operator==(const EllipticCurveQ& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
    std::string str() const;
};

struct ECPoint {
    bool inf = true;
    Rat x, y;

    ECPoint() = default;
    ECPoint(Rat px, Rat py) : inf(false), x(std::move(px)), y(std::move(py)) {}
    static ECPoint infinity() { return ECPoint(); }

    bool operator==(const ECPoint& o) const {
        if (inf || o.inf) return inf == o.inf;
        return x == o.x && y == o.y;
    }
    bool operator<(const ECPoint& o) const;  // deterministic ordering
    std::string str() const;
};

// d * y^2 = rhs(x) with rhs a squarefree cubic: scale onto an integral
// y^2 = monic cubic model, recording the change of variables.
EllipticCurveQ normalize(const Int& d, const Poly& rhs);
// direct construction (records itself as its own input model)
EllipticCurveQ curve_from_coeffs(const Int& a, const Int& b, const Int& c);

bool on_curve(const EllipticCurveQ& e, const ECPoint& p);

ECPoint neg(const ECPoint& p);
ECPoint add(const EllipticCurveQ& e, const ECPoint& p, const ECPoint& q);
ECPoint scalar_mul(const EllipticCurveQ& e, const Int& n, const ECPoint& p);

Int discriminant(const EllipticCurveQ& e);
Rat j_invariant(const EllipticCurveQ& e);

// Twist by a squarefree t: the normalized model of t * y^2 = rhs(x).
EllipticCurveQ quadratic_twist(const EllipticCurveQ& e, const Int& t);

// Scaling/translation isomorphism over Q: points of e1 map to e2 by
// X = u^2 x + r, Y = u^3 y.
struct IsoData {
    Rat u, r;
};
std::optional<IsoData> is_isomorphic_over_Q(const EllipticCurveQ& e1,
                                            const EllipticCurveQ& e2);

enum class TorsionTag {
    Trivial,
    Cyclic,      // Z/nZ, 2 <= n <= 12, n != 11
    TwoByCyclic  // Z/2 x Z/2nZ, 1 <= n <= 4
};

struct TorsionGroup {
    TorsionTag tag = TorsionTag::Trivial;
    int n = 1;  // cyclic order, or the 2n part for Z/2 x Z/2n
    std::vector<ECPoint> generators;
    std::vector<ECPoint> points;  // the full group, O first

    int order() const;
    std::string name() const;
};

// Exact torsion subgroup by integral-point enumeration (y = 0 or
// y^2 | Res(q, dup-numerator)) with orders verified by scalar multiplication.
TorsionGroup torsion_subgroup(const EllipticCurveQ& e,
                              const ntheory::Config& cfg = ntheory::default_config());

// Closed-form torsion structure of y^2 = x^3 + s for sixth-power-free s.
struct MordellTorsion {
    TorsionTag tag;
    int n;
    std::string name() const;
};
MordellTorsion mordell_torsion_classify(const Int& s);

// All affine points with x = m/e^2, gcd(m, e) = 1, e <= ceil(sqrt(H)),
// |m| <= H * e^2; one representative per (x, +-y) pair, sorted.
std::vector<ECPoint> search_points(const EllipticCurveQ& e, const Int& height_bound);

int point_order(const EllipticCurveQ& e, const ECPoint& p);  // 0 if non-torsion
bool is_torsion(const EllipticCurveQ& e, const ECPoint& p);

enum class Reduction { Good, Multiplicative, Additive };
Reduction reduction_type(const EllipticCurveQ& e, const Int& p);
std::string reduction_name(Reduction r);

}  // namespace biell
