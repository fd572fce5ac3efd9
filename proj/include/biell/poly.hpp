#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "biell/intmath.hpp"

namespace biell {

// Dense univariate polynomial over Q. c[i] is the coefficient of x^i.
class Poly {
  public:
    std::vector<Rat> c;

    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : c(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& a) { return Poly({a}); }
    static Poly monomial(int deg, const Rat& a);
    static Poly from_int_coeffs(const std::vector<Int>& ic);
    // (x - r1)(x - r2)...
    static Poly from_roots(const std::vector<Rat>& roots);

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
    bool is_zero() const { return c.empty(); }
    const Rat& coeff(int i) const;
    Rat lead() const { return c.empty() ? Rat(0) : c.back(); }

    void trim();

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    Poly shift(const Rat& r) const;       // f(x + r)
    Poly scale_arg(const Rat& l) const;   // f(l * x)
    Poly reversed(int deg) const;         // x^deg * f(1/x)

    bool integral() const;                // all coefficients in Z
    std::vector<Int> int_coeffs() const;  // requires integral()
    // smallest positive t with t*f in Z[x], divided by content: returns
    // (primitive integer polynomial, rational multiplier m) with f = m * prim.
    std::pair<std::vector<Int>, Rat> primitive_int() const;

    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& a);

// Euclidean division over Q[x]: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic gcd
// u*a + v*b = g (monic gcd); returns {u, v, g}.
struct ExtGcd {
    Poly u, v, g;
};
ExtGcd poly_ext_gcd(const Poly& a, const Poly& b);

// Resultant via exact Sylvester determinant. Res(a, b) with the stated
// degrees = actual degrees; both nonzero.
Rat resultant(const Poly& a, const Poly& b);
Rat discriminant(const Poly& f);
bool is_squarefree(const Poly& f);

// Integer root isolation for a nonzero integral polynomial: all x in Z with
// f(x) = 0, ascending.
std::vector<Int> integer_roots(const Poly& f);
// All rational roots of an integral polynomial (by p/q over divisors of the
// extreme coefficients), ascending.
std::vector<Rat> rational_roots(const Poly& f);

// Exact determinant of a square rational matrix (Gaussian elimination).
Rat det_rational(std::vector<std::vector<Rat>> m);

// Polynomial in x and y over Q, stored by y-degree: yc[j] is the
// x-polynomial coefficient of y^j.
class BiPoly {
  public:
    std::vector<Poly> yc;

    BiPoly() = default;
    explicit BiPoly(Poly x_only) { yc.push_back(std::move(x_only)); trim(); }
    static BiPoly x();
    static BiPoly y();
    static BiPoly constant(const Rat& a);

    int ydeg() const { return static_cast<int>(yc.size()) - 1; }
    int xdeg() const;
    bool is_zero() const;
    void trim();

    bool operator==(const BiPoly& o) const { return yc == o.yc; }
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const Rat& s, const BiPoly& a);
BiPoly bipoly_pow(const BiPoly& a, int e);

// Substitute y^2 -> f(x)/d repeatedly; the result is linear in y.
BiPoly reduce_mod_curve(const BiPoly& p, const Poly& f, const Rat& d);

// A pair of rational functions (X(x,y), Y(x,y)) used as a change of
// variables between plane curve models.
struct RatMap {
    BiPoly xn, xd, yn, yd;

    static RatMap identity();
    // X = a*x + b, Y = c*y
    static RatMap linear(const Rat& a, const Rat& b, const Rat& c);
};

// Substitute m's components into p, returning (numerator, denominator) with
// the common denominator xd^degx * yd^degy for the given clearing degrees.
BiPoly subst_num(const BiPoly& p, const RatMap& m, int clear_x, int clear_y);

// outer(inner(x,y)): apply inner first.
RatMap compose(const RatMap& outer, const RatMap& inner);

}  // namespace biell
