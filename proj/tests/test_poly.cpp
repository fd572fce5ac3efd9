#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biell/poly.hpp"

using namespace biell;

TEST_CASE("arithmetic and evaluation") {
    Poly f({Rat(9), Rat(0), Rat(0), Rat(1)});  // x^3 + 9
    CHECK(f.degree() == 3);
    CHECK(f.eval(Rat(-2)) == Rat(1));
    Poly g = f * f;
    CHECK(g.degree() == 6);
    CHECK(g.eval(Rat(-2)) == Rat(1));
    CHECK((f - f).is_zero());
}

TEST_CASE("shift, scale, reverse") {
    Poly f({Rat(0), Rat(0), Rat(0), Rat(1)});  // x^3
    Poly s = f.shift(Rat(1));                  // (x+1)^3
    CHECK(s.coeff(0) == Rat(1));
    CHECK(s.coeff(1) == Rat(3));
    CHECK(s.coeff(2) == Rat(3));
    Poly sc = f.scale_arg(Rat(2));
    CHECK(sc.coeff(3) == Rat(8));
    Poly r = Poly({Rat(1), Rat(2), Rat(3)}).reversed(2);
    CHECK(r.coeff(0) == Rat(3));
    CHECK(r.coeff(2) == Rat(1));
}

TEST_CASE("divmod and gcd") {
    Poly f = Poly::from_roots({Rat(1), Rat(2), Rat(3)});
    Poly g = Poly::from_roots({Rat(2), Rat(5)});
    auto [q, r] = divmod(f, g);
    CHECK((q * g + r) == f);
    Poly d = poly_gcd(f, g);
    CHECK(d.degree() == 1);
    CHECK(sign(d.eval(Rat(2))) == 0);
    auto e = poly_ext_gcd(f, g);
    CHECK((e.u * f + e.v * g) == e.g);
}

TEST_CASE("resultant and discriminant") {
    // disc(x^2 + bx + c) = b^2 - 4c
    Poly f({Rat(3), Rat(-5), Rat(1)});
    CHECK(discriminant(f) == Rat(13));
    // disc(x^3 + px + q) = -4p^3 - 27q^2
    Poly g({Rat(2), Rat(-1), Rat(0), Rat(1)});
    CHECK(discriminant(g) == Rat(-4 * (-1) - 27 * 4));
    CHECK(is_squarefree(g));
    Poly sq = g * g;
    CHECK_FALSE(is_squarefree(sq));
    // Res(f, g) = lead(g)^deg f * prod f(roots of g): spot check via roots
    Poly a = Poly::from_roots({Rat(1), Rat(-1)});
    Poly b = Poly::from_roots({Rat(2)});
    CHECK(resultant(a, b) == Rat(3));  // a(2) = 3
}

TEST_CASE("integer roots via Sturm isolation") {
    Poly f = Poly::from_roots({Rat(-7), Rat(0), Rat(123456)});
    auto roots = integer_roots(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == -7);
    CHECK(roots[1] == 0);
    CHECK(roots[2] == 123456);
    // large coefficients, no integer roots
    Poly g({Rat(Int("100000000000000003")), Rat(0), Rat(0), Rat(1)});
    CHECK(integer_roots(g).empty());
    // repeated roots are reported once
    Poly h = Poly::from_roots({Rat(4), Rat(4), Rat(-2)});
    auto hr = integer_roots(h);
    REQUIRE(hr.size() == 2);
    CHECK(hr[0] == -2);
    CHECK(hr[1] == 4);
}

TEST_CASE("rational roots") {
    Poly f({Rat(-1), Rat(0), Rat(4)});  // 4x^2 - 1
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rat(-1, 2));
    CHECK(roots[1] == Rat(1, 2));
}

TEST_CASE("bipoly reduce mod curve") {
    // source y^2 = x^6 + D: reduce y^2 - x^6 - D to zero
    Rat D(7);
    Poly f({D, Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
    BiPoly rel = BiPoly::y() * BiPoly::y() - BiPoly(f);
    BiPoly red = reduce_mod_curve(rel, f, Rat(1));
    CHECK(red.is_zero());
}

TEST_CASE("ratmap substitution clears denominators correctly") {
    // phi: (x, y) -> (D/x^2, D y/x^3) maps y^2 = x^6 + D onto Y^2 = X^3 + D^2:
    // (Dy/x^3)^2 - (D/x^2)^3 - D^2 = (D^2/x^6)(y^2 - x^6 - D)
    Rat D(5);
    RatMap phi;
    phi.xn = BiPoly(Poly::constant(D));
    phi.xd = BiPoly(Poly::monomial(2, Rat(1)));
    phi.yn = D * BiPoly::y();
    phi.yd = BiPoly(Poly::monomial(3, Rat(1)));
    // target Y^2 - X^3 - D^2 as a bipoly in (X, Y)
    BiPoly target = BiPoly::y() * BiPoly::y() -
                    BiPoly(Poly::monomial(3, Rat(1))) -
                    BiPoly::constant(D * D);
    BiPoly num = subst_num(target, phi, 3, 2);
    // reduce modulo y^2 = x^6 + D
    Poly src({D, Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(reduce_mod_curve(num, src, Rat(1)).is_zero());
}

TEST_CASE("compose maps") {
    RatMap inv;  // (1/x, y)
    inv.xn = BiPoly::constant(Rat(1));
    inv.xd = BiPoly::x();
    inv.yn = BiPoly::y();
    inv.yd = BiPoly::constant(Rat(1));
    RatMap lin = RatMap::linear(Rat(3), Rat(0), Rat(2));  // (3x, 2y)
    RatMap c = compose(lin, inv);  // (3/x, 2y)
    CHECK(c.xn == BiPoly::constant(Rat(3)));
    CHECK(c.xd == BiPoly::x());
}
