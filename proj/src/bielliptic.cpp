#include "biell/bielliptic.hpp"

#include <sstream>

namespace biell {

namespace {

std::string poly_str(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const Rat& c = f.coeff(i);
        if (sign(c) == 0) continue;
        if (!first) os << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) os << "-";
        first = false;
        Rat a = ::abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace

bool HyperellipticModel::even_monomials_only() const {
    for (int i = 1; i <= f.degree(); i += 2)
        if (sign(f.coeff(i)) != 0) return false;
    return true;
}

std::string HyperellipticModel::str() const {
    std::string lhs = (d == 1) ? "y^2" : d.get_str() + "*y^2";
    return lhs + " = " + poly_str(f);
}

std::string QuarticModel::str() const {
    std::string lhs = (d == 1) ? "y^2" : d.get_str() + "*y^2";
    return lhs + " = " + poly_str(g);
}

HyperellipticModel make_hyperelliptic(const Int& d, const Poly& f) {
    if (sign(d) == 0) throw ParameterViolation("hyperelliptic: twist must be nonzero");
    if (f.degree() < 5 || f.degree() > 8)
        throw ParameterViolation("hyperelliptic: degree must be 5..8");
    if (!f.integral())
        throw ParameterViolation("hyperelliptic: integer coefficients required");
    if (!is_squarefree(f)) throw SingularCurve("hyperelliptic: repeated root");
    return {d, f};
}

QuarticModel make_quartic(const Int& d, const Poly& g) {
    if (sign(d) == 0) throw ParameterViolation("quartic model: twist must be nonzero");
    if (g.degree() != 4) throw ParameterViolation("quartic model: degree must be 4");
    if (!is_squarefree(g)) throw SingularCurve("quartic model: repeated root");
    return {d, g};
}

BiPoly defining_bipoly(const TargetModel& m) {
    if (std::holds_alternative<EllipticCurveQ>(m)) {
        const auto& e = std::get<EllipticCurveQ>(m);
        return BiPoly::y() * BiPoly::y() - BiPoly(e.rhs());
    }
    if (std::holds_alternative<HyperellipticModel>(m)) {
        const auto& h = std::get<HyperellipticModel>(m);
        return Rat(h.d) * (BiPoly::y() * BiPoly::y()) - BiPoly(h.f);
    }
    const auto& q = std::get<QuarticModel>(m);
    return Rat(q.d) * (BiPoly::y() * BiPoly::y()) - BiPoly(q.g);
}

bool verify_map(const QuotientMap& m) {
    BiPoly target = defining_bipoly(m.target);
    int cx = std::max(1, target.xdeg());
    int cy = std::max(1, target.ydeg());
    BiPoly num = subst_num(target, m.formulas, cx, cy);
    Int sd;
    Poly sf;
    if (std::holds_alternative<HyperellipticModel>(m.source)) {
        const auto& h = std::get<HyperellipticModel>(m.source);
        sd = h.d;
        sf = h.f;
    } else {
        const auto& q = std::get<QuarticModel>(m.source);
        sd = q.d;
        sf = q.g;
    }
    return reduce_mod_curve(num, sf, Rat(sd)).is_zero();
}

namespace {

RatMap square_scaled_map(const Rat& kx, const Rat& ky) {
    RatMap r;
    r.xn = BiPoly(Poly::monomial(2, kx));
    r.xd = BiPoly::constant(Rat(1));
    r.yn = ky * BiPoly::y();
    r.yd = BiPoly::constant(Rat(1));
    return r;
}

RatMap inverse_square_map(const Rat& kx, const Rat& ky) {
    RatMap r;
    r.xn = BiPoly::constant(kx);
    r.xd = BiPoly(Poly::monomial(2, Rat(1)));
    r.yn = ky * BiPoly::y();
    r.yd = BiPoly(Poly::monomial(3, Rat(1)));
    return r;
}

void require_verified(const QuotientMap& m, const char* what) {
    if (!verify_map(m))
        throw MapIdentityFailed(std::string(what) + ": change of variables failed "
                                "its exact identity check");
}

}  // namespace

SexticSplit split_even_sextic(const HyperellipticModel& c) {
    if (c.f.degree() != 6)
        throw ParameterViolation("split_even_sextic: degree-6 model required");
    if (!c.even_monomials_only())
        throw ParameterViolation("split_even_sextic: odd monomials present");
    const Rat a6 = c.f.coeff(6), a4 = c.f.coeff(4), a2 = c.f.coeff(2),
              a0 = c.f.coeff(0);
    if (sign(a6) == 0 || sign(a0) == 0)
        throw ParameterViolation("split_even_sextic: a6 and a0 must be nonzero");

    SexticSplit out;
    Poly cubic1({a0, a2, a4, a6});
    out.q1 = normalize(c.d, cubic1);
    {
        QuotientMap m;
        m.source = c;
        m.target = out.q1;
        const Rat sx = out.q1.from_input.xscale, sy = out.q1.from_input.yscale;
        m.formulas = square_scaled_map(sx, sy);
        m.degree = 2;
        m.shape = {MapShape::SquareScaled, sx, sy, Rat(0)};
        require_verified(m, "split_even_sextic/phi1");
        out.phi1 = m;
    }
    Poly cubic2({a6, a4, a2, a0});
    out.q2 = normalize(c.d, cubic2);
    {
        QuotientMap m;
        m.source = c;
        m.target = out.q2;
        const Rat sx = out.q2.from_input.xscale, sy = out.q2.from_input.yscale;
        m.formulas = inverse_square_map(sx, sy);
        m.degree = 2;
        m.shape = {MapShape::InverseSquareScaled, sx, sy, Rat(0)};
        require_verified(m, "split_even_sextic/phi2");
        out.phi2 = m;
    }
    return out;
}

OcticSplit split_even_octic(const HyperellipticModel& c) {
    if (c.f.degree() != 8)
        throw ParameterViolation("split_even_octic: degree-8 model required");
    if (!c.even_monomials_only())
        throw ParameterViolation("split_even_octic: odd monomials present");
    if (sign(c.f.coeff(0)) == 0)
        throw ParameterViolation("split_even_octic: constant term must be nonzero");

    Poly q({c.f.coeff(0), c.f.coeff(2), c.f.coeff(4), c.f.coeff(6), c.f.coeff(8)});
    OcticSplit out;
    out.quartic = make_quartic(c.d, q);
    {
        QuotientMap m;
        m.source = c;
        m.target = out.quartic;
        m.formulas = square_scaled_map(Rat(1), Rat(1));
        m.degree = 2;
        m.shape = {MapShape::SquareScaled, Rat(1), Rat(1), Rat(0)};
        require_verified(m, "split_even_octic/phi_e");
        out.phi_e = m;
    }
    Poly xq = q * Poly::monomial(1, Rat(1));  // X q(X), degree 5
    out.genus2 = make_hyperelliptic(c.d, xq);
    {
        QuotientMap m;
        m.source = c;
        m.target = out.genus2;
        RatMap f;
        f.xn = BiPoly(Poly::monomial(2, Rat(1)));
        f.xd = BiPoly::constant(Rat(1));
        f.yn = BiPoly(Poly::monomial(1, Rat(1))) * BiPoly::y();  // x * y
        f.yd = BiPoly::constant(Rat(1));
        m.formulas = f;
        m.degree = 2;
        m.shape = {MapShape::SquareTimesY, Rat(1), Rat(1), Rat(0)};
        require_verified(m, "split_even_octic/phi2");
        out.phi2 = m;
    }
    return out;
}

QuarticReduction quartic_to_weierstrass(const QuarticModel& m, const Rat& root) {
    if (sign(m.g.eval(root)) != 0)
        throw ParameterViolation("quartic_to_weierstrass: not a root of the quartic");
    Poly shifted = m.g.shift(root);  // constant term 0, linear term g'(root) != 0
    // d y^2 = x * (a4 x^3 + a3 x^2 + a2 x + a1); with U = 1/x, V = y/x^2:
    // d V^2 = a1 U^3 + a2 U^2 + a3 U + a4
    Poly cubic({shifted.coeff(4), shifted.coeff(3), shifted.coeff(2),
                shifted.coeff(1)});
    QuarticReduction out;
    out.e = normalize(m.d, cubic);
    const Rat sx = out.e.from_input.xscale, sy = out.e.from_input.yscale;
    QuotientMap psi;
    psi.source = m;
    psi.target = out.e;
    // X = sx / (x - root), Y = sy y / (x - root)^2
    Poly xr({-root, Rat(1)});
    RatMap f;
    f.xn = BiPoly::constant(sx);
    f.xd = BiPoly(xr);
    f.yn = sy * BiPoly::y();
    f.yd = BiPoly(xr * xr);
    psi.formulas = f;
    psi.degree = 1;
    // kx/ky/rho feed the shape of compositions with X = x^2; on its own this
    // reduction is linear-shifted in x, which no pullback consumes directly
    psi.shape = {MapShape::Other, sx, sy, root};
    require_verified(psi, "quartic_to_weierstrass");
    out.psi = psi;
    return out;
}

std::optional<std::pair<Rat, Rat>> hyper_isomorphic_scaling(
    const HyperellipticModel& from, const HyperellipticModel& to) {
    const Poly &f1 = from.f, &f2 = to.f;
    if (f1.degree() != f2.degree()) return std::nullopt;
    int n = f1.degree();
    // matching support pattern
    int i1 = -1, i2 = -1;
    for (int i = n; i >= 0; --i) {
        bool z1 = sign(f1.coeff(i)) == 0, z2 = sign(f2.coeff(i)) == 0;
        if (z1 != z2) return std::nullopt;
        if (!z1) {
            if (i1 < 0) i1 = i;
            else if (i2 < 0) i2 = i;
        }
    }
    // Points (x, y) of `from` map to (X, Y) = (x/lambda, y/mu) on `to`:
    // substituting x = lambda X, y = mu Y into d1 y^2 = f1(x) must give a
    // rational multiple of d2 Y^2 = f2(X), i.e. f1(lambda X) = kappa f2(X)
    // with kappa = d1 mu^2 / d2.
    std::vector<Rat> lambdas;
    if (i2 < 0) {
        lambdas.emplace_back(1);  // single monomial: any scale works; take 1
    } else {
        // lambda^(i1-i2) = (f2_{i1} f1_{i2}) / (f2_{i2} f1_{i1})
        Rat target = (f2.coeff(i1) / f2.coeff(i2)) * (f1.coeff(i2) / f1.coeff(i1));
        int k = i1 - i2;
        Int num, den;
        Rat atarget = ::abs(target);
        if (!root_exact(atarget.get_num(), k, num) ||
            !root_exact(atarget.get_den(), k, den))
            return std::nullopt;
        Rat lam = ratio(num, den);
        if (k % 2 == 0) {
            if (sign(target) < 0) return std::nullopt;
            lambdas.push_back(lam);
            lambdas.push_back(-lam);
        } else {
            lambdas.push_back(sign(target) < 0 ? -lam : lam);
        }
    }
    for (const Rat& lam : lambdas) {
        if (sign(lam) == 0) continue;
        Poly f1l = f1.scale_arg(lam);
        Rat kappa = f1l.coeff(i1) / f2.coeff(i1);
        if (!(f1l == kappa * f2)) continue;
        Rat mu2 = kappa * Rat(to.d) / Rat(from.d);
        if (sign(mu2) <= 0 || !is_square(mu2)) continue;
        return std::make_pair(lam, sqrt_exact(mu2));
    }
    return std::nullopt;
}

}  // namespace biell
