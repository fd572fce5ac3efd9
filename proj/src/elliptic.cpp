#include "biell/elliptic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace biell {

namespace {

// Largest w >= 1 with w^2 | A, w^4 | B, w^6 | C (zero entries impose nothing);
// used to shrink y^2 = x^3 + Ax^2 + Bx + C by (x, y) -> (x/w^2, y/w^3).
Int reduction_scale(const Int& A, const Int& B, const Int& C,
                    const ntheory::Config& cfg) {
    Int g = 0;
    for (const Int* v : {&A, &B, &C})
        if (sign(*v) != 0) g = gcd(g, *v);
    if (g == 0 || g == 1) return 1;
    Int w = 1;
    for (const auto& [p, e] : ntheory::factorize(g, cfg).factors) {
        (void)e;
        int k = INT_MAX;
        if (sign(A) != 0) k = std::min(k, valuation(A, p) / 2);
        if (sign(B) != 0) k = std::min(k, valuation(B, p) / 4);
        if (sign(C) != 0) k = std::min(k, valuation(C, p) / 6);
        if (k > 0) w *= pow_int(p, k);
    }
    return w;
}

}  // namespace

Poly EllipticCurveQ::rhs() const {
    return Poly({Rat(c), Rat(b), Rat(a), Rat(1)});
}

Int EllipticCurveQ::c6() const {
    return -pow_int(b2(), 3) + 36 * b2() * b4() - 216 * b6();
}

Int EllipticCurveQ::disc() const {
    return -b2() * b2() * b8() - 8 * pow_int(b4(), 3) - 27 * b6() * b6() +
           9 * b2() * b4() * b6();
}

Rat EllipticCurveQ::j() const {
    return ratio(pow_int(c4(), 3), disc());
}

std::string EllipticCurveQ::str() const {
    std::ostringstream os;
    os << "y^2 = x^3";
    auto term = [&](const Int& v, const char* mon) {
        if (sign(v) == 0) return;
        os << (sign(v) > 0 ? " + " : " - ");
        Int av = abs(v);
        if (av != 1 || mon[0] == '\0') os << av.get_str();
        os << mon;
    };
    term(a, "x^2");
    term(b, "x");
    term(c, "");
    return os.str();
}

bool ECPoint::operator<(const ECPoint& o) const {
    if (inf != o.inf) return inf;  // O sorts first
    if (inf) return false;
    if (x != o.x) return x < o.x;
    return y < o.y;
}

std::string ECPoint::str() const {
    if (inf) return "O";
    return "(" + x.get_str() + ", " + y.get_str() + ")";
}

EllipticCurveQ normalize(const Int& d, const Poly& rhs) {
    if (sign(d) == 0) throw ParameterViolation("normalize: twist d must be nonzero");
    if (rhs.degree() != 3)
        throw ParameterViolation("normalize: right-hand side must have degree 3");
    if (!is_squarefree(rhs)) throw SingularCurve("normalize: repeated root");

    const Rat c3 = rhs.coeff(3), c2 = rhs.coeff(2), c1 = rhs.coeff(1),
              c0 = rhs.coeff(0);
    const Rat dq(d);
    // (x, y) -> (d c3 x, d^2 c3 y) makes the cubic monic with the twist absorbed
    Rat A0 = c2 * dq;
    Rat B0 = c1 * c3 * dq * dq;
    Rat C0 = c0 * c3 * c3 * dq * dq * dq;

    // clear denominators with (x, y) -> (u^2 x, u^3 y)
    Int u = 1;
    Int dens = lcm(lcm(A0.get_den(), B0.get_den()), C0.get_den());
    if (dens > 1) {
        for (const auto& [p, e] :
             ntheory::factorize(dens, ntheory::default_config()).factors) {
            (void)e;
            int need = 0;
            auto need_for = [&](const Rat& v, int w) {
                if (sign(v) == 0) return 0;
                int vp = valuation(v.get_den(), p);
                return (vp + w - 1) / w;
            };
            need = std::max({need_for(A0, 2), need_for(B0, 4), need_for(C0, 6)});
            if (need > 0) u *= pow_int(p, need);
        }
    }
    Rat uq(u);
    Int A = Rat(A0 * uq * uq).get_num();
    Int B = Rat(B0 * uq * uq * uq * uq).get_num();
    Int C = Rat(C0 * pow_rat(uq, 6)).get_num();

    Int w = reduction_scale(A, B, C, ntheory::default_config());
    Int w2 = w * w;
    A /= w2;
    B /= w2 * w2;
    C /= w2 * w2 * w2;

    EllipticCurveQ e;
    e.a = A;
    e.b = B;
    e.c = C;
    e.input_twist = d;
    e.input_rhs = rhs;
    Rat s = Rat(u) / Rat(w);  // residual scale after clearing and reduction
    e.from_input = {s * s * dq * c3, Rat(0), s * s * s * dq * dq * c3};
    if (e.disc() == 0) throw SingularCurve("normalize: singular model");
    return e;
}

EllipticCurveQ curve_from_coeffs(const Int& a, const Int& b, const Int& c) {
    EllipticCurveQ e;
    e.a = a;
    e.b = b;
    e.c = c;
    e.input_twist = 1;
    e.input_rhs = e.rhs();
    e.from_input = {};
    if (e.disc() == 0) throw SingularCurve("curve_from_coeffs: singular model");
    return e;
}

bool on_curve(const EllipticCurveQ& e, const ECPoint& p) {
    if (p.inf) return true;
    return p.y * p.y == e.rhs().eval(p.x);
}

ECPoint neg(const ECPoint& p) {
    if (p.inf) return p;
    return ECPoint(p.x, -p.y);
}

ECPoint add(const EllipticCurveQ& e, const ECPoint& p, const ECPoint& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    if (p.x == q.x) {
        if (p.y == -q.y) return ECPoint::infinity();
    }
    Rat lambda;
    if (p.x == q.x) {
        // tangent: (3x^2 + 2ax + b) / 2y
        lambda = (Rat(3) * p.x * p.x + Rat(2 * e.a) * p.x + Rat(e.b)) /
                 (Rat(2) * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    Rat x3 = lambda * lambda - Rat(e.a) - p.x - q.x;
    Rat y3 = lambda * (p.x - x3) - p.y;
    return ECPoint(x3, y3);
}

ECPoint scalar_mul(const EllipticCurveQ& e, const Int& n, const ECPoint& p) {
    Int k = abs(n);
    ECPoint base = sign(n) < 0 ? neg(p) : p;
    ECPoint acc = ECPoint::infinity();
    size_t bits = (k == 0) ? 0 : mpz_sizeinbase(k.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = add(e, acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = add(e, acc, base);
    }
    return acc;
}

Int discriminant(const EllipticCurveQ& e) { return e.disc(); }
Rat j_invariant(const EllipticCurveQ& e) { return e.j(); }

EllipticCurveQ quadratic_twist(const EllipticCurveQ& e, const Int& t) {
    if (sign(t) == 0) throw ParameterViolation("quadratic_twist: t must be nonzero");
    if (!ntheory::is_squarefree(t))
        throw ParameterViolation("quadratic_twist: t must be squarefree");
    return normalize(t, e.rhs());
}

std::optional<IsoData> is_isomorphic_over_Q(const EllipticCurveQ& e1,
                                            const EllipticCurveQ& e2) {
    if (e1.j() != e2.j()) return std::nullopt;
    Int c41 = e1.c4(), c42 = e2.c4(), c61 = e1.c6(), c62 = e2.c6();
    // find u with c4(e2) = u^4 c4(e1), c6(e2) = u^6 c6(e1)
    Rat u2;
    if (c41 == 0 && c42 == 0) {
        // j = 0: u^6 = c62/c61
        Rat r6 = ratio(c62, c61);
        if (sign(r6) <= 0) return std::nullopt;
        Int n, d;
        if (!root_exact(r6.get_num(), 3, n) || !root_exact(r6.get_den(), 3, d))
            return std::nullopt;
        u2 = ratio(n, d);  // u^2 = cube root of u^6
        if (!is_square(u2)) return std::nullopt;
    } else if (c61 == 0 && c62 == 0) {
        // j = 1728: u^4 = c42/c41
        Rat r4 = ratio(c42, c41);
        if (sign(r4) <= 0) return std::nullopt;
        if (!is_square(r4)) return std::nullopt;
        u2 = sqrt_exact(r4);
    } else {
        if (c41 == 0 || c42 == 0 || c61 == 0 || c62 == 0) return std::nullopt;
        u2 = ratio(c62 * c41, c61 * c42);  // u^6 / u^4
        if (sign(u2) <= 0) return std::nullopt;
        if (pow_rat(u2, 2) != ratio(c42, c41)) return std::nullopt;
        if (pow_rat(u2, 3) != ratio(c62, c61)) return std::nullopt;
    }
    if (!is_square(u2)) return std::nullopt;
    Rat u = sqrt_exact(u2);
    // translation fixed by the x^2 coefficients: 3r + a(e2) = u^2 a(e1)
    Rat r = (u2 * Rat(e1.a) - Rat(e2.a)) / Rat(3);
    // verify: y^2 = rhs1(x) maps to Y^2 = rhs2(X) under X = u^2 x + r, Y = u^3 y
    Poly expect = pow_rat(u2, 3) * e1.rhs();          // u^6 rhs1(x)
    Poly got = e2.rhs().scale_arg(u2).shift(r / u2);  // rhs2(u^2 x + r)
    if (!(expect == got)) return std::nullopt;
    return IsoData{u, r};
}

int point_order(const EllipticCurveQ& e, const ECPoint& p) {
    if (p.inf) return 1;
    ECPoint acc = p;
    for (int k = 1; k <= 16; ++k) {
        if (acc.inf) return k;
        // torsion on an integral model has integer coordinates
        if (acc.x.get_den() != 1 || acc.y.get_den() != 1) return 0;
        acc = add(e, acc, p);
    }
    return 0;
}

bool is_torsion(const EllipticCurveQ& e, const ECPoint& p) {
    return point_order(e, p) != 0;
}

int TorsionGroup::order() const {
    switch (tag) {
        case TorsionTag::Trivial: return 1;
        case TorsionTag::Cyclic: return n;
        case TorsionTag::TwoByCyclic: return 4 * n;
    }
    return 1;
}

std::string TorsionGroup::name() const {
    switch (tag) {
        case TorsionTag::Trivial: return "trivial";
        case TorsionTag::Cyclic: return "Z/" + std::to_string(n);
        case TorsionTag::TwoByCyclic:
            return "Z/2 x Z/" + std::to_string(2 * n);
    }
    return "?";
}

std::string MordellTorsion::name() const {
    TorsionGroup g;
    g.tag = tag;
    g.n = n;
    return g.name();
}

TorsionGroup torsion_subgroup(const EllipticCurveQ& e, const ntheory::Config& cfg) {
    // Candidates: integral points with y = 0 or y^2 | Res(q, F) where F is the
    // numerator of the duplication map (2P integral forces y^2 | Res).
    Poly q = e.rhs();
    Poly F({Rat(e.b * e.b - 4 * e.a * e.c), Rat(-8 * e.c), Rat(-2 * e.b), Rat(0),
            Rat(1)});
    Int R = resultant(q, F).get_num();
    if (R == 0) throw InconsistencyError("torsion: duplication resultant vanished");

    std::vector<Int> ys{0};
    auto fac = ntheory::factorize(R, cfg);
    std::vector<Int> divs{1};
    for (const auto& [p, ex] : fac.factors) {
        size_t n0 = divs.size();
        Int pk = 1;
        for (int i = 1; i <= ex / 2; ++i) {
            pk *= p;
            for (size_t j = 0; j < n0; ++j) divs.push_back(divs[j] * pk);
        }
    }
    for (const Int& d : divs) ys.push_back(d);

    std::vector<ECPoint> pts{ECPoint::infinity()};
    for (const Int& y : ys) {
        Poly shifted = q - Poly::constant(Rat(y * y));
        for (const Int& x : integer_roots(shifted)) {
            ECPoint p{Rat(x), Rat(y)};
            int ord = point_order(e, p);
            if (ord == 0) continue;
            pts.push_back(p);
            if (y != 0) pts.push_back(neg(p));
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    int N = static_cast<int>(pts.size());
    int two_tors = 0;
    for (const auto& p : pts)
        if (!p.inf && sign(p.y) == 0) ++two_tors;

    TorsionGroup g;
    g.points = pts;
    if (N == 1) {
        g.tag = TorsionTag::Trivial;
        g.n = 1;
        return g;
    }
    if (two_tors <= 1) {
        g.tag = TorsionTag::Cyclic;
        g.n = N;
        ECPoint gen;
        bool found = false;
        for (const auto& p : pts) {
            if (!p.inf && point_order(e, p) == N) {
                gen = p;
                found = true;
                break;
            }
        }
        if (!found || N > 12 || N == 11)
            throw InconsistencyError("torsion: no generator of full order");
        g.generators = {gen};
        return g;
    }
    // full 2-torsion: Z/2 x Z/2n with 4n = N
    if (two_tors != 3 || N % 4 != 0)
        throw InconsistencyError("torsion: bad 2-torsion count");
    g.tag = TorsionTag::TwoByCyclic;
    g.n = N / 4;
    if (g.n > 4) throw InconsistencyError("torsion: beyond the rational bound");
    ECPoint big;
    bool found = false;
    for (const auto& p : pts) {
        if (!p.inf && point_order(e, p) == 2 * g.n) {
            big = p;
            found = true;
            break;
        }
    }
    if (!found) throw InconsistencyError("torsion: no element of order 2n");
    // a 2-torsion point outside <big>
    ECPoint half = scalar_mul(e, g.n, big);  // the 2-torsion inside <big>
    for (const auto& p : pts) {
        if (!p.inf && sign(p.y) == 0 && !(p == half)) {
            g.generators = {big, p};
            break;
        }
    }
    return g;
}

MordellTorsion mordell_torsion_classify(const Int& s) {
    if (sign(s) == 0)
        throw ParameterViolation("mordell_torsion_classify: s must be nonzero");
    if (!ntheory::is_sixth_power_free(s))
        throw ParameterViolation("mordell_torsion_classify: s must be sixth-power-free");
    if (s == 1) return {TorsionTag::Cyclic, 6};
    if (s == -432) return {TorsionTag::Cyclic, 3};
    if (is_square(s)) return {TorsionTag::Cyclic, 3};
    if (is_cube(s)) return {TorsionTag::Cyclic, 2};
    return {TorsionTag::Trivial, 1};
}

std::vector<ECPoint> search_points(const EllipticCurveQ& e, const Int& height_bound) {
    if (height_bound < 1)
        throw ParameterViolation("search_points: height bound must be >= 1");
    const long kMaxChecks = 50'000'000;
    long checks = 0;
    std::vector<ECPoint> out;
    Int emax = isqrt(height_bound);
    if (emax * emax < height_bound) emax += 1;
    for (Int den = 1; den <= emax; ++den) {
        Int e2 = den * den, e4 = e2 * e2, e6 = e4 * e2;
        Int mmax = height_bound * e2;
        for (Int m = -mmax; m <= mmax; ++m) {
            if (gcd(m, den) != 1) continue;
            if (++checks > kMaxChecks)
                throw BudgetExceeded("search_points: enumeration budget exceeded");
            Int N = ((m + e.a * e2) * m + e.b * e4) * m + e.c * e6;
            if (sign(N) < 0 || !is_square(N)) continue;
            Int n = sqrt_exact(N);  // y = n / den^3 >= 0
            out.emplace_back(ratio(m, e2), ratio(n, den * den * den));
        }
    }
    // canonical y >= 0 representative is already enforced (n >= 0)
    for (auto& p : out) {
        p.x.canonicalize();
        p.y.canonicalize();
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Reduction reduction_type(const EllipticCurveQ& e, const Int& p) {
    if (!ntheory::is_prime(p))
        throw ParameterViolation("reduction_type: p must be prime");
    Int A = e.a, B = e.b, C = e.c;
    Int p2 = p * p, p4 = p2 * p2, p6 = p4 * p2;
    // prime-by-prime scaling minimality
    while ((A == 0 || divides(p2, A)) && (B == 0 || divides(p4, B)) &&
           (C == 0 || divides(p6, C))) {
        if (A == 0 && B == 0 && C == 0) break;
        A /= p2;
        B /= p4;
        C /= p6;
    }
    EllipticCurveQ m;
    m.a = A;
    m.b = B;
    m.c = C;
    if (!divides(p, m.disc())) return Reduction::Good;
    if (!divides(p, m.c4())) return Reduction::Multiplicative;
    return Reduction::Additive;
}

std::string reduction_name(Reduction r) {
    switch (r) {
        case Reduction::Good: return "good";
        case Reduction::Multiplicative: return "multiplicative";
        case Reduction::Additive: return "additive";
    }
    return "?";
}

}  // namespace biell
