#include "biell/heights.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>

namespace biell {

namespace {

constexpr mpfr_prec_t kPrec = 320;

// Thin RAII wrapper around mpfr_t.
class Real {
  public:
    Real() { mpfr_init2(v, kPrec); mpfr_set_zero(v, 1); }
    explicit Real(double d) : Real() { mpfr_set_d(v, d, MPFR_RNDN); }
    Real(const Real& o) : Real() { mpfr_set(v, o.v, MPFR_RNDN); }
    Real& operator=(const Real& o) {
        mpfr_set(v, o.v, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v); }

    static Real from_int(const Int& n) {
        Real r;
        mpfr_set_z(r.v, n.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real from_rat(const Rat& q) {
        Real r;
        mpfr_set_q(r.v, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v, MPFR_RNDN); }

    mpfr_t v;
};

Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r;
    mpfr_div(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}
Real rabs(const Real& a) {
    Real r;
    mpfr_abs(r.v, a.v, MPFR_RNDN);
    return r;
}
Real rmax(const Real& a, const Real& b) {
    Real r;
    mpfr_max(r.v, a.v, b.v, MPFR_RNDN);
    return r;
}
Real rlog(const Real& a) {
    Real r;
    mpfr_log(r.v, a.v, MPFR_RNDN);
    return r;
}
Real rlog_int(const Int& n) { return rlog(Real::from_int(n)); }

// Per-curve data for the height series: the duplication pair in both affine
// charts and the constants bounding its size on the unit box.
struct HeightContext {
    EllipticCurveQ e;
    std::vector<Int> Fc, Gc;    // x(2P) = F(x)/G(x) as degree-4 forms
    Int L1 = 1, L2 = 1;         // integer Bezout bounds per chart
    double log_upper = 1.0;     // sup  log max(|F|,|G|) on the unit box
    double log_lower = -1.0;    // inf  ... >= -log(sum |u| + |v|)
    std::vector<std::pair<Int, int>> bad_primes;  // (p, cap on per-step valuation)

    double series_bound() const {
        return std::max(std::abs(log_upper), std::abs(log_lower));
    }
};

std::vector<Int> poly_to_ints(const Poly& p, int up_to_degree) {
    std::vector<Int> out;
    for (int i = 0; i <= up_to_degree; ++i) {
        Rat c = p.coeff(i);
        if (c.get_den() != 1)
            throw InconsistencyError("height context: non-integral coefficient");
        out.push_back(c.get_num());
    }
    return out;
}

// sum of |coefficients| of u and v from the Bezout identity u*a + v*b = 1,
// together with the cleared-denominator integer L (so U a + V b = L over Z).
std::pair<Rat, Int> bezout_size(const Poly& a, const Poly& b) {
    auto eg = poly_ext_gcd(a, b);
    if (eg.g.degree() != 0)
        throw InconsistencyError("height context: duplication pair not coprime");
    // normalize to u a + v b = 1
    Rat inv = Rat(1) / eg.g.coeff(0);
    Poly u = inv * eg.u, v = inv * eg.v;
    Rat size(0);
    Int den(1);
    for (const auto& q : u.c) {
        size += ::abs(q);
        den = lcm(den, q.get_den());
    }
    for (const auto& q : v.c) {
        size += ::abs(q);
        den = lcm(den, q.get_den());
    }
    return {size, den};
}

HeightContext make_context(const EllipticCurveQ& e) {
    HeightContext ctx;
    ctx.e = e;
    const Int a = e.a, b = e.b, c = e.c;
    // x(2P) = F(x) / G(x)
    Poly F({Rat(b * b - 4 * a * c), Rat(-8 * c), Rat(-2 * b), Rat(0), Rat(1)});
    Poly G({Rat(4 * c), Rat(4 * b), Rat(4 * a), Rat(4)});
    ctx.Fc = poly_to_ints(F, 4);
    ctx.Gc = poly_to_ints(G, 4);  // homogeneous deg 4: G(A,B) = B * G3(A,B)
    // chart 2: w = 1/x; F*(w) = w^4 F(1/w), G*(w) = w^4 G(1/w)
    Poly Fr = F.reversed(4);
    Poly Gr = G.reversed(4);

    auto [s1, l1] = bezout_size(F, G);
    auto [s2, l2] = bezout_size(Fr, Gr);
    ctx.L1 = l1;
    ctx.L2 = l2;

    double sf = 0, sg = 0;
    for (const Int& z : ctx.Fc) sf += std::abs(Real::from_int(z).to_double());
    for (const Int& z : ctx.Gc) sg += std::abs(Real::from_int(z).to_double());
    ctx.log_upper = std::log(std::max(sf, sg)) * 1.0001 + 1e-9;
    double inv_lower =
        std::max(Real::from_rat(s1).to_double(), Real::from_rat(s2).to_double());
    ctx.log_lower = -(std::log(inv_lower) * 1.0001 + 1e-9);

    std::map<Int, int> caps;
    for (const Int& L : {ctx.L1, ctx.L2}) {
        if (L == 1 || L == -1) continue;
        for (const auto& [p, ex] : ntheory::factorize(abs(L)).factors) {
            (void)ex;
            int cap = std::max(valuation(ctx.L1, p), valuation(ctx.L2, p));
            caps[p] = cap;
        }
    }
    for (const auto& [p, cap] : caps)
        if (cap > 0) ctx.bad_primes.emplace_back(p, cap);
    return ctx;
}

// Exact p-adic correction series: sum over steps of the renormalized common
// valuation, weighted by 4^-(k+1).
Rat padic_series(const HeightContext& ctx, const Int& p, int cap, const Int& A0,
                 const Int& B0, int terms) {
    int kbits = terms * cap + cap + 8;
    Int P = pow_int(p, kbits);
    Int A = mod(A0, P), B = mod(B0, P);
    int known = kbits;
    Rat acc(0);
    Rat w(1, 4);
    for (int k = 0; k < terms; ++k) {
        // evaluate F, G mod p^known
        Int ap[5], bp[5];
        ap[0] = 1;
        bp[0] = 1;
        for (int i = 1; i <= 4; ++i) {
            ap[i] = mod(ap[i - 1] * A, P);
            bp[i] = mod(bp[i - 1] * B, P);
        }
        Int f = 0, g = 0;
        for (int i = 0; i <= 4; ++i) {
            f = mod(f + ctx.Fc[i] * ap[i] * bp[4 - i], P);
            g = mod(g + ctx.Gc[i] * ap[i] * bp[4 - i], P);
        }
        auto val_of = [&](const Int& z) {
            if (z == 0) return known;  // "at least known digits"
            return std::min(valuation(z, p), known);
        };
        int m = std::min(val_of(f), val_of(g));
        if (m > cap)
            throw InconsistencyError("height: p-adic step exceeded its cap");
        if (m > 0) {
            Int pm = pow_int(p, m);
            f /= pm;
            g /= pm;
            acc += Rat(m) * w;
        }
        known -= m;
        if (known < cap + 3)
            throw InconsistencyError("height: p-adic precision exhausted");
        P = pow_int(p, known);
        A = mod(f, P);
        B = mod(g, P);
        w /= 4;
    }
    return acc;
}

double archimedean_series(const HeightContext& ctx, const Int& A0, const Int& B0,
                          int terms, double& log_acc_out) {
    Real A = Real::from_int(A0), B = Real::from_int(B0);
    Real m0 = rmax(rabs(A), rabs(B));
    A = A / m0;
    B = B / m0;
    Real acc = rlog(m0);  // = h_x(P) = log max(|A0|, B0)
    Real w(0.25);
    Real four(4.0);
    std::vector<Real> fc, gc;
    for (const Int& z : ctx.Fc) fc.push_back(Real::from_int(z));
    for (const Int& z : ctx.Gc) gc.push_back(Real::from_int(z));
    for (int k = 0; k < terms; ++k) {
        Real apow[5], bpow[5];
        apow[0] = Real(1.0);
        bpow[0] = Real(1.0);
        for (int i = 1; i <= 4; ++i) {
            apow[i] = apow[i - 1] * A;
            bpow[i] = bpow[i - 1] * B;
        }
        Real f(0.0), g(0.0);
        for (int i = 0; i <= 4; ++i) {
            f = f + fc[i] * apow[i] * bpow[4 - i];
            g = g + gc[i] * apow[i] * bpow[4 - i];
        }
        Real m = rmax(rabs(f), rabs(g));
        if (mpfr_zero_p(m.v))
            throw PrecisionExceeded("height: archimedean orbit hit a zero");
        acc = acc + w * rlog(m);
        w = w / four;
        A = f / m;
        B = g / m;
    }
    log_acc_out = acc.to_double();
    return log_acc_out;
}

}  // namespace

HeightValue canonical_height(const EllipticCurveQ& e, const ECPoint& p,
                             double precision) {
    if (precision < 1e-14)
        throw PrecisionExceeded("canonical_height: precision below supported range");
    if (p.inf) return {0.0, 0.0};
    if (!on_curve(e, p))
        throw ParameterViolation("canonical_height: point not on curve");
    if (is_torsion(e, p)) return {0.0, 0.0};

    HeightContext ctx = make_context(e);

    // target for the doubled (dynamical) height
    double eps_dyn = 2.0 * precision * 0.9;
    double eps_arch = eps_dyn / 2.0;

    double C = ctx.series_bound() + 1.0;
    int terms_arch =
        std::max(6, (int)std::ceil(std::log(C / (3.0 * eps_arch)) / std::log(4.0)) + 1);

    Int A0 = p.x.get_num(), B0 = p.x.get_den();

    double total = 0.0;
    archimedean_series(ctx, A0, B0, terms_arch, total);
    double err = C * std::pow(4.0, -terms_arch) / 3.0;
    err += 1e-60 * terms_arch;  // mpfr rounding slack at 320 bits, generous

    size_t nbad = ctx.bad_primes.size();
    double eps_p = nbad ? (eps_dyn / 2.0) / nbad : 0.0;
    for (const auto& [prime, cap] : ctx.bad_primes) {
        double logp = rlog_int(prime).to_double();
        int terms_p = std::max(
            4, (int)std::ceil(std::log(cap * logp / (3.0 * eps_p)) / std::log(4.0)) + 1);
        Rat s = padic_series(ctx, prime, cap, A0, B0, terms_p);
        total -= Real::from_rat(s).to_double() * logp;
        err += cap * logp * std::pow(4.0, -terms_p) / 3.0;
    }

    double value = total / 2.0;
    double error = err / 2.0 + 1e-15 * std::abs(value);
    if (error > precision)
        throw PrecisionExceeded("canonical_height: could not reach requested precision");
    return {value, error};
}

HeightValue height_pairing(const EllipticCurveQ& e, const ECPoint& p,
                           const ECPoint& q, double precision) {
    double eps = precision / 3.0;
    ECPoint s = add(e, p, q);
    HeightValue hs = canonical_height(e, s, eps);
    HeightValue hp = canonical_height(e, p, eps);
    HeightValue hq = canonical_height(e, q, eps);
    return {(hs.value - hp.value - hq.value) / 2.0,
            (hs.error + hp.error + hq.error) / 2.0};
}

namespace {

// |det(A + E) - det(A)| <= n * n! * (max|A| + max|E|)^(n-1) * max|E|
double det_with_error(const std::vector<std::vector<HeightValue>>& g,
                      double& err_out) {
    size_t n = g.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    double maxa = 0, maxe = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            m[i][j] = g[i][j].value;
            maxa = std::max(maxa, std::abs(m[i][j]));
            maxe = std::max(maxe, g[i][j].error);
        }
    double fact = 1;
    for (size_t i = 2; i <= n; ++i) fact *= i;
    err_out = n * fact * std::pow(maxa + maxe, n - 1) * maxe +
              fact * 1e-13 * std::pow(maxa + 1, n);
    // Gaussian elimination with partial pivoting
    double det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            double f = m[r][col] / m[col][col];
            for (size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

}  // namespace

RankLowerBound rank_lower_bound(const EllipticCurveQ& e,
                                const std::vector<ECPoint>& points,
                                double precision) {
    for (const auto& p : points)
        if (!on_curve(e, p))
            throw ParameterViolation("rank_lower_bound: point not on curve");

    // non-torsion candidates, one representative per +-pair, sorted by height
    std::vector<std::pair<HeightValue, ECPoint>> cands;
    for (const auto& p : points) {
        if (p.inf || is_torsion(e, p)) continue;
        ECPoint rep = (sign(p.y) < 0) ? neg(p) : p;
        bool dup = false;
        for (const auto& [h, q] : cands)
            if (q.x == rep.x) dup = true;
        if (dup) continue;
        cands.emplace_back(canonical_height(e, rep, precision), rep);
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const auto& a, const auto& b) {
                         if (a.first.value != b.first.value)
                             return a.first.value < b.first.value;
                         return b.second < a.second;
                     });

    RankLowerBound out;
    std::map<std::pair<size_t, size_t>, HeightValue> cache;
    std::vector<size_t> chosen_idx;
    auto pairing = [&](size_t i, size_t j) {
        std::pair<size_t, size_t> key{std::min(i, j), std::max(i, j)};
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        HeightValue v = height_pairing(e, cands[i].second, cands[j].second, precision);
        cache[key] = v;
        return v;
    };

    double last_det = 1.0, last_err = 0.0;
    for (size_t ci = 0; ci < cands.size(); ++ci) {
        std::vector<size_t> trial = chosen_idx;
        trial.push_back(ci);
        size_t n = trial.size();
        std::vector<std::vector<HeightValue>> g(n, std::vector<HeightValue>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) g[i][j] = pairing(trial[i], trial[j]);
        double gerr = 0;
        double det = det_with_error(g, gerr);
        if (det - gerr > kIndependenceThreshold) {
            chosen_idx = trial;
            last_det = det;
            last_err = gerr;
        }
    }
    for (size_t i : chosen_idx) {
        out.subset.push_back(cands[i].second);
        out.heights.push_back(cands[i].first);
    }
    out.rank = static_cast<int>(chosen_idx.size());
    out.regulator = chosen_idx.empty() ? 1.0 : last_det;
    out.regulator_error = chosen_idx.empty() ? 0.0 : last_err;
    return out;
}

}  // namespace biell
