#include "biell/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace biell {

Poly Poly::monomial(int deg, const Rat& a) {
    Poly p;
    if (sign(a) == 0) return p;
    p.c.assign(deg + 1, Rat(0));
    p.c[deg] = a;
    return p;
}

Poly Poly::from_int_coeffs(const std::vector<Int>& ic) {
    Poly p;
    p.c.reserve(ic.size());
    for (const auto& v : ic) p.c.emplace_back(v);
    p.trim();
    return p;
}

Poly Poly::from_roots(const std::vector<Rat>& roots) {
    Poly p = Poly::constant(1);
    for (const auto& r : roots) p = p * Poly({-r, Rat(1)});
    return p;
}

const Rat& Poly::coeff(int i) const {
    static const Rat kZero(0);
    if (i < 0 || i >= static_cast<int>(c.size())) return kZero;
    return c[i];
}

void Poly::trim() {
    while (!c.empty() && sign(c.back()) == 0) c.pop_back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    Poly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(Rat(static_cast<long>(i)) * c[i]);
    d.trim();
    return d;
}

Poly Poly::shift(const Rat& r) const {
    // Horner: f(x+r) = (...((c_n)(x+r) + c_{n-1})(x+r) + ...)
    Poly acc;
    Poly xr({r, Rat(1)});
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * xr + Poly::constant(*it);
    return acc;
}

Poly Poly::scale_arg(const Rat& l) const {
    Poly p = *this;
    Rat pw(1);
    for (size_t i = 0; i < p.c.size(); ++i) {
        p.c[i] *= pw;
        pw *= l;
    }
    p.trim();
    return p;
}

Poly Poly::reversed(int deg) const {
    if (degree() > deg) throw std::invalid_argument("reversed: deg too small");
    std::vector<Rat> r(deg + 1, Rat(0));
    for (int i = 0; i <= degree(); ++i) r[deg - i] = coeff(i);
    return Poly(std::move(r));
}

bool Poly::integral() const {
    for (const auto& q : c)
        if (q.get_den() != 1) return false;
    return true;
}

std::vector<Int> Poly::int_coeffs() const {
    std::vector<Int> r;
    r.reserve(c.size());
    for (const auto& q : c) {
        if (q.get_den() != 1) throw std::invalid_argument("int_coeffs: not integral");
        r.push_back(q.get_num());
    }
    return r;
}

std::pair<std::vector<Int>, Rat> Poly::primitive_int() const {
    if (is_zero()) return {{}, Rat(0)};
    Int den(1);
    for (const auto& q : c) den = lcm(den, q.get_den());
    std::vector<Int> ic;
    ic.reserve(c.size());
    Int content(0);
    for (const auto& q : c) {
        Int v = q.get_num() * (den / q.get_den());
        content = gcd(content, v);
        ic.push_back(v);
    }
    if (sign(ic.back()) < 0) content = -content;
    for (auto& v : ic) v /= content;
    return {ic, ratio(content, den)};
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& q : r.c) q = -q;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

Poly operator*(const Rat& s, const Poly& a) {
    Poly r = a;
    for (auto& q : r.c) q *= s;
    r.trim();
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod by zero polynomial");
    Poly q, r = a;
    int db = b.degree();
    Rat bl = b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Rat f = r.lead() / bl;
        Poly t = Poly::monomial(k, f);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return (Rat(1) / x.lead()) * x;
}

ExtGcd poly_ext_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(1), u1;
    Poly v0, v1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly u2 = u0 - q * u1;
        Poly v2 = v0 - q * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (!r0.is_zero()) {
        Rat inv = Rat(1) / r0.lead();
        return {inv * u0, inv * v0, inv * r0};
    }
    return {u0, v0, r0};
}

Rat det_rational(std::vector<std::vector<Rat>> m) {
    const size_t n = m.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && sign(m[piv][col]) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (sign(m[row][col]) == 0) continue;
            Rat f = m[row][col] * inv;
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

Rat resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    int da = a.degree(), db = b.degree();
    if (da == 0) return pow_rat(a.coeff(0), db);
    if (db == 0) return pow_rat(b.coeff(0), da);
    size_t n = da + db;
    std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n, Rat(0)));
    for (int row = 0; row < db; ++row)
        for (int i = 0; i <= da; ++i) s[row][row + da - i] = a.coeff(i);
    for (int row = 0; row < da; ++row)
        for (int i = 0; i <= db; ++i) s[db + row][row + db - i] = b.coeff(i);
    return det_rational(std::move(s));
}

Rat discriminant(const Poly& f) {
    int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree < 1");
    Rat res = resultant(f, f.derivative());
    Rat d = res / f.lead();
    if (((n * (n - 1)) / 2) % 2 != 0) d = -d;
    return d;
}

bool is_squarefree(const Poly& f) {
    if (f.degree() <= 0) return !f.is_zero();
    return poly_gcd(f, f.derivative()).degree() == 0;
}

namespace {

// Sturm chain of a squarefree polynomial.
std::vector<Poly> sturm_chain(const Poly& g) {
    std::vector<Poly> chain{g, g.derivative()};
    while (!chain.back().is_zero()) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        Poly r = divmod(a, b).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

int sturm_sign_changes(const std::vector<Poly>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// number of roots of the squarefree g in (a, b]
int roots_in(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    return sturm_sign_changes(chain, a) - sturm_sign_changes(chain, b);
}

void collect_integer_roots(const Poly& g, const std::vector<Poly>& chain,
                           const Int& lo, const Int& hi, std::vector<Int>& out) {
    // invariant: candidate roots lie in (lo-1, hi] among integers lo..hi
    if (lo > hi) return;
    if (roots_in(chain, Rat(lo - 1), Rat(hi)) == 0) return;
    if (lo == hi) {
        if (sign(g.eval(Rat(lo))) == 0) out.push_back(lo);
        return;
    }
    Int mid = (lo + hi) / 2;
    if (lo + hi < 0 && (lo + hi) % 2 != 0) mid -= 1;  // floor division
    collect_integer_roots(g, chain, lo, mid, out);
    collect_integer_roots(g, chain, mid + 1, hi, out);
}

}  // namespace

std::vector<Int> integer_roots(const Poly& f) {
    auto [ic, mult] = f.primitive_int();
    (void)mult;
    if (ic.empty()) throw std::invalid_argument("integer_roots of zero polynomial");
    Poly g = Poly::from_int_coeffs(ic);
    if (g.degree() == 0) return {};
    // squarefree part keeps the root set and makes Sturm applicable
    Poly sf = divmod(g, poly_gcd(g, g.derivative())).first;
    // Cauchy bound: all real roots have |x| <= 1 + max |c_i| / |lead|
    Rat maxc(0);
    for (const auto& q : sf.c) {
        Rat a = ::abs(q);
        if (a > maxc) maxc = a;
    }
    Rat bound = Rat(1) + maxc / ::abs(sf.lead());
    Int b = bound.get_num() / bound.get_den() + 1;
    std::vector<Int> roots;
    auto chain = sturm_chain(sf);
    collect_integer_roots(sf, chain, -b, b, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rat> rational_roots(const Poly& f) {
    std::vector<Rat> roots;
    auto [ic, mult] = f.primitive_int();
    (void)mult;
    if (ic.empty()) throw std::invalid_argument("rational_roots of zero polynomial");
    Poly g = Poly::from_int_coeffs(ic);
    int v = 0;
    while (v <= g.degree() && sign(g.coeff(v)) == 0) ++v;
    if (v > 0) {
        roots.emplace_back(0);
        std::vector<Rat> shifted(g.c.begin() + v, g.c.end());
        g = Poly(std::move(shifted));
    }
    if (g.degree() >= 1) {
        Int c0 = abs(g.coeff(0).get_num());
        Int cl = abs(g.lead().get_num());
        std::vector<Int> nums, dens;
        for (Int d = 1; d * d <= c0; ++d) {
            if (!divides(d, c0)) continue;
            nums.push_back(d);
            nums.push_back(c0 / d);
        }
        for (Int d = 1; d * d <= cl; ++d) {
            if (!divides(d, cl)) continue;
            dens.push_back(d);
            dens.push_back(cl / d);
        }
        for (const Int& n : nums)
            for (const Int& d : dens) {
                if (gcd(n, d) != 1) continue;
                Rat cand = ratio(n, d);
                if (sign(g.eval(cand)) == 0) roots.push_back(cand);
                if (sign(g.eval(-cand)) == 0) roots.push_back(-cand);
            }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

BiPoly BiPoly::x() {
    BiPoly p;
    p.yc.push_back(Poly::monomial(1, Rat(1)));
    return p;
}

BiPoly BiPoly::y() {
    BiPoly p;
    p.yc.push_back(Poly());
    p.yc.push_back(Poly::constant(1));
    return p;
}

BiPoly BiPoly::constant(const Rat& a) {
    BiPoly p;
    p.yc.push_back(Poly::constant(a));
    p.trim();
    return p;
}

int BiPoly::xdeg() const {
    int d = -1;
    for (const auto& p : yc) d = std::max(d, p.degree());
    return d;
}

bool BiPoly::is_zero() const {
    for (const auto& p : yc)
        if (!p.is_zero()) return false;
    return true;
}

void BiPoly::trim() {
    while (!yc.empty() && yc.back().is_zero()) yc.pop_back();
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.yc.resize(std::max(a.yc.size(), b.yc.size()));
    for (size_t i = 0; i < a.yc.size(); ++i) r.yc[i] = r.yc[i] + a.yc[i];
    for (size_t i = 0; i < b.yc.size(); ++i) r.yc[i] = r.yc[i] + b.yc[i];
    r.trim();
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + Rat(-1) * b; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.yc.resize(a.yc.size() + b.yc.size() - 1);
    for (size_t i = 0; i < a.yc.size(); ++i)
        for (size_t j = 0; j < b.yc.size(); ++j)
            r.yc[i + j] = r.yc[i + j] + a.yc[i] * b.yc[j];
    r.trim();
    return r;
}

BiPoly operator*(const Rat& s, const BiPoly& a) {
    BiPoly r = a;
    for (auto& p : r.yc) p = s * p;
    r.trim();
    return r;
}

BiPoly bipoly_pow(const BiPoly& a, int e) {
    BiPoly r = BiPoly::constant(Rat(1));
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

BiPoly reduce_mod_curve(const BiPoly& p, const Poly& f, const Rat& d) {
    BiPoly r = p;
    Poly fd = (Rat(1) / d) * f;
    while (r.ydeg() >= 2) {
        int j = r.ydeg();
        Poly top = r.yc[j];
        r.yc.pop_back();
        // top * y^j = top * (f/d) * y^(j-2)
        r.yc[j - 2] = r.yc[j - 2] + top * fd;
        r.trim();
    }
    return r;
}

RatMap RatMap::identity() {
    return {BiPoly::x(), BiPoly::constant(Rat(1)), BiPoly::y(),
            BiPoly::constant(Rat(1))};
}

RatMap RatMap::linear(const Rat& a, const Rat& b, const Rat& c) {
    BiPoly xm = a * BiPoly::x() + BiPoly::constant(b);
    return {xm, BiPoly::constant(Rat(1)), c * BiPoly::y(),
            BiPoly::constant(Rat(1))};
}

BiPoly subst_num(const BiPoly& p, const RatMap& m, int clear_x, int clear_y) {
    // Powers of components up to the clearing degrees.
    std::vector<BiPoly> xnp(clear_x + 1), xdp(clear_x + 1), ynp(clear_y + 1),
        ydp(clear_y + 1);
    xnp[0] = xdp[0] = ynp[0] = ydp[0] = BiPoly::constant(Rat(1));
    for (int i = 1; i <= clear_x; ++i) {
        xnp[i] = xnp[i - 1] * m.xn;
        xdp[i] = xdp[i - 1] * m.xd;
    }
    for (int j = 1; j <= clear_y; ++j) {
        ynp[j] = ynp[j - 1] * m.yn;
        ydp[j] = ydp[j - 1] * m.yd;
    }
    BiPoly acc;
    for (int j = 0; j < static_cast<int>(p.yc.size()); ++j) {
        for (int i = 0; i <= p.yc[j].degree(); ++i) {
            const Rat& coef = p.yc[j].coeff(i);
            if (sign(coef) == 0) continue;
            BiPoly term = coef * (xnp[i] * xdp[clear_x - i]);
            term = term * (ynp[j] * ydp[clear_y - j]);
            acc = acc + term;
        }
    }
    return acc;
}

RatMap compose(const RatMap& outer, const RatMap& inner) {
    int cx = std::max(outer.xn.xdeg(), outer.xd.xdeg());
    int cy = std::max(outer.xn.ydeg(), outer.xd.ydeg());
    BiPoly xn = subst_num(outer.xn, inner, cx, cy);
    BiPoly xd = subst_num(outer.xd, inner, cx, cy);
    int cx2 = std::max(outer.yn.xdeg(), outer.yd.xdeg());
    int cy2 = std::max(outer.yn.ydeg(), outer.yd.ydeg());
    BiPoly yn = subst_num(outer.yn, inner, cx2, cy2);
    BiPoly yd = subst_num(outer.yd, inner, cx2, cy2);
    return {xn, xd, yn, yd};
}

}  // namespace biell
