#include "biell/ntheory.hpp"

#include <algorithm>
#include <map>

namespace biell {
namespace ntheory {

namespace {
Config& mutable_default_config() {
    static Config cfg{};
    return cfg;
}
}  // namespace

const Config& default_config() { return mutable_default_config(); }

void set_default_seed(unsigned long seed) {
    mutable_default_config().seed = seed;
}

Int Factorization::value() const {
    Int v = sgn;
    for (const auto& [p, e] : factors) v *= pow_int(p, e);
    return v;
}

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& a) {
    // returns true if a proves n composite
    if (mod(a, n) == 0) return false;
    Int d = n - 1;
    int s = 0;
    while (mod(d, 2) == 0) {
        d /= 2;
        ++s;
    }
    Int x = powm(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mod(x * x, n);
        if (x == n - 1) return false;
    }
    return true;
}

// Strong Lucas probable-prime test with Selfridge parameters.
// Caller guarantees n odd, n > 1, n not a perfect square.
bool strong_lucas_prp(const Int& n) {
    // find D = 5, -7, 9, -11, ... with (D/n) = -1
    Int d = 5;
    while (true) {
        int j = jacobi(d, n);
        if (j == 0) return abs(d) == n;  // proper factor found unless n = |d|
        if (j == -1) break;
        Int step = abs(d) + 2;
        d = (sign(d) > 0) ? -step : step;
    }
    // P = 1, Q = (1 - D) / 4
    Int q = (1 - d) / 4;
    Int k = n + 1;
    int s = 0;
    while (mod(k, 2) == 0) {
        k /= 2;
        ++s;
    }
    // U_k, V_k by a left-to-right binary ladder starting from U_1 = V_1 = 1
    size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    Int u = 1, v = 1, qk = q;
    for (size_t i = bits - 1; i-- > 0;) {
        // double: U_{2m} = U_m V_m, V_{2m} = V_m^2 - 2 Q^m
        u = mod(u * v, n);
        v = mod(v * v - 2 * qk, n);
        qk = mod(qk * qk, n);
        if (mpz_tstbit(k.get_mpz_t(), i)) {
            // increment: U_{m+1} = (U_m + V_m)/2, V_{m+1} = (D U_m + V_m)/2
            Int u2 = u + v;
            Int v2 = d * u + v;
            if (mod(u2, 2) != 0) u2 += n;
            if (mod(v2, 2) != 0) v2 += n;
            u = mod(u2 / 2, n);
            v = mod(v2 / 2, n);
            qk = mod(qk * q, n);
        }
    }
    if (u == 0 || v == 0) return true;
    for (int r = 1; r < s; ++r) {
        u = mod(u * v, n);
        v = mod(v * v - 2 * qk, n);
        qk = mod(qk * qk, n);
        if (v == 0) return true;
    }
    return false;
}

const Int kTwo64 = pow_int(Int(2), 64);

}  // namespace

Primality classify_prime(const Int& n_in) {
    Int n = abs(n_in);
    if (n < 2) return Primality::Composite;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL,
                            29UL, 31UL, 37UL}) {
        if (n == p) return Primality::Prime;
        if (divides(Int(p), n)) return Primality::Composite;
    }
    // Deterministic base set for the Miller-Rabin test below 3.3 * 10^24,
    // which covers the full < 2^64 range required to be rigorous.
    for (unsigned long a : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL,
                            29UL, 31UL, 37UL}) {
        if (miller_rabin_witness(n, Int(a))) return Primality::Composite;
    }
    if (n < kTwo64) return Primality::Prime;
    if (is_square(n)) return Primality::Composite;
    if (!strong_lucas_prp(n)) return Primality::Composite;
    return Primality::ProbablePrime;
}

bool is_prime(const Int& n) { return classify_prime(n) != Primality::Composite; }

namespace {

// Pollard rho with Brent cycle detection; deterministic parameter schedule,
// seed only perturbs the start value. Returns a nontrivial factor.
Int pollard_rho(const Int& n, long& iters_left, unsigned long seed) {
    if (mod(n, 2) == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Int x = Int(2 + (seed + c) % 97);
        Int y = x, d = 1;
        Int saved_x = x;
        long power = 1, lam = 0;
        Int acc = 1;
        const long batch = 128;
        while (d == 1) {
            if (--iters_left <= 0)
                throw BudgetExceeded("factorize: pollard rho iteration cap");
            if (lam == power) {
                saved_x = x;
                power *= 2;
                lam = 0;
            }
            Int stop = std::min(power - lam, batch);
            for (Int i = 0; i < stop; ++i) {
                x = mod(x * x + c, n);
                acc = mod(acc * (x - saved_x), n);
            }
            lam += stop.get_si();
            d = gcd(acc, n);
        }
        if (d != n) return d;
        // batched gcd overshoot: replay one step at a time
        x = saved_x;
        d = 1;
        while (d == 1) {
            if (--iters_left <= 0)
                throw BudgetExceeded("factorize: pollard rho iteration cap");
            x = mod(x * x + c, n);
            d = gcd(x - saved_x, n);
        }
        if (d != n) return d;
        // cycle degenerate for this c; try the next polynomial
    }
}

void factor_into(const Int& n, std::map<Int, int>& out, long& iters_left,
                 unsigned long seed) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_rho(n, iters_left, seed);
    factor_into(d, out, iters_left, seed);
    factor_into(n / d, out, iters_left, seed);
}

}  // namespace

Factorization factorize(const Int& n, const Config& cfg) {
    if (sign(n) == 0) throw ParameterViolation("factorize: n must be nonzero");
    if (decimal_digits(n) > cfg.digit_budget)
        throw BudgetExceeded("factorize: digit budget exceeded");
    Factorization f;
    f.sgn = sign(n) < 0 ? -1 : 1;
    Int m = abs(n);
    std::map<Int, int> found;
    for (unsigned long p : small_primes()) {
        if (m == 1) break;
        if (Int(p) * Int(p) > m) break;
        while (divides(Int(p), m)) {
            found[Int(p)] += 1;
            m /= Int(p);
        }
    }
    if (m > 1) {
        long iters = cfg.rho_max_iters;
        factor_into(m, found, iters, cfg.seed);
    }
    f.factors.assign(found.begin(), found.end());
    return f;
}

std::pair<Int, Int> squarefree_decompose(const Int& n, const Config& cfg) {
    Factorization f = factorize(n, cfg);
    Int s = f.sgn, m = 1;
    for (const auto& [p, e] : f.factors) {
        if (e % 2 == 1) s *= p;
        m *= pow_int(p, e / 2);
    }
    return {s, m};
}

bool is_squarefree(const Int& n, const Config& cfg) {
    if (sign(n) == 0) return false;
    return squarefree_decompose(n, cfg).second == 1;
}

bool is_sixth_power_free(const Int& n, const Config& cfg) {
    if (sign(n) == 0) return false;
    Factorization f = factorize(n, cfg);
    for (const auto& [p, e] : f.factors)
        if (e >= 6) return false;
    return true;
}

int jacobi(const Int& a, const Int& n) {
    if (sign(n) <= 0 || mod(n, 2) == 0)
        throw ParameterViolation("jacobi: n must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

std::optional<Int> sqrt_mod(const Int& a_in, const Int& p) {
    Int a = mod(a_in, p);
    if (a == 0) return Int(0);
    if (p == 2) return a;  // a = 1
    if (jacobi(a, p) != 1) return std::nullopt;
    Int r;
    if (mod(p, 4) == 3) {
        r = powm(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        Int q = p - 1;
        int s = 0;
        while (mod(q, 2) == 0) {
            q /= 2;
            ++s;
        }
        Int z = 2;
        while (jacobi(z, p) != -1) ++z;
        Int m = s, c = powm(z, q, p), t = powm(a, q, p);
        r = powm(a, (q + 1) / 2, p);
        while (t != 1) {
            Int t2 = t;
            int i = 0;
            while (t2 != 1) {
                t2 = mod(t2 * t2, p);
                ++i;
            }
            Int exp2 = m - i - 1;
            Int b = powm(c, pow_int(Int(2), exp2.get_ui()), p);
            m = i;
            c = mod(b * b, p);
            t = mod(t * c, p);
            r = mod(r * b, p);
        }
    }
    Int alt = p - r;
    return std::min(r, alt);
}

bool is_padic_square(const Rat& q, const Int& p) {
    if (sign(q) == 0) return true;
    int v = valuation(q, p);
    if (v % 2 != 0) return false;
    // unit part mod p (odd) or mod 8 (p = 2)
    Int num = q.get_num(), den = q.get_den();
    Int c;
    valuation(num, p, c);
    num = c;
    valuation(den, p, c);
    den = c;
    if (p == 2) {
        Int u = mod(num * invmod(den, Int(8)), Int(8));
        return u == 1;
    }
    Int u = mod(num * invmod(den, p), p);
    return jacobi(u, p) == 1;
}

namespace {

struct HenselNode {
    Int r;  // residue mod p^k
    int k;
};

}  // namespace

bool hensel_solvable(const Poly& f_in, const Int& p, HenselTarget target,
                     const Config& cfg) {
    if (f_in.is_zero()) throw ParameterViolation("hensel_solvable: f = 0");
    if (!is_prime(p)) throw ParameterViolation("hensel_solvable: p not prime");
    // squarefree part: same roots, nonzero resultant with its derivative
    auto [ic0, mult] = f_in.primitive_int();
    (void)mult;
    Poly f = Poly::from_int_coeffs(ic0);
    if (f.degree() == 0) return false;
    Poly g = divmod(f, poly_gcd(f, f.derivative())).first;
    auto [gc, gm] = g.primitive_int();
    (void)gm;
    g = Poly::from_int_coeffs(gc);
    Poly gp = g.derivative();

    Rat res = resultant(g, gp);  // nonzero: g is squarefree of degree >= 1
    Int R = res.get_num();       // integral since g has integer coefficients
    int cap = 2 * valuation(R, p) + cfg.hensel_margin;

    auto eval_int = [&](const Poly& h, const Int& x) {
        Rat v = h.eval(Rat(x));
        return v.get_num();
    };

    std::vector<HenselNode> frontier;
    Int pk = p;
    for (Int r = 0; r < p; ++r) {
        if (target == HenselTarget::Units && mod(r, p) == 0) continue;
        if (mod(eval_int(g, r), p) == 0) frontier.push_back({r, 1});
    }
    while (!frontier.empty()) {
        std::vector<HenselNode> next;
        for (const auto& node : frontier) {
            Int fv = eval_int(g, node.r);
            if (fv == 0) return true;  // exact rational root
            Int fd = eval_int(gp, node.r);
            int vf = valuation(fv, p);
            int vd = (fd == 0) ? cap + 1 : valuation(fd, p);
            if (vf > 2 * vd) return true;  // Hensel's lemma certifies a root
            if (node.k >= cap)
                throw PrecisionExceeded("hensel_solvable: verdict not certified "
                                        "within the configured p-adic precision");
            Int pk1 = pow_int(p, node.k + 1);
            for (Int t = 0; t < p; ++t) {
                Int r2 = node.r + t * pow_int(p, node.k);
                if (mod(eval_int(g, r2), pk1) == 0) next.push_back({r2, node.k + 1});
            }
        }
        frontier = std::move(next);
    }
    (void)pk;
    return false;
}

std::vector<Int> primes_in_class(const Int& residue, const Int& modulus,
                                 int count, const Int& start) {
    if (sign(modulus) <= 0)
        throw ParameterViolation("primes_in_class: modulus must be positive");
    if (gcd(residue, modulus) != 1)
        throw ParameterViolation("primes_in_class: gcd(residue, modulus) != 1");
    std::vector<Int> out;
    Int lo = std::max(start, Int(2));
    Int c = lo + mod(residue - lo, modulus);
    for (; static_cast<int>(out.size()) < count; c += modulus) {
        if (is_prime(c)) out.push_back(c);
    }
    return out;
}

std::vector<Int> squarefree_divisors(const std::vector<Int>& primes) {
    std::vector<Int> out{1};
    for (const Int& p : primes) {
        size_t n = out.size();
        for (size_t i = 0; i < n; ++i) out.push_back(out[i] * p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ntheory
}  // namespace biell
