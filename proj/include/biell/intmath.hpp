#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace biell {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& n) { return mpz_sgn(n.get_mpz_t()); }
inline int sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

inline Int abs(const Int& n) { return ::abs(n); }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

// floor(sqrt(n)) for n >= 0
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// num/den in lowest terms with positive denominator. mpq_class does not
// canonicalize two-argument constructions on its own.
inline Rat ratio(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_square(const Int& n) {
    return sign(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Exact square root of a known square.
inline Int sqrt_exact(const Int& n) { return isqrt(n); }

inline bool is_square(const Rat& q) {
    return is_square(q.get_num()) && is_square(q.get_den());
}

inline Rat sqrt_exact(const Rat& q) {
    return ratio(sqrt_exact(q.get_num()), sqrt_exact(q.get_den()));
}

inline bool is_cube(const Int& n) {
    Int r;
    return mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) != 0;
}

// Exact n-th root when it exists; r such that r^k = n (k odd allows negatives).
inline bool root_exact(const Int& n, unsigned long k, Int& out) {
    if (sign(n) < 0 && k % 2 == 0) return false;
    int exact = mpz_root(out.get_mpz_t(), n.get_mpz_t(), k);
    return exact != 0;
}

// v_p(n) for n != 0; also strips: cofactor = n / p^v.
inline int valuation(const Int& n, const Int& p, Int& cofactor) {
    return static_cast<int>(
        mpz_remove(cofactor.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

inline int valuation(const Int& n, const Int& p) {
    Int c;
    return valuation(n, p, c);
}

inline int valuation(const Rat& q, const Int& p) {
    if (sign(q) == 0) return 0;  // caller guards; v_p(0) is +infinity
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// a^e mod m (e >= 0)
inline Int powm(const Int& a, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// modular inverse; requires gcd(a, m) = 1
inline Int invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("invmod: not invertible");
    return r;
}

inline size_t decimal_digits(const Int& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 10);
}

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace biell
