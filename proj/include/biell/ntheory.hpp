#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "biell/errors.hpp"
#include "biell/intmath.hpp"
#include "biell/poly.hpp"

namespace biell {
namespace ntheory {

// Explicit work bounds. Overruns throw BudgetExceeded / PrecisionExceeded so
// the caller can shrink parameters; nothing fails silently.
struct Config {
    size_t digit_budget = 40;        // max decimal digits accepted by factorize
    long rho_max_iters = 20'000'000; // total Pollard rho iterations per call
    unsigned long seed = 0x5eedULL;  // perturbs rho starting points only
    int hensel_margin = 10;          // extra p-adic digits past the certified depth
};

const Config& default_config();
// Process-wide seed override for the factoring heuristics (CLI --seed).
void set_default_seed(unsigned long seed);

struct Factorization {
    int sgn = 1;                              // +1 or -1
    std::vector<std::pair<Int, int>> factors; // (prime, exponent), primes ascending

    Int value() const;
};

Factorization factorize(const Int& n, const Config& cfg = default_config());

enum class Primality { Composite, Prime, ProbablePrime };

// Deterministic Miller-Rabin for |n| < 2^64 (and some way beyond);
// BPSW (MR base 2 + strong Lucas) above that, reported as ProbablePrime.
Primality classify_prime(const Int& n);
bool is_prime(const Int& n);

// n = s * m^2 with s squarefree; the sign is carried by s.
std::pair<Int, Int> squarefree_decompose(const Int& n,
                                         const Config& cfg = default_config());
bool is_squarefree(const Int& n, const Config& cfg = default_config());
bool is_sixth_power_free(const Int& n, const Config& cfg = default_config());

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(const Int& a, const Int& n);

// Square root of a modulo an odd prime p, canonical representative
// 0 <= r <= (p-1)/2; nullopt for non-residues.
std::optional<Int> sqrt_mod(const Int& a, const Int& p);

enum class HenselTarget { Integers, Units };

// Does f have a root in Z_p (or Z_p^* for Units)?  Search mod p^N with
// lifting; N is chosen from v_p(Res(f, f')) so the classical criterion
// certifies the verdict either way, plus cfg.hensel_margin slack.
bool hensel_solvable(const Poly& f, const Int& p,
                     HenselTarget target = HenselTarget::Integers,
                     const Config& cfg = default_config());

// First `count` primes >= start with p = residue (mod modulus), ascending.
// Requires gcd(residue, modulus) = 1.
std::vector<Int> primes_in_class(const Int& residue, const Int& modulus,
                                 int count, const Int& start);

// All squarefree (positive) products of subsets of the given distinct primes,
// ascending by absolute value.
std::vector<Int> squarefree_divisors(const std::vector<Int>& primes);

// Is q a square in Q_p?  (q = 0 counts as a square.)
bool is_padic_square(const Rat& q, const Int& p);

// Primes p <= limit (small, machine-word sized sieve).
const std::vector<unsigned long>& small_primes();

}  // namespace ntheory
}  // namespace biell
