#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biell/ntheory.hpp"

using namespace biell;
using namespace biell::ntheory;

TEST_CASE("factorize basic values") {
    auto f1 = factorize(Int(1));
    CHECK(f1.sgn == 1);
    CHECK(f1.factors.empty());

    auto f2 = factorize(Int(-600));
    CHECK(f2.sgn == -1);
    REQUIRE(f2.factors.size() == 3);
    CHECK(f2.factors[0] == std::pair<Int, int>(Int(2), 3));
    CHECK(f2.factors[1] == std::pair<Int, int>(Int(3), 1));
    CHECK(f2.factors[2] == std::pair<Int, int>(Int(5), 2));

    auto f3 = factorize(Int(46656));  // 6^6
    REQUIRE(f3.factors.size() == 2);
    CHECK(f3.factors[0] == std::pair<Int, int>(Int(2), 6));
    CHECK(f3.factors[1] == std::pair<Int, int>(Int(3), 6));
    CHECK(f3.value() == 46656);
}

TEST_CASE("factorize round-trips on assorted inputs") {
    for (long n : {2L, -17L, 97L, 1024L, 104729L, 600851475143L, -99999989L}) {
        auto f = factorize(Int(n));
        CHECK(f.value() == n);
        for (const auto& [p, e] : f.factors) {
            CHECK(is_prime(p));
            CHECK(e >= 1);
        }
    }
}

TEST_CASE("factorize budget errors") {
    CHECK_THROWS_AS(factorize(Int(0)), ParameterViolation);
    Config tight;
    tight.digit_budget = 5;
    CHECK_THROWS_AS(factorize(Int(1234567), tight), BudgetExceeded);
}

TEST_CASE("is_prime") {
    CHECK(is_prime(Int(2)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(427)));  // 7 * 61
    CHECK(is_prime(Int(-13)));
    CHECK(is_prime(Int("18446744073709551557")));  // largest prime < 2^64
    CHECK_FALSE(is_prime(Int("18446744073709551615")));
    // Mersenne prime 2^89 - 1 goes through the BPSW path
    Int m89 = pow_int(Int(2), 89) - 1;
    CHECK(classify_prime(m89) == Primality::ProbablePrime);
    CHECK(classify_prime(m89 + 2) == Primality::Composite);
    // strong pseudoprime to base 2
    CHECK_FALSE(is_prime(Int(2047)));
}

TEST_CASE("squarefree decomposition") {
    CHECK(squarefree_decompose(Int(12)) == std::pair<Int, Int>(Int(3), Int(2)));
    CHECK(squarefree_decompose(Int(-8)) == std::pair<Int, Int>(Int(-2), Int(2)));
    CHECK(squarefree_decompose(Int(125)) == std::pair<Int, Int>(Int(5), Int(5)));
    CHECK(is_squarefree(Int(-2)));
    CHECK_FALSE(is_squarefree(Int(18)));
    CHECK(is_sixth_power_free(Int(-432)));
    CHECK_FALSE(is_sixth_power_free(Int(64)));
}

TEST_CASE("squarefree decompose exponent invariant") {
    for (long n = -50; n <= 50; ++n) {
        if (n == 0) continue;
        auto [s, m] = squarefree_decompose(Int(n));
        CHECK(s * m * m == n);
        for (const auto& [p, e] : factorize(s).factors) {
            (void)p;
            CHECK(e == 1);
        }
    }
}

TEST_CASE("perfect power tests") {
    CHECK(is_square(Int(9604)));
    CHECK_FALSE(is_square(Int(-4)));
    CHECK(is_cube(Int(-27)));
    CHECK_FALSE(is_cube(Int(427)));
    CHECK(is_square(Rat(4, 9)));
    CHECK_FALSE(is_square(Rat(4, 7)));
}

TEST_CASE("jacobi symbol") {
    CHECK(jacobi(Int(2), Int(15)) == 1);
    CHECK(jacobi(Int(0), Int(9)) == 0);
    CHECK(jacobi(Int(3), Int(7)) == -1);
    CHECK_THROWS_AS(jacobi(Int(1), Int(4)), ParameterViolation);
}

TEST_CASE("jacobi matches Euler's criterion at primes") {
    auto ps = primes_in_class(Int(1), Int(2), 25, Int(3));
    for (const Int& p : ps) {
        for (long a = -20; a <= 20; ++a) {
            Int e = powm(mod(Int(a), p), (p - 1) / 2, p);
            int euler = (e == 0) ? 0 : (e == 1 ? 1 : -1);
            CHECK(jacobi(Int(a), p) == euler);
        }
    }
}

TEST_CASE("sqrt_mod") {
    CHECK(sqrt_mod(Int(2), Int(7)) == Int(3));
    CHECK(sqrt_mod(Int(0), Int(5)) == Int(0));
    CHECK_FALSE(sqrt_mod(Int(3), Int(7)).has_value());
    // canonical representative and correctness across residues
    for (const Int& p : primes_in_class(Int(1), Int(2), 12, Int(3))) {
        for (Int a = 0; a < p; ++a) {
            auto r = sqrt_mod(a, p);
            if (r) {
                CHECK(mod(*r * *r, p) == a);
                CHECK(*r <= (p - 1) / 2);
            } else {
                CHECK(jacobi(a, p) == -1);
            }
        }
    }
}

TEST_CASE("hensel_solvable") {
    Poly f({Rat(-2), Rat(0), Rat(1)});  // x^2 - 2
    CHECK(hensel_solvable(f, Int(7)));
    CHECK_FALSE(hensel_solvable(f, Int(5)));
    Poly g({Rat(-7), Rat(0), Rat(1)});  // x^2 - 7: odd valuation at 7
    CHECK_FALSE(hensel_solvable(g, Int(7)));
    // 2-adic: x^2 - 17 solvable (17 = 1 mod 8), x^2 - 3 not
    CHECK(hensel_solvable(Poly({Rat(-17), Rat(0), Rat(1)}), Int(2)));
    CHECK_FALSE(hensel_solvable(Poly({Rat(-3), Rat(0), Rat(1)}), Int(2)));
    // units target: x^2 - 49 has the root 7, not a unit at 7
    Poly h({Rat(-49), Rat(0), Rat(1)});
    CHECK(hensel_solvable(h, Int(7), HenselTarget::Integers));
    CHECK_FALSE(hensel_solvable(h, Int(7), HenselTarget::Units));
    // rational root: exact hit
    CHECK(hensel_solvable(Poly({Rat(-4), Rat(0), Rat(1)}), Int(2)));
}

TEST_CASE("hensel agrees with sqrt_mod for quadratics at odd primes") {
    for (const Int& p : primes_in_class(Int(1), Int(2), 8, Int(3))) {
        for (long a = 1; a <= 30; ++a) {
            if (mod(Int(a), p) == 0) continue;
            Poly f({Rat(-a), Rat(0), Rat(1)});
            CHECK(hensel_solvable(f, p) == sqrt_mod(Int(a), p).has_value());
        }
    }
}

TEST_CASE("primes_in_class") {
    auto a = primes_in_class(Int(5), Int(12), 5, Int(2));
    CHECK(a == std::vector<Int>{5, 17, 29, 41, 53});
    auto b = primes_in_class(Int(3), Int(8), 5, Int(2));
    CHECK(b == std::vector<Int>{3, 11, 19, 43, 59});
    auto c = primes_in_class(Int(3), Int(4), 3, Int(5));
    CHECK(c == std::vector<Int>{7, 11, 19});
    for (size_t i = 1; i < b.size(); ++i) CHECK(b[i] > b[i - 1]);
    CHECK_THROWS_AS(primes_in_class(Int(2), Int(4), 1, Int(2)), ParameterViolation);
}

TEST_CASE("squarefree_divisors") {
    auto d = squarefree_divisors({Int(2), Int(3)});
    CHECK(d == std::vector<Int>{1, 2, 3, 6});
}

TEST_CASE("p-adic squares") {
    CHECK(is_padic_square(Rat(0), Int(5)));
    CHECK(is_padic_square(Rat(4), Int(5)));
    CHECK_FALSE(is_padic_square(Rat(5), Int(2)));  // 5 = 5 mod 8
    CHECK(is_padic_square(Rat(17), Int(2)));       // 17 = 1 mod 8
    CHECK_FALSE(is_padic_square(Rat(12), Int(3))); // odd valuation
    CHECK(is_padic_square(Rat(4, 9), Int(3)));
    CHECK(is_padic_square(Rat(-1, 4), Int(2)) == is_padic_square(Rat(-1), Int(2)));
}
