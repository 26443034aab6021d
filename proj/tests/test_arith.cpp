#include <doctest.h>

#include <random>

#include "arith.hpp"
#include "oracle.hpp"

using namespace ecq;

TEST_CASE("factor reassembles and agrees with trial division") {
    for (long n = -2000; n <= 2000; ++n) {
        if (n == 0) continue;
        const Factorization f = factor(Int(n));
        CHECK(f.value() == n);
        const auto ref = oracle::factor_u64(static_cast<std::uint64_t>(n < 0 ? -n : n));
        REQUIRE(f.prime_count() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
            CHECK(f.factors()[i].prime == Int(std::to_string(ref[i].first)));
            CHECK(f.factors()[i].exponent == ref[i].second);
        }
    }
}

TEST_CASE("factor round-trip on random values up to 1e6") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (int i = 0; i < 3000; ++i) {
        const long n = dist(rng);
        if (n == 0) continue;
        CHECK(factor(Int(n)).value() == n);
    }
}

TEST_CASE("factor handles products of large primes") {
    const Int p("1000000007"), q("998244353"), r("18446744073709551557");
    const Int n = -p * p * q * r;
    const Factorization f = factor(n);
    CHECK(f.value() == n);
    CHECK(f.sign() == -1);
    CHECK(f.exponent_of(p) == 2);
    CHECK(f.exponent_of(r) == 1);
    CHECK(f.prime_count() == 3);
}

TEST_CASE("factor rejects zero") {
    CHECK_THROWS_AS(factor(Int(0)), Error);
    try {
        factor(Int(0));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroInput);
    }
}

TEST_CASE("factor_over completes a partial prime list") {
    const Int n = Int(-1) * 8 * 27 * 101;
    CHECK(factor_over(n, {Int(3), Int(2), Int(2)}) == factor(n));
    CHECK(factor_over(Int(1), {}).prime_count() == 0);
}

TEST_CASE("Factorization validates invariants") {
    CHECK_THROWS_AS(Factorization(1, {{Int(3), 1}, {Int(2), 1}}), Error);
    CHECK_THROWS_AS(Factorization(1, {{Int(4), 1}}), Error);
    CHECK_THROWS_AS(Factorization(1, {{Int(2), 0}}), Error);
    CHECK_THROWS_AS(Factorization(0, {}), Error);
    const Factorization f(-1, {{Int(2), 11}, {Int(3), 8}});
    CHECK(f.to_string() == "-2^11*3^8");
    CHECK(f.abs().to_string() == "2^11*3^8");
    CHECK(Factorization().to_string() == "1");
    CHECK(Factorization(-1, {}).to_string() == "-1");
}

TEST_CASE("is_prime agrees with trial division") {
    for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(Int(std::to_string(n))) == oracle::is_prime_u64(n));
    CHECK(is_prime(Int(-7)));
    CHECK(is_prime(Int("170141183460469231731687303715884105727")));
    CHECK_FALSE(is_prime(Int("3317044064679887385961981")));  // strong pseudoprime to the first 13 prime bases
}

TEST_CASE("prime_power implies one prime in the factorization") {
    for (long n = -5000; n <= 5000; ++n) {
        if (n == 0) continue;
        const auto pp = prime_power(Int(n));
        const Factorization f = factor(Int(n));
        CHECK(pp.has_value() == (f.prime_count() == 1));
        if (pp) {
            CHECK(pp->prime == f.factors()[0].prime);
            CHECK(pp->exponent == f.factors()[0].exponent);
        }
    }
}

TEST_CASE("padic_valuation matches the factorization") {
    for (long n = 1; n <= 3000; ++n) {
        const Factorization f = factor(Int(n));
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
            CHECK(padic_valuation(Int(-n), Int(p)) == f.exponent_of(Int(p)));
    }
    CHECK_THROWS_AS(padic_valuation(Int(0), Int(2)), Error);
    CHECK_THROWS_AS(padic_valuation(Int(5), Int(1)), Error);
}

TEST_CASE("legendre symbol is Euler's criterion") {
    for (long p : {3L, 5L, 7L, 11L, 13L, 101L, 1009L}) {
        for (long a = -50; a <= 250; ++a) {
            Int e;
            mpz_powm_ui(e.get_mpz_t(), mod(Int(a), Int(p)).get_mpz_t(), static_cast<unsigned long>((p - 1) / 2),
                        Int(p).get_mpz_t());
            const int expect = e == 0 ? 0 : (e == 1 ? 1 : -1);
            CHECK(legendre_symbol(Int(a), Int(p)) == expect);
        }
    }
    CHECK_THROWS_AS(legendre_symbol(Int(3), Int(2)), Error);
    CHECK_THROWS_AS(legendre_symbol(Int(3), Int(9)), Error);
}

TEST_CASE("perfect_power returns the maximal exponent") {
    for (long n = 2; n <= 70000; ++n) {
        const auto pp = perfect_power(Int(n), 2);
        // brute force: largest e with an exact e-th root
        unsigned best = 1;
        for (unsigned e = 2; (1L << e) <= n; ++e) {
            Int r;
            if (mpz_root(r.get_mpz_t(), Int(n).get_mpz_t(), e)) best = e;
        }
        if (best == 1) {
            CHECK_FALSE(pp.has_value());
        } else {
            REQUIRE(pp.has_value());
            CHECK(pp->exponent == best);
            CHECK(pow(pp->base, pp->exponent) == n);
        }
    }
    CHECK_THROWS_AS(perfect_power(Int(1), 2), Error);
    const auto neg = perfect_power(Int(-27), 2);
    REQUIRE(neg.has_value());
    CHECK(neg->exponent == 3);
}

TEST_CASE("integer roots") {
    bool exact = false;
    CHECK(integer_root(Int(1000), 3, &exact) == 10);
    CHECK(exact);
    CHECK(integer_root(Int(1001), 3, &exact) == 10);
    CHECK_FALSE(exact);
    CHECK(exact_sqrt(Int(144)) == Int(12));
    CHECK_FALSE(exact_sqrt(Int(145)).has_value());
    CHECK_FALSE(exact_sqrt(Int(-4)).has_value());
}

TEST_CASE("small helpers") {
    CHECK(gcd(Int(-12), Int(18)) == 6);
    CHECK(mod(Int(-7), Int(5)) == 3);
    CHECK(pow(Int(2), 100) == Int("1267650600228229401496703205376"));
    const auto ps = primes_up_to(100);
    CHECK(ps.size() == 25);
    CHECK(ps.back() == 97);
    CHECK(parse_int("-123456789012345678901234567890") == Int("-123456789012345678901234567890"));
    CHECK(parse_int("+17") == 17);
    CHECK_THROWS_AS(parse_int("12a"), Error);
    CHECK_THROWS_AS(parse_int(""), Error);
}
