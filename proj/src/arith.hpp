#pragma once

// Multi-precision integer number theory used by every other module:
// primality, factorization, prime-power and perfect-power structure,
// p-adic valuations and quadratic residue symbols.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace ecq {

using Int = mpz_class;
using Rational = mpq_class;

struct PrimePower {
    Int prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
};

/// Signed factorization sign * prod p_i^e_i of a nonzero integer.
/// Primes are strictly increasing and every exponent is at least one.
class Factorization {
public:
    /// The factorization of 1.
    Factorization() = default;

    /// Validates the invariants; throws DomainError on violation.
    Factorization(int sign, std::vector<PrimePower> factors);

    int sign() const noexcept { return sign_; }
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    std::size_t prime_count() const noexcept { return factors_.size(); }

    /// Exponent of p, zero when p is absent.
    unsigned exponent_of(const Int& p) const;
    std::vector<Int> primes() const;

    Int value() const;
    Int abs_value() const;
    Factorization abs() const { return Factorization(1, factors_, Unchecked{}); }

    /// "-2^11*3^8"; "1" and "-1" for units.
    std::string to_string() const;

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.sign_ == b.sign_ && a.factors_ == b.factors_;
    }

private:
    struct Unchecked {};
    Factorization(int sign, std::vector<PrimePower> factors, Unchecked)
        : sign_(sign), factors_(std::move(factors)) {}

    int sign_ = 1;
    std::vector<PrimePower> factors_;
};

/// Complete factorization; throws ZeroInput for n = 0.
Factorization factor(const Int& n);

/// Factorization when the prime support is already known to lie in
/// `candidates` (any order, duplicates allowed). Falls back to factor()
/// for whatever cofactor remains.
Factorization factor_over(const Int& n, const std::vector<Int>& candidates);

/// True iff |n| is prime. Deterministic below 3.317e24, BPSW above.
bool is_prime(const Int& n);

/// (p, k) with |n| = p^k, p prime, k >= 1.
std::optional<PrimePower> prime_power(const Int& n);

struct PerfectPower {
    Int base;
    unsigned exponent = 0;
};

/// |n| = base^exp with the largest possible exp, provided exp >= min_exp.
/// Throws DomainError when |n| < 2.
std::optional<PerfectPower> perfect_power(const Int& n, unsigned min_exp);

/// Largest k with p^k | n. Throws ZeroInput for n = 0 and DomainError
/// for p < 2.
unsigned padic_valuation(const Int& n, const Int& p);

/// Legendre symbol (a/p) for an odd prime p; DomainError otherwise.
int legendre_symbol(const Int& a, const Int& p);

/// Floor of the k-th root of |n|; `exact` reports whether it is exact.
Int integer_root(const Int& n, unsigned k, bool* exact = nullptr);

/// Exact square root of n >= 0 when n is a perfect square.
std::optional<Int> exact_sqrt(const Int& n);

/// Nonnegative gcd.
Int gcd(const Int& a, const Int& b);

/// Nonnegative residue of a modulo m > 0.
Int mod(const Int& a, const Int& m);

Int pow(const Int& base, unsigned long exp);

/// Primes up to `limit` by a simple sieve.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Parses a base-10 integer; throws InvalidArgument on malformed input.
Int parse_int(const std::string& text);

}  // namespace ecq
