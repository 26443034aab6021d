#pragma once

// Independent reference implementations used only by the tests. Nothing
// here calls into the library's number theory; the point is to disagree
// with it if it is wrong.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;

bool is_prime_u64(std::uint64_t n);
/// (prime, exponent) by trial division, increasing primes.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// Discriminant via the cubic 4x^3 + b2 x^2 + 2 b4 x + b6.
Z cubic_route_disc(const std::array<Z, 5>& a);

/// Order of P on the curve by repeated addition (own group law), capped.
std::optional<unsigned> point_order(const std::array<Z, 5>& a, const Q& x, const Q& y, unsigned cap);

/// Is there any integral change of variables with u = p?
bool reducible_at(const std::array<Z, 5>& a, long p);

/// Solutions (x, y), y >= 1, of x^2 - 125 y^2 = c with y <= ymax, x > 0.
std::vector<std::pair<std::uint64_t, std::uint64_t>> pell_scan(int c, std::uint64_t ymax);
/// The first `count` solutions, scanning y with square filters until found.
std::vector<std::pair<Z, Z>> pell_first(int c, unsigned count);

/// x^m - y^n = 1, 2 <= |x|,|y| <= bound, exponents bounded by bit length.
std::vector<std::array<long, 4>> catalan_naive(long bound);
/// X^2 - k = Y^3, |Y| <= bound.
std::vector<std::pair<long, long>> mordell_naive(long k, long bound);
/// (x, y, l, sign) with x^2 - 125 = sign 4 y^l, scanning y rather than x.
std::vector<std::array<long, 4>> norm125_naive(long xbound, unsigned lbound);
/// (x, y, h, n) with x^2 + 2^h = y^n, y odd, scanning x and h.
std::vector<std::array<long, 4>> square_plus_power_naive(unsigned hbound, long bound);

/// Tabulated curves of small conductor: minimal model and conductor.
struct KnownCurve {
    std::array<long, 5> a;
    long conductor;
};
const std::vector<KnownCurve>& known_curves();

}  // namespace oracle
