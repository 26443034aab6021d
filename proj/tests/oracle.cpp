#include "oracle.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Z cubic_route_disc(const std::array<Z, 5>& a) {
    const Z& a1 = a[0];
    const Z& a2 = a[1];
    const Z& a3 = a[2];
    const Z& a4 = a[3];
    const Z& a6 = a[4];
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    const Z A = 4, B = a1 * a1 + 4 * a2, C = 2 * (a1 * a3 + 2 * a4), D = a3 * a3 + 4 * a6;
    const Z cubic = B * B * C * C - 4 * A * C * C * C - 4 * B * B * B * D - 27 * A * A * D * D + 18 * A * B * C * D;
    return cubic / 16;
}

namespace {

struct Pt {
    bool inf = true;
    Q x, y;
};

Pt add(const std::array<Q, 5>& a, const Pt& p, const Pt& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    const Q& a1 = a[0];
    const Q& a2 = a[1];
    const Q& a3 = a[2];
    const Q& a4 = a[3];
    const Q& a6 = a[4];
    Q lambda, nu;
    if (p.x == q.x) {
        if (p.y + q.y + a1 * q.x + a3 == 0) return {};
        const Q den = 2 * p.y + a1 * p.x + a3;
        lambda = (3 * p.x * p.x + 2 * a2 * p.x + a4 - a1 * p.y) / den;
        nu = (-p.x * p.x * p.x + a4 * p.x + 2 * a6 - a3 * p.y) / den;
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
        nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
    }
    Pt r;
    r.inf = false;
    r.x = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
    r.y = -(lambda + a1) * r.x - nu - a3;
    return r;
}

}  // namespace

std::optional<unsigned> point_order(const std::array<Z, 5>& a, const Q& x, const Q& y, unsigned cap) {
    std::array<Q, 5> aq;
    for (int i = 0; i < 5; ++i) aq[i] = a[i];
    const Pt p{false, x, y};
    Pt acc = p;
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc.inf) return k;
        acc = add(aq, acc, p);
    }
    return std::nullopt;
}

bool reducible_at(const std::array<Z, 5>& a, long p) {
    const Z& a1 = a[0];
    const Z& a2 = a[1];
    const Z& a3 = a[2];
    const Z& a4 = a[3];
    const Z& a6 = a[4];
    const Z u2 = Z(p) * p, u3 = u2 * p, u4 = u3 * p, u6 = u4 * u2;
    auto divides = [](const Z& d, const Z& v) { return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0; };
    for (long s = 0; s < p; ++s) {
        if (!divides(Z(p), a1 + 2 * s)) continue;
        for (long r = 0; r < p * p; ++r) {
            if (!divides(u2, a2 - s * a1 + 3 * r - s * s)) continue;
            for (long t = 0; t < p * p * p; ++t) {
                if (!divides(u3, a3 + r * a1 + 2 * t)) continue;
                const Z R = r, S = s, T = t;
                if (!divides(u4, a4 - S * a3 + 2 * R * a2 - (T + R * S) * a1 + 3 * R * R - 2 * S * T)) continue;
                if (!divides(u6, a6 + R * a4 + R * R * a2 + R * R * R - T * a3 - T * T - R * T * a1)) continue;
                return true;
            }
        }
    }
    return false;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t isqrt128(u128 n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<bool> square_residues(unsigned m) {
    std::vector<bool> sq(m, false);
    for (unsigned x = 0; x < m; ++x) sq[(static_cast<std::uint64_t>(x) * x) % m] = true;
    return sq;
}

std::optional<std::uint64_t> pell_x(int c, std::uint64_t y) {
    const u128 v = static_cast<u128>(125) * y * y;
    if (c < 0 && v < static_cast<u128>(-c)) return std::nullopt;
    const u128 rhs = c < 0 ? v - static_cast<u128>(-c) : v + static_cast<u128>(c);
    const std::uint64_t x = isqrt128(rhs);
    if (static_cast<u128>(x) * x != rhs) return std::nullopt;
    return x;
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> pell_scan(int c, std::uint64_t ymax) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t y = 1; y <= ymax; ++y)
        if (auto x = pell_x(c, y)) out.emplace_back(*x, y);
    return out;
}

std::vector<std::pair<Z, Z>> pell_first(int c, unsigned count) {
    // Wheel over y mod 64*63*65: keep residues where 125 y^2 + c can be a square.
    constexpr unsigned m1 = 64, m2 = 63, m3 = 65;
    constexpr unsigned wheel = m1 * m2 * m3;
    const auto s1 = square_residues(m1), s2 = square_residues(m2), s3 = square_residues(m3);
    auto ok = [&](std::uint64_t y, unsigned m, const std::vector<bool>& sq) {
        const long long v = (125LL * static_cast<long long>((y % m) * (y % m)) + c) % static_cast<long long>(m);
        return sq[static_cast<std::size_t>((v + m) % m)];
    };
    std::vector<unsigned> offsets;
    for (unsigned r = 0; r < wheel; ++r)
        if (ok(r, m1, s1) && ok(r, m2, s2) && ok(r, m3, s3)) offsets.push_back(r);

    const std::vector<unsigned> extra = {11, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    std::vector<std::vector<bool>> extra_sq;
    for (unsigned m : extra) extra_sq.push_back(square_residues(m));

    std::vector<std::pair<Z, Z>> out;
    for (std::uint64_t base = 0; out.size() < count; base += wheel) {
        for (unsigned off : offsets) {
            const std::uint64_t y = base + off;
            if (y == 0) continue;
            bool pass = true;
            for (std::size_t i = 0; i < extra.size() && pass; ++i) pass = ok(y, extra[i], extra_sq[i]);
            if (!pass) continue;
            if (auto x = pell_x(c, y)) {
                out.emplace_back(Z(std::to_string(*x)), Z(std::to_string(y)));
                if (out.size() == count) break;
            }
        }
    }
    return out;
}

std::vector<std::array<long, 4>> catalan_naive(long bound) {
    unsigned emax = 0;
    for (long b = bound; b; b >>= 1) ++emax;
    emax = std::max(emax, 2u);
    std::vector<std::array<long, 4>> out;
    for (long x = -bound; x <= bound; ++x) {
        if (x >= -1 && x <= 1) continue;
        for (unsigned m = 2; m <= emax; ++m) {
            Z v;
            mpz_pow_ui(v.get_mpz_t(), Z(x).get_mpz_t(), m);
            v -= 1;
            const Z av = abs(v);
            if (av < 4) continue;
            for (unsigned n = 2; n <= emax; ++n) {
                Z r;
                if (!mpz_root(r.get_mpz_t(), av.get_mpz_t(), n)) continue;
                if (r > bound) continue;
                const long y = r.get_si();
                if (v > 0) out.push_back({x, m, y, n});
                if (v > 0 && n % 2 == 0) out.push_back({x, m, -y, n});
                if (v < 0 && n % 2 == 1) out.push_back({x, m, -y, n});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<long, long>> mordell_naive(long k, long bound) {
    std::vector<std::pair<long, long>> out;
    for (long y = -bound; y <= bound; ++y) {
        const long long v = static_cast<long long>(y) * y * y + k;
        if (v < 0) continue;
        auto x = static_cast<long long>(std::llround(std::sqrt(static_cast<long double>(v))));
        while (x * x > v) --x;
        while ((x + 1) * (x + 1) <= v) ++x;
        if (x * x != v) continue;
        out.emplace_back(x, y);
        if (x) out.emplace_back(-x, y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<long, 4>> norm125_naive(long xbound, unsigned lbound) {
    std::vector<std::array<long, 4>> out;
    const Z top = Z(xbound) * xbound + 125;
    auto try_square = [&](const Z& v, long y, unsigned l, long sign) {
        if (v < 0) return;
        Z r;
        if (!mpz_root(r.get_mpz_t(), v.get_mpz_t(), 2)) return;
        if (r > xbound) return;
        out.push_back({r.get_si(), y, static_cast<long>(l), sign});
        if (r != 0) out.push_back({-r.get_si(), y, static_cast<long>(l), sign});
    };
    for (long y = 1;; ++y) {
        Z yl = Z(y) * y;
        if (4 * yl > top) break;
        for (unsigned l = 2; l <= lbound && 4 * yl <= top; ++l, yl *= y) {
            try_square(125 + 4 * yl, y, l, 1);
            try_square(125 - 4 * yl, y, l, -1);
            if (y == 1 && l > 2 && yl != 1) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<long, 4>> square_plus_power_naive(unsigned hbound, long bound) {
    std::vector<std::array<long, 4>> out;
    for (long x = 1; x <= bound; ++x) {
        for (unsigned h = 3; h <= hbound; ++h) {
            Z v = Z(x) * x;
            Z two_h;
            mpz_ui_pow_ui(two_h.get_mpz_t(), 2, h);
            v += two_h;
            const auto nmax = static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2));
            for (unsigned n = 2; n <= nmax; ++n) {
                Z r;
                if (!mpz_root(r.get_mpz_t(), v.get_mpz_t(), n)) continue;
                if (r > bound || r < 3 || mpz_even_p(r.get_mpz_t())) continue;
                out.push_back({x, r.get_si(), static_cast<long>(h), static_cast<long>(n)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<KnownCurve>& known_curves() {
    static const std::vector<KnownCurve> curves = {
        {{0, -1, 1, -10, -20}, 11}, {{0, -1, 1, 0, 0}, 11},  {{1, 0, 1, 4, -6}, 14},   {{1, 1, 1, -10, -10}, 15},
        {{1, -1, 1, -1, -14}, 17},  {{0, 1, 1, -9, -15}, 19}, {{0, 1, 0, 4, 4}, 20},    {{0, -1, 0, -4, 4}, 24},
        {{1, 0, 1, -5, -8}, 26},    {{0, 0, 1, 0, -7}, 27},   {{0, 0, 0, 4, 0}, 32},    {{0, 0, 0, 0, 1}, 36},
        {{0, 0, 1, -1, 0}, 37},
    };
    return curves;
}

}  // namespace oracle
