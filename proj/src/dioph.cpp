#include "dioph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

namespace ecq {

namespace {

constexpr std::uint64_t kNativeLimit = std::uint64_t{1} << 62;

bool tuple_less(const IntTuple& a, const IntTuple& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_unique(std::vector<IntTuple>& v) {
    std::sort(v.begin(), v.end(), tuple_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

unsigned bit_length(long v) {
    unsigned bits = 0;
    for (unsigned long u = static_cast<unsigned long>(v < 0 ? -v : v); u; u >>= 1) ++bits;
    return bits;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_prime_power_or_unit(const Int& y) { return abs(y) == 1 || prime_power(y).has_value(); }

}  // namespace

const std::vector<std::string>& equation_ids() {
    static const std::vector<std::string> ids = {"catalan", "lemma22", "lemma23", "lemma24",
                                                 "cor25",   "pell125", "mordell2000"};
    return ids;
}

SolutionSet catalan_search(long bound, unsigned max_exponent) {
    if (bound < 1) throw Error(ErrorCode::DomainError, "catalan bound must be >= 1");
    if (max_exponent == 0) max_exponent = std::max(2u, bit_length(bound));

    // value -> every (base, exponent) producing it
    std::map<Int, std::vector<std::pair<long, unsigned>>> powers;
    for (long base = -bound; base <= bound; ++base) {
        if (base >= -1 && base <= 1) continue;
        Int v = base;
        for (unsigned e = 2; e <= max_exponent; ++e) {
            v *= base;
            powers[v].emplace_back(base, e);
        }
    }

    SolutionSet out;
    out.equation_id = "catalan";
    out.variables = {"x", "m", "y", "n"};
    for (const auto& [value, reps] : powers) {
        auto it = powers.find(Int(value - 1));
        if (it == powers.end()) continue;
        for (const auto& [x, m] : reps)
            for (const auto& [y, n] : it->second) out.solutions.push_back({Int(x), Int(m), Int(y), Int(n)});
    }
    sort_unique(out.solutions);
    out.bounds = {{"bound", Int(bound)}, {"max_exponent", Int(max_exponent)}};
    return out;
}

SolutionSet lemma22_search(long prime_bound, unsigned exponent_bound) {
    if (prime_bound < 2) throw Error(ErrorCode::DomainError, "lemma22 prime bound must be >= 2");
    if (exponent_bound < 2) throw Error(ErrorCode::DomainError, "lemma22 exponent bound must be >= 2");

    SolutionSet out;
    out.equation_id = "lemma22";
    out.variables = {"p", "m", "y", "n"};
    for (std::uint32_t q : primes_up_to(static_cast<std::uint32_t>(prime_bound))) {
        for (int sign : {1, -1}) {
            const Int p = sign * Int(q);
            Int pm = p;
            for (unsigned m = 2; m <= exponent_bound; ++m) {
                pm *= p;
                const Int v = 16 * pm + 1;
                const unsigned long bits = mpz_sizeinbase(v.get_mpz_t(), 2);
                for (unsigned long n = 2; n <= bits; ++n) {
                    if (!is_prime(Int(n))) continue;
                    if (v < 0 && n % 2 == 0) continue;
                    bool exact = false;
                    const Int root = integer_root(v, static_cast<unsigned>(n), &exact);
                    if (!exact || root < 2 || !prime_power(root)) continue;
                    if (v > 0) out.solutions.push_back({p, Int(m), root, Int(n)});
                    if (v < 0) out.solutions.push_back({p, Int(m), Int(-root), Int(n)});
                    if (v > 0 && n % 2 == 0) out.solutions.push_back({p, Int(m), Int(-root), Int(n)});
                }
            }
        }
    }
    sort_unique(out.solutions);
    out.bounds = {{"prime_bound", Int(prime_bound)}, {"exponent_bound", Int(exponent_bound)}};
    return out;
}

SolutionSet lemma23_search(unsigned h_bound, long bound) {
    if (h_bound < 3) throw Error(ErrorCode::DomainError, "lemma23 h bound must be >= 3");
    if (bound < 3) throw Error(ErrorCode::DomainError, "lemma23 bound must be >= 3");

    SolutionSet out;
    out.equation_id = "lemma23";
    out.variables = {"x", "y", "h", "n"};
    out.families.push_back({"h", {"2^(h-2)-1", "2^(h-2)+1", "h", "2"}, "3<=h<=" + std::to_string(h_bound)});

    const Int ceiling = Int(bound) * bound + pow(Int(2), h_bound);
    if (h_bound < 62 && ceiling < Int(static_cast<unsigned long>(kNativeLimit))) {
        const std::uint64_t limit = ceiling.get_ui();
        const auto ubound = static_cast<std::uint64_t>(bound);
        for (std::uint64_t y = 3; y <= ubound; y += 2) {
            std::uint64_t yn = y * y;
            for (unsigned n = 2; yn <= limit; ++n) {
                for (unsigned h = 3; h <= h_bound; ++h) {
                    const std::uint64_t two_h = std::uint64_t{1} << h;
                    if (yn <= two_h) break;
                    const std::uint64_t d = yn - two_h;
                    const std::uint64_t x = isqrt_u64(d);
                    if (x * x == d && x <= ubound) out.solutions.push_back({Int(static_cast<unsigned long>(x)),
                                                                            Int(static_cast<unsigned long>(y)),
                                                                            Int(h), Int(n)});
                }
                if (yn > limit / y) break;
                yn *= y;
            }
        }
    } else {
        for (long y = 3; y <= bound; y += 2) {
            Int yn = Int(y) * y;
            for (unsigned n = 2; yn <= ceiling; ++n, yn *= y) {
                for (unsigned h = 3; h <= h_bound; ++h) {
                    const Int d = yn - pow(Int(2), h);
                    if (d <= 0) break;
                    auto x = exact_sqrt(d);
                    if (x && *x <= bound) out.solutions.push_back({*x, Int(y), Int(h), Int(n)});
                }
            }
        }
    }
    sort_unique(out.solutions);
    out.bounds = {{"h_bound", Int(h_bound)}, {"bound", Int(bound)}};
    return out;
}

SolutionSet lemma24_search(long bound, unsigned exponent_bound) {
    if (bound < 1) throw Error(ErrorCode::DomainError, "lemma24 bound must be >= 1");
    if (exponent_bound < 2) throw Error(ErrorCode::DomainError, "lemma24 exponent bound must be >= 2");

    SolutionSet out;
    out.equation_id = "lemma24";
    out.variables = {"x", "y", "l", "sign"};
    out.families.push_back({"l", {"+-11", "1", "l", "-1"}, "2<=l<=" + std::to_string(exponent_bound)});
    for (long x = -bound; x <= bound; ++x) {
        const Int v = Int(x) * x - 125;
        if (!mpz_divisible_ui_p(v.get_mpz_t(), 4)) continue;
        const int sign = v < 0 ? -1 : 1;
        const Int w = abs(v) / 4;
        const unsigned max_l =
            w == 1 ? exponent_bound
                   : std::min<unsigned>(exponent_bound, static_cast<unsigned>(mpz_sizeinbase(w.get_mpz_t(), 2)));
        for (unsigned l = 2; l <= max_l; ++l) {
            bool exact = false;
            const Int y = integer_root(w, l, &exact);
            if (!exact) continue;
            IntTuple tuple = {Int(x), y, Int(l), Int(sign)};
            const bool open_shape = sign > 0 && l % 2 == 1 && x % 5 != 0;
            (open_shape ? out.flagged : out.solutions).push_back(std::move(tuple));
        }
    }
    sort_unique(out.solutions);
    sort_unique(out.flagged);
    out.bounds = {{"bound", Int(bound)}, {"exponent_bound", Int(exponent_bound)}};
    return out;
}

SolutionSet cor25_filter(long bound, unsigned exponent_bound) {
    const SolutionSet base = lemma24_search(bound, exponent_bound);
    SolutionSet out;
    out.equation_id = "cor25";
    out.variables = {"s", "y", "l", "sign"};
    out.families.push_back({"l", {"11", "1", "l", "-1"}, "2<=l<=" + std::to_string(exponent_bound)});
    out.bounds = base.bounds;

    auto convert = [&](const IntTuple& t, std::vector<IntTuple>& accepted) {
        const Int s = (t[0] + 11) / 2;
        IntTuple tuple = {s, t[1], t[2], t[3]};
        if (s == 0)
            out.rejected.push_back({std::move(tuple), "s is zero"});
        else if (!prime_power(s))
            out.rejected.push_back({std::move(tuple), "not a prime power"});
        else if (!is_prime_power_or_unit(t[1]))
            out.rejected.push_back({std::move(tuple), "y is not a prime power"});
        else
            accepted.push_back(std::move(tuple));
    };
    for (const auto& t : base.solutions) convert(t, out.solutions);
    for (const auto& t : base.flagged) convert(t, out.flagged);
    sort_unique(out.solutions);
    sort_unique(out.flagged);
    std::sort(out.rejected.begin(), out.rejected.end(),
              [](const RejectedTuple& a, const RejectedTuple& b) { return tuple_less(a.tuple, b.tuple); });
    return out;
}

std::vector<std::pair<Int, Int>> pell_125(int sign, unsigned count) {
    if (sign != 4 && sign != -4) throw Error(ErrorCode::DomainError, "pell125 right-hand side must be +4 or -4");
    if (count < 1) throw Error(ErrorCode::DomainError, "pell125 count must be >= 1");

    std::vector<std::pair<Int, Int>> out;
    // (x + y sqrt(125)) / 2 = ((11 + sqrt(125)) / 2)^k has norm (-1)^k.
    Int x = 11, y = 1;
    for (unsigned k = 1; out.size() < count; ++k) {
        const int norm_sign = (k % 2 == 1) ? -4 : 4;
        if (x * x - 125 * y * y != norm_sign)
            throw Error(ErrorCode::NoSolution, "unit power " + std::to_string(k) + " left the norm equation");
        if (norm_sign == sign) out.emplace_back(x, y);
        Int next_x = (11 * x + 125 * y) / 2;
        Int next_y = (x + 11 * y) / 2;
        x = std::move(next_x);
        y = std::move(next_y);
    }
    return out;
}

SolutionSet mordell_search(const Int& k, long bound) {
    if (bound < 0) throw Error(ErrorCode::DomainError, "mordell bound must be >= 0");
    SolutionSet out;
    out.equation_id = k == 2000 ? "mordell2000" : "mordell";
    out.variables = {"X", "Y"};

    const Int cube_ceiling = Int(bound) * bound * bound + abs(k);
    if (k.fits_slong_p() && cube_ceiling < Int(static_cast<unsigned long>(kNativeLimit))) {
        const long kk = k.get_si();
        for (long y = -bound; y <= bound; ++y) {
            const long v = y * y * y + kk;
            if (v < 0) continue;
            const std::uint64_t x = isqrt_u64(static_cast<std::uint64_t>(v));
            if (x * x != static_cast<std::uint64_t>(v)) continue;
            const Int X(static_cast<unsigned long>(x));
            out.solutions.push_back({X, Int(y)});
            if (x != 0) out.solutions.push_back({Int(-X), Int(y)});
        }
    } else {
        for (long y = -bound; y <= bound; ++y) {
            const Int v = Int(y) * y * y + k;
            auto x = exact_sqrt(v);
            if (!x) continue;
            out.solutions.push_back({*x, Int(y)});
            if (*x != 0) out.solutions.push_back({Int(-*x), Int(y)});
        }
    }
    sort_unique(out.solutions);
    out.bounds = {{"k", k}, {"bound", Int(bound)}};
    return out;
}

}  // namespace ecq
