#include "arith.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace ecq {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::SingularCurve: return "SingularCurve";
        case ErrorCode::DegenerateParameter: return "DegenerateParameter";
        case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

constexpr std::uint32_t kTrialLimit = 1000000;

const std::vector<std::uint32_t>& trial_primes() {
    static const std::vector<std::uint32_t> primes = primes_up_to(kTrialLimit);
    return primes;
}

constexpr std::array<unsigned, 25> kSmallPrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(Int a, Int n) {
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a >>= 1;
            unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) result = -result;
        a = mod(a, n);
    }
    return n == 1 ? result : 0;
}

bool miller_rabin(const Int& n, unsigned long base) {
    Int d = n - 1;
    unsigned r = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++r;
    }
    Int x;
    Int a = base;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Int n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

Int half_mod(Int x, const Int& n) {
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    return x >> 1;
}

// Strong Lucas probable-prime test with Selfridge parameters (P = 1).
bool strong_lucas(const Int& n) {
    if (mpz_perfect_square_p(n.get_mpz_t())) return false;
    long d_value = 5;
    while (true) {
        int j = jacobi(Int(d_value), n);
        if (j == -1) break;
        if (j == 0 && abs(Int(d_value)) != n) return false;
        d_value = d_value > 0 ? -(d_value + 2) : -(d_value - 2);
    }
    const Int D = d_value;
    const Int Q = (1 - D) / 4;

    Int d = n + 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }

    Int U = 1, V = 1, Qk = mod(Q, n);
    const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (std::size_t i = bits - 1; i-- > 0;) {
        U = U * V % n;
        V = mod(V * V - 2 * Qk, n);
        Qk = Qk * Qk % n;
        if (mpz_tstbit(d.get_mpz_t(), i)) {
            Int u_next = half_mod(mod(U + V, n), n);
            Int v_next = half_mod(mod(D * U + V, n), n);
            U = u_next;
            V = v_next;
            Qk = mod(Qk * Q, n);
        }
    }
    if (U == 0 || V == 0) return true;
    for (unsigned r = 1; r < s; ++r) {
        V = mod(V * V - 2 * Qk, n);
        Qk = Qk * Qk % n;
        if (V == 0) return true;
    }
    return false;
}

Int rho_step(const Int& x, const Int& c, const Int& n) { return (x * x + c) % n; }

// Pollard rho with Brent's cycle detection. Returns a divisor of n, possibly n.
Int pollard_brent(const Int& n, unsigned long c_value) {
    const Int c = c_value;
    const unsigned long m = 128;
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = rho_step(y, c, n);
        unsigned long k = 0;
        do {
            ys = y;
            const unsigned long steps = std::min(m, r - k);
            for (unsigned long i = 0; i < steps; ++i) {
                y = rho_step(y, c, n);
                q = q * abs(Int(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            ys = rho_step(ys, c, n);
            g = gcd(Int(x - ys), n);
        } while (g == 1);
    }
    return g;
}

void split_large(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // Rho does not separate a prime power from itself.
    if (auto pp = perfect_power(n, 2)) {
        std::map<Int, unsigned> inner;
        split_large(pp->base, inner);
        for (const auto& [p, e] : inner) out[p] += e * pp->exponent;
        return;
    }
    for (unsigned long c = 1;; ++c) {
        Int d = pollard_brent(n, c);
        if (d != 1 && d != n) {
            split_large(d, out);
            split_large(Int(n / d), out);
            return;
        }
    }
}

// Trial division by the sieved primes; returns the cofactor.
Int trial_divide(Int m, std::map<Int, unsigned>& out) {
    for (std::uint32_t p : trial_primes()) {
        const unsigned long pp = static_cast<unsigned long>(p) * p;
        if (mpz_cmp_ui(m.get_mpz_t(), pp) < 0) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            out[Int(p)] += e;
        }
    }
    return m;
}

Factorization from_map(int sign, const std::map<Int, unsigned>& m) {
    std::vector<PrimePower> factors;
    factors.reserve(m.size());
    for (const auto& [p, e] : m) factors.push_back({p, e});
    return Factorization(sign, std::move(factors));
}

void factor_positive(Int m, std::map<Int, unsigned>& out) {
    m = trial_divide(std::move(m), out);
    if (m == 1) return;
    const Int trial_square = Int(kTrialLimit) * kTrialLimit;
    if (m < trial_square) {
        ++out[m];
        return;
    }
    split_large(m, out);
}

}  // namespace

Factorization::Factorization(int sign, std::vector<PrimePower> factors)
    : sign_(sign), factors_(std::move(factors)) {
    if (sign_ != 1 && sign_ != -1) throw Error(ErrorCode::DomainError, "factorization sign must be +1 or -1");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].exponent == 0) throw Error(ErrorCode::DomainError, "factorization exponent must be >= 1");
        if (!is_prime(factors_[i].prime) || factors_[i].prime < 0)
            throw Error(ErrorCode::DomainError, "factorization base " + factors_[i].prime.get_str() + " is not prime");
        if (i > 0 && factors_[i - 1].prime >= factors_[i].prime)
            throw Error(ErrorCode::DomainError, "factorization primes must be strictly increasing");
    }
}

unsigned Factorization::exponent_of(const Int& p) const {
    for (const auto& f : factors_)
        if (f.prime == p) return f.exponent;
    return 0;
}

std::vector<Int> Factorization::primes() const {
    std::vector<Int> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.prime);
    return out;
}

Int Factorization::abs_value() const {
    Int v = 1;
    for (const auto& f : factors_) v *= pow(f.prime, f.exponent);
    return v;
}

Int Factorization::value() const { return sign_ * abs_value(); }

std::string Factorization::to_string() const {
    std::string out = sign_ < 0 ? "-" : "";
    if (factors_.empty()) return out + "1";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += "*";
        out += factors_[i].prime.get_str();
        if (factors_[i].exponent != 1) out += "^" + std::to_string(factors_[i].exponent);
    }
    return out;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

bool is_prime(const Int& n_in) {
    const Int n = abs(n_in);
    if (n < 2) return false;
    for (unsigned p : kSmallPrimes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < 97 * 97) return true;

    // Sorenson-Webster: the first 13 prime bases are exact below this bound.
    static const Int deterministic_bound("3317044064679887385961981");
    if (n < deterministic_bound) {
        for (unsigned i = 0; i < 13; ++i)
            if (!miller_rabin(n, kSmallPrimes[i])) return false;
        return true;
    }
    return miller_rabin(n, 2) && strong_lucas(n);
}

Factorization factor(const Int& n) {
    if (n == 0) throw Error(ErrorCode::ZeroInput, "cannot factor zero");
    std::map<Int, unsigned> out;
    factor_positive(abs(n), out);
    return from_map(sgn(n) < 0 ? -1 : 1, out);
}

Factorization factor_over(const Int& n, const std::vector<Int>& candidates) {
    if (n == 0) throw Error(ErrorCode::ZeroInput, "cannot factor zero");
    std::map<Int, unsigned> out;
    Int m = abs(n);
    for (const Int& p : candidates) {
        if (p < 2 || out.count(p)) continue;
        unsigned e = static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
        if (e > 0) out[p] = e;
    }
    if (m != 1) {
        std::map<Int, unsigned> rest;
        factor_positive(m, rest);
        for (const auto& [p, e] : rest) out[p] += e;
    }
    return from_map(sgn(n) < 0 ? -1 : 1, out);
}

namespace {

// Largest-exponent representation m = base^exp (exp may be 1); m >= 2.
PerfectPower maximal_power(Int m) {
    unsigned exponent = 1;
    bool reduced = true;
    while (reduced) {
        reduced = false;
        const unsigned long bits = mpz_sizeinbase(m.get_mpz_t(), 2);
        Int root;
        for (unsigned long k = 2; k <= bits; ++k) {
            if (!is_prime(Int(k))) continue;
            if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
                m = root;
                exponent *= static_cast<unsigned>(k);
                reduced = true;
                break;
            }
        }
    }
    return {m, exponent};
}

}  // namespace

std::optional<PrimePower> prime_power(const Int& n) {
    const Int m = abs(n);
    if (m < 2) return std::nullopt;
    PerfectPower pp = maximal_power(m);
    if (!is_prime(pp.base)) return std::nullopt;
    return PrimePower{pp.base, pp.exponent};
}

std::optional<PerfectPower> perfect_power(const Int& n, unsigned min_exp) {
    const Int m = abs(n);
    if (m < 2) throw Error(ErrorCode::DomainError, "perfect_power requires |n| >= 2");
    if (min_exp < 2) throw Error(ErrorCode::DomainError, "perfect_power requires min_exp >= 2");
    PerfectPower pp = maximal_power(m);
    if (pp.exponent < min_exp) return std::nullopt;
    return pp;
}

unsigned padic_valuation(const Int& n, const Int& p) {
    if (n == 0) throw Error(ErrorCode::ZeroInput, "valuation of zero is undefined");
    if (p < 2) throw Error(ErrorCode::DomainError, "valuation base must be a prime");
    Int m = n;
    return static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

int legendre_symbol(const Int& a, const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
        throw Error(ErrorCode::DomainError, "Legendre symbol needs an odd prime, got " + p.get_str());
    return jacobi(a, p);
}

Int integer_root(const Int& n, unsigned k, bool* exact) {
    if (k == 0) throw Error(ErrorCode::DomainError, "root index must be positive");
    Int root;
    const Int m = abs(n);
    int is_exact = mpz_root(root.get_mpz_t(), m.get_mpz_t(), k);
    if (exact) *exact = is_exact != 0;
    return root;
}

std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int parse_int(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    const std::size_t digits_from = (!body.empty() && body[0] == '-') ? 1 : 0;
    if (body.size() == digits_from ||
        !std::all_of(body.begin() + static_cast<long>(digits_from), body.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
        throw Error(ErrorCode::InvalidArgument, "not an integer: '" + text + "'");
    return Int(body, 10);
}

}  // namespace ecq
