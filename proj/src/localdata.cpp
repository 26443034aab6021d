#include "localdata.hpp"

#include <algorithm>

namespace ecq {

const char* to_string(ReductionType r) noexcept {
    switch (r) {
        case ReductionType::Good: return "good";
        case ReductionType::SplitMultiplicative: return "multiplicative-split";
        case ReductionType::NonsplitMultiplicative: return "multiplicative-nonsplit";
        case ReductionType::Additive: return "additive";
    }
    return "unknown";
}

std::string KodairaSymbol::to_string() const {
    switch (family) {
        case Family::I: return "I" + std::to_string(n);
        case Family::IStar: return "I" + std::to_string(n) + "*";
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
        case Family::IVStar: return "IV*";
        case Family::IIIStar: return "III*";
        case Family::IIStar: return "II*";
    }
    return "?";
}

unsigned KodairaSymbol::components() const {
    switch (family) {
        case Family::I: return n == 0 ? 1 : n;
        case Family::IStar: return n + 5;
        case Family::II: return 1;
        case Family::III: return 2;
        case Family::IV: return 3;
        case Family::IVStar: return 7;
        case Family::IIIStar: return 8;
        case Family::IIStar: return 9;
    }
    return 0;
}

std::optional<WeierstrassModel> try_transform(const WeierstrassModel& m, const Int& u, const Int& r, const Int& s,
                                              const Int& t) {
    if (u == 0) throw Error(ErrorCode::DomainError, "scaling u must be nonzero");
    std::array<Int, 5> num = {
        m.a1 + 2 * s,
        m.a2 - s * m.a1 + 3 * r - s * s,
        m.a3 + r * m.a1 + 2 * t,
        m.a4 - s * m.a3 + 2 * r * m.a2 - (t + r * s) * m.a1 + 3 * r * r - 2 * s * t,
        m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t - r * t * m.a1,
    };
    if (u == 1) return WeierstrassModel{num[0], num[1], num[2], num[3], num[4]};
    static constexpr std::array<unsigned, 5> weight = {1, 2, 3, 4, 6};
    for (std::size_t i = 0; i < 5; ++i) {
        const Int d = pow(u, weight[i]);
        if (!mpz_divisible_p(num[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        mpz_divexact(num[i].get_mpz_t(), num[i].get_mpz_t(), d.get_mpz_t());
    }
    return WeierstrassModel{num[0], num[1], num[2], num[3], num[4]};
}

WeierstrassModel transform(const WeierstrassModel& m, const Int& u, const Int& r, const Int& s, const Int& t) {
    auto out = try_transform(m, u, r, s, t);
    if (!out) throw Error(ErrorCode::Internal, "change of variables left the integers for " + to_string(m));
    return *out;
}

namespace {

constexpr unsigned kInfiniteValuation = 1u << 30;

class PrimeContext {
public:
    explicit PrimeContext(const Int& p) : p_(p), small_(p <= 3) {}

    const Int& p() const { return p_; }
    bool small() const { return small_; }
    bool is_two() const { return p_ == 2; }

    unsigned val(const Int& x) const { return x == 0 ? kInfiniteValuation : padic_valuation(x, p_); }
    bool divides(const Int& x) const { return mpz_divisible_p(x.get_mpz_t(), p_.get_mpz_t()) != 0; }
    Int rem(const Int& x) const { return mod(x, p_); }

    Int inverse(const Int& x) const {
        Int out;
        if (mpz_invert(out.get_mpz_t(), rem(x).get_mpz_t(), p_.get_mpz_t()) == 0)
            throw Error(ErrorCode::Internal, "no inverse of " + x.get_str() + " mod " + p_.get_str());
        return out;
    }

    /// x / y mod p for a unit y.
    Int div(const Int& x, const Int& y) const { return rem(x * inverse(y)); }

    /// Whether a X^2 + b X + c has a root mod p.
    bool quadratic_has_root(const Int& a, const Int& b, const Int& c) const {
        if (small_) {
            for (Int x = 0; x < p_; ++x)
                if (divides(a * x * x + b * x + c)) return true;
            return false;
        }
        if (divides(a)) return !divides(b) || divides(c);
        const Int disc = rem(b * b - 4 * a * c);
        return disc == 0 || legendre_symbol(disc, p_) == 1;
    }

private:
    Int p_;
    bool small_;
};

Int exact_div(const Int& x, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return q;
}

[[noreturn]] void fail(const char* what, const Int& p) {
    throw Error(ErrorCode::Internal, std::string("Tate's algorithm invariant failed at p=") + p.get_str() + ": " + what);
}

void require(bool condition, const char* what, const Int& p) {
    if (!condition) fail(what, p);
}

// Translate so the singular point of the reduction sits at (0,0).
WeierstrassModel move_singular_point(const WeierstrassModel& m, const PrimeContext& ctx) {
    const Int& p = ctx.p();
    if (ctx.small()) {
        for (Int r = 0; r < p; ++r)
            for (Int t = 0; t < p; ++t) {
                WeierstrassModel c = transform(m, 1, r, 0, t);
                if (ctx.divides(c.a3) && ctx.divides(c.a4) && ctx.divides(c.a6)) return c;
            }
        fail("no singular point mod p", p);
    }
    const Invariants inv = invariants(m);
    Int r;
    if (ctx.divides(inv.c4))
        r = ctx.rem(-inv.b2 * ctx.inverse(12));
    else
        r = ctx.rem(-(inv.c6 + inv.b2 * inv.c4) * ctx.inverse(12 * inv.c4));
    const Int t = ctx.rem(-(m.a1 * r + m.a3) * ctx.inverse(2));
    WeierstrassModel c = transform(m, 1, r, 0, t);
    require(ctx.divides(c.a3) && ctx.divides(c.a4) && ctx.divides(c.a6), "singular point not at origin", p);
    return c;
}

bool star_normalized(const WeierstrassModel& c, const PrimeContext& ctx) {
    return ctx.val(c.a1) >= 1 && ctx.val(c.a2) >= 1 && ctx.val(c.a3) >= 2 && ctx.val(c.a4) >= 2 &&
           ctx.val(c.a6) >= 3;
}

// Make p | a1, a2; p^2 | a3, a4; p^3 | a6.
WeierstrassModel normalize_for_star(const WeierstrassModel& m, const PrimeContext& ctx) {
    const Int& p = ctx.p();
    if (ctx.small()) {
        const Int s_range = p * p;
        const Int t_range = p * p * p;
        for (Int s = 0; s < s_range; ++s)
            for (Int t = 0; t < t_range; ++t) {
                WeierstrassModel c = transform(m, 1, 0, s, t);
                if (star_normalized(c, ctx)) return c;
            }
        fail("cannot reach p|a1,a2 p^2|a3,a4 p^3|a6", p);
    }
    const Int s = ctx.rem(-m.a1 * ctx.inverse(2));
    const Int t = p * ctx.rem(-exact_div(m.a3, p) * ctx.inverse(2));
    WeierstrassModel c = transform(m, 1, 0, s, t);
    require(star_normalized(c, ctx), "cannot reach p|a1,a2 p^2|a3,a4 p^3|a6", p);
    return c;
}

enum class CubicRoots { Distinct, Double, Triple };

struct CubicAnalysis {
    CubicRoots kind;
    Int repeated_root;  // meaningful for Double and Triple
};

// T^3 + b T^2 + c T + d over F_p.
CubicAnalysis analyze_cubic(const Int& b, const Int& c, const Int& d, const PrimeContext& ctx) {
    const Int w = 27 * d * d - b * b * c * c + 4 * b * b * b * d - 18 * b * c * d + 4 * c * c * c;
    if (!ctx.divides(w)) return {CubicRoots::Distinct, 0};
    const Int& p = ctx.p();
    if (ctx.small()) {
        for (Int rho = 0; rho < p; ++rho) {
            const bool root = ctx.divides(((rho + b) * rho + c) * rho + d);
            const bool derivative_root = ctx.divides((3 * rho + 2 * b) * rho + c);
            if (!root || !derivative_root) continue;
            const bool triple =
                ctx.divides(b + 3 * rho) && ctx.divides(c - 3 * rho * rho) && ctx.divides(d + rho * rho * rho);
            return {triple ? CubicRoots::Triple : CubicRoots::Double, rho};
        }
        fail("repeated root of cubic not found", p);
    }
    const Int x = 3 * c - b * b;
    if (ctx.divides(x)) return {CubicRoots::Triple, ctx.div(-b, 3)};
    return {CubicRoots::Double, ctx.div(b * c - 9 * d, 2 * x)};
}

LocalData finish(const Int& p, unsigned ord, KodairaSymbol symbol, unsigned f, ReductionType reduction) {
    LocalData out{p, ord, symbol, f, symbol.components(), reduction};
    // Ogg's formula is the definition of f_p used downstream; confirm it.
    require(static_cast<long>(f) == static_cast<long>(ord) - static_cast<long>(out.components) + 1,
            "f_p != ord_p(disc) - m_p + 1", p);
    if (p >= 5 && reduction == ReductionType::Additive) require(f == 2, "additive f_p != 2 for p >= 5", p);
    return out;
}

}  // namespace

LocalReduction tate_algorithm(const WeierstrassModel& model, const Int& p) {
    if (!is_prime(p) || p < 0) throw Error(ErrorCode::DomainError, "Tate's algorithm needs a prime, got " + p.get_str());
    const PrimeContext ctx(p);
    using F = KodairaSymbol::Family;

    WeierstrassModel m = model;
    unsigned scaling = 0;
    while (true) {
        const Invariants inv = invariants(m);
        if (inv.disc == 0) throw Error(ErrorCode::SingularCurve, "singular model " + to_string(m));
        const unsigned ord = ctx.val(inv.disc);
        if (ord == 0) return {finish(p, 0, {F::I, 0}, 0, ReductionType::Good), m, scaling};

        m = move_singular_point(m, ctx);
        const Int b2 = m.a1 * m.a1 + 4 * m.a2;
        if (!ctx.divides(b2)) {
            const bool split = ctx.quadratic_has_root(1, m.a1, -m.a2);
            return {finish(p, ord, {F::I, ord}, 1,
                           split ? ReductionType::SplitMultiplicative : ReductionType::NonsplitMultiplicative),
                    m, scaling};
        }
        if (ctx.val(m.a6) < 2) return {finish(p, ord, {F::II, 0}, ord, ReductionType::Additive), m, scaling};
        const Int b8 = m.a1 * m.a1 * m.a6 + 4 * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 + m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
        if (ctx.val(b8) < 3) return {finish(p, ord, {F::III, 0}, ord - 1, ReductionType::Additive), m, scaling};
        const Int b6 = m.a3 * m.a3 + 4 * m.a6;
        if (ctx.val(b6) < 3) return {finish(p, ord, {F::IV, 0}, ord - 2, ReductionType::Additive), m, scaling};

        m = normalize_for_star(m, ctx);
        const Int p2 = p * p;
        const Int p3 = p2 * p;
        const Int b = exact_div(m.a2, p);
        const Int c = exact_div(m.a4, p2);
        const Int d = exact_div(m.a6, p3);
        const CubicAnalysis cubic = analyze_cubic(b, c, d, ctx);

        if (cubic.kind == CubicRoots::Distinct)
            return {finish(p, ord, {F::IStar, 0}, ord - 4, ReductionType::Additive), m, scaling};

        if (cubic.kind == CubicRoots::Double) {
            m = transform(m, 1, p * cubic.repeated_root, 0, 0);
            unsigned ix = 3, iy = 3;
            Int mx = p2, my = p2;
            while (true) {
                Int a2t = exact_div(m.a2, p);
                Int a3t = exact_div(m.a3, my);
                Int a6t = exact_div(m.a6, mx * my);
                if (!ctx.divides(a3t * a3t + 4 * a6t)) break;
                const Int y_root = ctx.is_two() ? ctx.rem(a6t) : ctx.div(-a3t, 2);
                m = transform(m, 1, 0, 0, my * y_root);
                my *= p;
                ++iy;
                a2t = exact_div(m.a2, p);
                const Int a4t = exact_div(m.a4, p * mx);
                a6t = exact_div(m.a6, mx * my);
                if (!ctx.divides(a4t * a4t - 4 * a6t * a2t)) break;
                const Int x_root = ctx.is_two() ? ctx.rem(a6t * a2t) : ctx.div(-a4t, 2 * a2t);
                m = transform(m, 1, mx * x_root, 0, 0);
                mx *= p;
                ++ix;
            }
            const unsigned n = ix + iy - 5;
            return {finish(p, ord, {F::IStar, n}, ord - ix - iy + 1, ReductionType::Additive), m, scaling};
        }

        // Triple root.
        m = transform(m, 1, p * cubic.repeated_root, 0, 0);
        const Int p4 = p2 * p2;
        const Int x3t = exact_div(m.a3, p2);
        const Int x6t = exact_div(m.a6, p4);
        if (!ctx.divides(x3t * x3t + 4 * x6t))
            return {finish(p, ord, {F::IVStar, 0}, ord - 6, ReductionType::Additive), m, scaling};
        const Int y_root = ctx.is_two() ? ctx.rem(x6t) : ctx.div(-x3t, 2);
        m = transform(m, 1, 0, 0, p2 * y_root);
        require(ctx.val(m.a3) >= 3 && ctx.val(m.a6) >= 5, "expected p^3|a3, p^5|a6", p);
        if (ctx.val(m.a4) < 4) return {finish(p, ord, {F::IIIStar, 0}, ord - 7, ReductionType::Additive), m, scaling};
        if (ctx.val(m.a6) < 6) return {finish(p, ord, {F::IIStar, 0}, ord - 8, ReductionType::Additive), m, scaling};

        // Not minimal at p: scale by u = p and start over.
        m = transform(m, p, 0, 0, 0);
        ++scaling;
    }
}

LocalData tate_local(const WeierstrassModel& model, const Int& p) { return tate_algorithm(model, p).data; }

WeierstrassModel reduce_model(const WeierstrassModel& model) {
    WeierstrassModel m = model;
    const Int s = (mod(m.a1, 2) - m.a1) / 2;
    m = transform(m, 1, 0, s, 0);
    const Int target_a2 = mod(m.a2 + 1, 3) - 1;
    const Int r = (target_a2 - m.a2) / 3;
    m = transform(m, 1, r, 0, 0);
    const Int t = (mod(m.a3, 2) - m.a3) / 2;
    return transform(m, 1, 0, 0, t);
}

MinimalModel minimalize(const WeierstrassModel& model) {
    const Int disc = invariants(model).disc;
    if (disc == 0) throw Error(ErrorCode::SingularCurve, "singular model " + to_string(model));
    return minimalize(model, factor(disc).primes());
}

MinimalModel minimalize(const WeierstrassModel& model, const std::vector<Int>& primes) {
    const Int disc = invariants(model).disc;
    if (disc == 0) throw Error(ErrorCode::SingularCurve, "singular model " + to_string(model));
    WeierstrassModel m = model;
    Int u = 1;
    for (const Int& p : primes) {
        if (p < 2 || padic_valuation(disc, p) < 12) continue;
        LocalReduction local = tate_algorithm(m, p);
        if (local.scaling_exponent == 0) continue;
        m = local.model;
        u *= pow(p, local.scaling_exponent);
    }
    return {reduce_model(m), u};
}

GlobalData conductor(const WeierstrassModel& model) {
    const Int disc = invariants(model).disc;
    if (disc == 0) throw Error(ErrorCode::SingularCurve, "singular model " + to_string(model));
    return conductor(model, factor(disc).primes());
}

GlobalData conductor(const WeierstrassModel& model, const std::vector<Int>& primes) {
    MinimalModel minimal = minimalize(model, primes);
    const Int disc_min = invariants(minimal.model).disc;
    Factorization disc_fact = factor_over(disc_min, primes);

    GlobalData out{minimal.model, minimal.scaling, disc_fact, Factorization(), {}};
    std::vector<PrimePower> conductor_factors;
    for (const auto& [p, e] : disc_fact.factors()) {
        LocalReduction local = tate_algorithm(minimal.model, p);
        if (local.scaling_exponent != 0)
            throw Error(ErrorCode::Internal, "model " + to_string(minimal.model) + " not minimal at " + p.get_str());
        if (local.data.conductor_exponent == 0)
            throw Error(ErrorCode::Internal, "bad prime " + p.get_str() + " reported with f_p = 0");
        conductor_factors.push_back({p, local.data.conductor_exponent});
        out.locals.push_back(std::move(local.data));
    }
    out.conductor = Factorization(1, std::move(conductor_factors));
    return out;
}

}  // namespace ecq
