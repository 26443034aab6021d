#include "classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <thread>

namespace ecq {

namespace {

Factorization fz(int sign, std::initializer_list<std::pair<unsigned long, unsigned>> pe) {
    std::vector<PrimePower> f;
    for (auto [p, e] : pe) f.push_back({Int(p), e});
    return Factorization(sign, std::move(f));
}

double log_abs(const Int& n) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

// Prime -> valuation of the generic discriminant, read off the closed form.
std::map<Int, unsigned> disc_valuations(int order, const Int& s, const Int& t) {
    std::map<Int, unsigned> ords;
    for (const auto& f : closed_form_factors(order, s, t)) {
        if (f.value == 1 || f.value == -1) continue;
        const Factorization fac = factor(f.value);
        for (const auto& pp : fac.factors()) ords[pp.prime] += pp.exponent * f.exponent;
    }
    return ords;
}

bool is_pm_one_away(const Int& q, const Int& center) { return q == center + 1 || q == center - 1; }

}  // namespace

const char* to_string(ConductorMode m) noexcept {
    return m == ConductorMode::Squarefree ? "squarefree" : "prime-power";
}

ConductorMode parse_mode(const std::string& s) {
    if (s == "squarefree") return ConductorMode::Squarefree;
    if (s == "prime-power") return ConductorMode::PrimePower;
    throw Error(ErrorCode::InvalidArgument, "unknown mode '" + s + "' (expected squarefree or prime-power)");
}

ConductorMode default_mode(int order) { return order == 4 ? ConductorMode::Squarefree : ConductorMode::PrimePower; }

bool conductor_matches(const Factorization& conductor, ConductorMode mode) {
    if (conductor.prime_count() != 2) return false;
    if (mode == ConductorMode::PrimePower) return true;
    return conductor.factors()[0].exponent == 1 && conductor.factors()[1].exponent == 1;
}

CurveRecord make_record(const TateParameter& param) {
    const WeierstrassModel model = integral_model(param);
    std::vector<Int> primes;
    for (const auto& [p, e] : disc_valuations(param.order(), param.s(), param.t())) primes.push_back(p);
    GlobalData g = conductor(model, primes);

    CurveRecord r{param, model, g.minimal_model, g.scaling, g.disc_min, g.conductor, std::move(g.locals), 0.0, 0};
    const Int n = g.conductor.value();
    if (n > 1) r.szpiro_ratio = log_abs(g.disc_min.value()) / log_abs(n);
    const auto ord = order_of_point(model, Point::affine(0, 0), 2 * static_cast<unsigned>(param.order()));
    r.torsion_verified = ord.value_or(0);
    return r;
}

std::vector<CurveRecord> enumerate(int order, const EnumerateOptions& options) {
    if (!is_supported_order(order)) throw Error(ErrorCode::DomainError, "unsupported torsion order " + std::to_string(order));
    if (options.bound < 1) throw Error(ErrorCode::DomainError, "bound must be >= 1");
    const unsigned jobs = std::max(1u, options.jobs);
    const long bound = options.bound;

    auto worker = [&](unsigned index, std::vector<CurveRecord>& out) {
        for (long t = 1 + index; t <= bound; t += jobs) {
            for (long s = -bound; s <= bound; ++s) {
                if (std::gcd(s, t) != 1) continue;
                std::optional<TateParameter> param;
                try {
                    param = TateParameter::make(order, Int(s), Int(t));
                } catch (const Error& e) {
                    if (e.code() == ErrorCode::DegenerateParameter || e.code() == ErrorCode::SingularCurve) continue;
                    throw;
                }
                // Primes whose valuation is not a multiple of 12 survive minimalization.
                const auto ords = disc_valuations(order, param->s(), param->t());
                if (ords.size() < 2) continue;
                const auto surviving = std::count_if(ords.begin(), ords.end(), [](const auto& kv) { return kv.second % 12 != 0; });
                if (surviving > 2) continue;

                CurveRecord r = make_record(*param);
                if (conductor_matches(r.conductor, options.mode)) out.push_back(std::move(r));
            }
        }
    };

    std::vector<std::vector<CurveRecord>> parts(jobs);
    if (jobs == 1) {
        worker(0, parts[0]);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(jobs);
        for (unsigned i = 0; i < jobs; ++i)
            threads.emplace_back([&, i] {
                try {
                    worker(i, parts[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
        for (auto& th : threads) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    // one record per minimal model, represented by the smallest (t, s)
    auto param_less = [](const TateParameter& a, const TateParameter& b) {
        return a.t() != b.t() ? a.t() < b.t() : a.s() < b.s();
    };
    std::vector<CurveRecord> merged;
    for (auto& part : parts)
        for (auto& r : part) merged.push_back(std::move(r));
    std::sort(merged.begin(), merged.end(), [&](const CurveRecord& a, const CurveRecord& b) {
        if (model_less(a.minimal_model, b.minimal_model)) return true;
        if (model_less(b.minimal_model, a.minimal_model)) return false;
        return param_less(a.param, b.param);
    });
    std::vector<CurveRecord> out;
    for (auto& r : merged)
        if (out.empty() || !(out.back().minimal_model == r.minimal_model)) out.push_back(std::move(r));
    return out;
}

// ---------------------------------------------------------------------------

const TheoremTable& theorem_table(int order) {
    static const std::map<int, TheoremTable> tables = [] {
        std::map<int, TheoremTable> m;
        m[4] = {4,
                ConductorMode::Squarefree,
                false,
                {fz(1, {{2, 4}, {3, 1}}), fz(1, {{2, 4}, {5, 1}}), fz(1, {{2, 4}, {3, 7}}), fz(1, {{2, 8}, {7, 1}}),
                 fz(1, {{2, 8}, {3, 2}}), fz(1, {{2, 8}, {7, 7}}), fz(1, {{3, 2}, {7, 1}}), fz(1, {{3, 2}, {5, 2}})},
                {"2^(2k+4)p, p=2^(k-4)+-1, k>=4", "2^(2k+4)p^4, p=2^(k-4)+-1, k>=4", "2^(4k)p, p=2^(k+4)+-1, k>0",
                 "2^(4k)p^7, p=2^(k+4)+-1, k>0", "p^4q^b, 16p+-1=q^b", "p^4q^(7b), 16p+-1=q^b",
                 "p^(4k)q, q=16p^k+-1", "p^(4k)q^7, q=16p^k+-1", "p^(2k)q, q=p^(2k)+16, k>0"},
                32};
        m[5] = {5,
                ConductorMode::PrimePower,
                false,
                {fz(1, {{2, 5}, {5, 2}}), fz(1, {{2, 15}, {5, 2}}), fz(1, {{3, 5}, {5, 2}}), fz(1, {{5, 2}, {13, 5}}),
                 fz(1, {{31, 2}, {37, 5}}), fz(1, {{5, 3}, {7, 5}})},
                {"p^(5k)q^(2l+1)"},
                6};
        m[6] = {6,
                ConductorMode::PrimePower,
                true,
                {fz(1, {{2, 1}, {7, 2}}), fz(-1, {{2, 2}, {7, 1}}), fz(1, {{2, 3}, {7, 6}}), fz(1, {{2, 4}, {5, 1}}),
                 fz(-1, {{2, 4}, {3, 3}}), fz(1, {{2, 6}, {17, 1}}), fz(-1, {{2, 6}, {7, 3}}), fz(1, {{2, 8}, {3, 3}}),
                 fz(-1, {{2, 8}, {5, 2}})},
                {},
                6};
        m[7] = {7, ConductorMode::PrimePower, true, {fz(-1, {{2, 7}, {13, 1}})}, {}, 3};
        m[8] = {8, ConductorMode::PrimePower, true, {fz(-1, {{2, 11}, {3, 8}})}, {}, 7};
        m[9] = {9, ConductorMode::PrimePower, true, {fz(-1, {{2, 9}, {3, 5}})}, {}, 5};
        m[10] = {10, ConductorMode::PrimePower, true, {}, {}, 0};
        m[12] = {12, ConductorMode::PrimePower, true, {}, {}, 0};
        return m;
    }();
    auto it = tables.find(order);
    if (it == tables.end()) throw Error(ErrorCode::DomainError, "unsupported torsion order " + std::to_string(order));
    return it->second;
}

namespace {

// Order-4 shapes on |disc| = p^a q^b, tried with both role assignments.
std::optional<std::string> match_order4(const PrimePower& x, const PrimePower& y) {
    const auto& table = theorem_table(4).families;
    const Int& p = x.prime;
    const Int& q = y.prime;
    const unsigned a = x.exponent, b = y.exponent;

    if (p == 2 && a % 2 == 0 && a >= 12 && (b == 1 || b == 4)) {
        const unsigned k = (a - 4) / 2;
        if (is_pm_one_away(q, pow(Int(2), k - 4))) return table[b == 1 ? 0 : 1];
    }
    if (p == 2 && a % 4 == 0 && (b == 1 || b == 7)) {
        const unsigned k = a / 4;
        if (is_pm_one_away(q, pow(Int(2), k + 4))) return table[b == 1 ? 2 : 3];
    }
    if (a == 4) {
        if (auto pp = prime_power(Int(16 * p + 1)); pp && pp->prime == q && pp->exponent == b) return table[4];
        if (auto pp = prime_power(Int(16 * p - 1)); pp && pp->prime == q && pp->exponent == b) return table[4];
        if (b % 7 == 0) {
            const Int qb = pow(q, b / 7);
            if (is_pm_one_away(qb, Int(16 * p))) return table[5];
        }
    }
    if (a % 4 == 0 && (b == 1 || b == 7)) {
        if (is_pm_one_away(q, Int(16 * pow(p, a / 4)))) return table[b == 1 ? 6 : 7];
    }
    if (a % 2 == 0 && b == 1 && q == pow(p, a) + 16) return table[8];
    return std::nullopt;
}

}  // namespace

std::optional<FamilyMatch> match_family(int order, const Factorization& disc) {
    if (disc.prime_count() != 2) return std::nullopt;
    const auto& f = disc.factors();
    if (order == 4) {
        if (auto m = match_order4(f[0], f[1])) return FamilyMatch{*m, false};
        if (auto m = match_order4(f[1], f[0])) return FamilyMatch{*m, false};
        return std::nullopt;
    }
    if (order == 5) {
        for (int i = 0; i < 2; ++i) {
            const unsigned a = f[i].exponent, b = f[1 - i].exponent;
            if (a % 5 == 0 && b % 2 == 1) return FamilyMatch{theorem_table(5).families[0], true};
        }
    }
    return std::nullopt;
}

SzpiroReport szpiro_check(const std::vector<CurveRecord>& records, unsigned exponent) {
    if (exponent == 0) throw Error(ErrorCode::DomainError, "Szpiro exponent must be positive");
    SzpiroReport rep;
    rep.exponent = exponent;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        rep.max_ratio = std::max(rep.max_ratio, r.szpiro_ratio);
        if (!(r.disc_min.abs_value() < pow(r.conductor.value(), exponent))) {
            rep.passed = false;
            rep.failures.push_back(i);
        }
    }
    return rep;
}

std::vector<Discrepancy> conductor_discrepancies() {
    struct Claim {
        int order;
        long s, t;
        Factorization conductor;
    };
    const std::vector<Claim> claims = {{8, 1, 4, fz(1, {{2, 2}, {3, 1}})}, {9, 1, -1, fz(1, {{2, 1}, {3, 2}})}};
    std::vector<Discrepancy> out;
    for (const auto& c : claims) {
        const CurveRecord r = make_record(TateParameter::make(c.order, Int(c.s), Int(c.t)));
        out.push_back({c.order, r.param, r.disc_min, c.conductor.to_string(), r.conductor,
                       r.conductor.primes() == c.conductor.primes(), r.conductor == c.conductor});
    }
    return out;
}

std::size_t VerifyReport::matched_count() const {
    return static_cast<std::size_t>(std::count_if(expected.begin(), expected.end(), [](const auto& e) { return e.matched; }));
}

std::size_t VerifyReport::unwitnessed_count() const { return expected.size() - matched_count(); }

bool VerifyReport::has_open_family_members() const {
    return std::any_of(family_matches.begin(), family_matches.end(), [](const auto& m) { return m.second.open; });
}

VerifyReport verify_theorem(int order, const EnumerateOptions& options) {
    const TheoremTable& table = theorem_table(order);
    VerifyReport rep;
    rep.order = order;
    rep.mode = options.mode;
    rep.bound = options.bound;
    rep.records = enumerate(order, options);
    for (const auto& d : table.discs) rep.expected.push_back({d, false});

    for (std::size_t i = 0; i < rep.records.size(); ++i) {
        const Factorization d = table.signed_discs ? rep.records[i].disc_min : rep.records[i].disc_min.abs();
        auto hit = std::find_if(rep.expected.begin(), rep.expected.end(), [&](const auto& e) { return e.disc == d; });
        if (hit != rep.expected.end()) {
            hit->matched = true;
        } else if (auto fam = match_family(order, d)) {
            rep.family_matches.emplace_back(i, *fam);
        } else {
            rep.violations.push_back(i);
        }
    }
    if (table.szpiro_exponent > 0) rep.szpiro = szpiro_check(rep.records, table.szpiro_exponent);
    return rep;
}

// ---------------------------------------------------------------------------

const std::vector<FamilyInfo>& order4_families() {
    static const std::vector<FamilyInfo> families = {
        {"col1+", "2^(2k+4)p", "p=2^(k-4)+1", false, 4}, {"col1-", "2^(2k+4)p", "p=2^(k-4)-1", false, 4},
        {"col2+", "2^(2k+4)p^4", "p=2^(k-4)+1", false, 4}, {"col2-", "2^(2k+4)p^4", "p=2^(k-4)-1", false, 4},
        {"col3+", "2^(4k)p", "p=2^(k+4)+1", false, 1},   {"col3-", "2^(4k)p", "p=2^(k+4)-1", false, 1},
        {"col4+", "2^(4k)p^7", "p=2^(k+4)+1", false, 1}, {"col4-", "2^(4k)p^7", "p=2^(k+4)-1", false, 1},
        {"col5+", "p^4q^b", "16p+1=q^b", true, 0},       {"col5-", "p^4q^b", "16p-1=q^b", true, 0},
        {"col6+", "p^4q^(7b)", "16p+1=q^b", true, 0},    {"col6-", "p^4q^(7b)", "16p-1=q^b", true, 0},
        {"col7+", "p^(4k)q", "q=16p^k+1", true, 1},      {"col7-", "p^(4k)q", "q=16p^k-1", true, 1},
        {"col8+", "p^(4k)q^7", "q=16p^k+1", true, 1},    {"col8-", "p^(4k)q^7", "q=16p^k-1", true, 1},
        {"col9", "p^(2k)q", "q=p^(2k)+16", true, 1},
    };
    return families;
}

std::optional<CurveRecord> family_witness(const std::string& family, unsigned k, const std::optional<Int>& p) {
    const auto& all = order4_families();
    auto info = std::find_if(all.begin(), all.end(), [&](const FamilyInfo& f) { return f.id == family; });
    if (info == all.end()) throw Error(ErrorCode::DomainError, "unknown family '" + family + "'");
    if (k < info->min_k) throw Error(ErrorCode::DomainError, family + " needs k >= " + std::to_string(info->min_k));
    if (info->needs_prime && (!p || !is_prime(*p) || *p < 2))
        throw Error(ErrorCode::DomainError, family + " needs a prime p");

    const int col = family[3] - '0';
    const int sign = family.size() > 4 && family[4] == '-' ? -1 : 1;
    const Int two_k = pow(Int(2), k);
    Int s, t;
    switch (col) {
        case 1:
        case 2: {
            const Int prime = pow(Int(2), k - 4) + sign;
            if (prime < 3 || !is_prime(prime)) return std::nullopt;
            s = col == 1 ? Int(sign) : Int(-prime);
            t = two_k;
            break;
        }
        case 3:
        case 4: {
            const Int prime = pow(Int(2), k + 4) + sign;
            if (!is_prime(prime)) return std::nullopt;
            s = col == 3 ? Int(sign * two_k) : Int(-two_k);
            t = col == 3 ? Int(1) : prime;
            break;
        }
        case 5:
        case 6: {
            const Int qb = 16 * *p + sign;
            if (!prime_power(qb)) return std::nullopt;
            s = col == 5 ? Int(sign * *p) : Int(-*p);
            t = col == 5 ? Int(1) : qb;
            break;
        }
        case 7:
        case 8: {
            const Int pk = pow(*p, k);
            const Int q = 16 * pk + sign;
            if (!is_prime(q)) return std::nullopt;
            s = col == 7 ? Int(sign * pk) : Int(-pk);
            t = col == 7 ? Int(1) : q;
            break;
        }
        default: {
            const Int p2k = pow(*p, 2 * k);
            if (!is_prime(Int(p2k + 16))) return std::nullopt;
            s = 1;
            t = p2k;
        }
    }
    return make_record(TateParameter::make(4, s, t).canonical());
}

}  // namespace ecq
