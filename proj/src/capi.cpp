#include <ecq/ecq.h>

#include <string>

#include "classify.hpp"
#include "dioph.hpp"
#include "output.hpp"

using namespace ecq;

struct ecq_curve {
    CurveRecord record;
    std::string fields[5];
    std::vector<std::string> local_strings;  // p, kodaira per local
};

struct ecq_result {
    std::string text;
    bool passed = true;
};

namespace {

thread_local std::string last_error;

ecq_status status_of(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroInput: return ECQ_ERR_ZERO_INPUT;
        case ErrorCode::DomainError: return ECQ_ERR_DOMAIN;
        case ErrorCode::SingularCurve: return ECQ_ERR_SINGULAR;
        case ErrorCode::DegenerateParameter: return ECQ_ERR_DEGENERATE;
        case ErrorCode::PointNotOnCurve: return ECQ_ERR_NOT_ON_CURVE;
        case ErrorCode::NoSolution: return ECQ_ERR_NO_SOLUTION;
        case ErrorCode::InvalidArgument: return ECQ_ERR_INVALID_ARGUMENT;
        case ErrorCode::Internal: return ECQ_ERR_INTERNAL;
    }
    return ECQ_ERR_INTERNAL;
}

template <typename F>
ecq_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return ECQ_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return ECQ_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return ECQ_ERR_INTERNAL;
    }
}

ecq_status null_argument(const char* what) {
    last_error = std::string(what) + " must not be null";
    return ECQ_ERR_INVALID_ARGUMENT;
}

Format format_of(ecq_format f) {
    switch (f) {
        case ECQ_FORMAT_TABLE: return Format::Table;
        case ECQ_FORMAT_CSV: return Format::Csv;
        case ECQ_FORMAT_JSON_LINES: return Format::JsonLines;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown output format");
}

ConductorMode mode_of(ecq_mode m, int n) {
    switch (m) {
        case ECQ_MODE_DEFAULT: return default_mode(n);
        case ECQ_MODE_SQUAREFREE: return ConductorMode::Squarefree;
        case ECQ_MODE_PRIME_POWER: return ConductorMode::PrimePower;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown conductor mode");
}

EnumerateOptions options_of(int n, long bound, ecq_mode mode, unsigned jobs) {
    EnumerateOptions o;
    o.bound = bound;
    o.mode = mode_of(mode, n);
    o.jobs = jobs == 0 ? 1 : jobs;
    return o;
}

void check_order(int n) {
    if (!is_supported_order(n)) throw Error(ErrorCode::InvalidArgument, "N must be one of 4,5,6,7,8,9,10,12");
}

template <typename T>
T pick(T value, T fallback) {
    return value ? value : fallback;
}

SolutionSet run_dioph(const ecq_dioph_params& p) {
    const std::string id = p.equation;
    if (id == "catalan") return catalan_search(pick(p.bound, 1000L), p.exponent_bound);
    if (id == "lemma22") return lemma22_search(pick(p.prime_bound, 1000L), pick(p.exponent_bound, 20u));
    if (id == "lemma23") return lemma23_search(pick(p.exponent_bound, 12u), pick(p.bound, 10000L));
    if (id == "lemma24") return lemma24_search(pick(p.bound, 100L), pick(p.exponent_bound, 5u));
    if (id == "cor25") return cor25_filter(pick(p.bound, 100L), pick(p.exponent_bound, 5u));
    if (id == "mordell2000") return mordell_search(Int(2000), pick(p.bound, 10000L));
    if (id == "pell125") {
        const int sign = pick(p.sign, -4);
        const unsigned count = pick(p.count, 5u);
        SolutionSet s;
        s.equation_id = "pell125";
        s.variables = {"x", "y"};
        for (auto& [x, y] : pell_125(sign, count)) s.solutions.push_back({x, y});
        s.bounds = {{"sign", Int(sign)}, {"count", Int(count)}};
        return s;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown equation '" + id + "'");
}

}  // namespace

extern "C" {

ecq_status ecq_curve_new(int n, const char* s, const char* t, ecq_curve** out) {
    if (!s || !t || !out) return null_argument("s, t and out");
    *out = nullptr;
    return guarded([&] {
        check_order(n);
        const TateParameter param = TateParameter::make(n, parse_int(s), parse_int(t));
        auto* c = new ecq_curve{make_record(param), {}, {}};
        c->fields[ECQ_FIELD_INTEGRAL_MODEL] = to_string(c->record.integral_model);
        c->fields[ECQ_FIELD_MINIMAL_MODEL] = to_string(c->record.minimal_model);
        c->fields[ECQ_FIELD_DISC_MIN] = c->record.disc_min.to_string();
        c->fields[ECQ_FIELD_CONDUCTOR] = c->record.conductor.to_string();
        c->fields[ECQ_FIELD_SCALING] = c->record.scaling.get_str();
        for (const auto& d : c->record.locals) {
            c->local_strings.push_back(d.p.get_str());
            c->local_strings.push_back(d.kodaira.to_string());
        }
        *out = c;
    });
}

void ecq_curve_free(ecq_curve* curve) { delete curve; }

const char* ecq_curve_get(const ecq_curve* curve, ecq_curve_field field) {
    if (!curve || field < ECQ_FIELD_INTEGRAL_MODEL || field > ECQ_FIELD_SCALING) return nullptr;
    return curve->fields[field].c_str();
}

unsigned ecq_curve_torsion(const ecq_curve* curve) { return curve ? curve->record.torsion_verified : 0; }

double ecq_curve_szpiro_ratio(const ecq_curve* curve) { return curve ? curve->record.szpiro_ratio : 0.0; }

size_t ecq_curve_local_count(const ecq_curve* curve) { return curve ? curve->record.locals.size() : 0; }

ecq_status ecq_curve_local(const ecq_curve* curve, size_t index, ecq_local* out) {
    if (!curve || !out) return null_argument("curve and out");
    if (index >= curve->record.locals.size()) {
        last_error = "local index out of range";
        return ECQ_ERR_DOMAIN;
    }
    const LocalData& d = curve->record.locals[index];
    out->p = curve->local_strings[2 * index].c_str();
    out->kodaira = curve->local_strings[2 * index + 1].c_str();
    out->reduction = to_string(d.reduction);
    out->ord_disc = d.ord_disc;
    out->conductor_exponent = d.conductor_exponent;
    out->components = d.components;
    return ECQ_OK;
}

ecq_status ecq_curve_render(const ecq_curve* curve, ecq_format format, ecq_result** out) {
    if (!curve || !out) return null_argument("curve and out");
    *out = nullptr;
    return guarded([&] {
        const bool ok = curve->record.torsion_verified == static_cast<unsigned>(curve->record.param.order());
        *out = new ecq_result{render_curve(curve->record, format_of(format)), ok};
    });
}

const char* ecq_result_text(const ecq_result* result) { return result ? result->text.c_str() : ""; }

int ecq_result_passed(const ecq_result* result) { return result && result->passed ? 1 : 0; }

void ecq_result_free(ecq_result* result) { delete result; }

ecq_status ecq_enumerate(int n, long bound, ecq_mode mode, unsigned jobs, ecq_format format, ecq_result** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        check_order(n);
        const EnumerateOptions o = options_of(n, bound, mode, jobs);
        const auto records = enumerate(n, o);
        *out = new ecq_result{render_records("enumerate", n, bound, o.mode, records, format_of(format)), true};
    });
}

ecq_status ecq_verify(int n, long bound, ecq_mode mode, unsigned jobs, int report_discrepancies, ecq_format format,
                      ecq_result** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        check_order(n);
        const VerifyReport rep = verify_theorem(n, options_of(n, bound, mode, jobs));
        std::vector<Discrepancy> d;
        if (report_discrepancies) d = conductor_discrepancies();
        *out = new ecq_result{render_verify(rep, report_discrepancies ? &d : nullptr, format_of(format)), rep.passed()};
    });
}

ecq_status ecq_szpiro(int n, long bound, ecq_mode mode, unsigned jobs, unsigned exponent, ecq_format format,
                      ecq_result** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        check_order(n);
        const unsigned k = exponent ? exponent : theorem_table(n).szpiro_exponent;
        if (k == 0) throw Error(ErrorCode::InvalidArgument, "no stated Szpiro exponent for N=" + std::to_string(n) +
                                                                "; pass one explicitly");
        const auto records = enumerate(n, options_of(n, bound, mode, jobs));
        const SzpiroReport rep = szpiro_check(records, k);
        *out = new ecq_result{render_szpiro(n, bound, records, rep, format_of(format)), rep.passed};
    });
}

ecq_status ecq_dioph(const ecq_dioph_params* params, ecq_format format, ecq_result** out) {
    if (!params || !params->equation || !out) return null_argument("params, params->equation and out");
    *out = nullptr;
    return guarded([&] { *out = new ecq_result{render_solutions(run_dioph(*params), format_of(format)), true}; });
}

const char* ecq_equation_ids(void) {
    static const std::string joined = [] {
        std::string s;
        for (const auto& id : equation_ids()) s += id + "\n";
        return s;
    }();
    return joined.c_str();
}

const char* ecq_last_error(void) { return last_error.c_str(); }

const char* ecq_status_name(ecq_status status) {
    switch (status) {
        case ECQ_OK: return "ok";
        case ECQ_ERR_ZERO_INPUT: return "zero-input";
        case ECQ_ERR_DOMAIN: return "domain-error";
        case ECQ_ERR_SINGULAR: return "singular-curve";
        case ECQ_ERR_DEGENERATE: return "degenerate-parameter";
        case ECQ_ERR_NOT_ON_CURVE: return "point-not-on-curve";
        case ECQ_ERR_NO_SOLUTION: return "no-solution";
        case ECQ_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case ECQ_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* ecq_version(void) { return "1.0.0"; }

}  // extern "C"
