// ecq: command-line front end over the C API.
// Exit codes: 0 ok, 1 verification failure, 2 usage or precondition error,
// 3 internal error.

#include <ecq/ecq.h>

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

const std::map<std::string, ecq_format> kFormats = {
    {"table", ECQ_FORMAT_TABLE}, {"csv", ECQ_FORMAT_CSV}, {"json-lines", ECQ_FORMAT_JSON_LINES}};
const std::map<std::string, ecq_mode> kModes = {
    {"default", ECQ_MODE_DEFAULT}, {"squarefree", ECQ_MODE_SQUAREFREE}, {"prime-power", ECQ_MODE_PRIME_POWER}};

int finish(ecq_status st, ecq_result*& res) {
    if (st != ECQ_OK) {
        std::fprintf(stderr, "error: %s\n", ecq_last_error());
        return st == ECQ_ERR_INTERNAL ? kExitInternal : kExitUsage;
    }
    std::fputs(ecq_result_text(res), stdout);
    const int code = ecq_result_passed(res) ? kExitOk : kExitFailed;
    ecq_result_free(res);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elliptic curves with a rational N-torsion point and two-prime conductor"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ecq_version()));

    std::string format = "table";
    std::string mode = "default";
    unsigned jobs = 1;
    int n = 0;
    long bound = 100;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "table, csv or json-lines")
            ->check(CLI::IsMember({"table", "csv", "json-lines"}));
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--n", n, "torsion order (4..10, 12)")->required();
        sub->add_option("--bound", bound, "height bound on |s|, t")->capture_default_str();
        sub->add_option("--mode", mode, "conductor shape: default, squarefree, prime-power")
            ->check(CLI::IsMember({"default", "squarefree", "prime-power"}));
        sub->add_option("--jobs", jobs, "worker threads")->envname("ECQ_JOBS")->check(CLI::Range(1u, 1024u));
        add_format(sub);
    };

    std::string s_text, t_text;
    auto* curve = app.add_subcommand("curve", "full data for one parameter (N, s, t)");
    curve->add_option("--n", n, "torsion order")->required();
    curve->add_option("--s", s_text, "numerator of lambda")->required();
    curve->add_option("--t", t_text, "denominator of lambda")->required();
    add_format(curve);

    auto* enumerate = app.add_subcommand("enumerate", "curves with two-prime conductor on the (s, t) grid");
    add_grid(enumerate);

    bool discrepancies = false;
    auto* verify = app.add_subcommand("verify", "compare the enumeration with the expected discriminant list");
    add_grid(verify);
    verify->add_flag("--report-discrepancies", discrepancies, "recompute the stated conductor exponents");

    unsigned exponent = 0;
    auto* szpiro = app.add_subcommand("szpiro", "check |disc_min| < N^K over the enumeration");
    add_grid(szpiro);
    szpiro->add_option("--exponent", exponent, "K (default: the bound stated for N)");

    ecq_dioph_params dp{};
    std::string equation;
    unsigned mbound = 0, hbound = 0, lbound = 0, max_exp = 0;
    auto* dioph = app.add_subcommand("dioph", "bounded solver for one Diophantine equation");
    dioph->add_option("--eq", equation, "catalan, lemma22, lemma23, lemma24, cor25, pell125, mordell2000")
        ->required()
        ->check(CLI::IsMember({"catalan", "lemma22", "lemma23", "lemma24", "cor25", "pell125", "mordell2000"}));
    dioph->add_option("--bound", dp.bound, "variable bound");
    dioph->add_option("--pbound", dp.prime_bound, "prime bound (lemma22)");
    dioph->add_option("--mbound", mbound, "exponent bound m (lemma22)");
    dioph->add_option("--hbound", hbound, "bound on h (lemma23)");
    dioph->add_option("--lbound", lbound, "exponent bound l (lemma24, cor25)");
    dioph->add_option("--max-exp", max_exp, "exponent bound (catalan)");
    dioph->add_option("--sign", dp.sign, "right-hand side +4 or -4 (pell125)");
    dioph->add_option("--count", dp.count, "number of solutions (pell125)");
    add_format(dioph);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const ecq_format fmt = kFormats.at(format);
    const ecq_mode md = kModes.at(mode);
    ecq_result* res = nullptr;

    if (*curve) {
        ecq_curve* c = nullptr;
        ecq_status st = ecq_curve_new(n, s_text.c_str(), t_text.c_str(), &c);
        if (st == ECQ_OK) st = ecq_curve_render(c, fmt, &res);
        ecq_curve_free(c);
        return finish(st, res);
    }
    ecq_status st = ECQ_OK;
    if (*enumerate) {
        st = ecq_enumerate(n, bound, md, jobs, fmt, &res);
        return finish(st, res);
    }
    if (*verify) {
        st = ecq_verify(n, bound, md, jobs, discrepancies ? 1 : 0, fmt, &res);
        return finish(st, res);
    }
    if (*szpiro) {
        st = ecq_szpiro(n, bound, md, jobs, exponent, fmt, &res);
        return finish(st, res);
    }

    dp.equation = equation.c_str();
    if (equation == "lemma22") dp.exponent_bound = mbound;
    if (equation == "lemma23") dp.exponent_bound = hbound;
    if (equation == "lemma24" || equation == "cor25") dp.exponent_bound = lbound;
    if (equation == "catalan") dp.exponent_bound = max_exp;
    st = ecq_dioph(&dp, fmt, &res);
    return finish(st, res);
}
