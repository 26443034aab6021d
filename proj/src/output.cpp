#include "output.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ecq {

namespace {

std::string str(const Int& n) { return n.get_str(); }

Json tuple_json(const IntTuple& t) {
    Json a = Json::array();
    for (const auto& v : t) a.push_back(str(v));
    return a;
}

std::string tuple_text(const IntTuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + str(t[i]);
    return s + ")";
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line + "\n";
}

std::string markdown(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::string out = "| ";
    for (const auto& h : header) out += h + " | ";
    out.pop_back();
    out += "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& r : rows) {
        out += "| ";
        for (const auto& c : r) out += c + " | ";
        out.pop_back();
        out += "\n";
    }
    return out;
}

std::string locals_text(const CurveRecord& r) {
    std::string out;
    for (const auto& d : r.locals) {
        out += "  p=" + str(d.p) + "  ord(disc)=" + std::to_string(d.ord_disc) + "  " + d.kodaira.to_string() +
               "  f=" + std::to_string(d.conductor_exponent) + "  m=" + std::to_string(d.components) + "  " +
               to_string(d.reduction) + "\n";
    }
    return out;
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "csv") return Format::Csv;
    if (s == "json-lines") return Format::JsonLines;
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + s + "' (expected table, csv or json-lines)");
}

Json to_json(const Factorization& f) {
    Json factors = Json::array();
    for (const auto& pp : f.factors()) factors.push_back({str(pp.prime), pp.exponent});
    return {{"value", str(f.value())}, {"sign", f.sign()}, {"factors", factors}, {"text", f.to_string()}};
}

Json to_json(const WeierstrassModel& m) {
    Json a = Json::array();
    for (const auto& c : m.coefficients()) a.push_back(str(c));
    return a;
}

Json to_json(const LocalData& d) {
    return {{"p", str(d.p)},
            {"ord_disc", d.ord_disc},
            {"kodaira", d.kodaira.to_string()},
            {"f", d.conductor_exponent},
            {"m", d.components},
            {"reduction", to_string(d.reduction)}};
}

Json to_json(const CurveRecord& r) {
    Json locals = Json::array();
    for (const auto& d : r.locals) locals.push_back(to_json(d));
    const Invariants inv = invariants(r.minimal_model);
    return {{"N", r.param.order()},
            {"s", str(r.param.s())},
            {"t", str(r.param.t())},
            {"integral_model", to_json(r.integral_model)},
            {"minimal_model", to_json(r.minimal_model)},
            {"scaling", str(r.scaling)},
            {"c4", str(inv.c4)},
            {"c6", str(inv.c6)},
            {"j", inv.j ? inv.j->get_str() : ""},
            {"disc_min", to_json(r.disc_min)},
            {"conductor", to_json(r.conductor)},
            {"locals", locals},
            {"szpiro_ratio", format_ratio(r.szpiro_ratio)},
            {"torsion", r.torsion_verified}};
}

Json to_json(const SolutionSet& s) {
    Json sols = Json::array(), flagged = Json::array(), rejected = Json::array(), fams = Json::array(),
         bounds = Json::object();
    for (const auto& t : s.solutions) sols.push_back(tuple_json(t));
    for (const auto& t : s.flagged) flagged.push_back(tuple_json(t));
    for (const auto& r : s.rejected) rejected.push_back({{"tuple", tuple_json(r.tuple)}, {"reason", r.reason}});
    for (const auto& f : s.families) fams.push_back({{"parameter", f.parameter}, {"tuple", f.tuple}, {"range", f.range}});
    for (const auto& b : s.bounds) bounds[b.name] = str(b.value);
    return {{"equation", s.equation_id}, {"variables", s.variables}, {"solutions", sols}, {"families", fams},
            {"flagged", flagged},        {"rejected", rejected},     {"bounds", bounds}};
}

Json to_json(const Discrepancy& d) {
    return {{"N", d.order},
            {"s", str(d.param.s())},
            {"t", str(d.param.t())},
            {"disc_min", d.disc_min.to_string()},
            {"claimed_conductor", d.claimed_conductor},
            {"computed_conductor", d.computed_conductor.to_string()},
            {"support_matches", d.support_matches},
            {"exponents_match", d.exponents_match}};
}

Json to_json(const SzpiroReport& r, const std::vector<CurveRecord>& records) {
    Json failures = Json::array();
    for (auto i : r.failures) failures.push_back(to_json(records[i]));
    return {{"exponent", r.exponent}, {"passed", r.passed}, {"max_ratio", format_ratio(r.max_ratio)},
            {"failures", failures}};
}

Json to_json(const VerifyReport& r) {
    Json matched = Json::array(), unwitnessed = Json::array(), families = Json::array(), violations = Json::array();
    for (const auto& e : r.expected) (e.matched ? matched : unwitnessed).push_back(e.disc.to_string());
    for (const auto& [i, m] : r.family_matches)
        families.push_back({{"disc_min", r.records[i].disc_min.to_string()}, {"family", m.family}, {"open", m.open}});
    for (auto i : r.violations) violations.push_back(to_json(r.records[i]));
    Json out = {{"N", r.order},
                {"bound", r.bound},
                {"mode", to_string(r.mode)},
                {"curves", r.records.size()},
                {"expected", r.expected.size()},
                {"matched", matched},
                {"unwitnessed", unwitnessed},
                {"family_matches", families},
                {"violations", violations},
                {"open_family_members", r.has_open_family_members()},
                {"passed", r.passed()}};
    if (r.szpiro.exponent) out["szpiro"] = to_json(r.szpiro, r.records);
    return out;
}

std::string envelope(const std::string& command, const Json& payload) {
    Json e = {{"schema_version", kSchemaVersion}, {"command", command}, {"payload", payload}};
    return e.dump() + "\n";
}

Factorization parse_factorization(const std::string& text) {
    std::string body = text;
    int sign = 1;
    if (!body.empty() && body[0] == '-') {
        sign = -1;
        body.erase(0, 1);
    }
    std::vector<PrimePower> factors;
    if (body == "1") return Factorization(sign, {});
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, '*')) {
        const auto caret = item.find('^');
        const Int p = parse_int(item.substr(0, caret));
        unsigned e = 1;
        if (caret != std::string::npos) {
            const Int ee = parse_int(item.substr(caret + 1));
            if (ee < 1 || !ee.fits_uint_p()) throw Error(ErrorCode::InvalidArgument, "bad exponent in '" + text + "'");
            e = static_cast<unsigned>(ee.get_ui());
        }
        factors.push_back({p, e});
    }
    return Factorization(sign, std::move(factors));
}

std::string format_ratio(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r);
    return buf;
}

const std::vector<std::string> kCsvColumns = {"N",  "s",        "t",         "a1",           "a2",     "a3",
                                              "a4", "a6",       "disc_min",  "conductor",    "szpiro_ratio", "torsion"};

std::vector<std::string> csv_row(const CurveRecord& r) {
    std::vector<std::string> row = {std::to_string(r.param.order()), str(r.param.s()), str(r.param.t())};
    for (const auto& c : r.minimal_model.coefficients()) row.push_back(str(c));
    row.push_back(r.disc_min.to_string());
    row.push_back(r.conductor.to_string());
    row.push_back(format_ratio(r.szpiro_ratio));
    row.push_back(std::to_string(r.torsion_verified));
    return row;
}

std::string render_curve(const CurveRecord& r, Format fmt) {
    if (fmt == Format::JsonLines) return envelope("curve", to_json(r));
    if (fmt == Format::Csv) return csv_line(kCsvColumns) + csv_line(csv_row(r));

    const Invariants inv = invariants(r.integral_model);
    std::string out;
    out += "N=" + std::to_string(r.param.order()) + " s=" + str(r.param.s()) + " t=" + str(r.param.t()) + "\n";
    out += "integral model: " + to_string(r.integral_model) + "\n";
    out += "  b2=" + str(inv.b2) + " b4=" + str(inv.b4) + " b6=" + str(inv.b6) + " b8=" + str(inv.b8) + "\n";
    out += "  c4=" + str(inv.c4) + " c6=" + str(inv.c6) + " disc=" + str(inv.disc) + "\n";
    out += "  j=" + (inv.j ? inv.j->get_str() : std::string("undefined")) + "\n";
    out += "minimal model: " + to_string(r.minimal_model) + "  (u=" + str(r.scaling) + ")\n";
    out += "disc_min: " + r.disc_min.to_string() + " = " + str(r.disc_min.value()) + "\n";
    out += "local data:\n" + locals_text(r);
    out += "conductor: " + r.conductor.to_string() + " = " + str(r.conductor.value()) + "\n";
    out += "szpiro ratio: " + format_ratio(r.szpiro_ratio) + "\n";
    out += "torsion: order of (0,0) = " + std::to_string(r.torsion_verified) +
           (r.torsion_verified == static_cast<unsigned>(r.param.order()) ? " (ok)" : " (MISMATCH)") + "\n";
    return out;
}

std::string render_records(const std::string& command, int order, long bound, ConductorMode mode,
                           const std::vector<CurveRecord>& records, Format fmt) {
    if (fmt == Format::JsonLines) {
        Json list = Json::array();
        for (const auto& r : records) list.push_back(to_json(r));
        return envelope(command, {{"N", order}, {"bound", bound}, {"mode", to_string(mode)}, {"records", list}});
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : records) rows.push_back(csv_row(r));
    if (fmt == Format::Csv) {
        std::string out = csv_line(kCsvColumns);
        for (const auto& row : rows) out += csv_line(row);
        return out;
    }
    return markdown(kCsvColumns, rows) + std::to_string(records.size()) + " curves\n";
}

std::string render_verify(const VerifyReport& r, const std::vector<Discrepancy>* discrepancies, Format fmt) {
    if (fmt == Format::JsonLines) {
        Json payload = to_json(r);
        if (discrepancies) {
            Json d = Json::array();
            for (const auto& x : *discrepancies) d.push_back(to_json(x));
            payload["discrepancies"] = d;
        }
        return envelope("verify", payload);
    }
    if (fmt == Format::Csv) return render_records("verify", r.order, r.bound, r.mode, r.records, fmt);

    std::string out;
    out += "N=" + std::to_string(r.order) + " bound=" + std::to_string(r.bound) + " mode=" + to_string(r.mode) + "\n";
    out += std::to_string(r.records.size()) + " curves (expected " + std::to_string(r.expected.size()) +
           (theorem_table(r.order).families.empty() ? "" : " + families") + ")\n";
    for (const auto& e : r.expected)
        out += std::string(e.matched ? "  matched      " : "  unwitnessed  ") + e.disc.to_string() + "\n";
    for (const auto& [i, m] : r.family_matches)
        out += std::string(m.open ? "  open family  " : "  family       ") + r.records[i].disc_min.to_string() +
               "  [" + m.family + "]  s=" + str(r.records[i].param.s()) + " t=" + str(r.records[i].param.t()) + "\n";
    for (auto i : r.violations)
        out += "  VIOLATION    " + r.records[i].disc_min.to_string() + "  conductor " +
               r.records[i].conductor.to_string() + "  s=" + str(r.records[i].param.s()) +
               " t=" + str(r.records[i].param.t()) + "  model " + to_string(r.records[i].minimal_model) + "\n";
    if (r.szpiro.exponent)
        out += "szpiro: |disc| < N^" + std::to_string(r.szpiro.exponent) + (r.szpiro.passed ? " holds" : " FAILS") +
               ", max ratio " + format_ratio(r.szpiro.max_ratio) + "\n";
    if (r.has_open_family_members()) out += "note: open-family members present (completeness not certified)\n";
    if (discrepancies) {
        for (const auto& d : *discrepancies)
            out += "warning: N=" + std::to_string(d.order) + " curve " + d.disc_min.to_string() + ": claimed conductor " +
                   d.claimed_conductor + ", computed " + d.computed_conductor.to_string() + " = " +
                   str(d.computed_conductor.value()) + (d.support_matches ? " (same primes" : " (different primes") +
                   (d.exponents_match ? ", same exponents)" : ", exponents differ)") + "\n";
    }
    out += std::string(r.passed() ? "PASS" : "FAIL") + ": " + std::to_string(r.violations.size()) + " violations\n";
    return out;
}

std::string render_szpiro(int order, long bound, const std::vector<CurveRecord>& records, const SzpiroReport& rep,
                          Format fmt) {
    if (fmt == Format::JsonLines) {
        Json payload = {{"N", order}, {"bound", bound}, {"curves", records.size()}};
        payload["report"] = to_json(rep, records);
        return envelope("szpiro", payload);
    }
    if (fmt == Format::Csv) {
        std::string out = csv_line({"N", "s", "t", "disc_min", "conductor", "szpiro_ratio", "below_bound"});
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& r = records[i];
            const bool bad = std::find(rep.failures.begin(), rep.failures.end(), i) != rep.failures.end();
            out += csv_line({std::to_string(order), str(r.param.s()), str(r.param.t()), r.disc_min.to_string(),
                             r.conductor.to_string(), format_ratio(r.szpiro_ratio), bad ? "false" : "true"});
        }
        return out;
    }
    std::string out = "N=" + std::to_string(order) + " bound=" + std::to_string(bound) + ": " +
                      std::to_string(records.size()) + " curves, max ratio " + format_ratio(rep.max_ratio) + "\n";
    for (auto i : rep.failures)
        out += "  exceeds: " + records[i].disc_min.to_string() + " vs conductor " + records[i].conductor.to_string() + "\n";
    out += std::string(rep.passed ? "PASS" : "FAIL") + ": |disc_min| < N^" + std::to_string(rep.exponent) + "\n";
    return out;
}

std::string render_solutions(const SolutionSet& s, Format fmt) {
    if (fmt == Format::JsonLines) return envelope("dioph", to_json(s));
    if (fmt == Format::Csv) {
        std::vector<std::string> header = {"kind"};
        header.insert(header.end(), s.variables.begin(), s.variables.end());
        header.push_back("note");
        std::string out = csv_line(header);
        auto rows = [&](const char* kind, const IntTuple& t, const std::string& note) {
            std::vector<std::string> row = {kind};
            for (const auto& v : t) row.push_back(str(v));
            row.push_back(note);
            out += csv_line(row);
        };
        for (const auto& t : s.solutions) rows("solution", t, "");
        for (const auto& t : s.flagged) rows("flagged", t, "open family");
        for (const auto& r : s.rejected) rows("rejected", r.tuple, r.reason);
        return out;
    }
    std::string out = s.equation_id + " (";
    for (std::size_t i = 0; i < s.variables.size(); ++i) out += (i ? "," : "") + s.variables[i];
    out += ")\nbounds:";
    for (const auto& b : s.bounds) out += " " + b.name + "=" + str(b.value);
    out += "\n" + std::to_string(s.solutions.size()) + " solutions\n";
    for (const auto& t : s.solutions) out += "  " + tuple_text(t) + "\n";
    for (const auto& f : s.families) {
        out += "family " + f.parameter + " -> (";
        for (std::size_t i = 0; i < f.tuple.size(); ++i) out += (i ? "," : "") + f.tuple[i];
        out += "), " + f.range + "\n";
    }
    for (const auto& t : s.flagged) out += "  flagged " + tuple_text(t) + "  (open family)\n";
    for (const auto& r : s.rejected) out += "  rejected " + tuple_text(r.tuple) + ": " + r.reason + "\n";
    return out;
}

}  // namespace ecq
