#pragma once

// Rendering of records, reports and solution sets as markdown tables, CSV
// and single-line JSON envelopes. Big integers are always decimal strings.

#include <json.hpp>

#include <string>
#include <vector>

#include "classify.hpp"
#include "dioph.hpp"

namespace ecq {

enum class Format { Table, Csv, JsonLines };

Format parse_format(const std::string& s);

inline constexpr const char* kSchemaVersion = "1";

using Json = nlohmann::ordered_json;

Json to_json(const Factorization& f);
Json to_json(const WeierstrassModel& m);
Json to_json(const LocalData& d);
Json to_json(const CurveRecord& r);
Json to_json(const SolutionSet& s);
Json to_json(const VerifyReport& r);
Json to_json(const SzpiroReport& r, const std::vector<CurveRecord>& records);
Json to_json(const Discrepancy& d);

/// {"schema_version":..,"command":..,"payload":..} on one line, newline-terminated.
std::string envelope(const std::string& command, const Json& payload);

/// Inverse of Factorization::to_string.
Factorization parse_factorization(const std::string& text);

std::string format_ratio(double r);

extern const std::vector<std::string> kCsvColumns;
std::vector<std::string> csv_row(const CurveRecord& r);

std::string render_curve(const CurveRecord& r, Format fmt);
std::string render_records(const std::string& command, int order, long bound, ConductorMode mode,
                           const std::vector<CurveRecord>& records, Format fmt);
std::string render_verify(const VerifyReport& r, const std::vector<Discrepancy>* discrepancies, Format fmt);
std::string render_szpiro(int order, long bound, const std::vector<CurveRecord>& records, const SzpiroReport& rep,
                          Format fmt);
std::string render_solutions(const SolutionSet& s, Format fmt);

}  // namespace ecq
