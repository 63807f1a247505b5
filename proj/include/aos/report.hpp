#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "aos/catalog.hpp"

namespace aos {

inline constexpr const char* kArtifactVersion = "1.0";

// Report body for one case. Every number is finite; a non-finite value is
// written as null and counted as a failure by the caller.
nlohmann::json report_json(const CaseReport& r);

// Inequality rows shared by the CSV and markdown projections.
struct InequalityRow {
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double budget = 0.0;
    Status status = Status::pass;
};
std::vector<InequalityRow> inequality_rows(const CaseReport& r);

// Full document: {"artifact_version", "report" | "reports", "timings"}.
nlohmann::json report_document(const std::vector<CaseReport>& reports, const std::vector<double>& timings_ms,
                               bool single);

std::string report_csv(const std::vector<CaseReport>& reports);
std::string report_markdown(const std::vector<CaseReport>& reports);

// Gram dump: m, n, re, im, provenance, discrepancy (1-based, m then n ascending).
std::string gram_csv(const GramMatrix& g);

// One line: "<id> N=<N> C=<C> status=<status> findings=<k>".
std::string summary_line(const CaseReport& r);

}  // namespace aos
