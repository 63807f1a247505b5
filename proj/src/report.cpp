#include "aos/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace aos {

namespace {

using nlohmann::json;

json num(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

json num_list(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}

json status_json(Status s) { return to_string(s); }

InequalityRow row(std::string check, double lhs, double rhs, double budget, bool advisory) {
    InequalityRow r;
    r.check = std::move(check);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.budget = budget;
    if (advisory)
        r.status = Status::advisory;
    else
        r.status = r.margin >= -r.budget ? Status::pass : Status::fail;
    return r;
}

}  // namespace

std::vector<InequalityRow> inequality_rows(const CaseReport& r) {
    std::vector<InequalityRow> rows;
    const bool uncertified = !r.schur.certified;
    const double C = r.schur.upper();
    {
        InequalityRow b;
        b.check = "bessel";
        b.lhs = r.bessel.lhs_partial;
        b.rhs = r.bessel.rhs;
        b.margin = r.bessel.margin;
        b.budget = r.bessel.budget;
        b.status = r.bessel_status;
        rows.push_back(b);
    }
    rows.push_back(row("norm-chain-operator", r.norm_chain.operator_norm, r.norm_chain.geometric_mean,
                       1e-12 * r.norm_chain.geometric_mean, uncertified));
    rows.push_back(row("norm-chain-schur", r.norm_chain.geometric_mean, C, 1e-9 * C, uncertified));
    rows.push_back(row("positivity", 0.0, r.positivity.min_eigenvalue, 1e-9 * (std::isfinite(C) ? C : 1.0), false));
    rows.push_back(row("riesz-fischer-e1", r.riesz_fischer.e1.residual, r.riesz_fischer.e1.bound,
                       1e-12 * r.riesz_fischer.e1.bound + 1e-12, uncertified));
    if (r.display.evaluated) {
        rows.push_back(row("display", r.display.display_lhs, r.display.display_rhs, 0.0, true));
        if (!r.display.alt_label.empty())
            rows.push_back(row("display-alt", r.display.display_lhs, r.display.alt_rhs, 0.0, true));
    }
    return rows;
}

json report_json(const CaseReport& r) {
    json j;
    j["case"] = r.id;
    j["summary"] = r.summary;
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = num(v);
    j["parameters"] = params;
    j["N"] = r.N;
    j["seed"] = r.seed;
    j["measure"] = r.measure;
    j["family"] = r.family;
    j["schedule"] = r.schedule;
    j["lambdas"] = num_list(r.lambdas);
    j["status"] = status_json(r.status);

    j["schur"] = {{"finite_sup", num(r.schur.finite_sup)},
                  {"finite_col_sup", num(r.schur.finite_col_sup)},
                  {"tail_bound", num(r.schur.tail_bound)},
                  {"C", num(r.schur.upper())},
                  {"certified", r.schur.certified},
                  {"achieved_at_row", r.schur.achieved_at_row}};

    json ineq = json::array();
    for (const auto& x : inequality_rows(r))
        ineq.push_back({{"check", x.check},
                        {"lhs", num(x.lhs)},
                        {"rhs", num(x.rhs)},
                        {"margin", num(x.margin)},
                        {"budget", num(x.budget)},
                        {"status", status_json(x.status)}});
    j["inequalities"] = ineq;

    j["gram"] = {{"hermitian_defect", num(r.gram.hermitian_defect)},
                 {"diagonal_defect", num(r.gram.diagonal_defect)},
                 {"max_discrepancy_low", num(r.gram.max_discrepancy_low)},
                 {"max_discrepancy_high", num(r.gram.max_discrepancy_high)},
                 {"real", r.gram.real},
                 {"status", status_json(r.gram.status)}};
    j["norm_chain"] = {{"operator_norm", num(r.norm_chain.operator_norm)},
                       {"converged", r.norm_chain.converged},
                       {"row_sup", num(r.norm_chain.row_sup)},
                       {"col_sup", num(r.norm_chain.col_sup)},
                       {"geometric_mean", num(r.norm_chain.geometric_mean)},
                       {"status", status_json(r.norm_chain.status)}};
    j["positivity"] = {{"min_eigenvalue", num(r.positivity.min_eigenvalue)},
                       {"min_quadratic_re", num(r.positivity.min_quadratic_re)},
                       {"max_quadratic_im", num(r.positivity.max_quadratic_im)},
                       {"samples", r.positivity.samples},
                       {"status", status_json(r.positivity.status)}};
    j["bessel"] = {{"lhs_partial", num(r.bessel.lhs_partial)},
                   {"rhs", num(r.bessel.rhs)},
                   {"margin", num(r.bessel.margin)},
                   {"budget", num(r.bessel.budget)},
                   {"C_used", num(r.bessel.C_used)},
                   {"norm_sq", num(r.bessel.norm_sq)},
                   {"certified", r.bessel.certified},
                   {"partial_sums", num_list(r.bessel.partial_sums)},
                   {"status", status_json(r.bessel_status)}};
    const auto& rf = r.riesz_fischer;
    j["riesz_fischer"] = {{"e1_residual", num(rf.e1.residual)},
                          {"e1_bound", num(rf.e1.bound)},
                          {"e1_cauchy_defect", num(rf.e1.cauchy_defect)},
                          {"e1_cauchy_bound", num(rf.e1.cauchy_bound)},
                          {"samples", rf.samples},
                          {"max_ratio", num(rf.max_ratio)},
                          {"failures", rf.failures},
                          {"cauchy_failures", rf.cauchy_failures},
                          {"status", status_json(rf.status)}};
    j["compactness"] = {{"N_list", r.compactness.N_list},
                        {"hs_partial", num_list(r.compactness.hs_partial)},
                        {"row_tail_sup", num_list(r.compactness.row_tail_sup)},
                        {"col_tail_sup", num_list(r.compactness.col_tail_sup)},
                        {"window_factor", r.compactness.window_factor}};
    j["oracle"] = {{"max_coefficient_discrepancy", num(r.oracle.max_coefficient_discrepancy)},
                   {"norm_numeric", num(r.oracle.norm_numeric)},
                   {"norm_closed", num(r.oracle.norm_closed)},
                   {"norm_discrepancy", num(r.oracle.norm_discrepancy)},
                   {"has_closed_coefficient", r.oracle.has_closed_coefficient},
                   {"has_closed_norm", r.oracle.has_closed_norm},
                   {"status", status_json(r.oracle.status)}};
    json ids = json::array();
    for (const auto& id : r.identities)
        ids.push_back({{"name", id.name},
                       {"lhs", num(id.lhs)},
                       {"rhs", num(id.rhs)},
                       {"difference", num(id.difference)},
                       {"tolerance", num(id.tolerance)},
                       {"status", status_json(id.status)},
                       {"detail", id.detail}});
    j["identities"] = ids;
    const auto& d = r.display;
    j["display_audit"] = {{"evaluated", d.evaluated},
                          {"relation", d.relation},
                          {"display_lhs", num(d.display_lhs)},
                          {"display_rhs", num(d.display_rhs)},
                          {"framework_rhs", num(d.framework_rhs)},
                          {"ratio", num(d.ratio)},
                          {"lhs_consistent", d.lhs_consistent},
                          {"holds", d.holds},
                          {"alt_label", d.alt_label},
                          {"alt_rhs", num(d.alt_rhs)},
                          {"alt_ratio", num(d.alt_ratio)},
                          {"alt_holds", d.alt_holds},
                          {"note", d.note},
                          {"coefficient_discrepancy", num(r.display_coefficient_discrepancy)},
                          {"coefficient_matches", r.display_coefficient_matches},
                          {"norm_discrepancy", num(r.display_norm_discrepancy)},
                          {"norm_matches", r.display_norm_matches}};
    j["findings"] = r.findings;
    j["errors"] = r.errors;
    return j;
}

json report_document(const std::vector<CaseReport>& reports, const std::vector<double>& timings_ms, bool single) {
    json doc;
    doc["artifact_version"] = kArtifactVersion;
    json t = json::object();
    for (std::size_t i = 0; i < reports.size() && i < timings_ms.size(); ++i) t[reports[i].id] = timings_ms[i];
    if (single && reports.size() == 1) {
        doc["report"] = report_json(reports[0]);
    } else {
        json a = json::array();
        for (const auto& r : reports) a.push_back(report_json(r));
        doc["reports"] = a;
    }
    doc["timings"] = t;
    return doc;
}

namespace {

std::string g17(double v) {
    if (!std::isfinite(v)) return "nan";
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

std::string report_csv(const std::vector<CaseReport>& reports) {
    std::ostringstream os;
    os << "case,N,check,lhs,rhs,margin,budget,status\n";
    for (const auto& r : reports)
        for (const auto& x : inequality_rows(r))
            os << r.id << ',' << r.N << ',' << x.check << ',' << g17(x.lhs) << ',' << g17(x.rhs) << ','
               << g17(x.margin) << ',' << g17(x.budget) << ',' << to_string(x.status) << '\n';
    return os.str();
}

std::string report_markdown(const std::vector<CaseReport>& reports) {
    std::ostringstream os;
    os << "| case | N | C | certified | check | lhs | rhs | margin | status |\n";
    os << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports)
        for (const auto& x : inequality_rows(r))
            os << "| " << r.id << " | " << r.N << " | " << std::setprecision(10) << r.schur.upper() << " | "
               << (r.schur.certified ? "yes" : "no") << " | " << x.check << " | " << std::setprecision(6) << x.lhs
               << " | " << x.rhs << " | " << x.margin << " | " << to_string(x.status) << " |\n";
    bool any = false;
    for (const auto& r : reports)
        for (const auto& f : r.findings) {
            if (!any) os << "\nFindings:\n\n";
            any = true;
            os << "- " << r.id << ": " << f << '\n';
        }
    for (const auto& r : reports)
        for (const auto& e : r.errors) os << "- " << r.id << " error: " << e << '\n';
    return os.str();
}

std::string gram_csv(const GramMatrix& g) {
    std::ostringstream os;
    os << "m,n,re,im,provenance,discrepancy\n";
    for (int m = 0; m < g.N; ++m)
        for (int n = 0; n < g.N; ++n) {
            const std::size_t i = static_cast<std::size_t>(m) * g.N + n;
            os << m + 1 << ',' << n + 1 << ',' << g17(g.a[i].real()) << ',' << g17(g.a[i].imag()) << ','
               << to_string(g.provenance[i]) << ',' << (g.discrepancy.empty() ? std::string("") : g17(g.discrepancy[i]))
               << '\n';
        }
    return os.str();
}

std::string summary_line(const CaseReport& r) {
    std::ostringstream os;
    os << r.id << " N=" << r.N << " C=" << std::setprecision(10) << r.schur.upper()
       << " status=" << to_string(r.status) << " findings=" << r.findings.size();
    if (!r.errors.empty()) os << " errors=" << r.errors.size();
    return os.str();
}

}  // namespace aos
