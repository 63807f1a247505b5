#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aos/operator.hpp"
#include "aos/spaces.hpp"
#include "aos/types.hpp"

namespace aos {

struct CaseSummary {
    std::string id;
    std::string summary;
};

// Sorted by id.
std::vector<CaseSummary> list_cases();

// The inequality as the source displays it, rewritten in terms of the
// framework quantities so both can be evaluated side by side.
struct DisplayForm {
    // Displayed left-hand summand at (n, lambda_n).
    std::function<double(int, double)> summand;
    // summand = kappa |f_n|^2 when the display uses the true coefficient.
    double kappa = 1.0;
    // Displayed right-hand side as a function of the raw sup-sum S, where
    // S = normalizer * C (the Gram entries without their normalization).
    std::function<double(double)> rhs;
    double normalizer = 1.0;
    // A second reading of the right-hand side where the display is ambiguous.
    std::function<double(double)> rhs_alt;
    std::string alt_label;
    std::string relation = "<=";  // as displayed; "=" is audited as "<="
};

struct CaseInstance {
    std::string id;
    std::string summary;
    std::map<std::string, double> params;  // resolved, including defaults
    WeightedMeasure space;
    SequenceFamily family;
    TestFunction f;  // closed_coefficient and closed_norm_sq are the verified forms
    // Coefficient and norm exactly as displayed, when they differ from the verified forms.
    std::function<cplx(double, int)> display_coefficient;
    std::optional<double> display_norm_sq;
    std::optional<DisplayForm> display;
    // Certified upper bound on C for a truncation of size N.
    SchurTailSupplier c_upper;
    // Relative tolerance for closed-vs-numeric agreement of coefficients and norm.
    double oracle_tol = 1e-8;
    // Warnings raised while instantiating (e.g. a displayed value that is not real).
    std::vector<std::string> notes;
};

using Overrides = std::map<std::string, std::string>;

CaseInstance instantiate(const std::string& id, const Overrides& overrides = {});

// The verified closed-form coefficient (f, phi_n) for the case's registered
// function; unsupported when f_id is not registered or has no closed form.
cplx closed_coefficient(const CaseInstance& c, const std::string& f_id, int n);

enum class Status { pass, fail, advisory };
const char* to_string(Status s);

struct IdentityResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double difference = 0.0;
    double tolerance = 0.0;
    Status status = Status::pass;
    std::string detail;
};

struct DisplayAudit {
    bool evaluated = false;
    std::string relation;
    double display_lhs = 0.0;     // sum_{n<=N} of the displayed summand
    double display_rhs = 0.0;     // displayed right-hand side with the certified C
    double framework_rhs = 0.0;   // kappa * C * ||f||^2
    double ratio = 0.0;           // display_rhs / framework_rhs
    bool lhs_consistent = false;  // displayed summand equals kappa |f_n|^2 within 1e-6
    bool holds = false;           // display_lhs <= display_rhs
    double alt_rhs = 0.0;
    double alt_ratio = 0.0;
    bool alt_holds = false;
    std::string alt_label;
    std::string note;
};

struct GramSummary {
    double hermitian_defect = 0.0;
    double diagonal_defect = 0.0;
    double max_discrepancy_low = 0.0;   // |lambda_m - lambda_n| <= 20
    double max_discrepancy_high = 0.0;  // above 20
    bool real = false;
    Status status = Status::pass;
};

struct NormChain {
    double operator_norm = 0.0;
    bool converged = false;
    double row_sup = 0.0;
    double col_sup = 0.0;
    double geometric_mean = 0.0;  // sqrt(row_sup * col_sup)
    double C = 0.0;
    Status status = Status::pass;
};

struct Positivity {
    double min_eigenvalue = 0.0;
    double min_quadratic_re = 0.0;  // min over random x of Re <x, A x> / ||x||^2
    double max_quadratic_im = 0.0;
    int samples = 0;
    Status status = Status::pass;
};

struct RieszFischerSummary {
    RieszFischerReport e1;
    int samples = 0;
    double max_ratio = 0.0;  // max residual / bound over random unit vectors
    int failures = 0;
    int cauchy_failures = 0;
    Status status = Status::pass;
};

struct OracleCheck {
    double max_coefficient_discrepancy = 0.0;
    double norm_numeric = 0.0;
    double norm_closed = 0.0;
    double norm_discrepancy = 0.0;
    bool has_closed_coefficient = false;
    bool has_closed_norm = false;
    Status status = Status::pass;
};

struct CaseReport {
    std::string id;
    std::string summary;
    std::map<std::string, double> params;
    int N = 0;
    std::uint64_t seed = 0;
    std::string measure;
    std::string family;
    std::string schedule;
    std::vector<double> lambdas;

    SchurEstimate schur;
    GramSummary gram;
    NormChain norm_chain;
    Positivity positivity;
    BesselReport bessel;
    Status bessel_status = Status::pass;
    RieszFischerSummary riesz_fischer;
    CompactnessDiagnostics compactness;
    OracleCheck oracle;
    std::vector<IdentityResult> identities;
    DisplayAudit display;
    // Display coefficient and norm compared with the numeric values.
    double display_coefficient_discrepancy = 0.0;
    bool display_coefficient_matches = true;
    double display_norm_discrepancy = 0.0;
    bool display_norm_matches = true;
    std::vector<std::string> findings;
    std::vector<std::string> errors;
    Status status = Status::pass;
};

struct RunOptions {
    int N = 32;
    std::uint64_t seed = 20240601;
    int rf_samples = 100;
    int quadratic_samples = 50;
    double tol = 1e-12;  // quadrature tolerance entering the Bessel budget
};

CaseReport run_case(const CaseInstance& c, const RunOptions& opt = {});

// Deterministic complex vector with unit norm (seeded 64-bit Mersenne twister,
// mapped to uniforms by bit arithmetic so the stream is portable).
std::vector<cplx> seeded_unit_vector(std::uint64_t seed, int index, int length);

}  // namespace aos
