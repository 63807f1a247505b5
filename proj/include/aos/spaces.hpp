#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aos/quadrature.hpp"
#include "aos/schedule.hpp"
#include "aos/types.hpp"

namespace aos {

enum class MeasureKind { gaussian, gamma, beta, discrete_mangoldt, discrete_zeta_tail, circle_uniform };
const char* to_string(MeasureKind k);

struct MeasureParams {
    double beta = 0.5;   // gaussian q-form exponent
    double q = 0.0;      // gaussian q-form base in (0,1); 0 selects e^{-x^2/2}/sqrt(2 pi)
    double sigma = 3.0;  // gamma, discrete kinds
    double p = 1.5;      // beta
    double qb = 2.5;     // beta
    // gamma, beta: largest frequency the trapezoid rule must resolve. The step
    // is min(0.05, 2 pi / (bandwidth + 60)), so the default keeps h = 0.05.
    double bandwidth = 64.0;
};

// Where an integrand is evaluated. Continuous kinds fill x and the logs that
// make sense for them; discrete kinds fill k as well.
struct Point {
    double x = 0.0;
    double logx = 0.0;    // gamma, beta, discrete
    double log1mx = 0.0;  // beta
    std::int64_t k = 0;   // discrete
};

class WeightedMeasure {
public:
    MeasureKind kind = MeasureKind::circle_uniform;
    MeasureParams params;

    bool discrete() const {
        return kind == MeasureKind::discrete_mangoldt || kind == MeasureKind::discrete_zeta_tail;
    }
    // Standard deviation of the Gaussian kinds; 1 for the plain normal.
    double gaussian_sd() const;

    // Continuous kinds: quadrature nodes mapped to points, with normalized weights.
    const std::vector<Point>& points() const { return points_; }
    const std::vector<double>& weights() const { return weights_; }
    const QuadratureRule& rule() const { return rule_; }

    // Discrete kinds.
    double weight(std::int64_t k) const;
    // Bound on sum_{k>K} psi(k) k^{-extra}.
    double weight_tail(std::int64_t K, double extra) const;
    // Smallest K with weight_tail(K, extra) <= tol, capped at the shared sieve.
    std::int64_t truncation(double extra, double tol) const;
    // Normalizer: -zeta(s)/zeta'(s) or 1/(zeta(s)-1).
    double normalizer() const { return norm_; }

    double total_mass() const;

    friend WeightedMeasure make_space(MeasureKind kind, const MeasureParams& params);

private:
    QuadratureRule rule_;
    std::vector<Point> points_;
    std::vector<double> weights_;
    double norm_ = 1.0;
};

WeightedMeasure make_space(MeasureKind kind, const MeasureParams& params);

// True when the rule of `m` resolves frequencies up to `band`; discrete,
// Gaussian and circle measures always do for the schedules used here.
bool resolves(const WeightedMeasure& m, double band);
// Copy of `m` rebuilt with a finer step when it does not resolve `band`.
WeightedMeasure with_bandwidth(const WeightedMeasure& m, double band);

enum class FamilyKind { fourier, mellin, dirichlet };
const char* to_string(FamilyKind k);

struct SequenceFamily {
    FamilyKind kind = FamilyKind::fourier;
    FrequencySchedule schedule;

    // phi_n at a point, n >= 1.
    cplx phi(int n, const Point& pt) const;
    cplx phi_lambda(double lambda, const Point& pt) const;
};

bool compatible(const WeightedMeasure& m, const SequenceFamily& f);

using PointFunction = std::function<cplx(const Point&)>;

struct TestFunction {
    std::string id;
    std::string formula;
    PointFunction eval;
    // Coefficient (f, phi_n) in closed form, as a function of (lambda_n, n).
    std::function<cplx(double, int)> closed_coefficient;
    std::optional<double> closed_norm_sq;
    // Discrete kinds: sup |f(k)|, used for certified truncation.
    double sup_abs = 1.0;
};

struct InnerProduct {
    cplx value;
    double error_bound = 0.0;  // discrete truncation bound; 0 for fixed continuous rules
};

InnerProduct inner_product(const WeightedMeasure& space, const PointFunction& f, const PointFunction& g,
                           double tol = 1e-10, double sup_fg = 1.0);

struct CoefficientResult {
    cplx value;                  // (f, phi_n) through the measure's integrator
    std::optional<cplx> closed;  // closed form when the function registers one
    double discrepancy = 0.0;    // |value - closed| / max(1, |closed|)
    double error_bound = 0.0;
};

CoefficientResult coefficient(const WeightedMeasure& space, const SequenceFamily& family, const TestFunction& f,
                              int n, double tol = 1e-10);
// Coefficients n = 1..N, with f evaluated once per node.
std::vector<CoefficientResult> coefficients(const WeightedMeasure& space, const SequenceFamily& family,
                                            const TestFunction& f, int N, double tol = 1e-10);

struct NormResult {
    double value = 0.0;
    double imag_residue = 0.0;
    double error_bound = 0.0;
    std::optional<double> closed;
};
NormResult norm_sq(const WeightedMeasure& space, const TestFunction& f, double tol = 1e-10);

enum class GramMode { closed, numeric, both };
const char* to_string(GramMode m);
GramMode parse_gram_mode(const std::string& s);

struct GramEntry {
    cplx value;  // closed when available in closed/both mode, else numeric
    std::optional<cplx> closed;
    std::optional<cplx> numeric;
    double discrepancy = 0.0;
};

// Closed-form a_{m,n} for frequencies (lambda_m, lambda_n).
cplx gram_closed(const WeightedMeasure& space, double lm, double ln);
cplx gram_numeric(const WeightedMeasure& space, const SequenceFamily& family, double lm, double ln,
                  double tol = 1e-10);
GramEntry gram_entry(const WeightedMeasure& space, const SequenceFamily& family, int m, int n, GramMode mode);

struct ScheduleReport {
    bool ok = true;
    std::vector<std::string> violations;
};
ScheduleReport validate_schedule(const FrequencySchedule& schedule, const WeightedMeasure& measure,
                                 int n_check = 64);

}  // namespace aos
