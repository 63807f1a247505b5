#include "aos/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "aos/numtheory.hpp"
#include "aos/specfun.hpp"

namespace aos {

// ---------------------------------------------------------------- schedules

const char* to_string(ScheduleKind k) {
    switch (k) {
        case ScheduleKind::integer: return "integer";
        case ScheduleKind::shifted: return "shifted";
        case ScheduleKind::sqrtlog: return "sqrtlog";
        case ScheduleKind::loglinear: return "loglinear";
        case ScheduleKind::power: return "power";
        case ScheduleKind::explicit_list: return "explicit";
    }
    return "?";
}

FrequencySchedule FrequencySchedule::integer() { return {}; }

FrequencySchedule FrequencySchedule::shifted() {
    FrequencySchedule s;
    s.kind = ScheduleKind::shifted;
    return s;
}

FrequencySchedule FrequencySchedule::sqrtlog(double alpha, double scale) {
    if (!(alpha > 0) || !(scale > 0))
        throw Error(ErrorKind::invalid_parameter, "sqrtlog schedule: alpha and scale must be positive");
    FrequencySchedule s;
    s.kind = ScheduleKind::sqrtlog;
    s.alpha = alpha;
    s.scale = scale;
    return s;
}

FrequencySchedule FrequencySchedule::loglinear(double c1) {
    if (!(c1 > 0)) throw Error(ErrorKind::invalid_parameter, "loglinear schedule: c1 must be positive");
    FrequencySchedule s;
    s.kind = ScheduleKind::loglinear;
    s.c1 = c1;
    return s;
}

FrequencySchedule FrequencySchedule::power(double alpha, double beta) {
    if (!(alpha > 0) || !(beta > 0))
        throw Error(ErrorKind::invalid_parameter, "power schedule: alpha and beta must be positive");
    FrequencySchedule s;
    s.kind = ScheduleKind::power;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

FrequencySchedule FrequencySchedule::explicit_list(std::vector<double> v) {
    if (v.empty()) throw Error(ErrorKind::invalid_parameter, "explicit schedule: empty list");
    for (double x : v)
        if (!std::isfinite(x)) throw Error(ErrorKind::invalid_parameter, "explicit schedule: non-finite value");
    FrequencySchedule s;
    s.kind = ScheduleKind::explicit_list;
    s.values = std::move(v);
    return s;
}

// The unbounded kinds are the smallest arithmetic or power progressions that
// satisfy their gap inequality with equality at |m - n| = 1.
double FrequencySchedule::lambda(int n) const {
    if (n < 1) throw Error(ErrorKind::invalid_parameter, "schedule: index must be >= 1");
    const double dn = n;
    switch (kind) {
        case ScheduleKind::integer: return dn;
        case ScheduleKind::shifted: return dn - 1.0;
        case ScheduleKind::sqrtlog: return scale * alpha * std::sqrt(std::log(2.0)) * dn;
        case ScheduleKind::loglinear: return c1 * std::log(2.0) * dn;
        case ScheduleKind::power: return alpha * std::pow(2.0, beta) * std::pow(dn, std::max(beta, 1.0));
        case ScheduleKind::explicit_list:
            if (static_cast<std::size_t>(n) > values.size())
                throw Error(ErrorKind::invalid_parameter, "explicit schedule: index beyond the list");
            return values[static_cast<std::size_t>(n) - 1];
    }
    return 0.0;
}

double FrequencySchedule::min_gap(int k) const {
    const double dk = k;
    switch (kind) {
        case ScheduleKind::integer:
        case ScheduleKind::shifted: return dk;
        case ScheduleKind::sqrtlog: return scale * alpha * std::sqrt(std::log(2.0)) * dk;
        case ScheduleKind::loglinear: return c1 * std::log(2.0) * dk;
        case ScheduleKind::power: {
            const double b = std::max(beta, 1.0);
            return alpha * std::pow(2.0, beta) * (std::pow(1.0 + dk, b) - 1.0);
        }
        case ScheduleKind::explicit_list: return -1.0;
    }
    return -1.0;
}

std::string FrequencySchedule::describe() const {
    std::ostringstream os;
    os << to_string(kind);
    switch (kind) {
        case ScheduleKind::sqrtlog: os << "(alpha=" << alpha << ", scale=" << scale << ")"; break;
        case ScheduleKind::loglinear: os << "(c1=" << c1 << ")"; break;
        case ScheduleKind::power: os << "(alpha=" << alpha << ", beta=" << beta << ")"; break;
        case ScheduleKind::explicit_list: os << "(" << values.size() << " values)"; break;
        default: break;
    }
    return os.str();
}

// ---------------------------------------------------------------- measures

const char* to_string(MeasureKind k) {
    switch (k) {
        case MeasureKind::gaussian: return "gaussian";
        case MeasureKind::gamma: return "gamma";
        case MeasureKind::beta: return "beta";
        case MeasureKind::discrete_mangoldt: return "discrete-mangoldt";
        case MeasureKind::discrete_zeta_tail: return "discrete-zeta-tail";
        case MeasureKind::circle_uniform: return "circle-uniform";
    }
    return "?";
}

const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::fourier: return "fourier";
        case FamilyKind::mellin: return "mellin";
        case FamilyKind::dirichlet: return "dirichlet";
    }
    return "?";
}

const char* to_string(GramMode m) {
    switch (m) {
        case GramMode::closed: return "closed";
        case GramMode::numeric: return "numeric";
        case GramMode::both: return "both";
    }
    return "?";
}

GramMode parse_gram_mode(const std::string& s) {
    if (s == "closed") return GramMode::closed;
    if (s == "numeric") return GramMode::numeric;
    if (s == "both") return GramMode::both;
    throw Error(ErrorKind::invalid_parameter, "unknown gram mode '" + s + "'");
}

double WeightedMeasure::gaussian_sd() const {
    if (params.q == 0.0) return 1.0;
    return std::sqrt(2.0 * params.beta * -std::log(params.q));
}

double WeightedMeasure::weight(std::int64_t k) const {
    if (k < 1) return 0.0;
    const double s = params.sigma;
    if (kind == MeasureKind::discrete_mangoldt) {
        const SieveTable& sv = shared_sieve();
        double lam = (k <= sv.limit) ? sv.mangoldt[static_cast<std::size_t>(k)] : 0.0;
        if (lam == 0.0) return 0.0;
        return norm_ * lam * std::exp(-s * std::log(static_cast<double>(k)));
    }
    if (kind == MeasureKind::discrete_zeta_tail) {
        if (k == 1) return 0.0;
        return norm_ * std::exp(-s * std::log(static_cast<double>(k)));
    }
    throw Error(ErrorKind::unsupported, "weight: measure is not discrete");
}

double WeightedMeasure::weight_tail(std::int64_t K, double extra) const {
    const double sp = params.sigma + extra;
    const double d = sp - 1.0;
    const double lk = std::log(static_cast<double>(std::max<std::int64_t>(K, 2)));
    const double base = std::exp(-d * lk);  // K^{1 - sigma'}
    if (kind == MeasureKind::discrete_mangoldt) return norm_ * base * (lk / d + 1.0 / (d * d));
    if (kind == MeasureKind::discrete_zeta_tail) return norm_ * base / d;
    throw Error(ErrorKind::unsupported, "weight_tail: measure is not discrete");
}

std::int64_t WeightedMeasure::truncation(double extra, double tol) const {
    const std::int64_t cap = kSharedSieveLimit;
    if (weight_tail(cap, extra) > tol) return cap;
    std::int64_t lo = 2, hi = cap;
    if (weight_tail(lo, extra) <= tol) return lo;
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        (weight_tail(mid, extra) <= tol ? hi : lo) = mid;
    }
    return hi;
}

double WeightedMeasure::total_mass() const {
    if (!discrete()) {
        KahanSum<double> s;
        for (double w : weights_) s.add(w);
        return s.value();
    }
    const std::int64_t K = truncation(0.0, 1e-12);
    KahanSum<double> s;
    for (std::int64_t k = 1; k <= K; ++k) s.add(weight(k));
    return s.value();
}

namespace {

// The trapezoid error for e^{i w u} g(u), g analytic in a strip of half-width d,
// is about e^{-d (2 pi / h - w)}; 60 leaves e^{-90} or less at d = pi / 2.
double trapezoid_step(double band) { return std::min(0.05, 2.0 * pi / (std::max(band, 0.0) + 60.0)); }

}  // namespace

bool resolves(const WeightedMeasure& m, double band) {
    if (m.kind != MeasureKind::gamma && m.kind != MeasureKind::beta) return true;
    return band <= m.params.bandwidth;
}

WeightedMeasure with_bandwidth(const WeightedMeasure& m, double band) {
    if (resolves(m, band)) return m;
    MeasureParams p = m.params;
    p.bandwidth = std::ceil(band);
    return make_space(m.kind, p);
}

WeightedMeasure make_space(MeasureKind kind, const MeasureParams& params) {
    WeightedMeasure m;
    m.kind = kind;
    m.params = params;
    auto normalize = [&m] {
        KahanSum<double> s;
        for (double w : m.weights_) s.add(w);
        const double total = s.value();
        for (double& w : m.weights_) w /= total;
    };
    switch (kind) {
        case MeasureKind::gaussian: {
            if (params.q != 0.0 && !(params.q > 0.0 && params.q < 1.0))
                throw Error(ErrorKind::invalid_parameter, "gaussian: q must lie in (0, 1)");
            if (!(params.beta > 0)) throw Error(ErrorKind::invalid_parameter, "gaussian: beta must be positive");
            m.rule_ = normal_trapezoid_rule();
            const double sd = m.gaussian_sd();
            for (std::size_t i = 0; i < m.rule_.size(); ++i) {
                Point p;
                p.x = sd * m.rule_.nodes[i];
                m.points_.push_back(p);
            }
            m.weights_ = m.rule_.weights;
            normalize();
            break;
        }
        case MeasureKind::gamma: {
            if (!(params.sigma > 0)) throw Error(ErrorKind::invalid_parameter, "gamma: sigma must be positive");
            m.rule_ = log_axis_rule(params.sigma, trapezoid_step(params.bandwidth));
            for (double u : m.rule_.nodes) {
                Point p;
                p.x = std::exp(u);
                p.logx = u;
                m.points_.push_back(p);
            }
            m.weights_ = m.rule_.weights;
            normalize();
            break;
        }
        case MeasureKind::beta: {
            if (!(params.p > 0) || !(params.qb > 0))
                throw Error(ErrorKind::invalid_parameter, "beta: p and q must be positive");
            m.rule_ = logit_rule(params.p, params.qb, trapezoid_step(params.bandwidth));
            for (double v : m.rule_.nodes) {
                Point p;
                p.logx = -std::log1p(std::exp(-v));
                p.log1mx = -std::log1p(std::exp(v));
                p.x = std::exp(p.logx);
                m.points_.push_back(p);
            }
            m.weights_ = m.rule_.weights;
            normalize();
            break;
        }
        case MeasureKind::circle_uniform: {
            m.rule_ = circle_rule(1024);
            for (double t : m.rule_.nodes) {
                Point p;
                p.x = t;
                m.points_.push_back(p);
            }
            m.weights_ = m.rule_.weights;
            break;
        }
        case MeasureKind::discrete_mangoldt: {
            if (!(params.sigma > 1)) throw Error(ErrorKind::invalid_parameter, "discrete: sigma must exceed 1");
            const cplx ld = params.sigma >= 1.5 ? zeta_log_derivative(params.sigma)
                                                : zeta_log_derivative_analytic(params.sigma);
            m.norm_ = -1.0 / ld.real();
            break;
        }
        case MeasureKind::discrete_zeta_tail: {
            if (!(params.sigma > 1)) throw Error(ErrorKind::invalid_parameter, "discrete: sigma must exceed 1");
            m.norm_ = 1.0 / zeta_minus_one(params.sigma).real();
            break;
        }
    }
    return m;
}

// ---------------------------------------------------------------- families

cplx SequenceFamily::phi_lambda(double lambda, const Point& pt) const {
    switch (kind) {
        case FamilyKind::fourier: return std::polar(1.0, lambda * pt.x);
        case FamilyKind::mellin: return std::polar(1.0, lambda * pt.logx);
        case FamilyKind::dirichlet: return std::exp(-lambda * pt.logx);
    }
    return 0.0;
}

cplx SequenceFamily::phi(int n, const Point& pt) const { return phi_lambda(schedule.lambda(n), pt); }

bool compatible(const WeightedMeasure& m, const SequenceFamily& f) {
    switch (f.kind) {
        case FamilyKind::fourier:
            return m.kind == MeasureKind::gaussian || m.kind == MeasureKind::circle_uniform;
        case FamilyKind::mellin: return m.kind == MeasureKind::gamma || m.kind == MeasureKind::beta;
        case FamilyKind::dirichlet: return m.discrete();
    }
    return false;
}

namespace {

Point discrete_point(std::int64_t k) {
    Point p;
    p.k = k;
    p.x = static_cast<double>(k);
    p.logx = std::log(p.x);
    return p;
}

// sum_k psi(k) g(k) with g bounded by sup_g k^{-extra}; truncation certified to tol.
InnerProduct discrete_sum(const WeightedMeasure& space, double extra, double tol, double sup_g,
                          const std::function<cplx(const Point&)>& g) {
    const std::int64_t K = space.truncation(extra, tol / std::max(sup_g, 1e-300));
    const double bound = sup_g * space.weight_tail(K, extra);
    if (bound > tol)
        throw Error(ErrorKind::tolerance_not_met, "discrete sum: truncation bound above tolerance at the sieve limit",
                    bound);
    KahanSum<cplx> s;
    if (space.kind == MeasureKind::discrete_mangoldt) {
        for (std::int32_t k : shared_sieve().prime_powers) {
            if (k > K) break;
            s.add(space.weight(k) * g(discrete_point(k)));
        }
    } else {
        for (std::int64_t k = 2; k <= K; ++k) s.add(space.weight(k) * g(discrete_point(k)));
    }
    return {s.value(), bound};
}

void require_compatible(const WeightedMeasure& space, const SequenceFamily& family) {
    if (!compatible(space, family))
        throw Error(ErrorKind::invalid_parameter, std::string("family ") + to_string(family.kind) +
                                                      " does not live on measure " + to_string(space.kind));
}

double rel_diff(cplx a, cplx closed) { return std::abs(a - closed) / std::max(1.0, std::abs(closed)); }

}  // namespace

InnerProduct inner_product(const WeightedMeasure& space, const PointFunction& f, const PointFunction& g,
                           double tol, double sup_fg) {
    if (space.discrete())
        return discrete_sum(space, 0.0, tol, sup_fg, [&](const Point& p) { return f(p) * std::conj(g(p)); });
    KahanSum<cplx> s;
    const auto& pts = space.points();
    const auto& w = space.weights();
    for (std::size_t i = 0; i < pts.size(); ++i) s.add(w[i] * f(pts[i]) * std::conj(g(pts[i])));
    return {s.value(), 0.0};
}

CoefficientResult coefficient(const WeightedMeasure& space, const SequenceFamily& family, const TestFunction& f,
                              int n, double tol) {
    require_compatible(space, family);
    const double lam = family.schedule.lambda(n);
    CoefficientResult r;
    if (space.discrete()) {
        // phi_n(k) = k^{-lambda_n} is real and <= k^{-lambda_n}.
        InnerProduct ip = discrete_sum(space, lam, tol, f.sup_abs,
                                       [&](const Point& p) { return f.eval(p) * family.phi_lambda(lam, p); });
        r.value = ip.value;
        r.error_bound = ip.error_bound;
    } else {
        const WeightedMeasure fine = with_bandwidth(space, std::abs(lam));
        r.value = inner_product(fine, f.eval, [&](const Point& p) { return family.phi_lambda(lam, p); }).value;
    }
    if (f.closed_coefficient) {
        r.closed = f.closed_coefficient(lam, n);
        r.discrepancy = rel_diff(r.value, *r.closed);
    }
    return r;
}

std::vector<CoefficientResult> coefficients(const WeightedMeasure& space, const SequenceFamily& family,
                                            const TestFunction& f, int N, double tol) {
    require_compatible(space, family);
    std::vector<CoefficientResult> out;
    out.reserve(static_cast<std::size_t>(std::max(N, 0)));
    if (space.discrete()) {
        for (int n = 1; n <= N; ++n) out.push_back(coefficient(space, family, f, n, tol));
        return out;
    }
    double band = 0.0;
    for (int n = 1; n <= N; ++n) band = std::max(band, std::abs(family.schedule.lambda(n)));
    std::optional<WeightedMeasure> fine;
    if (!resolves(space, band)) fine = with_bandwidth(space, band);
    const WeightedMeasure& sp = fine ? *fine : space;
    const auto& pts = sp.points();
    const auto& w = sp.weights();
    std::vector<cplx> fw(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) fw[i] = w[i] * f.eval(pts[i]);
    for (int n = 1; n <= N; ++n) {
        const double lam = family.schedule.lambda(n);
        KahanSum<cplx> s;
        for (std::size_t i = 0; i < pts.size(); ++i) s.add(fw[i] * std::conj(family.phi_lambda(lam, pts[i])));
        CoefficientResult r;
        r.value = s.value();
        if (f.closed_coefficient) {
            r.closed = f.closed_coefficient(lam, n);
            r.discrepancy = rel_diff(r.value, *r.closed);
        }
        out.push_back(r);
    }
    return out;
}

NormResult norm_sq(const WeightedMeasure& space, const TestFunction& f, double tol) {
    InnerProduct ip = inner_product(space, f.eval, f.eval, tol, f.sup_abs * f.sup_abs);
    NormResult r;
    r.value = ip.value.real();
    r.imag_residue = std::abs(ip.value.imag());
    r.error_bound = ip.error_bound;
    r.closed = f.closed_norm_sq;
    if (r.imag_residue > 1e-11 * std::max(1.0, std::abs(r.value)))
        throw Error(ErrorKind::numerical_inconsistency, "norm_sq: imaginary residue too large", r.imag_residue);
    return r;
}

cplx gram_closed(const WeightedMeasure& space, double lm, double ln) {
    const double d = lm - ln;
    const MeasureParams& p = space.params;
    switch (space.kind) {
        case MeasureKind::gaussian: {
            const double sd = space.gaussian_sd();
            return std::exp(-0.5 * sd * sd * d * d);
        }
        case MeasureKind::circle_uniform: {
            if (d == 0.0) return 1.0;
            if (d == std::round(d)) return 0.0;
            const cplx i2pd{0.0, 2.0 * pi * d};
            return (std::exp(i2pd) - 1.0) / i2pd;
        }
        case MeasureKind::gamma: return gamma_ratio(p.sigma, d);
        case MeasureKind::beta: {
            if (d == 0.0) return 1.0;
            return std::exp(lgamma_complex({p.p, d}) - lgamma_complex(p.p) +
                            lgamma_complex(p.p + p.qb) - lgamma_complex({p.p + p.qb, d}));
        }
        case MeasureKind::discrete_mangoldt:
            return -space.normalizer() * zeta_log_derivative_analytic(p.sigma + lm + ln).real();
        case MeasureKind::discrete_zeta_tail:
            return space.normalizer() * zeta_minus_one(p.sigma + lm + ln).real();
    }
    throw Error(ErrorKind::unsupported_mode, "gram_closed: no closed form for this measure");
}

cplx gram_numeric(const WeightedMeasure& space, const SequenceFamily& family, double lm, double ln, double tol) {
    require_compatible(space, family);
    if (space.discrete())
        return discrete_sum(space, lm + ln, tol, 1.0,
                            [&](const Point& pt) { return family.phi_lambda(lm, pt) * family.phi_lambda(ln, pt); })
            .value;
    std::optional<WeightedMeasure> fine;
    if (!resolves(space, std::abs(lm - ln))) fine = with_bandwidth(space, std::abs(lm - ln));
    return inner_product(
               fine ? *fine : space, [&](const Point& pt) { return family.phi_lambda(lm, pt); },
               [&](const Point& pt) { return family.phi_lambda(ln, pt); })
        .value;
}

GramEntry gram_entry(const WeightedMeasure& space, const SequenceFamily& family, int m, int n, GramMode mode) {
    const double lm = family.schedule.lambda(m);
    const double ln = family.schedule.lambda(n);
    GramEntry e;
    if (mode != GramMode::numeric) e.closed = gram_closed(space, lm, ln);
    if (mode != GramMode::closed) e.numeric = gram_numeric(space, family, lm, ln);
    e.value = e.closed ? *e.closed : *e.numeric;
    if (e.closed && e.numeric) e.discrepancy = rel_diff(*e.numeric, *e.closed);
    return e;
}

ScheduleReport validate_schedule(const FrequencySchedule& schedule, const WeightedMeasure& measure, int n_check) {
    ScheduleReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };
    int N = n_check;
    if (schedule.kind == ScheduleKind::explicit_list)
        N = std::min<int>(N, static_cast<int>(schedule.values.size()));
    std::vector<double> lam(static_cast<std::size_t>(N) + 1);
    for (int n = 1; n <= N; ++n) lam[n] = schedule.lambda(n);

    for (int n = 1; n < N; ++n)
        if (!(lam[n + 1] > lam[n])) {
            fail("not strictly increasing at n=" + std::to_string(n));
            break;
        }

    // The gap inequality of the schedule's own kind, for m > n.
    std::function<double(int)> required;
    switch (schedule.kind) {
        case ScheduleKind::sqrtlog: {
            if (!(schedule.alpha > std::sqrt(2.0))) fail("sqrtlog: alpha must exceed sqrt(2)");
            if (measure.kind == MeasureKind::gaussian && measure.params.q != 0.0) {
                const double want = 1.0 / std::sqrt(-2.0 * measure.params.beta * std::log(measure.params.q));
                if (schedule.scale < want * (1.0 - 1e-12))
                    fail("sqrtlog: scale below 1/sqrt(log q^(-2 beta))");
            }
            const double a = schedule.scale * schedule.alpha;
            required = [a](int k) { return a * std::sqrt(std::log(1.0 + k)); };
            break;
        }
        case ScheduleKind::loglinear: {
            if (!(schedule.c1 * pi / 2.0 > 1.0)) fail("loglinear: c1 pi/2 must exceed 1");
            const double c = schedule.c1;
            required = [c](int k) { return c * std::log(1.0 + k); };
            break;
        }
        case ScheduleKind::power: {
            if (measure.kind == MeasureKind::beta && !(schedule.beta * measure.params.qb > 1.0))
                fail("power: beta q must exceed 1");
            const double a = schedule.alpha, b = schedule.beta;
            required = [a, b](int k) { return a * std::pow(1.0 + k, b); };
            break;
        }
        case ScheduleKind::integer:
        case ScheduleKind::shifted: required = [](int k) { return static_cast<double>(k); }; break;
        case ScheduleKind::explicit_list: break;
    }
    if (required) {
        bool reported = false;
        for (int n = 1; n < N && !reported; ++n)
            for (int m = n + 1; m <= N; ++m) {
                const double need = required(m - n);
                if (lam[m] - lam[n] < need * (1.0 - 1e-12)) {
                    fail("gap inequality fails at (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")");
                    reported = true;
                    break;
                }
            }
    }
    if (measure.discrete()) {
        for (int n = 1; n <= N; ++n)
            if (lam[n] < n - 1.0) {
                fail("discrete: lambda_n < n - 1 at n=" + std::to_string(n));
                break;
            }
    }
    return rep;
}

}  // namespace aos
