#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>

#include "aos/catalog.hpp"
#include "aos/numtheory.hpp"
#include "aos/qseries.hpp"
#include "aos/specfun.hpp"

namespace aos {

namespace {

// ---------------------------------------------------------------- parameters

struct ParamSpec {
    std::string key;
    double value;
    std::function<bool(double)> ok;
    std::string domain;
};

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* b = text.data();
    const char* e = b + text.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e || !std::isfinite(v))
        throw Error(ErrorKind::invalid_parameter, key + ": cannot parse '" + text + "' as a number");
    return v;
}

std::map<std::string, double> resolve(const std::string& id, std::vector<ParamSpec> specs, const Overrides& ov) {
    for (const auto& [k, v] : ov) {
        auto it = std::find_if(specs.begin(), specs.end(), [&](const ParamSpec& s) { return s.key == k; });
        if (it == specs.end()) throw Error(ErrorKind::invalid_parameter, id + ": unknown parameter '" + k + "'");
        it->value = parse_double(k, v);
    }
    std::map<std::string, double> out;
    for (const auto& s : specs) {
        if (s.ok && !s.ok(s.value))
            throw Error(ErrorKind::invalid_parameter, id + ": " + s.key + " must satisfy " + s.domain);
        out[s.key] = s.value;
    }
    return out;
}

auto positive = [](double v) { return v > 0; };
auto unit_open = [](double v) { return v > 0 && v < 1; };
auto small_int = [](double v) { return v >= 0 && v <= 20 && v == std::floor(v); };

void require(bool cond, const std::string& id, const std::string& what) {
    if (!cond) throw Error(ErrorKind::invalid_parameter, id + ": " + what);
}

void check_schedule(const CaseInstance& c) {
    ScheduleReport rep = validate_schedule(c.family.schedule, c.space);
    if (!rep.ok) {
        std::string msg = c.id + ": schedule violates its side condition";
        for (const auto& v : rep.violations) msg += "; " + v;
        throw Error(ErrorKind::invalid_parameter, msg);
    }
}

// Caches an N-independent bound the first time it is asked for.
SchurTailSupplier constant_bound(std::function<double()> compute) {
    struct State {
        std::once_flag once;
        double value = 0.0;
    };
    auto st = std::make_shared<State>();
    return [st, compute](int) {
        std::call_once(st->once, [&] { st->value = compute(); });
        return st->value;
    };
}

// U = g(0) + 2 sum_k G(gap(k)) for a kernel whose modulus decreases in |Delta|;
// every row sum of the infinite matrix is at most U. Terms are summed exactly
// up to K, after which `tail(K)` bounds sum_{k>K} G(gap(k)).
double difference_kernel_bound(const FrequencySchedule& s, const std::function<double(double)>& G,
                               const std::function<double(int)>& tail, int K_max, double stop) {
    KahanSum<double> acc;
    acc.add(G(0.0));
    int k = 1;
    for (; k <= K_max; ++k) {
        double t = G(s.min_gap(k));
        acc.add(2.0 * t);
        if (t < stop) break;
    }
    return acc.value() + 2.0 * tail(std::min(k, K_max));
}

// ---------------------------------------------------------------- Fourier series oracles

// Coefficients c_k, k >= 0, of f = sum c_k e^{ikx}, cut once they are negligible.
std::vector<cplx> truncate_series(const std::function<cplx(int)>& c) {
    std::vector<cplx> out;
    double peak = 0.0;
    int quiet = 0;
    for (int k = 0; k < 4000; ++k) {
        cplx v = c(k);
        out.push_back(v);
        peak = std::max(peak, std::abs(v));
        quiet = (std::abs(v) <= 1e-19 * std::max(peak, 1e-300)) ? quiet + 1 : 0;
        if (quiet >= 3 && k > 8) break;
    }
    return out;
}

// (f, e^{i mu x}) = sum_k c_k q^{beta (k - mu)^2}
cplx fourier_series_coefficient(const std::vector<cplx>& c, double q, double beta, double mu) {
    const double lq = std::log(q);
    KahanSum<cplx> s;
    for (std::size_t k = 0; k < c.size(); ++k) {
        double d = static_cast<double>(k) - mu;
        s.add(c[k] * std::exp(beta * d * d * lq));
    }
    return s.value();
}

double fourier_series_norm(const std::vector<cplx>& c, double q, double beta) {
    const double lq = std::log(q);
    KahanSum<cplx> s;
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t k = 0; k < c.size(); ++k) {
            double d = static_cast<double>(j) - static_cast<double>(k);
            s.add(c[j] * std::conj(c[k]) * std::exp(beta * d * d * lq));
        }
    return s.value().real();
}

// ---------------------------------------------------------------- Gaussian cases

WeightedMeasure gaussian_space(double q, double beta) {
    MeasureParams mp;
    mp.q = q;
    mp.beta = beta;
    return make_space(MeasureKind::gaussian, mp);
}

SchurTailSupplier gaussian_bound(const FrequencySchedule& s, double c) {
    return constant_bound([s, c] {
        const double d1 = s.min_gap(1);
        auto tail = [&](int K) {
            double g0 = s.min_gap(K + 1);
            double r = std::exp(-c * d1 * (2.0 * g0 + d1));
            return std::exp(-c * g0 * g0) / (1.0 - r);
        };
        return difference_kernel_bound(s, [c](double y) { return std::exp(-c * y * y); }, tail, 100000, 1e-22);
    });
}

CaseInstance gauss_plain(const std::string& id, const Overrides& ov) {
    CaseInstance c;
    c.id = id;
    const bool integer = id == "gauss-integer";
    c.params = integer ? resolve(id, {}, ov)
                       : resolve(id, {{"alpha", 1.5, [](double a) { return a > std::sqrt(2.0); }, "alpha > sqrt 2"}}, ov);
    c.summary = integer ? "standard normal, lambda_n = n, f = 1"
                        : "standard normal, lambda_n = alpha sqrt(log 2) n, f = 1";
    c.space = gaussian_space(0.0, 0.5);
    c.family.kind = FamilyKind::fourier;
    c.family.schedule = integer ? FrequencySchedule::integer() : FrequencySchedule::sqrtlog(c.params["alpha"], 1.0);
    c.f.id = "one";
    c.f.formula = "f(x) = 1";
    c.f.eval = [](const Point&) { return cplx(1.0); };
    c.f.closed_coefficient = [](double l, int) { return cplx(std::exp(-0.5 * l * l)); };
    c.f.closed_norm_sq = 1.0;
    c.c_upper = gaussian_bound(c.family.schedule, 0.5);

    DisplayForm d;
    d.summand = [](int, double l) { return std::exp(-l * l); };
    if (integer) {
        // sum_{n in Z} e^{-n^2/2}
        KahanSum<double> th;
        th.add(1.0);
        for (int n = 1; n < 40; ++n) th.add(2.0 * std::exp(-0.5 * n * n));
        const double bound = th.value();
        d.rhs = [bound](double) { return bound; };
    } else {
        const double e = 0.5 * c.params["alpha"] * c.params["alpha"];
        if (e >= 1.05) {
            const double bound = 2.0 * riemann_zeta(e).real() - 1.0;
            d.rhs = [bound](double) { return bound; };
        }
    }
    if (d.rhs) c.display = d;
    check_schedule(c);
    return c;
}

struct QGaussSetup {
    double q;
    double beta;
    cplx z;
};

QGaussSetup qgauss_common(CaseInstance& c, const Overrides& ov, double beta, bool unit_disc) {
    c.params = resolve(c.id,
                       {{"q", 0.5, unit_open, "0 < q < 1"},
                        {"z_re", 0.4, nullptr, ""},
                        {"z_im", 0.1, nullptr, ""},
                        {"alpha", 1.5, [](double a) { return a > std::sqrt(2.0); }, "alpha > sqrt 2"}},
                       ov);
    QGaussSetup s{c.params["q"], beta, cplx(c.params["z_re"], c.params["z_im"])};
    if (unit_disc) require(std::abs(s.z) < 1.0, c.id, "need |z| < 1");
    c.params["beta"] = beta;
    c.space = gaussian_space(s.q, beta);
    c.family.kind = FamilyKind::fourier;
    const double scale = 1.0 / std::sqrt(2.0 * beta * -std::log(s.q));
    c.family.schedule = FrequencySchedule::sqrtlog(c.params["alpha"], scale);
    c.c_upper = gaussian_bound(c.family.schedule, beta * -std::log(s.q));
    return s;
}

CaseInstance qgauss_binomial(const Overrides& ov) {
    CaseInstance c;
    c.id = "qgauss-binomial";
    c.summary = "q-Gaussian, beta = 1/2, f = 1/(z e^{ix};q)_inf";
    auto s = qgauss_common(c, ov, 0.5, true);
    const double q = s.q;
    const cplx z = s.z;
    c.f.id = "inverse-qpochhammer";
    c.f.formula = "f(x) = 1/(z e^{ix};q)_inf";
    c.f.eval = [q, z](const Point& p) { return 1.0 / qpochhammer_inf(z * std::polar(1.0, p.x), q); };
    // q^{mu^2/2} (-z q^{1/2-mu};q)_inf, through logs so large mu does not overflow.
    c.f.closed_coefficient = [q, z](double mu, int) {
        return std::exp(0.5 * mu * mu * std::log(q) + log_qpochhammer_inf(-z * std::pow(q, 0.5 - mu), q));
    };
    auto series = truncate_series([&](int k) { return std::pow(z, k) / qpochhammer(cplx(q), q, k); });
    c.f.closed_norm_sq = fourier_series_norm(series, q, 0.5);
    c.display_coefficient = c.f.closed_coefficient;
    const cplx shown_norm = qseries_sum(QSeriesForm::binomial_display, q, z);
    c.display_norm_sq = shown_norm.real();
    if (std::abs(shown_norm.imag()) > 1e-9)
        c.notes.push_back("displayed norm is not real: imaginary part " + std::to_string(shown_norm.imag()));

    DisplayForm d;
    d.summand = [q, z](int, double mu) {
        cplx v = std::exp(0.5 * mu * mu * std::log(q) + log_qpochhammer_inf(-z * std::pow(q, 0.5 - mu), q));
        return std::norm(v);
    };
    const double shown = *c.display_norm_sq;
    d.rhs = [shown](double S) { return S * shown; };
    c.display = d;
    check_schedule(c);
    return c;
}

CaseInstance qgauss_aq(const Overrides& ov) {
    CaseInstance c;
    c.id = "qgauss-aq";
    c.summary = "q-Gaussian, beta = 1/2, f = (z q^{1/2} e^{ix};q)_inf";
    auto s = qgauss_common(c, ov, 0.5, false);
    const double q = s.q;
    const cplx z = s.z;
    c.f.id = "qpochhammer";
    c.f.formula = "f(x) = (z q^{1/2} e^{ix};q)_inf";
    c.f.eval = [q, z](const Point& p) { return qpochhammer_inf(z * std::sqrt(q) * std::polar(1.0, p.x), q); };
    c.f.closed_coefficient = [q, z](double mu, int) { return ramanujan_Aq_scaled(q, z, 0.5 * mu * mu, mu); };
    c.f.closed_norm_sq = qseries_sum(QSeriesForm::aq, q, z).real();
    // As displayed: q^{mu^2} A_q(q^{-mu} z).
    c.display_coefficient = [q, z](double mu, int) { return ramanujan_Aq_scaled(q, z, mu * mu, mu); };
    c.display_norm_sq = c.f.closed_norm_sq;

    DisplayForm d;
    d.summand = [q, z](int, double mu) { return std::norm(ramanujan_Aq_scaled(q, z, mu * mu, mu)); };
    const double nrm = *c.f.closed_norm_sq;
    d.rhs = [nrm](double S) { return S * nrm; };
    c.display = d;
    check_schedule(c);
    return c;
}

CaseInstance qgauss_aq2(const Overrides& ov) {
    CaseInstance c;
    c.id = "qgauss-aq2";
    c.summary = "q-Gaussian, beta = 1, f = 1/(-z e^{ix};q)_inf";
    auto s = qgauss_common(c, ov, 1.0, true);
    const double q = s.q;
    const cplx z = s.z;
    c.f.id = "inverse-qpochhammer-neg";
    c.f.formula = "f(x) = 1/(-z e^{ix};q)_inf";
    c.f.eval = [q, z](const Point& p) { return 1.0 / qpochhammer_inf(-z * std::polar(1.0, p.x), q); };
    c.f.closed_coefficient = [q, z](double mu, int) { return ramanujan_Aq_scaled(q, z, mu * mu, 2.0 * mu); };
    c.f.closed_norm_sq = qseries_sum(QSeriesForm::aq2, q, z).real();
    c.display_coefficient = c.f.closed_coefficient;
    c.display_norm_sq = c.f.closed_norm_sq;

    DisplayForm d;
    d.summand = [q, z](int, double mu) { return std::norm(ramanujan_Aq_scaled(q, z, mu * mu, 2.0 * mu)); };
    const double nrm = *c.f.closed_norm_sq;
    d.rhs = [nrm](double S) { return S * nrm; };
    c.display = d;
    check_schedule(c);
    return c;
}

CaseInstance qgauss_qbessel(const Overrides& ov) {
    CaseInstance c;
    c.id = "qgauss-qbessel";
    c.summary = "q-Gaussian, beta = 1/2, f = (q^{nu+1/2} z^2 e^{ix}/4;q)_inf / (q, -q^{nu+1/2} e^{ix};q)_inf";
    c.params = resolve(c.id,
                       {{"q", 0.5, unit_open, "0 < q < 1"},
                        {"nu", 0.5, [](double v) { return v > -0.5; }, "nu > -1/2"},
                        {"z", 1.0, [](double v) { return v != 0.0; }, "z != 0"},
                        {"alpha", 1.5, [](double a) { return a > std::sqrt(2.0); }, "alpha > sqrt 2"}},
                       ov);
    const double q = c.params["q"];
    const double nu = c.params["nu"];
    const double zz = c.params["z"];
    const double beta = 0.5;
    c.params["beta"] = beta;
    c.space = gaussian_space(q, beta);
    c.family.kind = FamilyKind::fourier;
    c.family.schedule = FrequencySchedule::sqrtlog(c.params["alpha"], 1.0 / std::sqrt(-std::log(q)));
    c.c_upper = gaussian_bound(c.family.schedule, beta * -std::log(q));

    const double b = -std::pow(q, nu + 0.5);
    const double a = std::pow(q, nu + 0.5) * zz * zz / 4.0;
    const cplx qinf = qpochhammer_inf(q, q);
    c.f.id = "q-bessel-generating";
    c.f.formula = "f(x) = (a e^{ix};q)_inf / ((q;q)_inf (b e^{ix};q)_inf)";
    c.f.eval = [q, a, b, qinf](const Point& p) {
        cplx w = std::polar(1.0, p.x);
        return qpochhammer_inf(a * w, q) / (qinf * qpochhammer_inf(b * w, q));
    };
    // q-binomial theorem: c_m = (a/b;q)_m b^m / ((q;q)_m (q;q)_inf)
    auto series = std::make_shared<std::vector<cplx>>(truncate_series([&](int m) {
        return qpochhammer(cplx(a / b), q, m) * std::pow(b, m) / (qpochhammer(cplx(q), q, m) * qinf);
    }));
    c.f.closed_coefficient = [series, q](double mu, int) { return fourier_series_coefficient(*series, q, 0.5, mu); };
    c.f.closed_norm_sq = fourier_series_norm(*series, q, 0.5);
    check_schedule(c);
    return c;
}

// ---------------------------------------------------------------- Gamma cases

WeightedMeasure gamma_space(double sigma) {
    MeasureParams mp;
    mp.sigma = sigma;
    return make_space(MeasureKind::gamma, mp);
}

// |Gamma(sigma+iy)/Gamma(sigma)| <= (1+y^2/sigma^2)^{sigma/2} exp(-y atan(y/sigma)),
// whose log-derivative atan(sigma/y) - pi/2 gives the ratio bound on the tail.
SchurTailSupplier gamma_bound(const FrequencySchedule& s, double sigma) {
    return constant_bound([s, sigma] {
        auto G = [sigma](double y) { return std::abs(gamma_ratio(sigma, y)); };
        auto majorant = [sigma](double y) {
            return std::exp(0.5 * sigma * std::log1p(y * y / (sigma * sigma)) - y * std::atan(y / sigma));
        };
        const double d1 = s.min_gap(1);
        auto tail = [&](int K) {
            double y = s.min_gap(K + 1);
            double rho = std::exp(d1 * (std::atan(sigma / y) - pi / 2));
            return majorant(y) / (1.0 - rho);
        };
        return difference_kernel_bound(s, G, tail, 100000, 1e-20);
    });
}

struct GammaSetup {
    double sigma;
};

GammaSetup gamma_common(CaseInstance& c, std::vector<ParamSpec> extra, const Overrides& ov, double sigma_min = 0.0) {
    std::vector<ParamSpec> specs = {{"sigma", 3.0, [](double v) { return v > 0 && v <= 20; }, "0 < sigma <= 20"},
                                    {"c1", 0.7, positive, "c1 > 0"}};
    for (auto& e : extra) specs.push_back(std::move(e));
    c.params = resolve(c.id, specs, ov);
    const double sigma = c.params["sigma"];
    require(sigma > sigma_min, c.id, "sigma too small for this case");
    c.space = gamma_space(sigma);
    c.family.kind = FamilyKind::mellin;
    c.family.schedule = FrequencySchedule::loglinear(c.params["c1"]);
    c.c_upper = gamma_bound(c.family.schedule, sigma);
    return {sigma};
}

// Gamma(sigma - i mu) / Gamma(sigma)
cplx gamma_s_ratio(double sigma, double mu) { return gamma_ratio(sigma, -mu); }

CaseInstance gamma_log(const Overrides& ov) {
    CaseInstance c;
    c.id = "gamma-log";
    c.summary = "gamma measure, f = log x";
    auto [sigma] = gamma_common(c, {}, ov);
    c.f.id = "log";
    c.f.formula = "f(x) = log x";
    c.f.eval = [](const Point& p) { return cplx(p.logx); };
    c.f.closed_coefficient = [sigma](double mu, int) {
        cplx s(sigma, -mu);
        return gamma_s_ratio(sigma, mu) * digamma_complex(s);
    };
    const double ps = digamma_complex(sigma).real();
    const double norm = ps * ps + trigamma_real(sigma);
    c.f.closed_norm_sq = norm;
    const double g = std::exp(std::lgamma(sigma));

    DisplayForm d;
    d.summand = [sigma](int, double mu) {
        cplx s(sigma, mu);
        return std::norm(gamma_complex(s) * digamma_complex(s));
    };
    d.kappa = g * g;
    d.normalizer = g;
    d.rhs = [g, norm](double S) { return g * norm * S; };
    c.display = d;
    check_schedule(c);
    return c;
}

cplx rising(cplx x, int n) {
    cplx p = 1.0;
    for (int k = 0; k < n; ++k) p *= x + static_cast<double>(k);
    return p;
}

double factorial(int n) { return std::exp(std::lgamma(n + 1.0)); }

CaseInstance gamma_laguerre(const Overrides& ov) {
    CaseInstance c;
    c.id = "gamma-laguerre";
    c.summary = "gamma measure, f = L_l^{(sigma-1)}(x)";
    auto [sigma] = gamma_common(c, {{"ell", 2, small_int, "integer 0 <= ell <= 20"}}, ov);
    const int ell = static_cast<int>(c.params["ell"]);
    c.f.id = "laguerre";
    c.f.formula = "f(x) = L_ell^{(sigma-1)}(x)";
    c.f.eval = [ell, sigma](const Point& p) { return cplx(laguerre(ell, sigma - 1.0, p.x)); };
    const double lf = factorial(ell);
    // Gamma(s) (i mu)_ell / (ell! Gamma(sigma))
    c.f.closed_coefficient = [sigma, ell, lf](double mu, int) {
        return gamma_s_ratio(sigma, mu) * rising(cplx(0.0, mu), ell) / lf;
    };
    c.f.closed_norm_sq = std::exp(std::lgamma(ell + sigma) - std::lgamma(sigma)) / lf;
    const double g = std::exp(std::lgamma(sigma));

    DisplayForm d;
    d.summand = [sigma, ell](int, double mu) {
        return std::norm(gamma_complex(cplx(sigma, mu)) * rising(cplx(0.0, mu), ell));
    };
    d.kappa = (lf * g) * (lf * g);
    d.normalizer = g;
    const double shown = std::exp(std::lgamma(ell + sigma)) / lf;
    d.rhs = [shown](double S) { return shown * S; };
    c.display = d;
    check_schedule(c);
    return c;
}

CaseInstance gamma_eta_zeta(const Overrides& ov) {
    CaseInstance c;
    c.id = "gamma-eta-zeta";
    c.summary = "gamma measure, f = e^x/(e^x+1)";
    auto [sigma] = gamma_common(c, {}, ov, 2.05);
    c.f.id = "logistic";
    c.f.formula = "f(x) = e^x/(e^x+1)";
    c.f.eval = [](const Point& p) { return cplx(1.0 / (1.0 + std::exp(-p.x))); };
    auto eta_gamma = [sigma](double mu) {
        cplx s(sigma, -mu);
        return (1.0 - std::exp((1.0 - s) * std::log(2.0))) * riemann_zeta(s) * gamma_s_ratio(sigma, mu);
    };
    c.f.closed_coefficient = [eta_gamma](double mu, int) { return eta_gamma(mu); };
    // ||f||^2 = eta(sigma - 1)
    c.f.closed_norm_sq = ((1.0 - std::pow(2.0, 2.0 - sigma)) * riemann_zeta(sigma - 1.0)).real();
    const double zs = riemann_zeta(sigma).real();
    const double eta_s = (1.0 - std::pow(2.0, 1.0 - sigma)) * zs;
    c.display_coefficient = c.f.closed_coefficient;
    c.display_norm_sq = eta_s * sigma;  // (1-2^{1-sigma}) Gamma(sigma+1) zeta(sigma) / Gamma(sigma)
    const double g = std::exp(std::lgamma(sigma));

    DisplayForm d;
    d.summand = [sigma](int, double mu) {
        cplx s(sigma, mu);
        return std::norm((1.0 - std::exp((1.0 - s) * std::log(2.0))) * gamma_complex(s) * riemann_zeta(s));
    };
    d.kappa = g * g;
    d.normalizer = g;
    const double shown = std::pow(2.0, sigma - 1.0) * std::exp(std::lgamma(sigma + 1.0)) * eta_s;
    d.rhs = [shown](double S) { return shown * S; };
    d.relation = "=";
    c.display = d;
    check_schedule(c);
    return c;
}

// e^y K_nu(y) = int_0^inf exp(-y (cosh t - 1)) cosh(nu t) dt
double bessel_K_scaled(double nu, double y) {
    constexpr double h = 1.0 / 32.0;
    KahanSum<double> acc;
    acc.add(0.5);
    for (int j = 1; j < 200000; ++j) {
        double t = j * h;
        double e = -y * 2.0 * std::sinh(0.5 * t) * std::sinh(0.5 * t) + nu * t;
        double term = 0.5 * (std::exp(e) + std::exp(e - 2.0 * nu * t));
        acc.add(term);
        if (term < 1e-18 * acc.value() && y * (std::cosh(t) - 1.0) > nu * t + 40.0) break;
    }
    return h * acc.value();
}

cplx lg(cplx z) { return lgamma_complex(z); }

CaseInstance gamma_besselK(const Overrides& ov) {
    CaseInstance c;
    c.id = "gamma-besselK";
    c.summary = "gamma measure, f = e^{x/2} K_nu(x/2)";
    auto [sigma] = gamma_common(c, {{"nu", 0.5, [](double v) { return v >= 0 && v <= 20; }, "0 <= nu <= 20"}}, ov);
    const double nu = c.params["nu"];
    require(sigma / 2.0 > nu, c.id, "need sigma/2 > nu");
    c.f.id = "scaled-bessel-k";
    c.f.formula = "f(x) = e^{x/2} K_nu(x/2)";
    c.f.eval = [nu](const Point& p) { return cplx(bessel_K_scaled(nu, 0.5 * p.x)); };
    const double lgs = std::lgamma(sigma);
    const double sqpi = std::sqrt(pi);
    c.f.closed_coefficient = [sigma, nu, lgs, sqpi](double mu, int) {
        cplx s(sigma, -mu);
        return sqpi * std::exp(lg(s - nu) + lg(s + nu) - lg(s + 0.5) - lgs);
    };
    const double ggg = std::exp(std::lgamma(sigma / 2 + nu) + std::lgamma(sigma / 2 - nu) + std::lgamma(sigma / 2));
    const double half = std::exp(std::lgamma((sigma + 1) / 2));
    c.f.closed_norm_sq = sqpi * ggg / (std::pow(2.0, 2.0 - sigma) * half * std::exp(lgs));
    const double g = std::exp(lgs);

    DisplayForm d;
    d.summand = [sigma, nu](int, double mu) {
        cplx s(sigma, mu);
        return std::norm(std::exp(lg(s - nu) + lg(s + nu) - lg(s + 0.5)));
    };
    d.kappa = g * g / pi;
    d.normalizer = g;
    const double shown = ggg / (std::pow(2.0, 2.0 - sigma) * sqpi * half);
    d.rhs = [shown](double S) { return shown * S; };
    c.display = d;
    check_schedule(c);
    return c;
}

CaseInstance gamma_besselK_arg(const Overrides& ov) {
    CaseInstance c;
    c.id = "gamma-besselK-arg";
    c.summary = "gamma measure, f = exp(-a^2/(4x))";
    auto [sigma] = gamma_common(c, {{"a", 2.0, [](double v) { return v > 0 && v <= 20; }, "0 < a <= 20"}}, ov);
    const double a = c.params["a"];
    c.f.id = "exp-inverse";
    c.f.formula = "f(x) = exp(-a^2/(4x))";
    c.f.eval = [a](const Point& p) { return cplx(std::exp(-a * a / 4.0 * std::exp(-p.logx))); };
    const double lgs = std::lgamma(sigma);
    // 2 (a/2)^s K_s(a) / Gamma(sigma), s = sigma - i mu
    c.f.closed_coefficient = [sigma, a, lgs](double mu, int) {
        cplx s(sigma, -mu);
        return 2.0 * std::exp(s * std::log(a / 2.0) - lgs) * bessel_K_complex_order(s, a);
    };
    const double ks = bessel_K_complex_order(sigma, std::sqrt(2.0) * a).real();
    c.f.closed_norm_sq = std::pow(2.0, 1.0 - sigma / 2) * std::pow(a, sigma) * ks / std::exp(lgs);
    // As displayed: a^{-s} K_s(a) / (2^{s-1} Gamma(sigma)), norm 2^{sigma/2+1} a^sigma K_sigma(sqrt2 a) / Gamma(sigma).
    c.display_coefficient = [sigma, a, lgs](double mu, int) {
        cplx s(sigma, -mu);
        return std::exp(-s * std::log(a) - (s - 1.0) * std::log(2.0) - lgs) * bessel_K_complex_order(s, a);
    };
    c.display_norm_sq = std::pow(2.0, sigma / 2 + 1.0) * std::pow(a, sigma) * ks / std::exp(lgs);
    const double g = std::exp(lgs);

    DisplayForm d;
    d.summand = [sigma, a](int, double mu) { return std::norm(bessel_K_complex_order(cplx(sigma, mu), a)); };
    d.kappa = g * g * std::pow(a / 2.0, -2.0 * sigma) / 4.0;
    d.normalizer = g;
    const double shown = std::pow(a, 3.0 * sigma) * std::pow(2.0, 2.5 * sigma - 1.0) * ks;
    d.rhs = [shown](double S) { return shown * S; };
    c.display = d;
    check_schedule(c);
    return c;
}

CaseInstance gamma_besselJ_1F1(const Overrides& ov) {
    CaseInstance c;
    c.id = "gamma-besselJ-1F1";
    c.summary = "gamma measure, f = J_nu(a sqrt x)";
    auto [sigma] = gamma_common(c,
                                {{"a", 1.0, [](double v) { return v > 0 && v <= 2; }, "0 < a <= 2"},
                                 {"nu", 1.0, [](double v) { return v >= 0 && v <= 20; }, "0 <= nu <= 20"}},
                                ov);
    const double a = c.params["a"];
    const double nu = c.params["nu"];
    c.f.id = "bessel-j-sqrt";
    c.f.formula = "f(x) = J_nu(a sqrt x)";
    c.f.eval = [a, nu](const Point& p) { return cplx(bessel_J(nu, a * std::sqrt(p.x))); };
    const double lgs = std::lgamma(sigma);
    const double lgn = std::lgamma(nu + 1.0);
    auto coef = [sigma, a, nu, lgs, lgn](double mu, double zarg) {
        cplx s(sigma, -mu);
        cplx w = s + nu / 2.0;
        return std::exp(nu * std::log(a / 2.0) + lg(w) - lgn - lgs) * hyp_pfq({w}, {nu + 1.0}, zarg);
    };
    c.f.closed_coefficient = [coef, a](double mu, int) { return coef(mu, -a * a / 4.0); };
    c.display_coefficient = [coef, a](double mu, int) { return coef(mu, -a * a); };
    const double f22 = hyp_pfq({nu + 0.5, sigma + nu}, {nu + 1.0, 2.0 * nu + 1.0}, -a * a).real();
    c.f.closed_norm_sq = std::pow(a / 2.0, 2.0 * nu) * std::exp(std::lgamma(sigma + nu) - lgs - 2.0 * lgn) * f22;
    const double g = std::exp(lgs);

    DisplayForm d;
    d.summand = [sigma, a, nu](int, double mu) {
        cplx w(sigma + nu / 2.0, -mu);
        return std::norm(gamma_complex(w) * hyp_pfq({w}, {nu + 1.0}, -a * a));
    };
    d.kappa = std::exp(2.0 * (lgn + lgs)) * std::pow(a / 2.0, -2.0 * nu);
    d.normalizer = g;
    const double shown = f22 * std::exp(std::lgamma(sigma + nu));
    d.rhs = [shown](double S) { return shown * S; };
    c.display = d;
    check_schedule(c);
    return c;
}

CaseInstance gamma_2F1(const Overrides& ov) {
    CaseInstance c;
    c.id = "gamma-2F1";
    c.summary = "gamma measure, f = 1F1(a; sigma; x t)";
    auto [sigma] = gamma_common(c,
                                {{"a", 0.5, [](double v) { return v > 0 && v <= 10; }, "0 < a <= 10"},
                                 {"x", 0.3, [](double v) { return v > 0 && v < 0.5; }, "0 < x < 1/2"}},
                                ov);
    const double a = c.params["a"];
    const double x = c.params["x"];
    c.f.id = "kummer";
    c.f.formula = "f(t) = 1F1(a; sigma; x t)";
    c.f.eval = [a, sigma, x](const Point& p) { return hyp_pfq({a}, {sigma}, x * p.x); };
    c.f.closed_coefficient = [a, sigma, x](double mu, int) {
        cplx s(sigma, -mu);
        return gamma_s_ratio(sigma, mu) * hyp_pfq({a, s}, {sigma}, x);
    };
    const double r = x * x / ((1 - x) * (1 - x));
    const double f21 = hyp_pfq({a, a}, {sigma}, r).real();
    c.f.closed_norm_sq = std::pow(1 - x, -2.0 * a) * f21;
    c.display_coefficient = [a, sigma, x](double mu, int) { return hyp_pfq({a, cplx(sigma, -mu)}, {sigma}, x); };
    c.display_norm_sq = std::pow(x, 2.0 * sigma) * std::pow(1 - x, -2.0 * a) * f21;
    const double g = std::exp(std::lgamma(sigma));

    DisplayForm d;
    d.summand = [a, sigma, x](int, double mu) { return std::norm(hyp_pfq({a, cplx(sigma, -mu)}, {sigma}, x)); };
    d.kappa = g * g;
    d.normalizer = g;
    const double shown = std::pow(x, 2.0 * sigma) * f21 / (g * std::pow(1 - x, 2.0 * a));
    d.rhs = [shown](double S) { return shown * S; };
    c.display = d;
    check_schedule(c);
    return c;
}

}  // namespace

// Defined in catalog_cases_more.cpp.
CaseInstance make_beta_case(const std::string& id, const Overrides& ov);
CaseInstance make_discrete_case(const std::string& id, const Overrides& ov);
CaseInstance make_control_case(const Overrides& ov);

CaseInstance make_continuous_case(const std::string& id, const Overrides& ov) {
    if (id == "gauss-integer" || id == "gauss-sqrtlog") return gauss_plain(id, ov);
    if (id == "qgauss-binomial") return qgauss_binomial(ov);
    if (id == "qgauss-aq") return qgauss_aq(ov);
    if (id == "qgauss-aq2") return qgauss_aq2(ov);
    if (id == "qgauss-qbessel") return qgauss_qbessel(ov);
    if (id == "gamma-log") return gamma_log(ov);
    if (id == "gamma-laguerre") return gamma_laguerre(ov);
    if (id == "gamma-eta-zeta") return gamma_eta_zeta(ov);
    if (id == "gamma-besselK") return gamma_besselK(ov);
    if (id == "gamma-besselK-arg") return gamma_besselK_arg(ov);
    if (id == "gamma-besselJ-1F1") return gamma_besselJ_1F1(ov);
    if (id == "gamma-2F1") return gamma_2F1(ov);
    throw Error(ErrorKind::unknown_case, "unknown case '" + id + "'");
}

// Shared helpers for the second translation unit.
namespace catalog_detail {
std::map<std::string, double> resolve_params(const std::string& id,
                                             std::vector<std::tuple<std::string, double, std::function<bool(double)>,
                                                                    std::string>> specs,
                                             const Overrides& ov) {
    std::vector<ParamSpec> s;
    for (auto& [k, v, ok, dom] : specs) s.push_back({k, v, ok, dom});
    return resolve(id, std::move(s), ov);
}
void validate(const CaseInstance& c) { check_schedule(c); }
SchurTailSupplier cached(std::function<double()> f) { return constant_bound(std::move(f)); }
double kernel_bound(const FrequencySchedule& s, const std::function<double(double)>& G,
                    const std::function<double(int)>& tail, int K_max, double stop) {
    return difference_kernel_bound(s, G, tail, K_max, stop);
}
}  // namespace catalog_detail

}  // namespace aos
