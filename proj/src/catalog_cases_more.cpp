#include <cmath>
#include <tuple>

#include "aos/catalog.hpp"
#include "aos/numtheory.hpp"
#include "aos/specfun.hpp"

namespace aos {

namespace catalog_detail {
std::map<std::string, double> resolve_params(const std::string& id,
                                             std::vector<std::tuple<std::string, double, std::function<bool(double)>,
                                                                    std::string>> specs,
                                             const Overrides& ov);
void validate(const CaseInstance& c);
SchurTailSupplier cached(std::function<double()> f);
double kernel_bound(const FrequencySchedule& s, const std::function<double(double)>& G,
                    const std::function<double(int)>& tail, int K_max, double stop);
}  // namespace catalog_detail

using namespace catalog_detail;

namespace {

void require(bool cond, const std::string& id, const std::string& what) {
    if (!cond) throw Error(ErrorKind::invalid_parameter, id + ": " + what);
}

cplx lg(cplx z) { return lgamma_complex(z); }

// ---------------------------------------------------------------- Beta cases

// |B(p+iy,q)/B(p,q)| <= (1 + y^2/(p+q)^2)^{-q/2} <= ((p+q)/y)^q. Past K the
// gaps grow at least like d1 k (or like the power law itself), and the sum is
// compared with an integral.
SchurTailSupplier beta_bound(const FrequencySchedule& s, double p, double q) {
    return cached([s, p, q] {
        const double lb = std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
        auto G = [p, q, lb](double y) {
            return std::exp((lg(cplx(p, y)) + std::lgamma(q) - lg(cplx(p + q, y))).real() - lb);
        };
        auto tail = [&](int K) {
            const double pq = p + q;
            if (s.kind == ScheduleKind::power) {
                const double b = std::max(s.beta, 1.0);
                if (b * q > 1.0) {
                    const double c = s.alpha * std::pow(2.0, s.beta) * (1.0 - std::pow(2.0, -b));
                    return std::pow(pq / c, q) * std::pow(1.0 + K, 1.0 - b * q) / (b * q - 1.0);
                }
            }
            if (q > 1.0) {
                const double d1 = s.min_gap(1);
                return std::pow(pq / d1, q) * std::pow(static_cast<double>(K), 1.0 - q) / (q - 1.0);
            }
            return std::numeric_limits<double>::infinity();
        };
        return kernel_bound(s, G, tail, 100000, 1e-18);
    });
}

struct BetaSetup {
    double p, q, B;
};

BetaSetup beta_common(CaseInstance& c,
                      std::vector<std::tuple<std::string, double, std::function<bool(double)>, std::string>> extra,
                      const Overrides& ov) {
    auto pos = [](double v) { return v > 0 && v <= 50; };
    std::vector<std::tuple<std::string, double, std::function<bool(double)>, std::string>> specs = {
        {"p", 1.5, pos, "0 < p <= 50"},
        {"q", 2.5, pos, "0 < q <= 50"},
        {"alpha", 1.0, [](double v) { return v > 0; }, "alpha > 0"},
        {"beta", 1.0, [](double v) { return v > 0; }, "beta > 0"}};
    for (auto& e : extra) specs.push_back(std::move(e));
    c.params = resolve_params(c.id, std::move(specs), ov);
    BetaSetup b{c.params["p"], c.params["q"], 0.0};
    require(c.params["beta"] * b.q > 1.0, c.id, "need beta q > 1");
    b.B = std::exp(std::lgamma(b.p) + std::lgamma(b.q) - std::lgamma(b.p + b.q));
    MeasureParams mp;
    mp.p = b.p;
    mp.qb = b.q;
    c.space = make_space(MeasureKind::beta, mp);
    c.family.kind = FamilyKind::mellin;
    c.family.schedule = FrequencySchedule::power(c.params["alpha"], c.params["beta"]);
    c.c_upper = beta_bound(c.family.schedule, b.p, b.q);
    return b;
}

// B(p - i lambda, q) / B(p, q)
cplx beta_ratio(double p, double q, double lambda) {
    return std::exp(lg(cplx(p, -lambda)) - lg(cplx(p + q, -lambda)) - std::lgamma(p) + std::lgamma(p + q));
}

CaseInstance beta_log(const Overrides& ov) {
    CaseInstance c;
    c.id = "beta-log";
    c.summary = "beta measure, f = log x";
    auto [p, q, B] = beta_common(c, {}, ov);
    c.f.id = "log";
    c.f.formula = "f(x) = log x";
    c.f.eval = [](const Point& pt) { return cplx(pt.logx); };
    c.f.closed_coefficient = [p = p, q = q](double l, int) {
        return beta_ratio(p, q, l) * (digamma_complex(cplx(p, -l)) - digamma_complex(cplx(p + q, -l)));
    };
    const double dpsi = digamma_complex(p).real() - digamma_complex(p + q).real();
    const double norm = dpsi * dpsi + trigamma_real(p) - trigamma_real(p + q);
    c.f.closed_norm_sq = norm;

    DisplayForm d;
    d.summand = [p = p, q = q, B = B](int, double l) {
        return std::norm(B * beta_ratio(p, q, -l) * (digamma_complex(cplx(p, l)) - digamma_complex(cplx(p + q, l))));
    };
    d.kappa = B * B;
    d.normalizer = B;
    // Displayed: norm * B(p,q) * sup sum |B(p+i Delta, q)|. Read either as the raw
    // Beta sum (S = B C) or as the already normalized Gram sum (S = C).
    d.rhs = [norm, B = B](double S) { return norm * B * S; };
    d.rhs_alt = [norm, B = B](double S) { return norm * B * (S / B); };
    d.alt_label = "sup-sum read as normalized Gram entries";
    c.display = d;
    validate(c);
    return c;
}

CaseInstance beta_2F1(const Overrides& ov) {
    CaseInstance c;
    c.id = "beta-2F1";
    c.summary = "beta measure, f = (1 - z x)^{-a}";
    auto [p, q, B] = beta_common(c,
                                 {{"a_re", 0.5, nullptr, ""},
                                  {"a_im", 0.3, nullptr, ""},
                                  {"z", 0.5, [](double v) { return v > -1 && v < 1; }, "-1 < z < 1"}},
                                 ov);
    const cplx a(c.params["a_re"], c.params["a_im"]);
    const double z = c.params["z"];
    c.f.id = "binomial-power";
    c.f.formula = "f(x) = (1 - z x)^{-a}";
    c.f.eval = [a, z](const Point& pt) { return std::exp(-a * std::log1p(-z * pt.x)); };
    c.f.closed_coefficient = [p = p, q = q, a, z](double l, int) {
        return beta_ratio(p, q, l) * hyp_pfq({a, cplx(p, -l)}, {cplx(p + q, -l)}, z);
    };
    const double f21 = hyp_pfq({2.0 * a.real(), p}, {p + q}, z).real();
    c.f.closed_norm_sq = f21;

    DisplayForm d;
    d.summand = [p = p, q = q, B = B, a, z](int, double l) {
        return std::norm(B * beta_ratio(p, q, l) * hyp_pfq({a, cplx(p, -l)}, {cplx(p + q, -l)}, z));
    };
    d.kappa = B * B;
    d.normalizer = B;
    d.rhs = [f21, B = B](double S) { return B * f21 * S; };
    c.display = d;
    validate(c);
    return c;
}

double binom_real(double top, int k) {
    // C(top, k) for real top
    double r = 1.0;
    for (int j = 0; j < k; ++j) r *= (top - j) / (j + 1.0);
    return r;
}

CaseInstance beta_jacobi(const Overrides& ov) {
    CaseInstance c;
    c.id = "beta-jacobi";
    c.summary = "beta measure, f = P_l^{(p-1,q-1)}(2x-1)";
    auto [p, q, B] = beta_common(
        c, {{"ell", 2.0, [](double v) { return v >= 0 && v <= 20 && v == std::floor(v); }, "integer 0 <= ell <= 20"}},
        ov);
    const int ell = static_cast<int>(c.params["ell"]);
    c.f.id = "jacobi";
    c.f.formula = "f(x) = P_ell^{(p-1,q-1)}(2x-1)";
    c.f.eval = [ell, p = p, q = q](const Point& pt) { return cplx(jacobi(ell, p - 1.0, q - 1.0, 2.0 * pt.x - 1.0)); };
    const double lf = std::lgamma(ell + 1.0);
    // Gamma(ell+q) B(p-i lambda,q) / ((-1)^ell ell! Gamma(q) B) 3F2(-ell, ell+p+q-1, p-i lambda; q, p+q-i lambda; 1)
    auto coef = [ell, p = p, q = q, lf](double l) {
        const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
        const double pre = sign * std::exp(std::lgamma(ell + q) - lf - std::lgamma(q));
        cplx h = hyp_pfq({-static_cast<double>(ell), ell + p + q - 1.0, cplx(p, -l)}, {q, cplx(p + q, -l)}, 1.0);
        return pre * beta_ratio(p, q, l) * h;
    };
    c.f.closed_coefficient = [coef](double l, int) { return coef(l); };
    // f = sum_k C(ell+p-1, ell-k) C(ell+q-1, k) (x-1)^k x^{ell-k}, so
    // ||f||^2 = sum_{j,k} c_j c_k (-1)^{j+k} B(p + 2 ell - j - k, q + j + k) / B(p, q).
    {
        KahanSum<double> acc;
        for (int j = 0; j <= ell; ++j)
            for (int k = 0; k <= ell; ++k) {
                double cj = binom_real(ell + p - 1.0, ell - j) * binom_real(ell + q - 1.0, j);
                double ck = binom_real(ell + p - 1.0, ell - k) * binom_real(ell + q - 1.0, k);
                double sgn = ((j + k) % 2 == 0) ? 1.0 : -1.0;
                double lb = std::lgamma(p + 2.0 * ell - j - k) + std::lgamma(q + j + k) - std::lgamma(p + q + 2.0 * ell);
                acc.add(sgn * cj * ck * std::exp(lb) / B);
            }
        c.f.closed_norm_sq = acc.value();
    }
    const double shown_norm = std::exp(std::lgamma(ell + p) + std::lgamma(ell + q) - lf - std::lgamma(ell + p + q - 1.0)) /
                              ((2.0 * ell + p + q - 1.0) * B);
    c.display_coefficient = c.f.closed_coefficient;
    c.display_norm_sq = shown_norm;

    DisplayForm d;
    d.summand = [ell, p = p, q = q, B = B](int, double l) {
        cplx h = hyp_pfq({-static_cast<double>(ell), ell + p + q - 1.0, cplx(p, -l)}, {q, cplx(p + q, -l)}, 1.0);
        return std::norm(B * beta_ratio(p, q, l) * h);
    };
    const double k = std::exp(lf + std::lgamma(q) - std::lgamma(ell + q)) * B;
    d.kappa = k * k;
    d.normalizer = B;
    const double shown = std::exp(lf + std::lgamma(ell + p) + 2.0 * std::lgamma(q) - std::lgamma(ell + p + q - 1.0) -
                                  std::lgamma(ell + q)) /
                         (2.0 * ell + p + q - 1.0);
    d.rhs = [shown](double S) { return shown * S; };
    c.display = d;
    validate(c);
    return c;
}

CaseInstance beta_besselJ(const Overrides& ov) {
    CaseInstance c;
    c.id = "beta-besselJ";
    c.summary = "beta measure, f = J_{2 nu}(sqrt x)";
    auto [p, q, B] = beta_common(c, {{"nu", 0.5, [](double v) { return v >= 0 && v <= 10; }, "0 <= nu <= 10"}}, ov);
    const double nu = c.params["nu"];
    c.f.id = "bessel-j-sqrt";
    c.f.formula = "f(x) = J_{2 nu}(sqrt x)";
    c.f.eval = [nu](const Point& pt) { return cplx(bessel_J(2.0 * nu, std::sqrt(pt.x))); };
    const double lg2 = std::lgamma(2.0 * nu + 1.0);
    // B(q, p - i lambda + nu) / (4^nu Gamma(2nu+1) B) 1F2(p - i lambda + nu; 2nu+1, p+q - i lambda + nu; -1/4)
    c.f.closed_coefficient = [p = p, q = q, nu, lg2](double l, int) {
        cplx w(p + nu, -l);
        cplx pre = std::exp(lg(w) + std::lgamma(q) - lg(w + q) - nu * std::log(4.0) - lg2 - std::lgamma(p) -
                            std::lgamma(q) + std::lgamma(p + q));
        return pre * hyp_pfq({w}, {2.0 * nu + 1.0, w + q}, -0.25);
    };
    const double f23 =
        hyp_pfq({p + 2.0 * nu, 2.0 * nu + 0.5}, {p + q + 2.0 * nu, 2.0 * nu + 1.0, 4.0 * nu + 1.0}, -1.0).real();
    const double Bs = std::exp(std::lgamma(p + 2.0 * nu) + std::lgamma(q) - std::lgamma(p + q + 2.0 * nu));
    c.f.closed_norm_sq = std::pow(16.0, -nu) * Bs / (std::exp(2.0 * lg2) * B) * f23;

    DisplayForm d;
    d.summand = [p = p, q = q, nu](int, double l) {
        cplx w(p + nu, l);
        return std::norm(std::exp(lg(w) + std::lgamma(q) - lg(w + q)) * hyp_pfq({w}, {2.0 * nu + 1.0, w + q}, -0.25));
    };
    const double k = std::pow(4.0, nu) * std::exp(lg2) * B;
    d.kappa = k * k;
    d.normalizer = B;
    d.rhs = [Bs, f23](double S) { return Bs * S * f23; };
    c.display = d;
    validate(c);
    return c;
}

// ---------------------------------------------------------------- discrete cases

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// Bound on sum_{k>=2} Lambda(k) k^{-s} for real s > 1.
double mangoldt_majorant(double s) {
    const double l2 = std::log(2.0), l3 = std::log(3.0);
    return l2 * std::pow(2.0, -s) + l3 * std::pow(3.0, -s) +
           std::pow(3.0, 1.0 - s) * (l3 / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
}

// Gram entries decrease in lambda_m, so row 1 carries the sup; beyond N they are
// majorized through lambda_n >= n - 1 and successive terms shrink by at least half.
SchurTailSupplier discrete_bound(const WeightedMeasure& space, const FrequencySchedule& s) {
    return [space, s](int N) {
        const double l1 = s.lambda(1);
        KahanSum<double> acc;
        for (int n = 1; n <= N; ++n) acc.add(std::abs(gram_closed(space, l1, s.lambda(n))));
        const double x = space.params.sigma + l1 + N;
        double tail;
        if (space.kind == MeasureKind::discrete_mangoldt) {
            tail = 2.0 * space.normalizer() * mangoldt_majorant(x);
        } else {
            tail = 2.0 * space.normalizer() * std::pow(2.0, -x) * (1.0 + 2.0 / (x - 1.0));
        }
        return acc.value() + tail;
    };
}

enum class Arith { one, chi, mu, muchi, liouville };

CaseInstance discrete_case(const std::string& id, MeasureKind kind, Arith ar, const Overrides& ov) {
    CaseInstance c;
    c.id = id;
    const bool uses_chi = ar == Arith::chi || ar == Arith::muchi;
    std::vector<std::tuple<std::string, double, std::function<bool(double)>, std::string>> specs = {
        {"sigma", 3.0, [](double v) { return v > 1 && v <= 30; }, "1 < sigma <= 30"},
        {"t", 1.0, [](double v) { return std::abs(v) <= 50; }, "|t| <= 50"}};
    if (uses_chi) {
        specs.push_back({"chi_mod", 4.0, [](double v) { return v >= 1 && v <= 1000 && v == std::floor(v); },
                         "integer 1 <= chi_mod <= 1000"});
        specs.push_back({"chi_index", 1.0, [](double v) { return v >= 0 && v == std::floor(v); }, "integer >= 0"});
    }
    c.params = resolve_params(id, std::move(specs), ov);
    const double sigma = c.params["sigma"];
    const double t = c.params["t"];
    require(kind != MeasureKind::discrete_mangoldt || sigma >= 1.5, id,
            "sigma >= 1.5 needed for the cross-checked log-derivative");
    DirichletCharacter chi;
    std::vector<int> qp;
    if (uses_chi) {
        const int m = static_cast<int>(c.params["chi_mod"]);
        const int idx = static_cast<int>(c.params["chi_index"]);
        require(idx < character_count(m), id, "chi_index out of range for chi_mod");
        chi = character(m, idx);
        qp = prime_divisors(m);
    }
    MeasureParams mp;
    mp.sigma = sigma;
    c.space = make_space(kind, mp);
    c.family.kind = FamilyKind::dirichlet;
    c.family.schedule = FrequencySchedule::shifted();
    c.c_upper = discrete_bound(c.space, c.family.schedule);
    const double norm = c.space.normalizer();
    const SieveTable* sv = &shared_sieve();

    auto arith = [ar, chi, sv](std::int64_t k) -> cplx {
        switch (ar) {
            case Arith::one: return 1.0;
            case Arith::chi: return chi(k);
            case Arith::mu: return static_cast<double>(sv->mobius[static_cast<std::size_t>(k)]);
            case Arith::muchi: return static_cast<double>(sv->mobius[static_cast<std::size_t>(k)]) * chi(k);
            case Arith::liouville: return static_cast<double>(sv->liouville[static_cast<std::size_t>(k)]);
        }
        return 0.0;
    };
    c.f.eval = [arith, t](const Point& pt) { return arith(pt.k) * std::polar(1.0, -t * pt.logx); };
    c.f.sup_abs = 1.0;
    const double zs1 = zeta_minus_one(sigma).real();

    if (kind == MeasureKind::discrete_mangoldt) {
        // f_n = c_M sum a(k) Lambda(k) k^{-w}, w = sigma + lambda_n + i t
        std::function<cplx(cplx)> minus_logderiv;
        switch (ar) {
            case Arith::one:
                c.f.id = "one";
                minus_logderiv = [](cplx w) { return -zeta_log_derivative_analytic(w); };
                c.f.closed_norm_sq = 1.0;
                break;
            case Arith::liouville:
                c.f.id = "liouville";
                minus_logderiv = [](cplx w) {
                    return zeta_log_derivative_analytic(w) - 2.0 * zeta_log_derivative_analytic(2.0 * w);
                };
                c.f.closed_norm_sq = 1.0;
                break;
            case Arith::chi: {
                c.f.id = "character";
                minus_logderiv = [chi](cplx w) { return -dirichlet_L_log_derivative(w, chi); };
                double cut = 0.0;
                for (int p : qp) cut += std::log(static_cast<double>(p)) / (std::pow(p, sigma) - 1.0);
                c.f.closed_norm_sq = 1.0 - norm * cut;
                break;
            }
            default: throw Error(ErrorKind::invalid_parameter, id + ": unsupported arithmetic function");
        }
        c.f.formula = "f(k) = a(k) k^{-it}";
        c.f.closed_coefficient = [minus_logderiv, sigma, t, norm](double l, int) {
            return norm * minus_logderiv(cplx(sigma + l, t));
        };
        DisplayForm d;
        d.summand = [minus_logderiv, sigma, t](int, double l) { return std::norm(minus_logderiv(cplx(sigma + l, t))); };
        d.kappa = 1.0 / (norm * norm);
        d.rhs = [norm](double S) { return S / (norm * norm); };
        c.display = d;
        c.summary = "von Mangoldt measure, f(k) = " + c.f.id + "(k) k^{-it}";
    } else {
        // f_n = (1/(zeta(sigma)-1)) sum_{k>=2} a(k) k^{-w}
        std::function<cplx(cplx)> series_minus_one;
        double true_sum = zs1;   // sum_{k>=2} |a(k)|^2 k^{-sigma}
        double shown_sum = zs1;  // the constant as displayed
        const double zs = 1.0 + zs1;
        const double z2s = riemann_zeta(2.0 * sigma).real();
        double euler_chi = 1.0, euler_sq = 1.0;
        for (int p : qp) {
            euler_chi *= 1.0 - std::pow(p, -sigma);
            euler_sq /= 1.0 + std::pow(p, -sigma);
        }
        switch (ar) {
            case Arith::one:
                c.f.id = "one";
                series_minus_one = [](cplx w) { return zeta_minus_one(w); };
                break;
            case Arith::chi:
                c.f.id = "character";
                series_minus_one = [chi](cplx w) { return dirichlet_L_minus_one(w, chi); };
                true_sum = zs * euler_chi - 1.0;
                break;
            case Arith::mu:
                c.f.id = "mobius";
                series_minus_one = [](cplx w) {
                    cplx e = zeta_minus_one(w);
                    return -e / (1.0 + e);
                };
                true_sum = zs / z2s - 1.0;
                shown_sum = true_sum;
                break;
            case Arith::muchi:
                c.f.id = "mobius-character";
                series_minus_one = [chi](cplx w) {
                    cplx e = dirichlet_L_minus_one(w, chi);
                    return -e / (1.0 + e);
                };
                true_sum = zs / z2s * euler_sq - 1.0;
                shown_sum = zs / z2s - 1.0;
                break;
            case Arith::liouville:
                c.f.id = "liouville";
                series_minus_one = [](cplx w) {
                    cplx e1 = zeta_minus_one(w);
                    cplx e2 = zeta_minus_one(2.0 * w);
                    return (e2 - e1) / (1.0 + e1);
                };
                break;
        }
        c.f.formula = "f(k) = a(k) k^{-it}";
        c.f.closed_coefficient = [series_minus_one, sigma, t, norm](double l, int) {
            return norm * series_minus_one(cplx(sigma + l, t));
        };
        c.f.closed_norm_sq = true_sum / zs1;
        DisplayForm d;
        d.summand = [series_minus_one, sigma, t](int, double l) {
            return std::norm(series_minus_one(cplx(sigma + l, t)));
        };
        d.kappa = zs1 * zs1;
        d.normalizer = zs1;
        d.rhs = [shown_sum](double S) { return shown_sum * S; };
        c.display = d;
        c.summary = "zeta-tail measure, f(k) = " + c.f.id + "(k) k^{-it}";
    }
    c.oracle_tol = 1e-7;
    validate(c);
    return c;
}

}  // namespace

CaseInstance make_beta_case(const std::string& id, const Overrides& ov) {
    if (id == "beta-log") return beta_log(ov);
    if (id == "beta-2F1") return beta_2F1(ov);
    if (id == "beta-jacobi") return beta_jacobi(ov);
    if (id == "beta-besselJ") return beta_besselJ(ov);
    throw Error(ErrorKind::unknown_case, "unknown case '" + id + "'");
}

CaseInstance make_discrete_case(const std::string& id, const Overrides& ov) {
    using MK = MeasureKind;
    if (id == "mangoldt-zeta") return discrete_case(id, MK::discrete_mangoldt, Arith::one, ov);
    if (id == "mangoldt-liouville") return discrete_case(id, MK::discrete_mangoldt, Arith::liouville, ov);
    if (id == "mangoldt-L") return discrete_case(id, MK::discrete_mangoldt, Arith::chi, ov);
    if (id == "zetatail-one") return discrete_case(id, MK::discrete_zeta_tail, Arith::one, ov);
    if (id == "zetatail-chi") return discrete_case(id, MK::discrete_zeta_tail, Arith::chi, ov);
    if (id == "zetatail-mu") return discrete_case(id, MK::discrete_zeta_tail, Arith::mu, ov);
    if (id == "zetatail-muchi") return discrete_case(id, MK::discrete_zeta_tail, Arith::muchi, ov);
    if (id == "zetatail-liouville") return discrete_case(id, MK::discrete_zeta_tail, Arith::liouville, ov);
    throw Error(ErrorKind::unknown_case, "unknown case '" + id + "'");
}

CaseInstance make_control_case(const Overrides& ov) {
    CaseInstance c;
    c.id = "control-orthonormal";
    c.summary = "uniform measure on the circle, lambda_n = n, f in the span of phi_1..phi_3";
    c.params = resolve_params(c.id, {}, ov);
    c.space = make_space(MeasureKind::circle_uniform, {});
    c.family.kind = FamilyKind::fourier;
    c.family.schedule = FrequencySchedule::integer();
    static const cplx coef[3] = {1.0, 0.5, cplx(0.0, -0.25)};
    c.f.id = "trigonometric-polynomial";
    c.f.formula = "f(x) = e^{ix} + e^{2ix}/2 - i e^{3ix}/4";
    c.f.eval = [](const Point& p) {
        return coef[0] * std::polar(1.0, p.x) + coef[1] * std::polar(1.0, 2.0 * p.x) + coef[2] * std::polar(1.0, 3.0 * p.x);
    };
    c.f.closed_coefficient = [](double l, int) -> cplx {
        for (int j = 1; j <= 3; ++j)
            if (l == j) return coef[j - 1];
        return 0.0;
    };
    c.f.closed_norm_sq = 1.0 + 0.25 + 0.0625;
    c.c_upper = [](int) { return 1.0; };
    DisplayForm d;
    d.summand = [](int, double l) {
        for (int j = 1; j <= 3; ++j)
            if (l == j) return std::norm(coef[j - 1]);
        return 0.0;
    };
    const double nrm = *c.f.closed_norm_sq;
    d.rhs = [nrm](double S) { return S * nrm; };
    c.display = d;
    validate(c);
    return c;
}

}  // namespace aos
