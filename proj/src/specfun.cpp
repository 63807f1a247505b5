#include "aos/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "aos/numtheory.hpp"
#include "aos/quadrature.hpp"

namespace aos {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// B_2, B_4, ..., B_20.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6,     -1.0 / 30,        1.0 / 42,   -1.0 / 30,       5.0 / 66,
    -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330};

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

cplx lgamma_lanczos(cplx z) {
    // Valid for Re z >= 0.5.
    z -= 1.0;
    cplx a = kLanczos[0];
    for (int k = 1; k < 9; ++k) a += kLanczos[k] / (z + static_cast<double>(k));
    cplx t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

cplx lgamma_complex(cplx z) {
    if (is_nonpositive_integer(z)) throw Error(ErrorKind::domain_error, "lgamma_complex: pole at nonpositive integer");
    if (z.real() >= 0.5) return lgamma_lanczos(z);
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(pi) - std::log(std::sin(pi * z)) - lgamma_lanczos(1.0 - z);
}

cplx gamma_complex(cplx z) { return std::exp(lgamma_complex(z)); }

cplx gamma_ratio(double sigma, double y) {
    if (!(sigma > 0)) throw Error(ErrorKind::invalid_parameter, "gamma_ratio: sigma must be positive");
    if (y == 0.0) return 1.0;
    return std::exp(lgamma_complex({sigma, y}) - lgamma_complex({sigma, 0.0}));
}

cplx digamma_complex(cplx z) {
    if (is_nonpositive_integer(z)) throw Error(ErrorKind::domain_error, "digamma_complex: pole at nonpositive integer");
    if (z.real() < 0.5) return digamma_complex(1.0 - z) - pi / std::tan(pi * z);
    cplx shift = 0.0;
    while (z.real() < 15.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    cplx z2 = 1.0 / (z * z);
    cplx zp = z2;
    cplx series = 0.0;
    for (int k = 0; k < 7; ++k) {
        series += kBernoulli[k] / (2.0 * (k + 1)) * zp;
        zp *= z2;
    }
    return shift + std::log(z) - 0.5 / z - series;
}

double trigamma_real(double x) {
    if (!(x > 0)) throw Error(ErrorKind::domain_error, "trigamma_real: x must be positive");
    double shift = 0.0;
    while (x < 15.0) {
        shift += 1.0 / (x * x);
        x += 1.0;
    }
    double x2 = 1.0 / (x * x);
    double xp = x2 / x;
    double series = 0.0;
    for (int k = 0; k < 7; ++k) {
        series += kBernoulli[k] * xp;
        xp *= x2;
    }
    return shift + 1.0 / x + 0.5 * x2 + series;
}

// ---------------------------------------------------------------- zeta family

namespace {

constexpr int kEtaTerms = 64;

// Borwein's Chebyshev weights e_k = (d_k - d_n)/d_n, k < n.
const std::array<double, kEtaTerms>& eta_weights() {
    static const std::array<double, kEtaTerms> w = [] {
        const int n = kEtaTerms;
        std::array<double, kEtaTerms + 1> d{};
        double term = 1.0;
        double acc = 1.0;
        d[0] = acc;
        for (int i = 0; i < n; ++i) {
            term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
            acc += term;
            d[i + 1] = acc;
        }
        std::array<double, kEtaTerms> out{};
        for (int k = 0; k < n; ++k) out[k] = (d[k] - d[n]) / d[n];
        return out;
    }();
    return w;
}

// Euler-Maclaurin for sum_{k>=0} (k+a)^{-s}, any a > 0.
cplx hurwitz_core(cplx s, double a) {
    const int M = std::max(12, static_cast<int>(std::ceil((std::abs(s) + 20.0) / 3.0)));
    KahanSum<cplx> head;
    for (int k = M - 1; k >= 0; --k) head.add(std::exp(-s * std::log(k + a)));
    const double x = M + a;
    const double lx = std::log(x);
    cplx xs = std::exp(-s * lx);  // x^{-s}
    cplx sum = head.value() + xs * x / (s - 1.0) + 0.5 * xs;
    // B_{2j}/(2j)! s (s+1)...(s+2j-2) x^{-s-2j+1}
    cplx poch = s;
    cplx pw = xs / x;
    double fact = 2.0;
    for (int j = 1; j <= 10; ++j) {
        sum += kBernoulli[j - 1] / fact * poch * pw;
        poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        pw /= x * x;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return sum;
}

void require_half_plane(cplx s, double min_re, const char* who) {
    if (!(s.real() >= min_re))
        throw Error(ErrorKind::domain_error, std::string(who) + ": Re s below " + std::to_string(min_re));
}

// Richardson-extrapolated central difference of an analytic function.
template <class F>
cplx analytic_derivative(F&& f, cplx s, double h) {
    auto D = [&](double hh) { return (f(s + hh) - f(s - hh)) / (2.0 * hh); };
    cplx d0 = D(h), d1 = D(h / 2), d2 = D(h / 4);
    cplx r1 = (4.0 * d1 - d0) / 3.0;
    cplx r2 = (4.0 * d2 - d1) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

double step_for(cplx s) { return std::min(0.01, (s.real() - 1.0) / 16.0); }

// sum_{k>K} log k k^{-sigma} <= K^{1-sigma} (log K/(sigma-1) + 1/(sigma-1)^2)
double mangoldt_tail(double K, double sigma) {
    double d = sigma - 1.0;
    return std::pow(K, -d) * (std::log(K) / d + 1.0 / (d * d));
}

}  // namespace

cplx riemann_zeta(cplx s) {
    require_half_plane(s, 1.05, "riemann_zeta");
    const auto& w = eta_weights();
    KahanSum<cplx> acc;
    for (int k = kEtaTerms - 1; k >= 0; --k) {
        cplx t = w[k] * std::exp(-s * std::log(k + 1.0));
        acc.add((k % 2 == 0) ? t : -t);
    }
    cplx eta = -acc.value();
    return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

cplx zeta_minus_one(cplx s) {
    require_half_plane(s, 1.05, "zeta_minus_one");
    return hurwitz_core(s, 2.0);
}

cplx zeta_log_derivative_analytic(cplx s) {
    require_half_plane(s, 1.05, "zeta_log_derivative");
    cplx d = analytic_derivative([](cplx u) { return zeta_minus_one(u); }, s, step_for(s));
    return d / (1.0 + zeta_minus_one(s));
}

LogDerivativePaths zeta_log_derivative_paths(cplx s) {
    require_half_plane(s, 1.5, "zeta_log_derivative");
    LogDerivativePaths r;
    r.analytic = zeta_log_derivative_analytic(s);

    const SieveTable& sv = shared_sieve();
    const double sigma = s.real();
    // Stop at the first prime power past the point where the tail is below 1e-12.
    std::int64_t K = sv.limit;
    {
        double lo = 2, hi = static_cast<double>(sv.limit);
        if (mangoldt_tail(hi, sigma) <= 1e-12) {
            while (hi - lo > 1) {
                double mid = std::floor(0.5 * (lo + hi));
                (mangoldt_tail(mid, sigma) <= 1e-12 ? hi : lo) = mid;
            }
            K = static_cast<std::int64_t>(hi);
        }
    }
    KahanSum<cplx> acc;
    for (std::int32_t k : sv.prime_powers) {
        if (k > K) break;
        acc.add(sv.mangoldt[k] * std::exp(-s * std::log(static_cast<double>(k))));
    }
    r.series = -acc.value();
    r.series_tail = mangoldt_tail(static_cast<double>(K), sigma);
    r.discrepancy = std::abs(r.analytic - r.series);
    return r;
}

cplx zeta_log_derivative(cplx s) {
    LogDerivativePaths p = zeta_log_derivative_paths(s);
    if (p.discrepancy > 1e-7 + p.series_tail)
        throw Error(ErrorKind::numerical_inconsistency,
                    "zeta_log_derivative: analytic and Dirichlet-series paths disagree", p.discrepancy);
    return p.analytic;
}

cplx hurwitz_zeta(cplx s, double a) {
    require_half_plane(s, 1.05, "hurwitz_zeta");
    if (!(a > 0.0 && a <= 1.0)) throw Error(ErrorKind::domain_error, "hurwitz_zeta: a must lie in (0, 1]");
    return hurwitz_core(s, a);
}

cplx dirichlet_L(cplx s, const DirichletCharacter& chi) {
    require_half_plane(s, 1.05, "dirichlet_L");
    return 1.0 + dirichlet_L_minus_one(s, chi);
}

cplx dirichlet_L_minus_one(cplx s, const DirichletCharacter& chi) {
    require_half_plane(s, 1.05, "dirichlet_L");
    const int q = chi.modulus;
    const double dq = q;
    // L - 1 = q^{-s} [ zeta(s, 1 + 1/q) + sum_{a=2}^{q} chi(a) zeta(s, a/q) ]
    cplx acc = hurwitz_core(s, 1.0 + 1.0 / dq);
    for (int a = 2; a <= q; ++a) {
        cplx c = chi(a);
        if (c != 0.0) acc += c * hurwitz_core(s, a / dq);
    }
    return std::exp(-s * std::log(dq)) * acc;
}

cplx dirichlet_L_log_derivative(cplx s, const DirichletCharacter& chi) {
    require_half_plane(s, 1.05, "dirichlet_L");
    cplx d = analytic_derivative([&](cplx u) { return dirichlet_L_minus_one(u, chi); }, s, step_for(s));
    return d / dirichlet_L(s, chi);
}

// ---------------------------------------------------------------- Bessel

cplx bessel_K_complex_order(cplx nu, double x) {
    if (!(x > 0)) throw Error(ErrorKind::domain_error, "bessel_K_complex_order: x must be positive");
    if (std::abs(nu.real()) > 20.0 || std::abs(nu.imag()) > 256.0)
        throw Error(ErrorKind::domain_error, "bessel_K_complex_order: order outside |Re| <= 20, |Im| <= 256");
    // K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt; the integrand is even
    // in t, so the trapezoid rule converges geometrically.
    constexpr double h = 1.0 / 64.0;
    const double a = std::abs(nu.real());
    KahanSum<cplx> acc;
    acc.add(0.5 * std::exp(-x));
    for (int k = 1;; ++k) {
        double t = k * h;
        double e = -x * std::cosh(t);
        if (e + a * t < -745.0) break;
        acc.add(std::exp(e) * std::cosh(nu * t));
    }
    return h * acc.value();
}

namespace {

double bessel_J_series(double nu, double x) {
    const long double half = 0.5L * x;
    long double term = std::exp(nu * std::log(static_cast<long double>(half)) - std::lgamma(nu + 1.0L));
    long double sum = term;
    const long double q = -half * half;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<long double>(k) * (nu + k));
        sum += term;
        if (std::fabs(term) <= 1e-21L * std::fabs(sum) && k > half) break;
    }
    return static_cast<double>(sum);
}

// Schlafli's integral; used where the alternating series loses too many digits.
double bessel_J_integral(double nu, double x) {
    static const QuadratureRule rule = tanh_sinh_rule(9);
    KahanSum<double> first, second;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double th = pi * rule.nodes[i];
        first.add(rule.weights[i] * std::cos(nu * th - x * std::sin(th)));
        // t = -log(1 - y) maps (0,1) to (0,inf); dt = dy / (1 - y)
        double c = rule.complement[i];
        double t = -std::log(c);
        second.add(rule.weights[i] / c * std::exp(-x * std::sinh(t) - nu * t));
    }
    return first.value() - std::sin(nu * pi) / pi * second.value();
}

}  // namespace

double bessel_J(double nu, double x) {
    if (!(nu >= 0 && nu <= 30) || !(x >= 0 && x <= 60))
        throw Error(ErrorKind::domain_error, "bessel_J: need 0 <= nu <= 30 and 0 <= x <= 60");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= 25.0) return bessel_J_series(nu, x);
    return bessel_J_integral(nu, x);
}

// ---------------------------------------------------------------- pFq

HypergeometricSum hyp_pfq_detail(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx z) {
    const std::size_t p = upper.size(), q = lower.size();
    // Termination order: the smallest nonpositive-integer upper parameter.
    long terminate_at = -1;
    for (cplx a : upper)
        if (is_nonpositive_integer(a)) {
            long n = static_cast<long>(-a.real());
            if (terminate_at < 0 || n < terminate_at) terminate_at = n;
        }
    for (cplx b : lower)
        if (is_nonpositive_integer(b)) {
            long m = static_cast<long>(-b.real());
            if (terminate_at < 0 || m < terminate_at)
                throw Error(ErrorKind::pole_error, "hyp_pfq: lower parameter hits a nonpositive integer");
        }

    const double az = std::abs(z);
    bool at_one = false;
    double excess = 0.0;  // Re(sum lower - sum upper)
    if (terminate_at < 0) {
        if (p > q + 1) throw Error(ErrorKind::domain_error, "hyp_pfq: divergent series (p > q + 1)");
        if (p == q + 1) {
            for (cplx b : lower) excess += b.real();
            for (cplx a : upper) excess -= a.real();
            if (az > 1.0 || (az == 1.0 && !(z == 1.0 && excess > 0.0)))
                throw Error(ErrorKind::domain_error, "hyp_pfq: outside the disc of convergence");
            at_one = (az == 1.0);
        }
    }

    double pmax = 0.0;
    for (cplx a : upper) pmax = std::max(pmax, std::abs(a));
    for (cplx b : lower) pmax = std::max(pmax, std::abs(b));

    auto ratio = [&](long k) {
        cplx r = z / static_cast<double>(k + 1);
        for (cplx a : upper) r *= a + static_cast<double>(k);
        for (cplx b : lower) r /= b + static_cast<double>(k);
        return r;
    };

    HypergeometricSum out;
    KahanSum<cplx> acc;
    cplx term = 1.0;
    const long cap = at_one ? 200000 : 100000;
    for (long k = 0; k < cap; ++k) {
        acc.add(term);
        out.terms = static_cast<int>(k + 1);
        if (terminate_at >= 0 && k == terminate_at) {
            out.value = acc.value();
            return out;
        }
        cplx r = ratio(k);
        cplx next = term * r;
        if (terminate_at < 0 && !at_one && k > 2.0 * pmax + 2.0) {
            double rho = std::abs(r);
            double rmax = (p == q + 1) ? std::max(rho, az) : rho;
            if (rmax < 1.0) {
                double tb = std::abs(next) / (1.0 - rmax);
                if (tb <= 1e-17 * std::abs(acc.value()) || tb == 0.0) {
                    out.value = acc.value();
                    out.tail_bound = tb;
                    return out;
                }
            }
        }
        term = next;
    }
    if (at_one) {
        // Terms behave like k^{-(1+excess)}; add the matching integral tail.
        double K = static_cast<double>(cap);
        cplx tail = term * (K / excess + 0.5);
        out.value = acc.value() + tail;
        out.tail_bound = 4.0 * std::abs(term);
        return out;
    }
    throw Error(ErrorKind::tolerance_not_met, "hyp_pfq: series did not settle", std::abs(term));
}

cplx hyp_pfq(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx z) {
    return hyp_pfq_detail(upper, lower, z).value;
}

// ---------------------------------------------------------------- polynomials

double laguerre(int ell, double alpha, double x) {
    if (ell < 0 || ell > 200) throw Error(ErrorKind::invalid_parameter, "laguerre: ell must be in [0, 200]");
    if (!(alpha > -1)) throw Error(ErrorKind::invalid_parameter, "laguerre: alpha must exceed -1");
    double l0 = 1.0;
    if (ell == 0) return l0;
    double l1 = 1.0 + alpha - x;
    for (int k = 1; k < ell; ++k) {
        double l2 = ((2.0 * k + 1.0 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

double jacobi(int ell, double alpha, double beta, double x) {
    if (ell < 0 || ell > 200) throw Error(ErrorKind::invalid_parameter, "jacobi: ell must be in [0, 200]");
    if (!(alpha > -1) || !(beta > -1)) throw Error(ErrorKind::invalid_parameter, "jacobi: alpha, beta must exceed -1");
    double p0 = 1.0;
    if (ell == 0) return p0;
    double p1 = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
    const double ab = alpha + beta;
    for (int n = 1; n < ell; ++n) {
        double c = 2.0 * n + ab;
        double a1 = 2.0 * (n + 1) * (n + ab + 1.0) * c;
        double a2 = (c + 1.0) * (alpha * alpha - beta * beta);
        double a3 = c * (c + 1.0) * (c + 2.0);
        double a4 = 2.0 * (n + alpha) * (n + beta) * (c + 2.0);
        double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

cplx beta_complex(cplx p_shift, double q) {
    if (!(p_shift.real() > 0)) throw Error(ErrorKind::domain_error, "beta_complex: Re p must be positive");
    if (!(q > 0)) throw Error(ErrorKind::domain_error, "beta_complex: q must be positive");
    return std::exp(lgamma_complex(p_shift) + lgamma_complex(q) - lgamma_complex(p_shift + q));
}

}  // namespace aos
