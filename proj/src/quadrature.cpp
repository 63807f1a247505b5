#include "aos/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "aos/operator.hpp"
#include "aos/specfun.hpp"

namespace aos {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::domain_error: return "domain-error";
        case ErrorKind::tolerance_not_met: return "tolerance-not-met";
        case ErrorKind::numerical_inconsistency: return "numerical-inconsistency";
        case ErrorKind::pole_error: return "pole-error";
        case ErrorKind::unsupported_mode: return "unsupported-mode";
        case ErrorKind::unknown_case: return "unknown-case";
        case ErrorKind::unsupported: return "unsupported";
    }
    return "error";
}

const char* to_string(RuleKind k) {
    switch (k) {
        case RuleKind::gauss_hermite: return "gauss-hermite";
        case RuleKind::tanh_sinh: return "tanh-sinh";
        case RuleKind::log_axis_trapezoid: return "log-axis-trapezoid";
        case RuleKind::logit_trapezoid: return "logit-trapezoid";
        case RuleKind::normal_trapezoid: return "normal-trapezoid";
        case RuleKind::circle_trapezoid: return "circle-trapezoid";
    }
    return "?";
}

const char* to_string(TailMethod m) {
    switch (m) {
        case TailMethod::geometric: return "geometric";
        case TailMethod::integral_comparison: return "integral-comparison";
        case TailMethod::supplied_closed_form: return "supplied-closed-form";
    }
    return "?";
}

namespace {

// Orthonormal Hermite values h_0..h_{n-1} at x (weight e^{-x^2}), returns
// sum h_k^2 and sets hn, hn1 to h_n and h_{n-1}.
double hermite_sums(int n, double x, double& hn, double& hn1) {
    double p0 = 0.0;
    double p1 = std::pow(pi, -0.25);
    double s = p1 * p1;
    for (int k = 0; k < n; ++k) {
        double p2 = x * std::sqrt(2.0 / (k + 1)) * p1 - std::sqrt(static_cast<double>(k) / (k + 1)) * p0;
        p0 = p1;
        p1 = p2;
        if (k + 1 < n) s += p1 * p1;
    }
    hn = p1;
    hn1 = p0;
    return s;
}

}  // namespace

QuadratureRule gauss_hermite_rule(int n) {
    if (n < 1 || n > 512) throw Error(ErrorKind::invalid_parameter, "gauss_hermite_rule: n must be in [1, 512]");
    QuadratureRule r{RuleKind::gauss_hermite, {}, {}, {}, "R, weight exp(-x^2)"};
    if (n == 1) {
        r.nodes = {0.0};
        r.weights = {std::sqrt(pi)};
        return r;
    }
    // Golub-Welsch: the Jacobi matrix of the Hermite recurrence has zero
    // diagonal and off-diagonal sqrt(k/2).
    std::vector<double> J(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 1; k < n; ++k) {
        double b = std::sqrt(k / 2.0);
        J[static_cast<std::size_t>(k) * n + k - 1] = b;
        J[static_cast<std::size_t>(k - 1) * n + k] = b;
    }
    std::vector<double> x = jacobi_eigenvalues(std::move(J), n);

    // Polish with Newton on h_n; h_n' = sqrt(2n) h_{n-1}.
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) {
        double xi = x[i];
        for (int it = 0; it < 3; ++it) {
            double hn, hn1;
            hermite_sums(n, xi, hn, hn1);
            if (!std::isfinite(hn) || !std::isfinite(hn1) || hn1 == 0.0) break;
            double step = hn / (std::sqrt(2.0 * n) * hn1);
            if (!std::isfinite(step)) break;
            xi -= step;
        }
        x[i] = xi;
        double hn, hn1;
        w[i] = 1.0 / hermite_sums(n, xi, hn, hn1);
    }
    // Enforce the reflection symmetry of the rule.
    for (int i = 0; i < n / 2; ++i) {
        int j = n - 1 - i;
        double xs = 0.5 * (x[j] - x[i]);
        double ws = 0.5 * (w[i] + w[j]);
        x[i] = -xs;
        x[j] = xs;
        w[i] = w[j] = ws;
    }
    if (n % 2 == 1) x[n / 2] = 0.0;
    // Far nodes carry weights below the binary64 range; they are dropped.
    for (int i = 0; i < n; ++i) {
        if (std::isfinite(w[i]) && w[i] > 0.0) {
            r.nodes.push_back(x[i]);
            r.weights.push_back(w[i]);
        }
    }
    return r;
}

QuadratureRule tanh_sinh_rule(int level) {
    if (level < 1 || level > 12) throw Error(ErrorKind::invalid_parameter, "tanh_sinh_rule: level must be in [1, 12]");
    const double h = std::ldexp(1.0, -level);
    QuadratureRule r{RuleKind::tanh_sinh, {}, {}, {}, "(0,1), dx"};
    // x = 1/(1+exp(-pi sinh t)); dx/dt = pi cosh t x (1-x).
    const long kmax = static_cast<long>(std::ceil(6.2 / h));
    for (long k = -kmax; k <= kmax; ++k) {
        double t = k * h;
        double u = pi * std::sinh(t);
        double x, c;
        if (u >= 0) {
            double e = std::exp(-u);
            x = 1.0 / (1.0 + e);
            c = e / (1.0 + e);
        } else {
            double e = std::exp(u);
            x = e / (1.0 + e);
            c = 1.0 / (1.0 + e);
        }
        double w = h * pi * std::cosh(t) * x * c;
        if (!(w > 1e-300) || x <= 0.0 || x >= 1.0) continue;
        if (!r.nodes.empty() && x <= r.nodes.back()) break;  // x no longer resolvable near 1
        r.nodes.push_back(x);
        r.complement.push_back(c);
        r.weights.push_back(w);
    }
    return r;
}

QuadratureRule log_axis_rule(double sigma, double h, double U) {
    if (!(sigma > 0) || !(h > 0) || !(U >= 10))
        throw Error(ErrorKind::invalid_parameter, "log_axis_rule: need sigma > 0, h > 0, U >= 10");
    QuadratureRule r{RuleKind::log_axis_trapezoid, {}, {}, {}, "(0,inf), weight exp(-x) x^(sigma-1), node u = log x"};
    // Small sigma decays slowly as u -> -inf; widen the left end to keep e^{sigma u} < e^{-40}.
    const double lo = -std::max(U, 40.0 / sigma);
    const long k0 = static_cast<long>(std::floor(lo / h));
    const long k1 = static_cast<long>(std::ceil(U / h));
    for (long k = k0; k <= k1; ++k) {
        double u = k * h;
        double w = h * std::exp(sigma * u - std::exp(u));
        if (w > 0.0 && std::isfinite(w)) {
            r.nodes.push_back(u);
            r.weights.push_back(w);
        }
    }
    return r;
}

QuadratureRule logit_rule(double p, double q, double h, double cutoff) {
    if (!(p > 0) || !(q > 0) || !(h > 0))
        throw Error(ErrorKind::invalid_parameter, "logit_rule: need p, q, h > 0");
    QuadratureRule r{RuleKind::logit_trapezoid, {}, {}, {}, "(0,1), weight x^(p-1)(1-x)^(q-1), node v = log(x/(1-x))"};
    const long k0 = -static_cast<long>(std::ceil(cutoff / p / h));
    const long k1 = static_cast<long>(std::ceil(cutoff / q / h));
    for (long k = k0; k <= k1; ++k) {
        double v = k * h;
        double lx = -std::log1p(std::exp(-v));
        double l1x = -std::log1p(std::exp(v));
        double w = h * std::exp(p * lx + q * l1x);
        if (w > 0.0 && std::isfinite(w)) {
            r.nodes.push_back(v);
            r.weights.push_back(w);
        }
    }
    return r;
}

QuadratureRule normal_trapezoid_rule(double h, double T) {
    if (!(h > 0) || !(T > 0)) throw Error(ErrorKind::invalid_parameter, "normal_trapezoid_rule: need h, T > 0");
    QuadratureRule r{RuleKind::normal_trapezoid, {}, {}, {}, "R, standard normal density"};
    const long K = static_cast<long>(std::floor(T / h));
    const double c = h / std::sqrt(2.0 * pi);
    for (long k = -K; k <= K; ++k) {
        double t = k * h;
        r.nodes.push_back(t);
        r.weights.push_back(c * std::exp(-0.5 * t * t));
    }
    return r;
}

QuadratureRule circle_rule(int points) {
    if (points < 1) throw Error(ErrorKind::invalid_parameter, "circle_rule: points must be positive");
    QuadratureRule r{RuleKind::circle_trapezoid, {}, {}, {}, "[0,2pi), dx/(2pi)"};
    for (int j = 0; j < points; ++j) {
        r.nodes.push_back(2.0 * pi * j / points);
        r.weights.push_back(1.0 / points);
    }
    return r;
}

namespace {

template <class T>
BasicTailCertificate<T> sum_tail_impl(const std::function<T(std::int64_t)>& term,
                                      const std::function<double(std::int64_t)>& tail_bound, double tol,
                                      TailMethod method, std::int64_t k0, std::int64_t cap) {
    KahanSum<T> s;
    double tb = 0.0;
    for (std::int64_t k = k0; k < k0 + cap; ++k) {
        s.add(term(k));
        tb = tail_bound(k);
        if (tb <= tol) return {s.value(), tb, method, k};
    }
    throw Error(ErrorKind::tolerance_not_met, "sum_with_tail: iteration cap reached", tb);
}

}  // namespace

TailCertificate sum_with_tail(const std::function<double(std::int64_t)>& term,
                              const std::function<double(std::int64_t)>& tail_bound, double tol,
                              TailMethod method, std::int64_t k0, std::int64_t cap) {
    return sum_tail_impl<double>(term, tail_bound, tol, method, k0, cap);
}

ComplexTailCertificate sum_with_tail_complex(const std::function<cplx(std::int64_t)>& term,
                                             const std::function<double(std::int64_t)>& tail_bound, double tol,
                                             TailMethod method, std::int64_t k0, std::int64_t cap) {
    return sum_tail_impl<cplx>(term, tail_bound, tol, method, k0, cap);
}

}  // namespace aos
