#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aos/types.hpp"

namespace aos {

// Compensated accumulator. Adds are applied in call order, so a fixed loop
// order gives bit-identical results.
template <class T>
class KahanSum {
public:
    void add(T x) {
        T y = x - c_;
        T t = sum_ + y;
        c_ = (t - sum_) - y;
        sum_ = t;
    }
    T value() const { return sum_; }

private:
    T sum_{};
    T c_{};
};

enum class RuleKind {
    gauss_hermite,       // weight e^{-x^2} on R
    tanh_sinh,           // dx on (0,1)
    log_axis_trapezoid,  // e^{-x} x^{s-1} dx on (0,inf), node u = log x
    logit_trapezoid,     // x^{p-1}(1-x)^{q-1} dx on (0,1), node v = logit x
    normal_trapezoid,    // standard normal density on R
    circle_trapezoid,    // dx/2pi on [0,2pi)
};

const char* to_string(RuleKind k);

struct QuadratureRule {
    RuleKind kind;
    std::vector<double> nodes;
    std::vector<double> weights;
    // tanh-sinh only: 1 - node, kept separately to resolve the right endpoint.
    std::vector<double> complement;
    std::string domain;

    std::size_t size() const { return nodes.size(); }

    // Sum of w_i g(node_i) in ascending node order with compensation.
    template <class F>
    auto apply(F&& g) const -> decltype(g(0.0)) {
        using R = decltype(g(0.0));
        KahanSum<R> s;
        for (std::size_t i = 0; i < nodes.size(); ++i) s.add(weights[i] * g(nodes[i]));
        return s.value();
    }
};

QuadratureRule gauss_hermite_rule(int n);
QuadratureRule tanh_sinh_rule(int level);
QuadratureRule log_axis_rule(double sigma, double h = 0.05, double U = 40.0);
QuadratureRule logit_rule(double p, double q, double h = 0.05, double cutoff = 40.0);
QuadratureRule normal_trapezoid_rule(double h = 1.0 / 32.0, double T = 12.0);
QuadratureRule circle_rule(int points);

enum class TailMethod { geometric, integral_comparison, supplied_closed_form };
const char* to_string(TailMethod m);

template <class T>
struct BasicTailCertificate {
    T finite_part{};
    double tail_bound = 0.0;
    TailMethod method = TailMethod::supplied_closed_form;
    std::int64_t last_index = 0;  // N*, the last summed index
};
using TailCertificate = BasicTailCertificate<double>;
using ComplexTailCertificate = BasicTailCertificate<cplx>;

inline constexpr std::int64_t kSumIterationCap = 10'000'000;

// Sums term(k) for k = k0, k0+1, ... until tail_bound(k) <= tol, where
// tail_bound(N) bounds |sum_{k>N} term(k)|.
TailCertificate sum_with_tail(const std::function<double(std::int64_t)>& term,
                              const std::function<double(std::int64_t)>& tail_bound,
                              double tol, TailMethod method, std::int64_t k0 = 1,
                              std::int64_t cap = kSumIterationCap);
ComplexTailCertificate sum_with_tail_complex(const std::function<cplx(std::int64_t)>& term,
                                             const std::function<double(std::int64_t)>& tail_bound,
                                             double tol, TailMethod method, std::int64_t k0 = 1,
                                             std::int64_t cap = kSumIterationCap);

}  // namespace aos
