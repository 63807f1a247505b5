#include <doctest.h>

#include <cmath>

#include "aos/quadrature.hpp"

using namespace aos;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("gauss-hermite moments") {
    QuadratureRule r = gauss_hermite_rule(40);
    CHECK(r.kind == RuleKind::gauss_hermite);
    CHECK(near(r.apply([](double) { return 1.0; }), std::sqrt(pi), 1e-14));
    CHECK(near(r.apply([](double x) { return x * x * x * x; }), 0.75 * std::sqrt(pi), 1e-13));
    CHECK(near(r.apply([](double x) { return std::cos(x); }), std::sqrt(pi) * std::exp(-0.25), 1e-14));
    CHECK(std::abs(r.apply([](double x) { return x * x * x; })) < 1e-14);
    // reflection symmetry
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.nodes[i] == -r.nodes[r.size() - 1 - i]);
        CHECK(r.weights[i] == r.weights[r.size() - 1 - i]);
    }
    CHECK(gauss_hermite_rule(1).size() == 1);
    CHECK_THROWS_AS(gauss_hermite_rule(0), Error);
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    QuadratureRule r = tanh_sinh_rule(6);
    CHECK(near(r.apply([](double x) { return 1.0 / std::sqrt(x); }), 2.0, 1e-12));
    CHECK(near(r.apply([](double x) { return std::log(x); }), -1.0, 1e-13));
    // log(1 - x) through the stored complement
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::log(r.complement[i]);
    CHECK(near(s, -1.0, 1e-13));
    for (std::size_t i = 1; i < r.size(); ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
    CHECK_THROWS_AS(tanh_sinh_rule(13), Error);
}

TEST_CASE("tanh-sinh error does not grow with level") {
    auto err = [](int level) {
        return std::abs(tanh_sinh_rule(level).apply([](double x) { return std::pow(x, -0.75); }) - 4.0);
    };
    double prev = err(2);
    for (int level = 3; level <= 7; ++level) {
        double e = err(level);
        CHECK(e <= prev + 1e-13);
        prev = e;
    }
    CHECK(prev < 1e-9);
}

TEST_CASE("log-axis rule integrates gamma moments") {
    QuadratureRule r = log_axis_rule(3.0);
    CHECK(near(r.apply([](double) { return 1.0; }), 2.0, 1e-14));
    CHECK(near(r.apply([](double u) { return std::exp(u); }), 6.0, 1e-14));
    // Re Gamma(3) / (1 - i)^3
    CHECK(near(r.apply([](double u) { return std::cos(std::exp(u)); }), -0.5, 1e-13));
    // small sigma widens the left end
    QuadratureRule s = log_axis_rule(0.5);
    CHECK(near(s.apply([](double) { return 1.0; }), std::sqrt(pi), 1e-12));
    CHECK_THROWS_AS(log_axis_rule(0.0), Error);
}

TEST_CASE("logit rule integrates beta moments") {
    QuadratureRule r = logit_rule(1.5, 2.5);
    CHECK(near(r.apply([](double) { return 1.0; }), pi / 16.0, 1e-14));
    CHECK(near(r.apply([](double v) { return 1.0 / (1.0 + std::exp(-v)); }), 3.0 * pi / 128.0, 1e-14));
    CHECK_THROWS_AS(logit_rule(-1.0, 2.0), Error);
}

TEST_CASE("normal trapezoid moments and characteristic function") {
    QuadratureRule r = normal_trapezoid_rule();
    CHECK(near(r.apply([](double) { return 1.0; }), 1.0, 1e-15));
    CHECK(near(r.apply([](double t) { return t * t; }), 1.0, 1e-14));
    CHECK(near(r.apply([](double t) { return std::cos(3.0 * t); }), std::exp(-4.5), 1e-14));
}

TEST_CASE("circle rule is exact on trigonometric polynomials") {
    QuadratureRule r = circle_rule(16);
    for (int k = 0; k < 40; ++k) {
        cplx v = r.apply([k](double x) { return std::polar(1.0, k * x); });
        const double want = (k % 16 == 0) ? 1.0 : 0.0;
        CHECK(std::abs(v - want) < 1e-14);
    }
}

TEST_CASE("sum_with_tail certifies the zeta(2) tail") {
    TailCertificate c = sum_with_tail([](std::int64_t k) { return 1.0 / (double(k) * double(k)); },
                                      [](std::int64_t N) { return 1.0 / double(N); }, 1e-6,
                                      TailMethod::integral_comparison);
    CHECK(c.method == TailMethod::integral_comparison);
    CHECK(c.last_index == 1000000);
    CHECK(c.tail_bound <= 1e-6);
    const double exact = pi * pi / 6.0;
    CHECK(exact - c.finite_part > 0.0);
    CHECK(exact - c.finite_part <= c.tail_bound);
}

TEST_CASE("sum_with_tail geometric complex series") {
    const cplx r{0.3, 0.4};
    ComplexTailCertificate c = sum_with_tail_complex(
        [r](std::int64_t k) { return std::pow(r, static_cast<int>(k)); },
        [](std::int64_t N) { return std::pow(0.5, double(N + 1)) / 0.5; }, 1e-15, TailMethod::geometric, 0);
    CHECK(std::abs(c.finite_part - 1.0 / (1.0 - r)) <= c.tail_bound + 1e-15);
}

TEST_CASE("sum_with_tail reports the achieved tail at the cap") {
    try {
        sum_with_tail([](std::int64_t k) { return 1.0 / double(k); }, [](std::int64_t) { return 1.0; }, 1e-3,
                      TailMethod::supplied_closed_form, 1, 100);
        FAIL("expected tolerance-not-met");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::tolerance_not_met);
        CHECK(e.achieved() == 1.0);
    }
}

TEST_CASE("kahan sum keeps small addends") {
    KahanSum<double> s;
    s.add(1.0);
    for (int i = 0; i < 1000000; ++i) s.add(1e-16);
    CHECK(std::abs(s.value() - (1.0 + 1e-10)) < 1e-15);
}
