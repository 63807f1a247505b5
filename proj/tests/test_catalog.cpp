#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "aos/catalog.hpp"
#include "aos/specfun.hpp"

using namespace aos;

// Reference values were evaluated once with mpmath and frozen.

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::unsupported;
}

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

TEST_CASE("roster") {
    const auto cases = list_cases();
    CHECK(cases.size() == 26);
    std::vector<std::string> ids;
    for (const auto& c : cases) {
        ids.push_back(c.id);
        CHECK(!c.summary.empty());
    }
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    for (const char* id : {"gauss-integer", "beta-jacobi", "zetatail-liouville", "control-orthonormal"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
}

TEST_CASE("every case instantiates with a valid schedule") {
    for (const auto& s : list_cases()) {
        CaseInstance c = instantiate(s.id);
        CHECK(c.id == s.id);
        CHECK(compatible(c.space, c.family));
        CHECK(validate_schedule(c.family.schedule, c.space).ok);
        CHECK(c.c_upper);
        CHECK(!c.f.formula.empty());
    }
}

TEST_CASE("instantiate errors") {
    CHECK(kind_of([] { instantiate("nope"); }) == ErrorKind::unknown_case);
    CHECK(kind_of([] { instantiate("gauss-integer", {{"bogus", "1"}}); }) == ErrorKind::invalid_parameter);
    CHECK(kind_of([] { instantiate("qgauss-binomial", {{"z_re", "1.2"}}); }) == ErrorKind::invalid_parameter);
    CHECK(kind_of([] { instantiate("zetatail-one", {{"sigma", "1"}}); }) == ErrorKind::invalid_parameter);
    CHECK(kind_of([] { instantiate("beta-log", {{"beta", "0.3"}}); }) == ErrorKind::invalid_parameter);
    CHECK(kind_of([] { instantiate("gamma-log", {{"sigma", "abc"}}); }) == ErrorKind::invalid_parameter);
    CHECK(kind_of([] { instantiate("gauss-sqrtlog", {{"alpha", "1.2"}}); }) == ErrorKind::invalid_parameter);
    CaseInstance c = instantiate("gamma-log", {{"sigma", "4.5"}});
    CHECK(c.params.at("sigma") == 4.5);
}

TEST_CASE("gauss-integer gram is e^{-(m-n)^2/2}") {
    CaseInstance c = instantiate("gauss-integer");
    GramMatrix g = build_gram(c.space, c.family, 6, GramMode::closed);
    for (int m = 0; m < 6; ++m)
        for (int n = 0; n < 6; ++n) CHECK(rel(g(m, n), std::exp(-0.5 * (m - n) * (m - n))) <= 1e-15);
}

TEST_CASE("mangoldt-zeta weights") {
    CaseInstance c = instantiate("mangoldt-zeta", {{"sigma", "3"}});
    const double norm = -riemann_zeta(3.0).real() / (riemann_zeta(3.0).real() * zeta_log_derivative(3.0).real());
    CHECK(std::abs(c.space.weight(8) - norm * std::log(2.0) / 512.0) <= 1e-15);
    CHECK(c.family.schedule.lambda(1) == 0.0);
    CHECK(c.family.schedule.lambda(5) == 4.0);
}

TEST_CASE("closed coefficients") {
    // gamma-log with lambda_1 = 2: Gamma(3-2i) psi(3-2i) / Gamma(3)
    CaseInstance gl = instantiate("gamma-log", {{"c1", g17(2.0 / std::log(2.0))}});
    CHECK(std::abs(gl.family.schedule.lambda(1) - 2.0) <= 1e-12);
    CHECK(rel(closed_coefficient(gl, "log", 1), {-0.53850957477562045, -0.36589965779626371}) <= 1e-10);
    CHECK(coefficient(gl.space, gl.family, gl.f, 1).discrepancy <= 1e-8);

    // mangoldt-zeta with t = 0 at lambda_1 = 0 is the total mass
    CaseInstance mz = instantiate("mangoldt-zeta", {{"t", "0"}});
    CHECK(std::abs(closed_coefficient(mz, mz.f.id, 1) - 1.0) <= 1e-12);

    // qgauss-aq at mu_1 = 1.5, z = 0.3: q^{mu^2/2} A_q(q^{-mu} z)
    CaseInstance qa = instantiate("qgauss-aq", {{"z_re", "0.3"}, {"z_im", "0"}});
    CHECK(qa.family.schedule.lambda(1) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(rel(closed_coefficient(qa, qa.f.id, 1), 0.12281480254835178) <= 1e-12);
    CHECK(coefficient(qa.space, qa.family, qa.f, 1).discrepancy <= 1e-10);
    // the displayed q^{mu^2} A_q(q^{-mu} z) is kept as the display coefficient
    REQUIRE(qa.display_coefficient);
    CHECK(rel(qa.display_coefficient(1.5, 1), 0.056310835251110969) <= 1e-12);

    CHECK(kind_of([&] { closed_coefficient(gl, "nope", 1); }) == ErrorKind::unsupported);
}

TEST_CASE("closed norms match quadrature for every case") {
    for (const auto& s : list_cases()) {
        CaseInstance c = instantiate(s.id);
        if (!c.f.closed_norm_sq) continue;
        NormResult n = norm_sq(c.space, c.f);
        CHECK_MESSAGE(std::abs(n.value - *c.f.closed_norm_sq) <= c.oracle_tol * std::max(1.0, n.value), s.id);
    }
}

TEST_CASE("certified C bounds larger truncations") {
    // c_upper(N) bounds every row sum of the infinite matrix, so it also bounds
    // the finite sup of any larger truncation.
    for (const auto& s : list_cases()) {
        CaseInstance c = instantiate(s.id);
        const double U = c.c_upper(16);
        GramMatrix g = build_gram(c.space, c.family, 64, GramMode::closed);
        SchurEstimate big = schur_constant(g);
        CHECK_MESSAGE(big.finite_sup <= U * (1.0 + 1e-12), s.id);
        CHECK_MESSAGE(U <= 1.0 + 1.5 * big.finite_sup, s.id);
    }
}

TEST_CASE("seeded unit vectors") {
    auto a = seeded_unit_vector(20240601, 3, 40);
    auto b = seeded_unit_vector(20240601, 3, 40);
    auto c = seeded_unit_vector(20240601, 4, 40);
    CHECK(a == b);
    CHECK(a != c);
    double n = 0.0;
    for (auto v : a) n += std::norm(v);
    CHECK(std::abs(n - 1.0) <= 1e-15);
}

TEST_CASE("control case reduces to the classical Bessel equality") {
    RunOptions opt;
    opt.N = 16;
    CaseReport r = run_case(instantiate("control-orthonormal"), opt);
    CHECK(r.status == Status::pass);
    CHECK(r.schur.upper() == 1.0);
    CHECK(r.gram.hermitian_defect == 0.0);
    CHECK(std::abs(r.bessel.lhs_partial - 1.3125) <= 1e-14);
    CHECK(std::abs(r.bessel.norm_sq - 1.3125) <= 1e-14);
    CHECK(r.riesz_fischer.e1.residual <= 1e-18);
    CHECK(r.compactness.row_tail_sup.back() == 1.0);
}

TEST_CASE("gauss-integer at N = 64") {
    RunOptions opt;
    opt.N = 64;
    CaseReport r = run_case(instantiate("gauss-integer"), opt);
    CHECK(r.status == Status::pass);
    CHECK(std::abs(r.schur.upper() - 2.5066282880429055) <= 1e-8);
    CHECK(std::abs(r.riesz_fischer.e1.residual - 0.38631860241332607) <= 1e-6);
}

TEST_CASE("zetatail-one inequality has positive margin") {
    CaseReport r = run_case(instantiate("zetatail-one"));
    CHECK(r.status == Status::pass);
    CHECK(r.bessel.margin > 0.0);
    CHECK(r.schur.certified);
    CHECK(r.oracle.max_coefficient_discrepancy <= 1e-7);
    CHECK(r.gram.max_discrepancy_low <= 1e-7);
}

TEST_CASE("display audit findings are advisory") {
    CaseReport r = run_case(instantiate("gamma-besselK-arg"));
    CHECK(r.status == Status::pass);
    CHECK(r.display.evaluated);
    CHECK(!r.findings.empty());
    CHECK(r.display.ratio == doctest::Approx(32768.0).epsilon(1e-6));
    CaseReport b = run_case(instantiate("beta-log"));
    CHECK(b.display.ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(!b.display.alt_label.empty());
}

TEST_CASE("run_case is deterministic") {
    CaseInstance c = instantiate("qgauss-aq");
    CaseReport a = run_case(c), b = run_case(c);
    CHECK(a.bessel.partial_sums == b.bessel.partial_sums);
    CHECK(a.riesz_fischer.max_ratio == b.riesz_fischer.max_ratio);
    CHECK(a.positivity.min_quadratic_re == b.positivity.min_quadratic_re);
}
