#include <doctest.h>

#include <cmath>

#include "aos/spaces.hpp"
#include "aos/specfun.hpp"

using namespace aos;

// Closed-form references below were evaluated once with mpmath and frozen.

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

MeasureParams gamma_params(double sigma) {
    MeasureParams p;
    p.sigma = sigma;
    return p;
}

}  // namespace

TEST_CASE("continuous measures are probability measures") {
    for (MeasureKind k : {MeasureKind::gaussian, MeasureKind::gamma, MeasureKind::beta, MeasureKind::circle_uniform}) {
        WeightedMeasure m = make_space(k, MeasureParams{});
        CHECK(!m.discrete());
        CHECK(std::abs(m.total_mass() - 1.0) <= 1e-14);
        CHECK(m.points().size() == m.weights().size());
    }
    MeasureParams qp;
    qp.q = 0.5;
    CHECK(std::abs(make_space(MeasureKind::gaussian, qp).gaussian_sd() - std::sqrt(std::log(2.0))) <= 1e-15);
    CHECK_THROWS_AS(make_space(MeasureKind::gaussian, MeasureParams{0.5, 1.5}), Error);
    CHECK_THROWS_AS(make_space(MeasureKind::gamma, gamma_params(0.0)), Error);
}

TEST_CASE("discrete measures") {
    WeightedMeasure zt = make_space(MeasureKind::discrete_zeta_tail, gamma_params(3.0));
    WeightedMeasure mg = make_space(MeasureKind::discrete_mangoldt, gamma_params(3.0));
    CHECK(zt.discrete());
    CHECK(std::abs(zt.normalizer() - 4.949100893673263) <= 1e-12);
    CHECK(std::abs(mg.normalizer() - 6.0671261194482442) <= 1e-11);
    CHECK(std::abs(zt.total_mass() - 1.0) <= 1e-11);
    CHECK(std::abs(mg.total_mass() - 1.0) <= 1e-11);
    CHECK(zt.weight(1) == 0.0);
    CHECK(mg.weight(6) == 0.0);
    CHECK(mg.weight(4) > 0.0);
    // the tail bound really bounds the tail
    double tail = 0.0;
    for (std::int64_t k = 101; k <= 2000000; ++k) tail += zt.weight(k);
    CHECK(zt.weight_tail(100, 0.0) >= tail);
    CHECK(zt.weight_tail(zt.truncation(0.0, 1e-9), 0.0) <= 1e-9);
    CHECK_THROWS_AS(make_space(MeasureKind::discrete_zeta_tail, gamma_params(1.0)), Error);
}

TEST_CASE("schedules") {
    CHECK(FrequencySchedule::integer().lambda(5) == 5.0);
    CHECK(FrequencySchedule::shifted().lambda(1) == 0.0);
    CHECK(std::abs(FrequencySchedule::loglinear(0.7).lambda(3) - 2.1 * std::log(2.0)) <= 1e-15);
    CHECK(FrequencySchedule::power(1.0, 1.0).lambda(3) == 6.0);
    CHECK(FrequencySchedule::explicit_list({0.5, 1.5}).lambda(2) == 1.5);
    CHECK_THROWS_AS(FrequencySchedule::explicit_list({0.5}).lambda(2), Error);
    CHECK_THROWS_AS(FrequencySchedule::integer().lambda(0), Error);
    CHECK_THROWS_AS(FrequencySchedule::power(-1.0, 1.0), Error);
    CHECK(FrequencySchedule::explicit_list({1.0}).min_gap(1) < 0.0);
}

TEST_CASE("min_gap is a valid lower bound") {
    const FrequencySchedule all[] = {FrequencySchedule::integer(), FrequencySchedule::shifted(),
                                     FrequencySchedule::sqrtlog(1.5, 1.2), FrequencySchedule::loglinear(0.7),
                                     FrequencySchedule::power(1.0, 1.0), FrequencySchedule::power(0.5, 1.7)};
    for (const auto& s : all)
        for (int n = 1; n <= 60; ++n)
            for (int k = 1; k <= 60; ++k) CHECK(s.lambda(n + k) - s.lambda(n) >= s.min_gap(k) * (1.0 - 1e-14));
}

TEST_CASE("schedule validation") {
    MeasureParams qp;
    qp.q = 0.5;
    WeightedMeasure g = make_space(MeasureKind::gaussian, qp);
    const double scale = 1.0 / std::sqrt(std::log(2.0));
    CHECK(validate_schedule(FrequencySchedule::sqrtlog(1.5, scale), g).ok);
    ScheduleReport bad = validate_schedule(FrequencySchedule::sqrtlog(1.5, 0.5 * scale), g);
    CHECK(!bad.ok);
    CHECK(!bad.violations.empty());
    WeightedMeasure b = make_space(MeasureKind::beta, MeasureParams{});
    CHECK(validate_schedule(FrequencySchedule::power(1.0, 1.0), b).ok);
    CHECK(!validate_schedule(FrequencySchedule::power(1.0, 0.3), b).ok);
}

TEST_CASE("closed gram entries") {
    WeightedMeasure gm = make_space(MeasureKind::gamma, gamma_params(3.0));
    CHECK(rel(gram_closed(gm, 4.5, 2.0), {-0.29331452297342103, 0.16508729673936973}) <= 1e-13);
    WeightedMeasure bm = make_space(MeasureKind::beta, MeasureParams{});
    CHECK(rel(gram_closed(bm, 1.0, 8.0), {-0.045801789797887273, -0.00062957179648657189}) <= 1e-13);
    WeightedMeasure zt = make_space(MeasureKind::discrete_zeta_tail, gamma_params(3.0));
    CHECK(rel(gram_closed(zt, 1.0, 2.0), 0.085832563566268033) <= 1e-12);
    WeightedMeasure mg = make_space(MeasureKind::discrete_mangoldt, gamma_params(3.0));
    CHECK(rel(gram_closed(mg, 1.0, 2.0), 0.076646423095940622) <= 1e-11);
    WeightedMeasure c = make_space(MeasureKind::circle_uniform, MeasureParams{});
    CHECK(rel(gram_closed(c, 1.5, 1.0), {0.0, 0.63661977236758138}) <= 1e-15);
    CHECK(gram_closed(c, 3.0, 1.0) == cplx(0.0));
    WeightedMeasure n = make_space(MeasureKind::gaussian, MeasureParams{});
    CHECK(rel(gram_closed(n, 3.0, 1.0), std::exp(-2.0)) <= 1e-15);
}

TEST_CASE("closed and numeric gram entries agree") {
    struct Setup {
        MeasureKind kind;
        FamilyKind family;
        FrequencySchedule schedule;
        double tol;
    };
    MeasureParams p;
    p.sigma = 3.0;
    const Setup setups[] = {
        {MeasureKind::gaussian, FamilyKind::fourier, FrequencySchedule::integer(), 1e-13},
        {MeasureKind::gamma, FamilyKind::mellin, FrequencySchedule::loglinear(0.7), 1e-12},
        {MeasureKind::beta, FamilyKind::mellin, FrequencySchedule::power(1.0, 1.0), 1e-12},
        {MeasureKind::circle_uniform, FamilyKind::fourier, FrequencySchedule::integer(), 1e-14},
        {MeasureKind::discrete_zeta_tail, FamilyKind::dirichlet, FrequencySchedule::shifted(), 1e-10},
        {MeasureKind::discrete_mangoldt, FamilyKind::dirichlet, FrequencySchedule::shifted(), 1e-10},
    };
    for (const auto& s : setups) {
        WeightedMeasure m = make_space(s.kind, p);
        SequenceFamily f{s.family, s.schedule};
        CHECK(compatible(m, f));
        for (int a = 1; a <= 12; a += 3)
            for (int b = 1; b <= 12; b += 2) {
                GramEntry e = gram_entry(m, f, a, b, GramMode::both);
                CHECK(e.discrepancy <= s.tol);
                CHECK(e.value == *e.closed);
            }
    }
}

TEST_CASE("rules are refined for high frequencies") {
    WeightedMeasure b = make_space(MeasureKind::beta, MeasureParams{});
    CHECK(resolves(b, 64.0));
    CHECK(!resolves(b, 126.0));
    WeightedMeasure fine = with_bandwidth(b, 126.0);
    CHECK(resolves(fine, 126.0));
    CHECK(fine.points().size() > b.points().size());
    CHECK(with_bandwidth(b, 10.0).points().size() == b.points().size());
    CHECK(resolves(make_space(MeasureKind::circle_uniform, MeasureParams{}), 1e6));
    SequenceFamily f{FamilyKind::mellin, FrequencySchedule::power(1.0, 1.0)};
    // lambda_1 - lambda_64 = -126 is past the Nyquist limit of the default step
    const cplx closed = gram_closed(b, 2.0, 128.0);
    CHECK(rel(gram_numeric(b, f, 2.0, 128.0), closed) <= 1e-12);
}

TEST_CASE("coefficients against closed forms") {
    WeightedMeasure n = make_space(MeasureKind::gaussian, MeasureParams{});
    SequenceFamily fam{FamilyKind::fourier, FrequencySchedule::integer()};
    TestFunction plane;
    plane.id = "plane";
    plane.eval = [](const Point& p) { return std::polar(1.0, 0.7 * p.x); };
    plane.closed_coefficient = [](double lam, int) { return cplx(std::exp(-0.5 * (0.7 - lam) * (0.7 - lam))); };
    plane.closed_norm_sq = 1.0;
    for (const auto& c : coefficients(n, fam, plane, 8)) CHECK(c.discrepancy <= 1e-13);
    CHECK(coefficient(n, fam, plane, 3).discrepancy <= 1e-13);
    NormResult nr = norm_sq(n, plane);
    CHECK(std::abs(nr.value - 1.0) <= 1e-14);

    WeightedMeasure gm = make_space(MeasureKind::gamma, gamma_params(3.0));
    SequenceFamily mel{FamilyKind::mellin, FrequencySchedule::loglinear(0.7)};
    TestFunction id;
    id.eval = [](const Point& p) { return cplx(p.x); };
    id.closed_coefficient = [](double lam, int) { return gamma_complex({4.0, -lam}) / 2.0; };
    for (const auto& c : coefficients(gm, mel, id, 16)) CHECK(c.discrepancy <= 1e-12);
    CHECK(std::abs(norm_sq(gm, id).value - 12.0) <= 1e-12);

    WeightedMeasure zt = make_space(MeasureKind::discrete_zeta_tail, gamma_params(3.0));
    SequenceFamily dir{FamilyKind::dirichlet, FrequencySchedule::shifted()};
    TestFunction one;
    one.eval = [](const Point&) { return cplx(1.0); };
    const double nz = zt.normalizer();
    one.closed_coefficient = [nz](double lam, int) { return cplx(nz * zeta_minus_one(3.0 + lam).real()); };
    for (const auto& c : coefficients(zt, dir, one, 10)) {
        CHECK(c.discrepancy <= 1e-10);
        CHECK(c.error_bound <= 1e-10);
    }
}

TEST_CASE("incompatible pairs and bad modes are rejected") {
    WeightedMeasure gm = make_space(MeasureKind::gamma, gamma_params(3.0));
    SequenceFamily fam{FamilyKind::fourier, FrequencySchedule::integer()};
    CHECK(!compatible(gm, fam));
    TestFunction one;
    one.eval = [](const Point&) { return cplx(1.0); };
    CHECK_THROWS_AS(coefficient(gm, fam, one, 1), Error);
    CHECK(parse_gram_mode("both") == GramMode::both);
    CHECK_THROWS_AS(parse_gram_mode("fast"), Error);
    TestFunction imag;
    imag.eval = [](const Point& p) { return cplx(0.0, p.x); };
    // |f|^2 is real, so the residue stays small
    CHECK(norm_sq(gm, imag).imag_residue <= 1e-12);
}
