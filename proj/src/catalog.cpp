#include "aos/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "aos/qseries.hpp"

namespace aos {

CaseInstance make_continuous_case(const std::string& id, const Overrides& ov);
CaseInstance make_beta_case(const std::string& id, const Overrides& ov);
CaseInstance make_discrete_case(const std::string& id, const Overrides& ov);
CaseInstance make_control_case(const Overrides& ov);

namespace {

const std::vector<CaseSummary>& roster() {
    static const std::vector<CaseSummary> cases = [] {
        std::vector<CaseSummary> v = {
            {"beta-2F1", "beta measure, f = (1 - z x)^{-a}, power frequencies"},
            {"beta-besselJ", "beta measure, f = J_{2 nu}(sqrt x), power frequencies"},
            {"beta-jacobi", "beta measure, f = Jacobi polynomial P_l^{(p-1,q-1)}(2x-1), power frequencies"},
            {"beta-log", "beta measure, f = log x, power frequencies"},
            {"control-orthonormal", "uniform measure on the circle, lambda_n = n (orthonormal control)"},
            {"gamma-2F1", "gamma measure, f = 1F1(a; sigma; x t), log-linear frequencies"},
            {"gamma-besselJ-1F1", "gamma measure, f = J_nu(a sqrt x), log-linear frequencies"},
            {"gamma-besselK", "gamma measure, f = e^{x/2} K_nu(x/2), log-linear frequencies"},
            {"gamma-besselK-arg", "gamma measure, f = exp(-a^2/(4x)), log-linear frequencies"},
            {"gamma-eta-zeta", "gamma measure, f = e^x/(e^x+1), log-linear frequencies"},
            {"gamma-laguerre", "gamma measure, f = Laguerre L_l^{(sigma-1)}(x), log-linear frequencies"},
            {"gamma-log", "gamma measure, f = log x, log-linear frequencies"},
            {"gauss-integer", "standard normal measure, lambda_n = n, f = 1"},
            {"gauss-sqrtlog", "standard normal measure, minimal sqrt-log separated frequencies, f = 1"},
            {"mangoldt-L", "von Mangoldt measure, f(k) = chi(k) k^{-it}"},
            {"mangoldt-liouville", "von Mangoldt measure, f(k) = liouville(k) k^{-it}"},
            {"mangoldt-zeta", "von Mangoldt measure, f(k) = k^{-it}"},
            {"qgauss-aq", "q-Gaussian measure, f = (z q^{1/2} e^{ix};q)_inf"},
            {"qgauss-aq2", "q-Gaussian measure, f = 1/(-z e^{ix};q)_inf"},
            {"qgauss-binomial", "q-Gaussian measure, f = 1/(z e^{ix};q)_inf"},
            {"qgauss-qbessel", "q-Gaussian measure, f = q-Bessel generating function"},
            {"zetatail-chi", "zeta-tail measure, f(k) = chi(k) k^{-it}"},
            {"zetatail-liouville", "zeta-tail measure, f(k) = liouville(k) k^{-it}"},
            {"zetatail-mu", "zeta-tail measure, f(k) = mu(k) k^{-it}"},
            {"zetatail-muchi", "zeta-tail measure, f(k) = mu(k) chi(k) k^{-it}"},
            {"zetatail-one", "zeta-tail measure, f(k) = k^{-it}"},
        };
        std::sort(v.begin(), v.end(), [](const CaseSummary& a, const CaseSummary& b) { return a.id < b.id; });
        return v;
    }();
    return cases;
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

double rel_diff(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Uniform in [0,1) from the top 53 bits.
double to_unit(std::uint64_t u) { return static_cast<double>(u >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<CaseSummary> list_cases() { return roster(); }

CaseInstance instantiate(const std::string& id, const Overrides& overrides) {
    const auto& r = roster();
    if (std::none_of(r.begin(), r.end(), [&](const CaseSummary& c) { return c.id == id; }))
        throw Error(ErrorKind::unknown_case, "unknown case '" + id + "'");
    CaseInstance c;
    if (id == "control-orthonormal") {
        c = make_control_case(overrides);
    } else if (starts_with(id, "beta-")) {
        c = make_beta_case(id, overrides);
    } else if (starts_with(id, "mangoldt-") || starts_with(id, "zetatail-")) {
        c = make_discrete_case(id, overrides);
    } else {
        c = make_continuous_case(id, overrides);
    }
    for (const auto& s : r)
        if (s.id == id) c.summary = s.summary;
    return c;
}

cplx closed_coefficient(const CaseInstance& c, const std::string& f_id, int n) {
    if (f_id != c.f.id) throw Error(ErrorKind::unsupported, c.id + ": no function '" + f_id + "' registered");
    if (!c.f.closed_coefficient) throw Error(ErrorKind::unsupported, c.id + ": no closed-form coefficient");
    return c.f.closed_coefficient(c.family.schedule.lambda(n), n);
}

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::advisory: return "advisory";
    }
    return "?";
}

std::vector<cplx> seeded_unit_vector(std::uint64_t seed, int index, int length) {
    std::mt19937_64 gen(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1));
    std::vector<cplx> x(static_cast<std::size_t>(length));
    KahanSum<double> nrm;
    for (auto& v : x) {
        double re = to_unit(gen()) - 0.5;
        double im = to_unit(gen()) - 0.5;
        v = cplx(re, im);
        nrm.add(std::norm(v));
    }
    const double s = 1.0 / std::sqrt(nrm.value());
    for (auto& v : x) v *= s;
    return x;
}

namespace {

struct Context {
    const CaseInstance& c;
    const RunOptions& opt;
    CaseReport& r;
};

template <class F>
void guarded(CaseReport& r, const char* stage, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        r.errors.push_back(std::string(stage) + ": " + e.what());
    }
}

void check_gram(const CaseInstance& c, const GramMatrix& g, CaseReport& r) {
    r.gram.hermitian_defect = max_hermitian_defect(g);
    r.gram.real = g.real();
    const bool unit_diag = c.family.kind != FamilyKind::dirichlet;
    for (int m = 0; m < g.N; ++m) {
        if (unit_diag) r.gram.diagonal_defect = std::max(r.gram.diagonal_defect, std::abs(g(m, m) - 1.0));
        for (int n = 0; n < g.N; ++n) {
            if (g.discrepancy.empty()) continue;
            const double d = g.discrepancy[static_cast<std::size_t>(m) * g.N + n];
            if (std::abs(r.lambdas[m] - r.lambdas[n]) <= 20.0)
                r.gram.max_discrepancy_low = std::max(r.gram.max_discrepancy_low, d);
            else
                r.gram.max_discrepancy_high = std::max(r.gram.max_discrepancy_high, d);
        }
    }
    const double low_tol = c.space.discrete() ? 1e-7 : 1e-8;
    bool ok = r.gram.hermitian_defect <= 1e-12 && r.gram.diagonal_defect <= 1e-10 &&
              r.gram.max_discrepancy_low <= low_tol && r.gram.max_discrepancy_high <= 1e-6;
    r.gram.status = ok ? Status::pass : Status::fail;
}

void check_norm_chain(const GramMatrix& g, CaseReport& r) {
    NormChain& nc = r.norm_chain;
    nc.row_sup = r.schur.finite_sup;
    nc.col_sup = r.schur.finite_col_sup;
    nc.geometric_mean = std::sqrt(nc.row_sup * nc.col_sup);
    nc.C = r.schur.upper();
    PowerIteration pi = power_iteration(g);
    nc.operator_norm = pi.value;
    nc.converged = pi.converged;
    bool ok = nc.operator_norm <= nc.geometric_mean * (1.0 + 1e-12) && nc.geometric_mean <= nc.C * (1.0 + 1e-9);
    nc.status = !r.schur.certified ? Status::advisory : (ok ? Status::pass : Status::fail);
}

void check_positivity(const GramMatrix& g, const RunOptions& opt, CaseReport& r) {
    Positivity& p = r.positivity;
    const double C = r.schur.upper();
    p.min_eigenvalue = min_eigenvalue(g);
    p.samples = opt.quadratic_samples;
    p.min_quadratic_re = std::numeric_limits<double>::infinity();
    for (int i = 0; i < opt.quadratic_samples; ++i) {
        std::vector<cplx> x = seeded_unit_vector(opt.seed ^ 0x51ULL, i, g.N);
        cplx v = quadratic_form(g, x);
        p.min_quadratic_re = std::min(p.min_quadratic_re, v.real());
        p.max_quadratic_im = std::max(p.max_quadratic_im, std::abs(v.imag()));
    }
    if (opt.quadratic_samples == 0) p.min_quadratic_re = 0.0;
    const double floor = -1e-9 * (std::isfinite(C) ? C : 1.0);
    bool ok = p.min_eigenvalue >= floor && p.min_quadratic_re >= floor && p.max_quadratic_im <= 1e-10 * std::max(1.0, C);
    p.status = ok ? Status::pass : Status::fail;
}

void check_riesz_fischer(const GramMatrix& g2, const RunOptions& opt, CaseReport& r) {
    RieszFischerSummary& s = r.riesz_fischer;
    const int N = opt.N;
    std::vector<cplx> e1(static_cast<std::size_t>(2 * N), 0.0);
    e1[0] = 1.0;
    s.e1 = riesz_fischer(g2, e1, N, N, r.schur);
    bool ok = s.e1.pass && (!s.e1.cauchy_available || s.e1.cauchy_pass);
    s.samples = opt.rf_samples;
    for (int i = 0; i < opt.rf_samples; ++i) {
        std::vector<cplx> x = seeded_unit_vector(opt.seed ^ 0xA7ULL, i, 2 * N);
        RieszFischerReport rep = riesz_fischer(g2, x, N, N, r.schur);
        // The criterion takes x as a unit vector of the first N coordinates.
        const double bound = r.schur.upper() * r.schur.upper() * rep.x_norm_sq;
        s.max_ratio = std::max(s.max_ratio, rep.residual / bound);
        if (!(rep.residual <= bound * (1.0 + 1e-8))) ++s.failures;
        if (rep.cauchy_available && !rep.cauchy_pass) ++s.cauchy_failures;
    }
    ok = ok && s.failures == 0 && s.cauchy_failures == 0;
    s.status = !r.schur.certified ? Status::advisory : (ok ? Status::pass : Status::fail);
}

void run_display_audit(const CaseInstance& c, const std::vector<cplx>& fn, double norm, CaseReport& r) {
    DisplayAudit& a = r.display;
    const DisplayForm& d = *c.display;
    a.evaluated = true;
    a.relation = d.relation;
    KahanSum<double> lhs;
    a.lhs_consistent = true;
    std::vector<double> summands;
    for (int n = 1; n <= r.N; ++n) summands.push_back(d.summand(n, r.lambdas[n - 1]));
    for (double v : summands) lhs.add(v);
    a.display_lhs = lhs.value();
    for (int n = 1; n <= r.N; ++n) {
        const double want = d.kappa * std::norm(fn[n - 1]);
        const double got = summands[n - 1];
        if (std::abs(got - want) > 1e-6 * std::max(got, want) + 1e-13 * std::max(a.display_lhs, 1e-300))
            a.lhs_consistent = false;
    }
    const double C = r.schur.upper();
    const double S = d.normalizer * C;
    a.display_rhs = d.rhs(S);
    a.framework_rhs = d.kappa * C * norm;
    a.ratio = a.display_rhs / a.framework_rhs;
    a.holds = a.display_lhs <= a.display_rhs * (1.0 + 1e-12);
    if (d.rhs_alt) {
        a.alt_label = d.alt_label;
        a.alt_rhs = d.rhs_alt(S);
        a.alt_ratio = a.alt_rhs / a.framework_rhs;
        a.alt_holds = a.display_lhs <= a.alt_rhs * (1.0 + 1e-12);
    }
    if (d.relation == "=") a.note = "displayed with '=', audited as '<='";
    if (!a.lhs_consistent)
        r.findings.push_back("displayed summand is not kappa |f_n|^2 for the true coefficient");
    if (a.ratio < 1.0 - 1e-9)
        r.findings.push_back("displayed constant is below the framework constant (ratio " + fmt(a.ratio) + ")");
    if (!a.holds) r.findings.push_back("displayed inequality fails at N = " + std::to_string(r.N));
    if (d.rhs_alt && a.alt_ratio < 1.0 - 1e-9)
        r.findings.push_back("alternative reading (" + d.alt_label + ") is below the framework constant (ratio " +
                             fmt(a.alt_ratio) + ")");
}

IdentityResult positivity_identity(const std::string& name, QSeriesForm form, double q, cplx z) {
    IdentityResult id;
    id.name = name;
    cplx v = qseries_sum(form, q, z, false);
    cplx w = qseries_sum(form, q, z, true);
    id.lhs = v.real();
    id.rhs = w.real();
    id.difference = std::abs(v - w);
    id.tolerance = 1e-11;
    const bool real = std::abs(v.imag()) <= 1e-10 && std::abs(w.imag()) <= 1e-10;
    const bool ok = real && v.real() > 0 && id.difference <= id.tolerance;
    id.status = ok ? Status::pass : Status::fail;
    id.detail = "imag " + fmt(v.imag()) + ", swapped imag " + fmt(w.imag());
    return id;
}

void run_identities(const CaseInstance& c, CaseReport& r) {
    if (c.id == "qgauss-binomial" || c.id == "qgauss-aq" || c.id == "qgauss-aq2") {
        const double q = c.params.at("q");
        const cplx z(c.params.at("z_re"), c.params.at("z_im"));
        QSeriesForm form = c.id == "qgauss-binomial" ? QSeriesForm::binomial
                           : c.id == "qgauss-aq"     ? QSeriesForm::aq
                                                     : QSeriesForm::aq2;
        if (form == QSeriesForm::binomial && !(std::abs(z) < std::sqrt(q))) {
            IdentityResult id;
            id.name = "positivity";
            id.status = Status::advisory;
            id.detail = "positivity display needs |z| < q^{1/2}";
            r.identities.push_back(id);
        } else {
            r.identities.push_back(positivity_identity("positivity", form, q, z));
        }
    }
    if (c.id == "qgauss-qbessel" && c.f.closed_norm_sq) {
        IdentityResult id;
        id.name = "positivity";
        id.lhs = *c.f.closed_norm_sq * qpochhammer_inf(c.params.at("q"), c.params.at("q")).real();
        id.rhs = 0.0;
        id.status = id.lhs > 0 ? Status::pass : Status::fail;
        id.detail = "(q;q)_inf ||f||^2 from the Fourier series";
        r.identities.push_back(id);
    }
}

}  // namespace

CaseReport run_case(const CaseInstance& c, const RunOptions& opt) {
    if (opt.N < 1 || opt.N > 128) throw Error(ErrorKind::invalid_parameter, "run_case: need 1 <= N <= 128");
    CaseReport r;
    r.id = c.id;
    r.summary = c.summary;
    r.params = c.params;
    r.N = opt.N;
    r.seed = opt.seed;
    r.measure = to_string(c.space.kind);
    r.family = to_string(c.family.kind);
    r.schedule = c.family.schedule.describe();
    for (int n = 1; n <= 2 * opt.N; ++n) r.lambdas.push_back(c.family.schedule.lambda(n));
    for (const auto& note : c.notes) r.findings.push_back(note);

    const int N = opt.N;
    GramMatrix g;
    bool have_gram = false;
    guarded(r, "gram", [&] {
        g = build_gram(c.space, c.family, N, GramMode::both);
        have_gram = true;
        check_gram(c, g, r);
    });
    if (have_gram) {
        guarded(r, "schur", [&] { r.schur = schur_constant(g, c.c_upper); });
        guarded(r, "norm-chain", [&] { check_norm_chain(g, r); });
        guarded(r, "positivity", [&] { check_positivity(g, opt, r); });
        guarded(r, "riesz-fischer", [&] {
            GramMatrix g2 = build_gram(c.space, c.family, 2 * N, GramMode::closed);
            check_riesz_fischer(g2, opt, r);
        });
    }
    r.lambdas.resize(static_cast<std::size_t>(N));

    std::vector<cplx> fn_closed;
    std::vector<cplx> fn_numeric;
    double norm_used = 0.0;
    guarded(r, "coefficients", [&] {
        std::vector<CoefficientResult> cs = coefficients(c.space, c.family, c.f, N);
        NormResult nr = norm_sq(c.space, c.f);
        OracleCheck& o = r.oracle;
        o.norm_numeric = nr.value;
        o.has_closed_coefficient = static_cast<bool>(c.f.closed_coefficient);
        o.has_closed_norm = c.f.closed_norm_sq.has_value();
        double err_extra = 0.0;
        for (const auto& cr : cs) {
            fn_numeric.push_back(cr.value);
            fn_closed.push_back(cr.closed.value_or(cr.value));
            o.max_coefficient_discrepancy = std::max(o.max_coefficient_discrepancy, cr.discrepancy);
            err_extra += cr.error_bound * (2.0 * std::abs(cr.value) + cr.error_bound);
        }
        if (o.has_closed_norm) {
            o.norm_closed = *c.f.closed_norm_sq;
            o.norm_discrepancy = std::abs(o.norm_numeric - o.norm_closed) / std::max(1.0, std::abs(o.norm_closed));
        }
        bool ok = o.max_coefficient_discrepancy <= c.oracle_tol && o.norm_discrepancy <= c.oracle_tol;
        o.status = ok ? Status::pass : Status::fail;
        norm_used = nr.value;
        if (have_gram) {
            err_extra += r.schur.upper() * nr.error_bound;
            r.bessel = bessel_from_values(fn_numeric, nr.value, r.schur, opt.tol, err_extra);
            r.bessel_status = !r.bessel.certified ? Status::advisory : (r.bessel.pass ? Status::pass : Status::fail);
        }
        if (c.display_coefficient) {
            for (int n = 1; n <= N; ++n)
                r.display_coefficient_discrepancy = std::max(
                    r.display_coefficient_discrepancy, rel_diff(c.display_coefficient(r.lambdas[n - 1], n), fn_numeric[n - 1]));
            r.display_coefficient_matches = r.display_coefficient_discrepancy <= 1e-6;
            if (!r.display_coefficient_matches)
                r.findings.push_back("displayed coefficient differs from the computed one (max relative " +
                                     fmt(r.display_coefficient_discrepancy) + ")");
        }
        if (c.display_norm_sq) {
            r.display_norm_discrepancy =
                std::abs(*c.display_norm_sq - nr.value) / std::max(1.0, std::abs(nr.value));
            r.display_norm_matches = r.display_norm_discrepancy <= 1e-6;
            if (!r.display_norm_matches)
                r.findings.push_back("displayed norm " + fmt(*c.display_norm_sq) + " differs from the computed " +
                                     fmt(nr.value));
        }
    });

    if (have_gram && c.display && !fn_closed.empty()) {
        guarded(r, "display", [&] {
            run_display_audit(c, fn_closed, c.f.closed_norm_sq.value_or(norm_used), r);
        });
    } else if (!c.display) {
        r.display.note = "no evaluable display";
    }

    guarded(r, "identities", [&] { run_identities(c, r); });

    guarded(r, "compactness", [&] {
        std::vector<int> list;
        for (int n : {N / 4, N / 2, N})
            if (n >= 1 && (list.empty() || n > list.back())) list.push_back(n);
        // Entries depend on lambda_m - lambda_n (or on the sum for Dirichlet
        // families), so each distinct value is computed once.
        std::map<double, cplx> memo;
        const bool by_sum = c.family.kind == FamilyKind::dirichlet;
        const int W = 4 * list.back();
        std::vector<double> lam;
        for (int n = 1; n <= W; ++n) lam.push_back(c.family.schedule.lambda(n));
        auto entry = [&](int m, int n) {
            const double key = by_sum ? lam[m] + lam[n] : lam[m] - lam[n];
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            cplx v = gram_closed(c.space, lam[m], lam[n]);
            memo.emplace(key, v);
            return v;
        };
        r.compactness = compactness_diagnostics(entry, list);
    });

    bool fail = !r.errors.empty();
    for (Status s : {r.gram.status, r.norm_chain.status, r.positivity.status, r.bessel_status, r.riesz_fischer.status,
                     r.oracle.status})
        fail = fail || s == Status::fail;
    for (const auto& id : r.identities) fail = fail || id.status == Status::fail;
    r.status = fail ? Status::fail : Status::pass;
    return r;
}

}  // namespace aos
