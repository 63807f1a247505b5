#include "aos/operator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

namespace aos {

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double tol) {
    if (n <= 0) return {};
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    double total = 0.0;
    for (double v : a) total += v * v;
    const double target = tol * tol * total;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
        if (off <= target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = at(q, p) = 0.0;
            }
        }
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::closed: return "closed";
        case Provenance::numeric: return "numeric";
        case Provenance::both: return "both";
    }
    return "?";
}

bool GramMatrix::real() const {
    for (cplx v : a)
        if (v.imag() != 0.0) return false;
    return true;
}

double max_hermitian_defect(const GramMatrix& g) {
    double d = 0.0;
    for (int m = 0; m < g.N; ++m)
        for (int n = m; n < g.N; ++n) d = std::max(d, std::abs(g(m, n) - std::conj(g(n, m))));
    return d;
}

namespace {

constexpr int kMaxGram = 256;

GramMatrix empty_gram(int N, GramMode mode) {
    if (N < 1 || N > kMaxGram) throw Error(ErrorKind::invalid_parameter, "build_gram: N must be in [1, 256]");
    GramMatrix g;
    g.N = N;
    const auto sz = static_cast<std::size_t>(N) * N;
    g.a.assign(sz, 0.0);
    const Provenance p = mode == GramMode::closed    ? Provenance::closed
                         : mode == GramMode::numeric ? Provenance::numeric
                                                     : Provenance::both;
    g.provenance.assign(sz, p);
    if (mode == GramMode::both) g.discrepancy.assign(sz, 0.0);
    return g;
}

void store(GramMatrix& g, std::size_t idx, const GramEntry& e) {
    g.a[idx] = e.value;
    if (!g.discrepancy.empty()) g.discrepancy[idx] = e.discrepancy;
}

void finish(GramMatrix& g) {
    for (double d : g.discrepancy) g.max_discrepancy = std::max(g.max_discrepancy, d);
    const double h = max_hermitian_defect(g);
    if (h > 1e-8) throw Error(ErrorKind::numerical_inconsistency, "build_gram: matrix is not Hermitian", h);
}

// Refined once here so that gram_numeric does not rebuild the rule per entry.
WeightedMeasure numeric_space(const WeightedMeasure& space, const SequenceFamily& family, int N, GramMode mode) {
    if (mode == GramMode::closed || N < 1) return space;
    return with_bandwidth(space, std::abs(family.schedule.lambda(N) - family.schedule.lambda(1)));
}

}  // namespace

GramMatrix build_gram(const WeightedMeasure& coarse, const SequenceFamily& family, int N, GramMode mode) {
    GramMatrix g = empty_gram(N, mode);
    const WeightedMeasure space = numeric_space(coarse, family, N, mode);
    const long total = static_cast<long>(N) * N;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 4)
    for (long idx = 0; idx < total; ++idx) {
        const int m = static_cast<int>(idx / N), n = static_cast<int>(idx % N);
        try {
            store(g, static_cast<std::size_t>(idx), gram_entry(space, family, m + 1, n + 1, mode));
        } catch (...) {
            errors[static_cast<std::size_t>(idx)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    finish(g);
    return g;
}

GramMatrix build_gram_serial(const WeightedMeasure& coarse, const SequenceFamily& family, int N, GramMode mode) {
    GramMatrix g = empty_gram(N, mode);
    const WeightedMeasure space = numeric_space(coarse, family, N, mode);
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n)
            store(g, static_cast<std::size_t>(m) * N + n, gram_entry(space, family, m + 1, n + 1, mode));
    finish(g);
    return g;
}

GramMatrix gram_from_entries(int N, const std::function<cplx(int, int)>& entry) {
    if (N < 1) throw Error(ErrorKind::invalid_parameter, "gram_from_entries: N must be positive");
    GramMatrix g;
    g.N = N;
    g.a.resize(static_cast<std::size_t>(N) * N);
    g.provenance.assign(g.a.size(), Provenance::closed);
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) g.a[static_cast<std::size_t>(m) * N + n] = entry(m, n);
    return g;
}

SchurEstimate schur_constant(const GramMatrix& gram, const SchurTailSupplier& tail) {
    SchurEstimate s;
    const int N = gram.N;
    for (int m = 0; m < N; ++m) {
        KahanSum<double> row;
        for (int n = 0; n < N; ++n) row.add(std::abs(gram(m, n)));
        if (row.value() > s.finite_sup) {
            s.finite_sup = row.value();
            s.achieved_at_row = m + 1;
        }
    }
    for (int n = 0; n < N; ++n) {
        KahanSum<double> col;
        for (int m = 0; m < N; ++m) col.add(std::abs(gram(m, n)));
        s.finite_col_sup = std::max(s.finite_col_sup, col.value());
    }
    if (tail) {
        const double upper = tail(N);
        if (std::isfinite(upper)) {
            s.tail_bound = std::max(0.0, upper - s.finite_sup);
            s.certified = true;
        } else {
            s.tail_bound = std::numeric_limits<double>::infinity();
        }
    }
    return s;
}

namespace {

std::vector<cplx> matvec(const GramMatrix& g, const std::vector<cplx>& v) {
    const int N = g.N;
    std::vector<cplx> w(static_cast<std::size_t>(N));
    for (int m = 0; m < N; ++m) {
        KahanSum<cplx> s;
        for (int n = 0; n < N; ++n) s.add(g(m, n) * v[n]);
        w[m] = s.value();
    }
    return w;
}

double norm2(const std::vector<cplx>& v) {
    KahanSum<double> s;
    for (cplx x : v) s.add(std::norm(x));
    return std::sqrt(s.value());
}

PowerIteration power_from(const GramMatrix& g, std::vector<cplx> v, double tol, int max_iter) {
    PowerIteration r;
    double nv = norm2(v);
    for (cplx& x : v) x /= nv;
    double prev = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<cplx> w = matvec(g, v);
        const double lam = norm2(w);
        r.value = lam;
        r.iterations = it;
        if (lam == 0.0) {
            r.converged = true;
            return r;
        }
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i] / lam;
        if (it > 1 && std::abs(lam - prev) <= tol * lam) {
            r.converged = true;
            return r;
        }
        prev = lam;
    }
    return r;
}

}  // namespace

PowerIteration power_iteration(const GramMatrix& gram, double tol, int max_iter) {
    const auto N = static_cast<std::size_t>(gram.N);
    PowerIteration a = power_from(gram, std::vector<cplx>(N, 1.0), tol, max_iter);
    // Second fixed start, so an all-ones vector orthogonal to the top
    // eigenvector cannot hide it.
    std::vector<cplx> v2(N);
    for (std::size_t i = 0; i < N; ++i) v2[i] = cplx{std::cos(1.0 + i), std::sin(0.5 * i)};
    PowerIteration b = power_from(gram, std::move(v2), tol, max_iter);
    PowerIteration best = (b.value > a.value) ? b : a;
    best.converged = a.converged && b.converged;
    best.iterations = a.iterations + b.iterations;
    return best;
}

double operator_norm(const GramMatrix& gram, double tol) {
    PowerIteration p = power_iteration(gram, tol);
    if (!p.converged) throw Error(ErrorKind::tolerance_not_met, "operator_norm: power iteration did not settle", p.value);
    return p.value;
}

std::vector<double> hermitian_eigenvalues(const GramMatrix& gram) {
    const int N = gram.N;
    if (gram.real()) {
        std::vector<double> a(static_cast<std::size_t>(N) * N);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = gram.a[i].real();
        return jacobi_eigenvalues(std::move(a), N, 1e-14);
    }
    // [[Re, -Im], [Im, Re]] has each eigenvalue of the Hermitian matrix twice.
    const int M = 2 * N;
    std::vector<double> a(static_cast<std::size_t>(M) * M);
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
            const cplx v = gram(m, n);
            a[static_cast<std::size_t>(m) * M + n] = v.real();
            a[static_cast<std::size_t>(m + N) * M + n + N] = v.real();
            a[static_cast<std::size_t>(m) * M + n + N] = -v.imag();
            a[static_cast<std::size_t>(m + N) * M + n] = v.imag();
        }
    std::vector<double> ev = jacobi_eigenvalues(std::move(a), M, 1e-14);
    std::vector<double> out(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) out[i] = 0.5 * (ev[2 * i] + ev[2 * i + 1]);
    return out;
}

double min_eigenvalue(const GramMatrix& gram) {
    if (gram.N > 128) throw Error(ErrorKind::invalid_parameter, "min_eigenvalue: N must be <= 128");
    return hermitian_eigenvalues(gram).front();
}

cplx quadratic_form(const GramMatrix& gram, const std::vector<cplx>& x) {
    if (static_cast<int>(x.size()) < gram.N) throw Error(ErrorKind::invalid_parameter, "quadratic_form: x too short");
    std::vector<cplx> ax = matvec(gram, x);
    KahanSum<cplx> s;
    for (int m = 0; m < gram.N; ++m) s.add(std::conj(x[m]) * ax[m]);
    return s.value();
}

BesselReport bessel_from_values(const std::vector<cplx>& coeffs, double norm_sq, const SchurEstimate& C,
                                double quad_tol, double extra_budget) {
    BesselReport r;
    r.N = static_cast<int>(coeffs.size());
    KahanSum<double> s;
    for (cplx c : coeffs) {
        r.terms.push_back(std::norm(c));
        s.add(std::norm(c));
        r.partial_sums.push_back(s.value());
    }
    r.lhs_partial = s.value();
    r.norm_sq = norm_sq;
    r.C_used = C.upper();
    r.rhs = r.C_used * norm_sq;
    r.margin = r.rhs - r.lhs_partial;
    r.budget = 10.0 * quad_tol * r.N + extra_budget;
    r.certified = C.certified;
    r.pass = r.margin >= -r.budget;
    return r;
}

BesselReport bessel_verify(const WeightedMeasure& space, const SequenceFamily& family, const TestFunction& f, int N,
                           const SchurEstimate& C, double quad_tol) {
    std::vector<CoefficientResult> cs = coefficients(space, family, f, N);
    NormResult nr = norm_sq(space, f);
    std::vector<cplx> vals;
    double extra = C.upper() * nr.error_bound;
    for (const auto& c : cs) {
        vals.push_back(c.value);
        extra += c.error_bound * (2.0 * std::abs(c.value) + c.error_bound);
    }
    return bessel_from_values(vals, nr.value, C, quad_tol, extra);
}

RieszFischerReport riesz_fischer(const GramMatrix& gram, const std::vector<cplx>& x, int N, int M,
                                 const SchurEstimate& C, double tol) {
    if (N < 1 || N > gram.N) throw Error(ErrorKind::invalid_parameter, "riesz_fischer: need 1 <= N <= gram size");
    if (M < 1 || M > N) throw Error(ErrorKind::invalid_parameter, "riesz_fischer: need 1 <= M <= N");
    if (static_cast<int>(x.size()) < N) throw Error(ErrorKind::invalid_parameter, "riesz_fischer: x shorter than N");
    RieszFischerReport r;
    r.N = N;
    r.M = M;
    KahanSum<double> xn;
    for (int k = 0; k < N; ++k) xn.add(std::norm(x[k]));
    r.x_norm_sq = xn.value();
    if (!(r.x_norm_sq > 0)) throw Error(ErrorKind::invalid_parameter, "riesz_fischer: x must be nonzero");

    // (s_N, phi_n) = sum_{k<=N} x_k a_{k,n}
    KahanSum<double> res;
    for (int n = 0; n < M; ++n) {
        KahanSum<cplx> y;
        for (int k = 0; k < N; ++k) y.add(x[k] * gram(k, n));
        res.add(std::norm(x[n] - y.value()));
    }
    r.residual = res.value();
    const double c = C.upper();
    r.bound = c * c * r.x_norm_sq;
    r.pass = r.residual <= r.bound * (1.0 + tol) + tol;

    if (gram.N >= 2 * N && static_cast<int>(x.size()) >= 2 * N) {
        r.cauchy_available = true;
        KahanSum<cplx> d;
        KahanSum<double> tailx;
        for (int j = N; j < 2 * N; ++j) {
            tailx.add(std::norm(x[j]));
            for (int k = N; k < 2 * N; ++k) d.add(x[j] * std::conj(x[k]) * gram(j, k));
        }
        r.cauchy_defect = d.value().real();
        r.cauchy_bound = c * tailx.value();
        r.cauchy_pass = r.cauchy_defect <= r.cauchy_bound * (1.0 + tol) + tol;
    }
    return r;
}

RieszFischerReport riesz_fischer(const WeightedMeasure& space, const SequenceFamily& family,
                                 const std::vector<cplx>& x, int N, int M, const SchurEstimate& C) {
    const int size = static_cast<int>(x.size()) >= 2 * N ? 2 * N : N;
    GramMatrix g = build_gram(space, family, size, GramMode::closed);
    return riesz_fischer(g, x, N, M, C);
}

CompactnessDiagnostics compactness_diagnostics(const std::function<cplx(int, int)>& entry,
                                               const std::vector<int>& N_list) {
    CompactnessDiagnostics d;
    d.N_list = N_list;
    int Nmax = 0;
    for (std::size_t i = 0; i < N_list.size(); ++i) {
        if (N_list[i] < 1) throw Error(ErrorKind::invalid_parameter, "compactness: N must be positive");
        if (i > 0 && N_list[i] <= N_list[i - 1])
            throw Error(ErrorKind::invalid_parameter, "compactness: N_list must be ascending");
        Nmax = N_list[i];
    }
    const int W = d.window_factor * Nmax;
    std::vector<double> absval(static_cast<std::size_t>(W) * W);
    for (int m = 0; m < W; ++m)
        for (int n = 0; n < W; ++n) absval[static_cast<std::size_t>(m) * W + n] = std::abs(entry(m, n));
    auto A = [&](int m, int n) { return absval[static_cast<std::size_t>(m) * W + n]; };

    for (int N : N_list) {
        const int w = d.window_factor * N;
        KahanSum<double> hs;
        for (int m = 0; m < N; ++m)
            for (int n = 0; n < N; ++n) hs.add(A(m, n) * A(m, n));
        d.hs_partial.push_back(hs.value());
        double row_sup = 0.0;
        for (int m = N; m < w; ++m) {
            KahanSum<double> s;
            for (int n = 0; n < w; ++n) s.add(A(m, n));
            row_sup = std::max(row_sup, s.value());
        }
        d.row_tail_sup.push_back(row_sup);
        double col_sup = 0.0;
        for (int n = 0; n < w; ++n) {
            KahanSum<double> s;
            for (int m = N; m < w; ++m) s.add(A(n, m));
            col_sup = std::max(col_sup, s.value());
        }
        d.col_tail_sup.push_back(col_sup);
    }
    return d;
}

CompactnessDiagnostics compactness_diagnostics(const WeightedMeasure& space, const SequenceFamily& family,
                                               const std::vector<int>& N_list) {
    int Nmax = N_list.empty() ? 1 : N_list.back();
    const int W = 4 * Nmax;
    std::vector<double> lam(static_cast<std::size_t>(W));
    for (int i = 0; i < W; ++i) lam[i] = family.schedule.lambda(i + 1);
    return compactness_diagnostics([&](int m, int n) { return gram_closed(space, lam[m], lam[n]); }, N_list);
}

}  // namespace aos
