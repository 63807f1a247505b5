#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "aos/spaces.hpp"
#include "aos/types.hpp"

namespace aos {

// Eigenvalues (ascending) of a real symmetric n x n row-major matrix by cyclic
// Jacobi rotations, iterated until the off-diagonal Frobenius norm is below
// tol times the Frobenius norm of the input.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double tol = 1e-15);

enum class Provenance : std::uint8_t { closed, numeric, both };
const char* to_string(Provenance p);

struct GramMatrix {
    int N = 0;
    std::vector<cplx> a;  // row-major, 0-based
    std::vector<Provenance> provenance;
    std::vector<double> discrepancy;  // |closed - numeric| / max(1, |closed|), mode both only
    double max_discrepancy = 0.0;

    cplx operator()(int m, int n) const { return a[static_cast<std::size_t>(m) * N + n]; }
    bool real() const;
};

// Entries evaluated in parallel (OpenMP) and stored by index.
GramMatrix build_gram(const WeightedMeasure& space, const SequenceFamily& family, int N, GramMode mode);
// Same entries, one at a time in index order; kept as the reference for the parallel path.
GramMatrix build_gram_serial(const WeightedMeasure& space, const SequenceFamily& family, int N, GramMode mode);
// Matrix from an arbitrary entry function (0-based indices), closed provenance.
GramMatrix gram_from_entries(int N, const std::function<cplx(int, int)>& entry);

double max_hermitian_defect(const GramMatrix& g);

struct SchurEstimate {
    double finite_sup = 0.0;    // max row l1 norm of the truncation
    double finite_col_sup = 0.0;
    double tail_bound = 0.0;
    bool certified = false;
    int achieved_at_row = 0;    // 1-based

    double upper() const { return finite_sup + tail_bound; }
};

// Upper bound on the infinite-matrix constant C, given the truncation size.
using SchurTailSupplier = std::function<double(int N)>;

SchurEstimate schur_constant(const GramMatrix& gram, const SchurTailSupplier& tail = nullptr);

struct PowerIteration {
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};
PowerIteration power_iteration(const GramMatrix& gram, double tol = 1e-12, int max_iter = 10000);
// Largest |eigenvalue|; throws tolerance-not-met (carrying the last iterate) when it does not settle.
double operator_norm(const GramMatrix& gram, double tol = 1e-12);

std::vector<double> hermitian_eigenvalues(const GramMatrix& gram);
double min_eigenvalue(const GramMatrix& gram);

// Re <x, A x> and Im <x, A x>.
cplx quadratic_form(const GramMatrix& gram, const std::vector<cplx>& x);

struct BesselReport {
    int N = 0;
    double lhs_partial = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double budget = 0.0;
    double C_used = 0.0;
    double norm_sq = 0.0;
    bool certified = false;  // false makes the verdict advisory
    bool pass = false;
    std::vector<double> terms;  // |(f, phi_n)|^2
    std::vector<double> partial_sums;
};

// From precomputed coefficients (f, phi_n), n = 1..N, and ||f||^2.
BesselReport bessel_from_values(const std::vector<cplx>& coeffs, double norm_sq, const SchurEstimate& C,
                                double quad_tol, double extra_budget = 0.0);
BesselReport bessel_verify(const WeightedMeasure& space, const SequenceFamily& family, const TestFunction& f,
                           int N, const SchurEstimate& C, double quad_tol = 1e-12);

struct RieszFischerReport {
    int N = 0;
    int M = 0;
    double residual = 0.0;
    double bound = 0.0;          // C^2 ||x||^2
    double cauchy_defect = 0.0;  // ||s_{2N} - s_N||^2
    double cauchy_bound = 0.0;   // C sum_{N<j<=2N} |x_j|^2
    double x_norm_sq = 0.0;
    bool pass = false;
    bool cauchy_pass = false;
    bool cauchy_available = false;
};

// gram must have size >= N; with size >= 2N and x of length >= 2N the Cauchy
// defect is evaluated as well.
RieszFischerReport riesz_fischer(const GramMatrix& gram, const std::vector<cplx>& x, int N, int M,
                                 const SchurEstimate& C, double tol = 1e-12);
RieszFischerReport riesz_fischer(const WeightedMeasure& space, const SequenceFamily& family,
                                 const std::vector<cplx>& x, int N, int M, const SchurEstimate& C);

struct CompactnessDiagnostics {
    std::vector<int> N_list;
    std::vector<double> hs_partial;     // sum_{m,n<=N} |a_{m,n}|^2
    std::vector<double> row_tail_sup;   // max_{N<m<=4N} sum_{n<=4N} |a_{m,n}|
    std::vector<double> col_tail_sup;   // max_{n<=4N} sum_{N<m<=4N} |a_{n,m}|
    int window_factor = 4;
};

CompactnessDiagnostics compactness_diagnostics(const std::function<cplx(int, int)>& entry,
                                               const std::vector<int>& N_list);
CompactnessDiagnostics compactness_diagnostics(const WeightedMeasure& space, const SequenceFamily& family,
                                               const std::vector<int>& N_list);

}  // namespace aos
