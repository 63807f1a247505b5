#pragma once

#include <vector>

#include "aos/types.hpp"

namespace aos {

struct DirichletCharacter;

cplx lgamma_complex(cplx z);
cplx gamma_complex(cplx z);
// Gamma(sigma + i y) / Gamma(sigma).
cplx gamma_ratio(double sigma, double y);
cplx digamma_complex(cplx z);
double trigamma_real(double x);

cplx riemann_zeta(cplx s);
// zeta(s) - 1, accurate in the relative sense also when Re s is large.
cplx zeta_minus_one(cplx s);

struct LogDerivativePaths {
    cplx analytic;       // Richardson-extrapolated central difference of log zeta
    cplx series;         // -sum Lambda(n) n^{-s} over the shared sieve
    double series_tail;  // certified bound on the neglected part of the series
    double discrepancy;
};
LogDerivativePaths zeta_log_derivative_paths(cplx s);
// zeta'(s)/zeta(s); both paths are evaluated and must agree.
cplx zeta_log_derivative(cplx s);
// Analytic path only, for bulk use after the paths have been cross-checked.
cplx zeta_log_derivative_analytic(cplx s);

cplx hurwitz_zeta(cplx s, double a);
cplx dirichlet_L(cplx s, const DirichletCharacter& chi);
// L(s, chi) - 1 without cancellation for large Re s.
cplx dirichlet_L_minus_one(cplx s, const DirichletCharacter& chi);
cplx dirichlet_L_log_derivative(cplx s, const DirichletCharacter& chi);

// Absolute accuracy about 1e-16 e^{-x}; for large |Im nu| the value itself is
// O(e^{-pi |Im nu| / 2}), so the relative accuracy degrades there.
cplx bessel_K_complex_order(cplx nu, double x);
double bessel_J(double nu, double x);

struct HypergeometricSum {
    cplx value;
    int terms = 0;          // number of series terms added (including k = 0)
    double tail_bound = 0;  // ratio-based bound on the discarded tail
};
HypergeometricSum hyp_pfq_detail(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx z);
cplx hyp_pfq(const std::vector<cplx>& upper, const std::vector<cplx>& lower, cplx z);

double laguerre(int ell, double alpha, double x);
double jacobi(int ell, double alpha, double beta, double x);
cplx beta_complex(cplx p_shift, double q);

}  // namespace aos
