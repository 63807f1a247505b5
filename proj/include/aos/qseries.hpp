#pragma once

#include "aos/quadrature.hpp"
#include "aos/schedule.hpp"
#include "aos/types.hpp"

namespace aos {

struct QParams {
    double q = 0.5;
    double beta = 0.5;
};

// (a;q)_n for n >= 0.
cplx qpochhammer(cplx a, double q, int n);
// (a;q)_inf, truncated once |a| q^k < 1e-17.
cplx qpochhammer_inf(cplx a, double q);

// sum_k log(1 - a q^k); exp of it is (a;q)_inf without intermediate overflow.
cplx log_qpochhammer_inf(cplx a, double q);

cplx ramanujan_Aq(double q, cplx z);
// q^a A_q(q^{-b} w), summed as sum_k q^{a + k^2 - b k} (-w)^k / (q;q)_k so that
// large arguments do not overflow.
cplx ramanujan_Aq_scaled(double q, cplx w, double a, double b);

// The q-binomial sums behind the Gaussian examples. Each identity has two
// displayed sides; `swapped` selects the side with z and conj(z) exchanged.
enum class QSeriesForm {
    binomial,          // (conj z;q)_inf sum (-z)^n q^{n(n-1)/2} / (q, conj z;q)_n,   |z| < 1
    aq,                // sum (-z)^n q^{n^2} A_q(q^{-n} conj z) / (q;q)_n,            any z
    aq2,               // sum (-z)^n q^{n^2} A_q(q^{-2n} conj z) / (q;q)_n,           |z| < 1
    binomial_display,  // (-z q^{1/2};q)_inf sum conj(z)^n q^{n^2/2} / (q, -z q^{1/2};q)_n
};
const char* to_string(QSeriesForm f);

cplx qseries_sum(QSeriesForm form, double q, cplx z, bool swapped = false);

// Row m of the Gaussian Gram kernel q^{beta (mu_m - mu_n)^2} over n <= N, with
// an analytic bound on the part n > N.
TailCertificate gaussian_gram_row(double beta, double q, const FrequencySchedule& schedule, int m, int N);

}  // namespace aos
