#include "aos/qseries.hpp"

#include <cmath>
#include <limits>

namespace aos {

namespace {

void require_q(double q) {
    if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::domain_error, "q must lie in (0, 1)");
}

constexpr int kSeriesCap = 20000;

// Sums term(0), term(1), ... until two consecutive terms fall below 1e-17 of the sum.
template <class F>
cplx sum_until_small(F&& term, const char* who) {
    KahanSum<cplx> s;
    int quiet = 0;
    for (int n = 0; n < kSeriesCap; ++n) {
        cplx t = term(n);
        s.add(t);
        double scale = std::max(std::abs(s.value()), 1e-300);
        quiet = (std::abs(t) <= 1e-17 * scale) ? quiet + 1 : 0;
        if (quiet >= 2 && n >= 4) return s.value();
    }
    throw Error(ErrorKind::tolerance_not_met, std::string(who) + ": series did not settle");
}

}  // namespace

const char* to_string(QSeriesForm f) {
    switch (f) {
        case QSeriesForm::binomial: return "binomial";
        case QSeriesForm::aq: return "aq";
        case QSeriesForm::aq2: return "aq2";
        case QSeriesForm::binomial_display: return "binomial-display";
    }
    return "?";
}

cplx qpochhammer(cplx a, double q, int n) {
    require_q(q);
    if (n < 0) throw Error(ErrorKind::invalid_parameter, "qpochhammer: n must be nonnegative");
    cplx p = 1.0;
    double qk = 1.0;
    for (int k = 0; k < n; ++k) {
        p *= 1.0 - a * qk;
        qk *= q;
    }
    return p;
}

cplx qpochhammer_inf(cplx a, double q) {
    require_q(q);
    cplx p = 1.0;
    const double aa = std::abs(a);
    double qk = 1.0;
    for (int k = 0; k < 100000; ++k) {
        if (aa * qk < 1e-17) return p;
        p *= 1.0 - a * qk;
        qk *= q;
    }
    throw Error(ErrorKind::tolerance_not_met, "qpochhammer_inf: product did not settle");
}

cplx log_qpochhammer_inf(cplx a, double q) {
    require_q(q);
    KahanSum<cplx> s;
    const double aa = std::abs(a);
    double qk = 1.0;
    for (int k = 0; k < 100000; ++k) {
        if (aa * qk < 1e-17) return s.value();
        s.add(std::log(1.0 - a * qk));
        qk *= q;
    }
    throw Error(ErrorKind::tolerance_not_met, "log_qpochhammer_inf: product did not settle");
}

cplx ramanujan_Aq_scaled(double q, cplx w, double a, double b) {
    require_q(q);
    const double lq = std::log(q);
    if (w == 0.0) return std::exp(a * lq);
    const double lw = std::log(std::abs(w));
    const double phase = std::arg(-w);
    KahanSum<cplx> s;
    double log_qfact = 0.0;  // log (q;q)_k
    double qk1 = q;          // q^{k+1}
    for (int k = 0; k < kSeriesCap; ++k) {
        double e = (a + static_cast<double>(k) * k - b * k) * lq + k * lw - log_qfact;
        cplx t = std::polar(std::exp(e), phase * k);
        s.add(t);
        // |T_{k+1}/T_k| = |w| q^{2k+1-b} / (1 - q^{k+1}); geometric tail once it is below 1/2.
        double r = std::exp(lw + (2.0 * k + 1.0 - b) * lq) / (1.0 - qk1);
        if (r < 0.5 && 2.0 * r * std::abs(t) <= 1e-17 * std::max(std::abs(s.value()), 1e-300))
            return s.value();
        log_qfact += std::log1p(-qk1);
        qk1 *= q;
    }
    throw Error(ErrorKind::tolerance_not_met, "ramanujan_Aq: series did not settle");
}

cplx ramanujan_Aq(double q, cplx z) { return ramanujan_Aq_scaled(q, z, 0.0, 0.0); }

cplx qseries_sum(QSeriesForm form, double q, cplx z, bool swapped) {
    require_q(q);
    // u carries the unconjugated role, v the conjugated one.
    const cplx u = swapped ? std::conj(z) : z;
    const cplx v = swapped ? z : std::conj(z);
    switch (form) {
        case QSeriesForm::binomial: {
            if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::domain_error, "qseries_sum: need |z| < 1");
            // t_n = (-u)^n q^{n(n-1)/2} / ((q;q)_n (v;q)_n)
            cplx t = 1.0;
            double qn = 1.0;
            cplx sum = sum_until_small(
                [&](int n) {
                    if (n > 0) {
                        t *= -u * (qn / q) / ((1.0 - qn) * (1.0 - v * (qn / q)));
                    }
                    qn *= q;
                    return t;
                },
                "qseries_sum");
            return qpochhammer_inf(v, q) * sum;
        }
        case QSeriesForm::aq:
        case QSeriesForm::aq2: {
            const double c = (form == QSeriesForm::aq) ? 1.0 : 2.0;
            if (form == QSeriesForm::aq2 && !(std::abs(z) < 1.0))
                throw Error(ErrorKind::domain_error, "qseries_sum: need |z| < 1");
            cplx pre = 1.0;  // (-u)^n / (q;q)_n
            double qn = 1.0;
            return sum_until_small(
                [&](int n) {
                    if (n > 0) pre *= -u / (1.0 - qn);
                    qn *= q;
                    const double dn = n;
                    return pre * ramanujan_Aq_scaled(q, v, dn * dn, c * dn);
                },
                "qseries_sum");
        }
        case QSeriesForm::binomial_display: {
            // (-u q^{1/2};q)_inf sum v^n q^{n^2/2} / ((q;q)_n (-u q^{1/2};q)_n)
            const double sq = std::sqrt(q);
            const cplx a = -u * sq;
            cplx t = 1.0;
            double qn = 1.0;
            cplx sum = sum_until_small(
                [&](int n) {
                    if (n > 0) {
                        const double qprev = qn / q;  // q^{n-1}
                        cplx den = (1.0 - qn) * (1.0 - a * qprev);
                        if (den == 0.0) throw Error(ErrorKind::pole_error, "qseries_sum: vanishing denominator");
                        t *= v * (sq * qprev) / den;  // q^{n^2/2 - (n-1)^2/2} = q^{n - 1/2}
                    }
                    qn *= q;
                    return t;
                },
                "qseries_sum");
            return qpochhammer_inf(a, q) * sum;
        }
    }
    throw Error(ErrorKind::invalid_parameter, "qseries_sum: unknown form");
}

TailCertificate gaussian_gram_row(double beta, double q, const FrequencySchedule& schedule, int m, int N) {
    require_q(q);
    if (!(beta > 0)) throw Error(ErrorKind::invalid_parameter, "gaussian_gram_row: beta must be positive");
    if (m < 1 || N < 1) throw Error(ErrorKind::invalid_parameter, "gaussian_gram_row: m, N must be >= 1");
    const double c = beta * -std::log(q);
    const double lm = schedule.lambda(m);
    KahanSum<double> s;
    for (int n = 1; n <= N; ++n) {
        double d = lm - schedule.lambda(n);
        s.add(std::exp(-c * d * d));
    }
    TailCertificate cert;
    cert.finite_part = s.value();
    cert.last_index = N;
    cert.method = TailMethod::geometric;
    const double d1 = schedule.min_gap(1);
    if (!schedule.unbounded() || !(d1 > 0)) {
        cert.tail_bound = std::numeric_limits<double>::infinity();
        return cert;
    }
    // Gaps are superadditive for every unbounded schedule here, so with
    // g0 = gap(k0): e^{-c (g0 + j d1)^2} <= e^{-c g0^2} r^j, r = e^{-c d1 (2 g0 + d1)}.
    auto tail_from = [&](int k0) {
        double g0 = schedule.min_gap(k0);
        double r = std::exp(-c * d1 * (2.0 * g0 + d1));
        return std::exp(-c * g0 * g0) / (1.0 - r);
    };
    if (m <= N) {
        cert.tail_bound = tail_from(N + 1 - m);
    } else {
        cert.tail_bound = 1.0 + 2.0 * tail_from(1);
    }
    return cert;
}

}  // namespace aos
