#pragma once

#include <string>
#include <vector>

namespace aos {

enum class ScheduleKind { integer, shifted, sqrtlog, loglinear, power, explicit_list };
const char* to_string(ScheduleKind k);

// Frequencies lambda_1 < lambda_2 < ... of the test sequence. Indices are 1-based.
struct FrequencySchedule {
    ScheduleKind kind = ScheduleKind::integer;
    double alpha = 1.5;  // sqrtlog, power
    double scale = 1.0;  // sqrtlog: 1/sqrt(log q^{-2 beta}), 1 for the plain Gaussian
    double c1 = 0.7;     // loglinear
    double beta = 1.0;   // power exponent
    std::vector<double> values;  // explicit_list

    static FrequencySchedule integer();
    static FrequencySchedule shifted();
    static FrequencySchedule sqrtlog(double alpha, double scale);
    static FrequencySchedule loglinear(double c1);
    static FrequencySchedule power(double alpha, double beta);
    static FrequencySchedule explicit_list(std::vector<double> v);

    double lambda(int n) const;
    // Lower bound on lambda_{n+k} - lambda_n valid for every n >= 1; negative
    // when no such bound is known beyond the explicit list.
    double min_gap(int k) const;
    // True when lambda(n) is defined for every n, so infinite tails can be bounded.
    bool unbounded() const { return kind != ScheduleKind::explicit_list; }
    std::string describe() const;
};

}  // namespace aos
