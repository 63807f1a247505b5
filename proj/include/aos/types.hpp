#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace aos {

using cplx = std::complex<double>;

enum class ErrorKind {
    invalid_parameter,
    domain_error,
    tolerance_not_met,
    numerical_inconsistency,
    pole_error,
    unsupported_mode,
    unknown_case,
    unsupported,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    // Carries the best estimate reached when a tolerance could not be met.
    Error(ErrorKind kind, const std::string& what, double achieved)
        : Error(kind, what) { achieved_ = achieved; }

    ErrorKind kind() const noexcept { return kind_; }
    double achieved() const noexcept { return achieved_; }

private:
    ErrorKind kind_;
    double achieved_ = 0.0;
};

inline constexpr double pi = 3.141592653589793238462643383279502884;

}  // namespace aos
