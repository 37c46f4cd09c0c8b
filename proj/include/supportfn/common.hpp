#pragma once

#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace supportfn {

using C = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

inline constexpr double inf() { return std::numeric_limits<double>::infinity(); }
inline constexpr double nan() { return std::numeric_limits<double>::quiet_NaN(); }

/// Thrown when a constructor or operation receives parameters outside its
/// documented domain (non-positive alpha, pole outside the disc, ...).
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a quadratic minimization cannot be completed reliably
/// (Gram matrix numerically singular beyond the regularization threshold).
class solver_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace supportfn
