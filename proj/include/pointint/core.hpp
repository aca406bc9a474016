// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pointint {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Tolerances shared across modules.
namespace tol {
inline constexpr double kDegenerateDet = 1e-12;   // |det B| below this is singular
inline constexpr double kMembership = 1e-10;      // entrywise residual for family membership
inline constexpr double kMarginalBand = 1e-7;     // boundary band for inequality conditions
inline constexpr double kZeroCoefficient = 1e-12; // relative, dispersion coefficients
inline constexpr double kBoundStateIm = 1e-12;    // Im k threshold for a bound state
inline constexpr double kPureImaginary = 1e-9;    // |Re k| relative to (1 + |k|)
inline constexpr double kSingularDenominator = 1e-12;
inline constexpr double kYbePass = 1e-10;
inline constexpr double kYbeFail = 1e-3;
} // namespace tol

enum class ErrorCode {
  degenerate_matrix,
  non_finite,
  invalid_argument,
  index_out_of_range,
  singular_denominator,
  on_contact_hyperplane,
  capacity,
  pole_saturation,
  unsupported,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::degenerate_matrix: return "degenerate_matrix";
  case ErrorCode::non_finite: return "non_finite";
  case ErrorCode::invalid_argument: return "invalid_argument";
  case ErrorCode::index_out_of_range: return "index_out_of_range";
  case ErrorCode::singular_denominator: return "singular_denominator";
  case ErrorCode::on_contact_hyperplane: return "on_contact_hyperplane";
  case ErrorCode::capacity: return "capacity";
  case ErrorCode::pole_saturation: return "pole_saturation";
  case ErrorCode::unsupported: return "unsupported";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, std::string_view what) {
  if (!is_finite(z))
    throw Error(ErrorCode::non_finite, std::string(what) + " is not finite");
}

/// Maps any angle onto [0, 2pi).
inline double wrap_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0)
    r += kTwoPi;
  // fmod can round up to exactly 2pi for tiny negative inputs
  if (r >= kTwoPi)
    r = 0.0;
  return r;
}

inline Complex unit_phase(double angle) { return std::polar(1.0, angle); }

inline double max_modulus(std::initializer_list<Complex> values) {
  double m = 0.0;
  for (Complex z : values)
    m = std::max(m, std::abs(z));
  return m;
}

} // namespace pointint
