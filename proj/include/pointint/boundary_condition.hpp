// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <variant>

#include "pointint/core.hpp"

namespace pointint {

/// 2x2 complex matrix in row-major entries
///   [[alpha, beta], [gamma, delta]]
/// relating (psi(+0), psi'(+0)) to (psi(-0), psi'(-0)).
struct Matrix2 {
  Complex alpha, beta, gamma, delta;

  Complex det() const { return alpha * delta - beta * gamma; }
  Complex trace() const { return alpha + delta; }

  Matrix2 conj() const {
    return {std::conj(alpha), std::conj(beta), std::conj(gamma), std::conj(delta)};
  }

  friend Matrix2 operator*(const Matrix2 &x, const Matrix2 &y) {
    return {x.alpha * y.alpha + x.beta * y.gamma, x.alpha * y.beta + x.beta * y.delta,
            x.gamma * y.alpha + x.delta * y.gamma, x.gamma * y.beta + x.delta * y.delta};
  }

  friend Matrix2 operator*(Complex s, const Matrix2 &x) {
    return {s * x.alpha, s * x.beta, s * x.gamma, s * x.delta};
  }

  static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

/// Largest entrywise modulus of x - y.
inline double max_abs_diff(const Matrix2 &x, const Matrix2 &y) {
  return max_modulus({x.alpha - y.alpha, x.beta - y.beta, x.gamma - y.gamma, x.delta - y.delta});
}

inline double max_abs_entry(const Matrix2 &x) {
  return max_modulus({x.alpha, x.beta, x.gamma, x.delta});
}

// Extended reals for the separated self-adjoint strengths: +inf encodes h = inf.
inline constexpr double kInfiniteStrength = std::numeric_limits<double>::infinity();

struct NonSeparated {
  Matrix2 matrix;
};

/// psi'(+0) = h_plus psi(+0), psi'(-0) = h_minus psi(-0).
struct SeparatedSA {
  double h_plus;
  double h_minus;
};

/// Stored verbatim; the projective pair (h0, h1) and phase theta.
struct SeparatedPT {
  double h0;
  double h1;
  double theta;
};

enum class BcKind { non_separated, separated_sa, separated_pt };

class BoundaryCondition {
public:
  using Variant = std::variant<NonSeparated, SeparatedSA, SeparatedPT>;

  BcKind kind() const { return static_cast<BcKind>(value_.index()); }
  bool is_nonseparated() const { return kind() == BcKind::non_separated; }

  const Variant &variant() const { return value_; }

  /// Throws unsupported for separated conditions.
  const Matrix2 &matrix() const {
    if (const auto *ns = std::get_if<NonSeparated>(&value_))
      return ns->matrix;
    throw Error(ErrorCode::unsupported, "boundary condition is not of non-separated type");
  }

  const SeparatedSA &separated_sa() const {
    if (const auto *s = std::get_if<SeparatedSA>(&value_))
      return *s;
    throw Error(ErrorCode::unsupported, "boundary condition is not separated self-adjoint");
  }

  const SeparatedPT &separated_pt() const {
    if (const auto *s = std::get_if<SeparatedPT>(&value_))
      return *s;
    throw Error(ErrorCode::unsupported, "boundary condition is not separated PT-symmetric");
  }

  friend BoundaryCondition make_nonseparated(Complex, Complex, Complex, Complex);
  friend BoundaryCondition make_separated_sa(double, double);
  friend BoundaryCondition make_separated_pt(double, double, double);

private:
  explicit BoundaryCondition(Variant v) : value_(std::move(v)) {}

  Variant value_;
};

inline BoundaryCondition make_nonseparated(Complex alpha, Complex beta, Complex gamma,
                                           Complex delta) {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(gamma, "gamma");
  require_finite(delta, "delta");
  Matrix2 m{alpha, beta, gamma, delta};
  if (std::abs(m.det()) <= tol::kDegenerateDet)
    throw Error(ErrorCode::degenerate_matrix, "boundary matrix is degenerate (|det B| <= 1e-12)");
  return BoundaryCondition(NonSeparated{m});
}

inline BoundaryCondition make_nonseparated(const Matrix2 &m) {
  return make_nonseparated(m.alpha, m.beta, m.gamma, m.delta);
}

/// Infinite strengths of either sign are the Dirichlet point h = inf.
inline BoundaryCondition make_separated_sa(double h_plus, double h_minus) {
  if (std::isnan(h_plus) || std::isnan(h_minus))
    throw Error(ErrorCode::non_finite, "separated strength is NaN");
  if (std::isinf(h_plus))
    h_plus = kInfiniteStrength;
  if (std::isinf(h_minus))
    h_minus = kInfiniteStrength;
  return BoundaryCondition(SeparatedSA{h_plus, h_minus});
}

inline BoundaryCondition make_separated_pt(double h0, double h1, double theta) {
  if (!std::isfinite(h0) || !std::isfinite(h1) || !std::isfinite(theta))
    throw Error(ErrorCode::non_finite, "separated PT parameters must be finite");
  if (h0 == 0.0 && h1 == 0.0)
    throw Error(ErrorCode::invalid_argument, "projective pair (h0, h1) must not be (0, 0)");
  return BoundaryCondition(SeparatedPT{h0, h1, wrap_angle(theta)});
}

} // namespace pointint
