// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

// Discrete spectrum of -d^2/dx^2 with a point interaction at the origin.
//
// With the Ansatz psi = c1 e^{-ikx} (x < 0), c2 e^{ikx} (x > 0), Im k > 0, the
// boundary matrix B = [[alpha, beta], [gamma, delta]] gives
//
//     beta k^2 + i k (alpha + delta) - gamma = 0,     lambda = k^2,
//
// and the eigenfunction ratio r = c2 / c1 = alpha - i k beta.

#pragma once

#include <vector>

#include "pointint/boundary_condition.hpp"
#include "pointint/core.hpp"

namespace pointint {

struct DispersionRoot {
  Complex k;
  int multiplicity = 1;
};

struct DispersionRoots {
  std::vector<DispersionRoot> roots;
  int degree = 0;
  // beta = tau = gamma = 0: every k solves the dispersion relation.
  bool identity_like = false;
};

enum class BoundSide { both, left_halfline, right_halfline };

inline std::string_view to_string(BoundSide s) {
  switch (s) {
  case BoundSide::both: return "both";
  case BoundSide::left_halfline: return "left_halfline";
  case BoundSide::right_halfline: return "right_halfline";
  }
  return "both";
}

/// For half-line states the eigenfunction lives on one side only and ratio is 1.
struct BoundState {
  Complex k;
  Complex lambda;
  Complex ratio;
  BoundSide side = BoundSide::both;
};

inline Complex dispersion_polynomial(const Matrix2 &m, Complex k) {
  return k * k * m.beta + kI * k * m.trace() - m.gamma;
}

/// Roots of a z^2 + b z + c = 0 avoiding cancellation: q = -(b + sgn sqrt(disc)) / 2
/// with the sign chosen so |q| is maximal, then z1 = q / a, z2 = c / q.
inline std::vector<DispersionRoot> solve_quadratic(Complex a, Complex b, Complex c) {
  const Complex disc = b * b - 4.0 * a * c;
  const double disc_scale = std::max(std::norm(b), std::abs(4.0 * a * c));
  if (std::abs(disc) <= 4.0 * std::numeric_limits<double>::epsilon() * disc_scale)
    return {{-b / (2.0 * a), 2}};

  Complex root = std::sqrt(disc);
  if ((std::conj(b) * root).real() < 0.0)
    root = -root;
  const Complex q = -0.5 * (b + root);
  return {{q / a, 1}, {c / q, 1}};
}

inline DispersionRoots dispersion_roots(const BoundaryCondition &bc) {
  const Matrix2 &m = bc.matrix();
  const Complex tau = m.trace();
  const double scale = std::max({std::abs(m.alpha), std::abs(m.delta), std::abs(m.gamma), 1.0});
  const double zero = tol::kZeroCoefficient * scale;

  DispersionRoots out;
  if (std::abs(m.beta) > zero) {
    out.roots = solve_quadratic(m.beta, kI * tau, -m.gamma);
    out.degree = 2;
    return out;
  }
  if (std::abs(tau) > zero) {
    out.roots = {{m.gamma / (kI * tau), 1}};
    out.degree = 1;
    return out;
  }
  out.degree = 0;
  out.identity_like = std::abs(m.gamma) <= zero;
  return out;
}

inline bool is_pure_imaginary(Complex k) {
  return std::abs(k.real()) < tol::kPureImaginary * (1.0 + std::abs(k));
}

/// Upper-half-plane roots, counted with multiplicity; at most two.
inline std::vector<BoundState> bound_states(const BoundaryCondition &bc) {
  const Matrix2 &m = bc.matrix();
  std::vector<BoundState> out;
  for (const DispersionRoot &root : dispersion_roots(bc).roots) {
    if (root.k.imag() <= tol::kBoundStateIm)
      continue;
    const BoundState bs{root.k, root.k * root.k, m.alpha - kI * root.k * m.beta, BoundSide::both};
    for (int i = 0; i < root.multiplicity; ++i)
      out.push_back(bs);
  }
  return out;
}

/// True iff every root with Im k > 0 is pure imaginary. An identically vanishing
/// dispersion relation puts all of the upper half plane in the spectrum.
inline bool spectrum_is_real(const BoundaryCondition &bc) {
  const DispersionRoots roots = dispersion_roots(bc);
  if (roots.identity_like)
    return false;
  for (const DispersionRoot &root : roots.roots)
    if (root.k.imag() > tol::kBoundStateIm && !is_pure_imaginary(root.k))
      return false;
  return true;
}

/// Root-level counterpart of the parametric real-spectrum condition: every
/// dispersion root is pure imaginary, whatever the sign of Im k.
inline bool roots_pure_imaginary(const BoundaryCondition &bc) {
  const DispersionRoots roots = dispersion_roots(bc);
  if (roots.identity_like)
    return false;
  for (const DispersionRoot &root : roots.roots)
    if (!is_pure_imaginary(root.k))
      return false;
  return true;
}

/// Half-line states: e^{ikx} on x > 0 needs ik = h+, e^{-ikx} on x < 0 needs -ik = h-.
inline std::vector<BoundState> separated_bound_states(const BoundaryCondition &bc) {
  const SeparatedSA &s = bc.separated_sa();
  std::vector<BoundState> out;
  if (std::isfinite(s.h_plus) && s.h_plus < 0.0) {
    const Complex k{0.0, -s.h_plus};
    out.push_back({k, k * k, 1.0, BoundSide::right_halfline});
  }
  if (std::isfinite(s.h_minus) && s.h_minus > 0.0) {
    const Complex k{0.0, s.h_minus};
    out.push_back({k, k * k, 1.0, BoundSide::left_halfline});
  }
  return out;
}

inline bool eigenfunction_pt_symmetric(const BoundState &bs) {
  if (bs.side != BoundSide::both)
    throw Error(ErrorCode::invalid_argument, "PT symmetry is defined for two-sided states");
  return std::abs(bs.k.real()) < tol::kPureImaginary &&
         std::abs(std::abs(bs.ratio) - 1.0) < tol::kPureImaginary;
}

/// psi(x) with c1 = 1: e^{-ikx} for x < 0 and r e^{ikx} for x >= 0.
inline Complex eigenfunction_eval(const BoundState &bs, double x) {
  if (bs.side != BoundSide::both)
    throw Error(ErrorCode::invalid_argument, "eigenfunction_eval needs a two-sided state");
  if (x < 0.0)
    return std::exp(-kI * bs.k * x);
  return bs.ratio * std::exp(kI * bs.k * x);
}

inline double eigenfunction_norm_squared(const BoundState &bs) {
  const double im = bs.k.imag();
  if (bs.side != BoundSide::both)
    return std::norm(bs.ratio) / (2.0 * im);
  return (1.0 + std::norm(bs.ratio)) / (2.0 * im);
}

} // namespace pointint
