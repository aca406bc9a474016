// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

// Membership tests for the parametric families of point-interaction boundary
// conditions:
//
//   self-adjoint      B = e^{i theta} [[a, b], [c, d]],  a, b, c, d real, ad - bc = 1
//   PT-symmetric      B = e^{i theta} [[s e^{i phi}, b], [c, s e^{-i phi}]],
//                     s = sqrt(1 + bc), b >= 0, c >= -1/b
//   real spectrum     tau = alpha + delta, beta, gamma share one phase e^{i theta}
//                     with real (t, b, c) and 4c/b <= t^2/b^2 (beta != 0),
//                     or tau and gamma share one phase (beta == 0)
//
// Each test extracts canonical parameters, rebuilds the matrix from them and
// accepts only if the rebuilt matrix matches B entrywise within 1e-10.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pointint/boundary_condition.hpp"
#include "pointint/core.hpp"

namespace pointint {

struct SAParams {
  double theta, a, b, c, d;

  Matrix2 reconstruct() const {
    return unit_phase(theta) * Matrix2{a, b, c, d};
  }
};

struct PTParams {
  double theta, phi, b, c;

  Matrix2 reconstruct() const {
    const double s = std::sqrt(std::max(0.0, 1.0 + b * c));
    return unit_phase(theta) * Matrix2{s * unit_phase(phi), b, c, s * unit_phase(-phi)};
  }
};

/// tau = t e^{i theta}, beta = b e^{i theta}, gamma = c e^{i theta}.
struct RSParams {
  double theta, t, b, c;
};

enum class Ternary { yes, no, not_applicable };

inline std::string_view to_string(Ternary t) {
  switch (t) {
  case Ternary::yes: return "yes";
  case Ternary::no: return "no";
  case Ternary::not_applicable: return "not_applicable";
  }
  return "not_applicable";
}

struct RealSpectrumAssessment {
  Ternary verdict = Ternary::not_applicable;
  std::optional<RSParams> params;
  bool marginal = false;
};

enum class TagKind { free, delta, anti_delta, dirichlet, neumann };
enum class HalfLine { left, right };

struct SpecialTag {
  TagKind kind;
  double strength = 0.0; // c for delta / anti_delta
  HalfLine side = HalfLine::right;

  friend bool operator==(const SpecialTag &, const SpecialTag &) = default;
};

inline std::string to_string(const SpecialTag &tag) {
  auto side = [&] { return tag.side == HalfLine::left ? std::string("left") : std::string("right"); };
  switch (tag.kind) {
  case TagKind::free: return "free";
  case TagKind::delta: return "delta(" + std::to_string(tag.strength) + ")";
  case TagKind::anti_delta: return "anti_delta(" + std::to_string(tag.strength) + ")";
  case TagKind::dirichlet: return "dirichlet(" + side() + ")";
  case TagKind::neumann: return "neumann(" + side() + ")";
  }
  return "";
}

namespace detail {

// Membership residuals are absolute for O(1) matrices and grow with the entries.
inline double membership_tolerance(const Matrix2 &m) {
  return tol::kMembership * std::max(1.0, max_abs_entry(m));
}

// Angle of z folded onto [0, pi): the sign of z is left to the caller.
inline double half_turn_angle(Complex z) {
  double a = wrap_angle(std::arg(z));
  if (a >= kPi)
    a -= kPi;
  return a;
}

inline bool is_beta_zero(const Matrix2 &m) {
  const double scale = std::max({std::abs(m.alpha), std::abs(m.delta), std::abs(m.gamma), 1.0});
  return std::abs(m.beta) <= tol::kZeroCoefficient * scale;
}

} // namespace detail

/// Phase theta is taken from the first nonzero entry in row-major order, which
/// is positive real after rotation by e^{-i theta}.
inline std::optional<SAParams> classify_self_adjoint(const BoundaryCondition &bc) {
  const Matrix2 &m = bc.matrix();
  const double tol = detail::membership_tolerance(m);

  Complex lead = 0.0;
  for (Complex z : {m.alpha, m.beta, m.gamma, m.delta}) {
    if (std::abs(z) > tol) {
      lead = z;
      break;
    }
  }
  if (lead == 0.0)
    return std::nullopt;

  const double theta = wrap_angle(std::arg(lead));
  const Matrix2 r = unit_phase(-theta) * m;
  const double im = max_modulus({r.alpha.imag(), r.beta.imag(), r.gamma.imag(), r.delta.imag()});
  if (im > tol)
    return std::nullopt;

  SAParams p{theta, r.alpha.real(), r.beta.real(), r.gamma.real(), r.delta.real()};
  if (std::abs(p.a * p.d - p.b * p.c - 1.0) > tol)
    return std::nullopt;
  if (max_abs_diff(p.reconstruct(), m) > tol)
    return std::nullopt;
  return p;
}

/// Parametric PT test. theta comes from beta when it is nonzero (so b > 0),
/// otherwise from gamma or from det B = e^{2 i theta}, folded onto [0, pi).
inline std::optional<PTParams> classify_pt(const BoundaryCondition &bc) {
  const Matrix2 &m = bc.matrix();
  const double tol = detail::membership_tolerance(m);

  if (std::abs(std::abs(m.det()) - 1.0) > tol)
    return std::nullopt;

  double theta;
  if (std::abs(m.beta) > tol)
    theta = wrap_angle(std::arg(m.beta));
  else if (std::abs(m.gamma) > tol)
    theta = detail::half_turn_angle(m.gamma);
  else
    theta = detail::half_turn_angle(std::polar(1.0, std::arg(m.det()) / 2.0));

  const Complex rot = unit_phase(-theta);
  double b = (rot * m.beta).real();
  const double c = (rot * m.gamma).real();
  if (b < 0.0) {
    if (b < -tol)
      return std::nullopt;
    b = 0.0;
  }
  if (1.0 + b * c < -tol)
    return std::nullopt;

  const Complex diag = rot * m.alpha;
  const double phi = std::abs(diag) > tol ? wrap_angle(std::arg(diag)) : 0.0;

  PTParams p{theta, phi, b, c};
  if (max_abs_diff(p.reconstruct(), m) > tol)
    return std::nullopt;
  return p;
}

/// Residual of the algebraic PT characterization B * conj(J B J) = I with
/// J = diag(1, -1), i.e. B = conj(J B^{-1} J).
inline double pt_algebraic_residual(const Matrix2 &m) {
  const Matrix2 jbj{m.alpha, -m.beta, -m.gamma, m.delta};
  return max_abs_diff(m * jbj.conj(), Matrix2::identity());
}

inline bool satisfies_pt_algebraic(const BoundaryCondition &bc) {
  const Matrix2 &m = bc.matrix();
  return pt_algebraic_residual(m) <= tol::kMembership * std::max(1.0, max_abs_entry(m));
}

/// Real spectrum of a PT-symmetric operator:
///   bc sin^2 phi <= cos^2 phi,  or  bc sin^2 phi >= cos^2 phi and cos phi >= 0.
inline bool pt_real_spectrum_condition(const PTParams &p) {
  const double sin2 = std::sin(p.phi) * std::sin(p.phi);
  const double cos_phi = std::cos(p.phi);
  const double lhs = p.b * p.c * sin2;
  const double rhs = cos_phi * cos_phi;
  return lhs <= rhs || (lhs >= rhs && cos_phi >= 0.0);
}

/// True when the verdict above could flip under a 1e-7 perturbation.
inline bool pt_real_spectrum_marginal(const PTParams &p) {
  const double sin2 = std::sin(p.phi) * std::sin(p.phi);
  const double cos_phi = std::cos(p.phi);
  const double lhs = p.b * p.c * sin2;
  const double rhs = cos_phi * cos_phi;
  const double band = tol::kMarginalBand * std::max({1.0, std::abs(lhs), rhs});
  const bool near_equal = std::abs(lhs - rhs) <= band;
  if (near_equal && cos_phi < tol::kMarginalBand)
    return true;
  return std::abs(cos_phi) <= tol::kMarginalBand && lhs > rhs - band;
}

/// Parametric real-spectrum condition. Zero entries carry no phase and impose
/// no constraint. Never returns not_applicable for a non-separated input.
inline RealSpectrumAssessment classify_real_spectrum_condition(const BoundaryCondition &bc) {
  const Matrix2 &m = bc.matrix();
  const Complex tau = m.trace();
  const double scale = std::max({1.0, std::abs(tau), std::abs(m.beta), std::abs(m.gamma)});
  const double tol = tol::kMembership * scale;
  const double band = tol::kMarginalBand * scale;

  RealSpectrumAssessment out;

  if (!detail::is_beta_zero(m)) {
    const double theta = wrap_angle(std::arg(m.beta));
    const Complex rot = unit_phase(-theta);
    const Complex t = rot * tau, c = rot * m.gamma;
    const double b = std::abs(m.beta);
    const double phase_residual = std::max(std::abs(t.imag()), std::abs(c.imag()));
    const bool same_phase = phase_residual <= tol;

    out.params = RSParams{theta, t.real(), b, c.real()};
    const double lhs = 4.0 * c.real() / b;
    const double rhs = t.real() * t.real() / (b * b);
    const bool inequality = lhs <= rhs;

    out.verdict = same_phase && inequality ? Ternary::yes : Ternary::no;
    if (phase_residual > tol && phase_residual <= band)
      out.marginal = true;
    if (same_phase &&
        std::abs(rhs - lhs) <= tol::kMarginalBand * std::max({1.0, std::abs(lhs), rhs}))
      out.marginal = true;
    if (!same_phase)
      out.params.reset();
    return out;
  }

  // beta == 0: tau and gamma share one phase.
  const bool tau_zero = std::abs(tau) <= tol;
  const bool gamma_zero = std::abs(m.gamma) <= tol;
  if (tau_zero && gamma_zero) {
    // The dispersion relation vanishes identically.
    out.verdict = Ternary::yes;
    out.params = RSParams{0.0, 0.0, 0.0, 0.0};
    out.marginal = true;
    return out;
  }
  const Complex lead = tau_zero ? m.gamma : tau;
  const double theta = wrap_angle(std::arg(lead));
  const Complex rot = unit_phase(-theta);
  const Complex t = rot * tau, c = rot * m.gamma;
  const double phase_residual = std::max(std::abs(t.imag()), std::abs(c.imag()));
  const bool same_phase = phase_residual <= tol;
  out.verdict = same_phase ? Ternary::yes : Ternary::no;
  if (same_phase)
    out.params = RSParams{theta, t.real(), 0.0, c.real()};
  if (phase_residual > tol && phase_residual <= band)
    out.marginal = true;
  // A vanishing trace sends the single root to infinity.
  if (!tau_zero && std::abs(tau) <= band)
    out.marginal = true;
  return out;
}

inline std::vector<SpecialTag> special_tags(const BoundaryCondition &bc) {
  std::vector<SpecialTag> tags;
  switch (bc.kind()) {
  case BcKind::non_separated: {
    const Matrix2 &m = bc.matrix();
    const double tol = detail::membership_tolerance(m);
    const bool real_gamma = std::abs(m.gamma.imag()) <= tol;
    if (max_abs_diff(m, Matrix2::identity()) <= tol)
      tags.push_back({TagKind::free});
    else if (real_gamma && max_abs_diff(m, Matrix2{1.0, 0.0, m.gamma.real(), 1.0}) <= tol)
      tags.push_back({TagKind::delta, m.gamma.real()});
    else if (real_gamma && max_abs_diff(m, Matrix2{-1.0, 0.0, m.gamma.real(), -1.0}) <= tol)
      tags.push_back({TagKind::anti_delta, m.gamma.real()});
    break;
  }
  case BcKind::separated_sa: {
    const SeparatedSA &s = bc.separated_sa();
    auto add = [&](double h, HalfLine side) {
      if (std::isinf(h))
        tags.push_back({TagKind::dirichlet, 0.0, side});
      else if (h == 0.0)
        tags.push_back({TagKind::neumann, 0.0, side});
    };
    add(s.h_plus, HalfLine::right);
    add(s.h_minus, HalfLine::left);
    break;
  }
  case BcKind::separated_pt:
    break;
  }
  return tags;
}

inline bool is_delta_type(const std::vector<SpecialTag> &tags) {
  for (const auto &t : tags)
    if (t.kind == TagKind::free || t.kind == TagKind::delta || t.kind == TagKind::anti_delta)
      return true;
  return false;
}

struct ClassificationReport {
  bool is_self_adjoint = false;
  std::optional<SAParams> sa_params;
  bool is_pt = false;
  std::optional<PTParams> pt_params;
  std::optional<bool> pt_real_spectrum_condition;
  Ternary has_real_spectrum_by_paper_condition = Ternary::not_applicable;
  std::optional<RSParams> rs_params;
  std::vector<SpecialTag> special_tags;
  bool marginal = false;
};

inline ClassificationReport classify(const BoundaryCondition &bc) {
  ClassificationReport r;
  r.special_tags = special_tags(bc);
  switch (bc.kind()) {
  case BcKind::non_separated: {
    r.sa_params = classify_self_adjoint(bc);
    r.is_self_adjoint = r.sa_params.has_value();
    r.pt_params = classify_pt(bc);
    r.is_pt = r.pt_params.has_value();
    if (r.pt_params) {
      r.pt_real_spectrum_condition = pointint::pt_real_spectrum_condition(*r.pt_params);
      r.marginal = r.marginal || pt_real_spectrum_marginal(*r.pt_params);
    }
    const RealSpectrumAssessment rs = classify_real_spectrum_condition(bc);
    r.has_real_spectrum_by_paper_condition = rs.verdict;
    r.rs_params = rs.params;
    r.marginal = r.marginal || rs.marginal;
    break;
  }
  case BcKind::separated_sa:
    r.is_self_adjoint = true;
    break;
  case BcKind::separated_pt:
    r.is_pt = true;
    break;
  }
  return r;
}

} // namespace pointint
