// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

// Bethe-ansatz exchange operators and the Yang-Baxter relations they must obey.
//
// For spectral parameter k the operator acting on particles (i, i+1) is
//
//         2ik(ad - bg) P + ik(a - d) + k^2 b + g
//     Y = --------------------------------------- ,   (a, b, g, d) = (alpha, beta, gamma, delta)
//               ik(a + d) + k^2 b - g
//
// so Y = u I + v P with P the signed spin exchange. A lower index pair (a, b)
// on Y carries the spectral parameter (k_b - k_a) / 2.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pointint/boundary_condition.hpp"
#include "pointint/core.hpp"
#include "pointint/parallel.hpp"
#include "pointint/random.hpp"
#include "pointint/tensor.hpp"

namespace pointint {

struct YOperator {
  Complex u; // identity coefficient
  Complex v; // exchange coefficient
  int pair;  // acts on particles (pair, pair + 1)
  SpinConfig config;

  AmplitudeVector apply(const AmplitudeVector &x) const {
    AmplitudeVector out = u * x;
    out += v * signed_exchange(pair, x);
    return out;
  }
};

inline Complex y_denominator(const Matrix2 &m, Complex k) {
  return kI * k * m.trace() + k * k * m.beta - m.gamma;
}

inline double y_denominator_scale(const Matrix2 &m, Complex k) {
  return std::max({1.0, std::abs(k) * std::abs(m.trace()), std::norm(k) * std::abs(m.beta),
                   std::abs(m.gamma)});
}

/// Relative distance of k from a pole of Y.
inline double pole_distance(const Matrix2 &m, Complex k) {
  return std::abs(y_denominator(m, k)) / y_denominator_scale(m, k);
}

inline YOperator build_y(const BoundaryCondition &bc, Complex k_diff, int pair,
                         const SpinConfig &config) {
  const Matrix2 &m = bc.matrix();
  if (pair < 1 || pair >= config.num_particles())
    throw Error(ErrorCode::index_out_of_range, "Y pair index needs 1 <= i <= N-1");
  const Complex den = y_denominator(m, k_diff);
  if (std::abs(den) <= tol::kSingularDenominator * y_denominator_scale(m, k_diff))
    throw Error(ErrorCode::singular_denominator, "spectral parameter hits a pole of Y");
  const Complex u = (kI * k_diff * (m.alpha - m.delta) + k_diff * k_diff * m.beta + m.gamma) / den;
  const Complex v = 2.0 * kI * k_diff * m.det() / den;
  return {u, v, pair, config};
}

namespace detail {

// Largest entrywise deviation of lhs(e) from rhs(e) over the standard basis.
template <class Lhs, class Rhs>
double basis_residual(const SpinConfig &config, Lhs &&lhs, Rhs &&rhs) {
  double r = 0.0;
  for (std::size_t idx = 0; idx < config.dimension(); ++idx) {
    const AmplitudeVector e = AmplitudeVector::basis(config, idx);
    r = std::max(r, max_abs_diff(lhs(e), rhs(e)));
  }
  return r;
}

inline Complex half_difference(Complex ka, Complex kb) { return 0.5 * (ka - kb); }

} // namespace detail

/// Y^{12}_{ij} Y^{23}_{kj} Y^{12}_{ki} = Y^{23}_{ki} Y^{12}_{kj} Y^{23}_{ij} with (i, j, k) = (1, 2, 3).
inline double verify_ybe_triple(const BoundaryCondition &bc, Complex k1, Complex k2, Complex k3,
                                const SpinConfig &config) {
  if (config.num_particles() < 3)
    throw Error(ErrorCode::invalid_argument, "Yang-Baxter check needs N >= 3");
  // lower indices (a, b) -> (k_b - k_a) / 2
  const Complex s_ij = detail::half_difference(k2, k1);
  const Complex s_kj = detail::half_difference(k2, k3);
  const Complex s_ki = detail::half_difference(k1, k3);

  const YOperator l1 = build_y(bc, s_ij, 1, config);
  const YOperator l2 = build_y(bc, s_kj, 2, config);
  const YOperator l3 = build_y(bc, s_ki, 1, config);
  const YOperator r1 = build_y(bc, s_ki, 2, config);
  const YOperator r2 = build_y(bc, s_kj, 1, config);
  const YOperator r3 = build_y(bc, s_ij, 2, config);

  return detail::basis_residual(
      config, [&](const AmplitudeVector &e) { return l1.apply(l2.apply(l3.apply(e))); },
      [&](const AmplitudeVector &e) { return r1.apply(r2.apply(r3.apply(e))); });
}

/// Y(k) Y(-k) = 1 on the pair (1, 2).
inline double verify_inverse(const BoundaryCondition &bc, Complex k_diff, const SpinConfig &config) {
  if (config.num_particles() < 2)
    throw Error(ErrorCode::invalid_argument, "inverse relation needs N >= 2");
  const YOperator plus = build_y(bc, k_diff, 1, config);
  const YOperator minus = build_y(bc, -k_diff, 1, config);
  return detail::basis_residual(
      config, [&](const AmplitudeVector &e) { return plus.apply(minus.apply(e)); },
      [](const AmplitudeVector &e) { return e; });
}

/// Y on (1, 2) commutes with Y on (3, 4).
inline double verify_commute(const BoundaryCondition &bc, Complex k_a, Complex k_b,
                             const SpinConfig &config) {
  if (config.num_particles() < 4)
    throw Error(ErrorCode::invalid_argument, "commutation check needs N >= 4");
  const YOperator first = build_y(bc, k_a, 1, config);
  const YOperator second = build_y(bc, k_b, 3, config);
  return detail::basis_residual(
      config, [&](const AmplitudeVector &e) { return first.apply(second.apply(e)); },
      [&](const AmplitudeVector &e) { return second.apply(first.apply(e)); });
}

/// beta = 0 and alpha = delta = +-1 (which forces alpha delta - beta gamma = 1).
inline bool integrable(const BoundaryCondition &bc) {
  const Matrix2 &m = bc.matrix();
  return std::abs(m.beta) < tol::kMembership && std::abs(m.alpha - m.delta) < tol::kMembership &&
         std::abs(m.alpha * m.alpha - 1.0) < tol::kMembership;
}

enum class YbeVerdict { pass, fail, inconclusive };

inline std::string_view to_string(YbeVerdict v) {
  switch (v) {
  case YbeVerdict::pass: return "pass";
  case YbeVerdict::fail: return "fail";
  case YbeVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

inline YbeVerdict ybe_verdict(double residual) {
  if (residual < tol::kYbePass)
    return YbeVerdict::pass;
  if (residual > tol::kYbeFail)
    return YbeVerdict::fail;
  return YbeVerdict::inconclusive;
}

struct YbeBreakdown {
  int num_states;
  int num_particles;
  Statistics statistics;
  double residual_ybe = 0.0;
  double residual_inverse = 0.0;
  double residual_commute = 0.0; // only evaluated for N >= 4
};

struct YbeReport {
  double residual_ybe = 0.0;
  double residual_inverse = 0.0;
  double residual_commute = 0.0;
  bool passed = false;
  YbeVerdict verdict = YbeVerdict::inconclusive;
  std::uint64_t seed = 0;
  int samples_requested = 0;
  int samples_used = 0;
  int rejected_draws = 0;
  std::vector<YbeBreakdown> breakdown;
};

struct YbeScanOptions {
  std::vector<int> num_states{1, 2, 3};
  std::vector<int> num_particles{3, 4};
  std::vector<Statistics> statistics{Statistics::boson, Statistics::fermion};
  double k_min = -3.0;
  double k_max = 3.0;
  // draws closer than this (relative) to a pole of any needed Y are redrawn
  double pole_guard = 1e-8;
  int max_draws_per_sample = 64;
  bool parallel = true;
};

/// Random real momentum triples; every combination of n, N and statistics is
/// checked and the maxima reported. Deterministic given the seed.
inline YbeReport ybe_scan(const BoundaryCondition &bc, int num_samples, std::uint64_t seed,
                          const YbeScanOptions &opts = {}) {
  const Matrix2 &m = bc.matrix();
  if (num_samples < 1)
    throw Error(ErrorCode::invalid_argument, "ybe_scan needs at least one sample");

  std::vector<SpinConfig> configs;
  for (int n : opts.num_states)
    for (int big_n : opts.num_particles)
      for (Statistics s : opts.statistics)
        configs.emplace_back(big_n, n, s);

  struct SampleResult {
    bool used = false;
    int rejected = 0;
    std::vector<std::array<double, 3>> residuals;
  };
  std::vector<SampleResult> results(static_cast<std::size_t>(num_samples));

  auto run_sample = [&](std::size_t idx) {
    Rng rng = sample_rng(seed, idx);
    SampleResult &res = results[idx];
    for (int draw = 0; draw < opts.max_draws_per_sample; ++draw) {
      const double k1 = uniform(rng, opts.k_min, opts.k_max);
      const double k2 = uniform(rng, opts.k_min, opts.k_max);
      const double k3 = uniform(rng, opts.k_min, opts.k_max);
      bool near_pole = false;
      for (double diff : {k1 - k2, k1 - k3, k2 - k3})
        for (double sign : {1.0, -1.0})
          if (pole_distance(m, sign * 0.5 * diff) <= opts.pole_guard)
            near_pole = true;
      if (near_pole) {
        ++res.rejected;
        continue;
      }
      res.used = true;
      for (const SpinConfig &cfg : configs) {
        std::array<double, 3> r{0.0, 0.0, 0.0};
        r[0] = verify_ybe_triple(bc, k1, k2, k3, cfg);
        for (double diff : {k1 - k2, k1 - k3, k2 - k3})
          r[1] = std::max(r[1], verify_inverse(bc, 0.5 * diff, cfg));
        if (cfg.num_particles() >= 4)
          r[2] = verify_commute(bc, 0.5 * (k1 - k2), 0.5 * (k2 - k3), cfg);
        res.residuals.push_back(r);
      }
      return;
    }
  };
  if (opts.parallel) {
    parallel_for(results.size(), run_sample);
  } else {
    for (std::size_t idx = 0; idx < results.size(); ++idx)
      run_sample(idx);
  }

  YbeReport report;
  report.seed = seed;
  report.samples_requested = num_samples;
  int attempts = 0;
  for (const SampleResult &res : results) {
    report.rejected_draws += res.rejected;
    attempts += res.rejected + (res.used ? 1 : 0);
    if (res.used)
      ++report.samples_used;
  }
  if (report.samples_used == 0 || report.rejected_draws > 0.9 * attempts)
    throw Error(ErrorCode::pole_saturation, "more than 90% of momentum draws hit poles of Y");

  for (const SpinConfig &cfg : configs)
    report.breakdown.push_back({cfg.num_states(), cfg.num_particles(), cfg.statistics()});
  for (const SampleResult &res : results) {
    if (!res.used)
      continue;
    for (std::size_t c = 0; c < configs.size(); ++c) {
      YbeBreakdown &b = report.breakdown[c];
      b.residual_ybe = std::max(b.residual_ybe, res.residuals[c][0]);
      b.residual_inverse = std::max(b.residual_inverse, res.residuals[c][1]);
      b.residual_commute = std::max(b.residual_commute, res.residuals[c][2]);
    }
  }
  for (const YbeBreakdown &b : report.breakdown) {
    report.residual_ybe = std::max(report.residual_ybe, b.residual_ybe);
    report.residual_inverse = std::max(report.residual_inverse, b.residual_inverse);
    report.residual_commute = std::max(report.residual_commute, b.residual_commute);
  }
  const double worst =
      std::max({report.residual_ybe, report.residual_inverse, report.residual_commute});
  report.passed = worst < tol::kYbePass;
  report.verdict = ybe_verdict(worst);
  return report;
}

} // namespace pointint
