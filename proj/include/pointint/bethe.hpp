// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <deque>
#include <map>
#include <numeric>
#include <vector>

#include "pointint/boundary_condition.hpp"
#include "pointint/core.hpp"
#include "pointint/tensor.hpp"
#include "pointint/ybe.hpp"

namespace pointint {

/// Two particles in the sector x1 < x2:
///   phi = alpha12 e^{i(k1 x1 + k2 x2)} + alpha21 e^{i(k2 x1 + k1 x2)}.
struct TwoBodyWavefunction {
  BoundaryCondition bc;
  double k1;
  double k2;
  AmplitudeVector alpha12;
  AmplitudeVector alpha21;

  Statistics statistics() const { return alpha12.config().statistics(); }
  double k12() const { return 0.5 * (k1 - k2); }
};

/// alpha21 = Y(k12) alpha12 with k12 = (k1 - k2) / 2.
inline TwoBodyWavefunction two_body_solve(const BoundaryCondition &bc, double k1, double k2,
                                          const AmplitudeVector &alpha12, Statistics statistics) {
  if (alpha12.config().num_particles() != 2)
    throw Error(ErrorCode::invalid_argument, "two-body amplitudes need N = 2");
  const AmplitudeVector a12(alpha12.config().with_statistics(statistics), alpha12.entries());
  const YOperator y = build_y(bc, 0.5 * (k1 - k2), 1, a12.config());
  return {bc, k1, k2, a12, y.apply(a12)};
}

/// Largest defect of the two matching conditions at x1 = x2
///   A + C      = alpha P(A + C) + i beta k P(A - C)
///   i k (C - A) = gamma P(A + C) + i delta k P(A - C)
/// with A = alpha12, C = alpha21, k = k12.
///
/// The exchange relation is the sum of these two lines after solving for
/// P(A + C) and P(A - C); both lines hold together only when alpha = delta and
/// det B = 1, so a nonzero residual elsewhere is a property of B, not round-off.
inline double boundary_residual(const TwoBodyWavefunction &wf) {
  const Matrix2 &m = wf.bc.matrix();
  const Complex k = wf.k12();
  const AmplitudeVector sum = wf.alpha12 + wf.alpha21;
  const AmplitudeVector diff = wf.alpha12 - wf.alpha21;
  const AmplitudeVector p_sum = signed_exchange(1, sum);
  const AmplitudeVector p_diff = signed_exchange(1, diff);

  AmplitudeVector line1 = sum;
  line1 -= m.alpha * p_sum;
  line1 -= (kI * m.beta * k) * p_diff;

  AmplitudeVector line2 = (kI * k) * (wf.alpha21 - wf.alpha12);
  line2 -= m.gamma * p_sum;
  line2 -= (kI * m.delta * k) * p_diff;

  return std::max(line1.max_abs(), line2.max_abs());
}

/// Both sectors; the x1 > x2 sector carries P alpha on the swapped plane waves.
inline AmplitudeVector wavefunction_eval(const TwoBodyWavefunction &wf, double x1, double x2) {
  if (std::abs(x1 - x2) < 1e-12)
    throw Error(ErrorCode::on_contact_hyperplane, "x1 = x2 carries the matching, not a value");
  const double k1 = wf.k1, k2 = wf.k2;
  if (x1 < x2) {
    return std::exp(kI * (k1 * x1 + k2 * x2)) * wf.alpha12 +
           std::exp(kI * (k2 * x1 + k1 * x2)) * wf.alpha21;
  }
  return std::exp(kI * (k1 * x2 + k2 * x1)) * signed_exchange(1, wf.alpha12) +
         std::exp(kI * (k2 * x2 + k1 * x1)) * signed_exchange(1, wf.alpha21);
}

using Permutation = std::vector<int>; // labels l_1 ... l_N, 1-based

struct AmplitudeTable {
  SpinConfig config;
  std::vector<double> momenta;
  std::map<Permutation, AmplitudeVector> entries;
  // adjacent transpositions (1-based positions) applied from the identity
  std::map<Permutation, std::vector<int>> paths;
};

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

/// Sign of a permutation by inversion count.
inline int permutation_sign(const Permutation &p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

inline constexpr std::size_t kMaxTableEntries = std::size_t{1} << 24;

namespace detail {

// One exchange step: swapping positions (i, i+1) of source uses the spectral
// parameter (k_{l_i} - k_{l_{i+1}}) / 2 read from the source labels.
inline AmplitudeVector exchange_step(const BoundaryCondition &bc, const std::vector<double> &momenta,
                                     const Permutation &source, int position,
                                     const AmplitudeVector &amplitude) {
  const double ka = momenta[static_cast<std::size_t>(source[position - 1] - 1)];
  const double kb = momenta[static_cast<std::size_t>(source[position] - 1)];
  return build_y(bc, 0.5 * (ka - kb), position, amplitude.config()).apply(amplitude);
}

inline Permutation swapped(Permutation p, int position) {
  std::swap(p[static_cast<std::size_t>(position - 1)], p[static_cast<std::size_t>(position)]);
  return p;
}

} // namespace detail

/// Breadth-first over adjacent transpositions from the identity ordering. The
/// first path reaching a permutation is its lexicographically smallest reduced
/// word; for non-integrable B the amplitudes depend on that choice.
inline AmplitudeTable propagate_amplitudes(const BoundaryCondition &bc,
                                           const std::vector<double> &momenta,
                                           const AmplitudeVector &alpha_identity,
                                           const SpinConfig &config) {
  const int big_n = config.num_particles();
  if (static_cast<int>(momenta.size()) != big_n)
    throw Error(ErrorCode::invalid_argument, "need one momentum per particle");
  if (alpha_identity.config().dimension() != config.dimension())
    throw Error(ErrorCode::invalid_argument, "alpha_identity dimension does not match config");

  std::size_t count = 1;
  for (int i = 2; i <= big_n; ++i) {
    count *= static_cast<std::size_t>(i);
    if (count * config.dimension() > kMaxTableEntries)
      throw Error(ErrorCode::capacity, "N! * n^N exceeds the amplitude table capacity");
  }

  AmplitudeTable table{config, momenta, {}, {}};
  const Permutation start = identity_permutation(big_n);
  table.entries.emplace(start, AmplitudeVector(config, alpha_identity.entries()));
  table.paths.emplace(start, std::vector<int>{});

  std::deque<Permutation> queue{start};
  while (!queue.empty()) {
    const Permutation source = queue.front();
    queue.pop_front();
    for (int pos = 1; pos < big_n; ++pos) {
      Permutation target = detail::swapped(source, pos);
      if (table.entries.contains(target))
        continue;
      table.entries.emplace(target, detail::exchange_step(bc, momenta, source, pos,
                                                         table.entries.at(source)));
      std::vector<int> path = table.paths.at(source);
      path.push_back(pos);
      table.paths.emplace(target, std::move(path));
      queue.push_back(std::move(target));
    }
  }
  return table;
}

/// alpha_{321} along s1 s2 s1 versus s2 s1 s2; agreement is the amplitude-level
/// Yang-Baxter relation.
inline double three_body_consistency(const BoundaryCondition &bc, const std::vector<double> &momenta,
                                     const AmplitudeVector &alpha_identity,
                                     const SpinConfig &config) {
  if (config.num_particles() != 3 || momenta.size() != 3)
    throw Error(ErrorCode::invalid_argument, "three-body consistency needs N = 3");
  auto walk = [&](std::initializer_list<int> word) {
    Permutation perm = identity_permutation(3);
    AmplitudeVector amp(config, alpha_identity.entries());
    for (int pos : word) {
      amp = detail::exchange_step(bc, momenta, perm, pos, amp);
      perm = detail::swapped(perm, pos);
    }
    return amp;
  };
  return max_abs_diff(walk({1, 2, 1}), walk({2, 1, 2}));
}

} // namespace pointint
