// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

// Spin amplitude space of N particles with n internal states each.
//
// Basis order: index = sum_i s_i n^{N-i} with 0-based labels s_i and s_1 the
// most significant digit. User-facing labels are 1-based.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pointint/core.hpp"

namespace pointint {

enum class Statistics { boson, fermion };

inline std::string_view to_string(Statistics s) {
  return s == Statistics::boson ? "boson" : "fermion";
}

inline constexpr std::size_t kMaxAmplitudeDimension = std::size_t{1} << 20;

class SpinConfig {
public:
  SpinConfig(int num_particles, int num_states, Statistics statistics)
      : num_particles_(num_particles), num_states_(num_states), statistics_(statistics) {
    if (num_particles < 1 || num_states < 1)
      throw Error(ErrorCode::invalid_argument, "SpinConfig needs N >= 1 and n >= 1");
    std::size_t dim = 1;
    for (int i = 0; i < num_particles; ++i) {
      dim *= static_cast<std::size_t>(num_states);
      if (dim > kMaxAmplitudeDimension)
        throw Error(ErrorCode::capacity, "n^N exceeds 2^20");
    }
    dimension_ = dim;
  }

  int num_particles() const { return num_particles_; }
  int num_states() const { return num_states_; }
  Statistics statistics() const { return statistics_; }
  std::size_t dimension() const { return dimension_; }

  /// Weight of the digit of particle i (1-based) in the basis index.
  std::size_t stride(int particle) const {
    std::size_t s = 1;
    for (int j = particle; j < num_particles_; ++j)
      s *= static_cast<std::size_t>(num_states_);
    return s;
  }

  std::size_t index_of(const std::vector<int> &labels) const {
    if (static_cast<int>(labels.size()) != num_particles_)
      throw Error(ErrorCode::index_out_of_range, "label count does not match N");
    std::size_t idx = 0;
    for (int s : labels) {
      if (s < 0 || s >= num_states_)
        throw Error(ErrorCode::index_out_of_range, "spin label out of range");
      idx = idx * static_cast<std::size_t>(num_states_) + static_cast<std::size_t>(s);
    }
    return idx;
  }

  SpinConfig with_statistics(Statistics s) const { return {num_particles_, num_states_, s}; }

  friend bool operator==(const SpinConfig &, const SpinConfig &) = default;

private:
  int num_particles_;
  int num_states_;
  Statistics statistics_;
  std::size_t dimension_ = 1;
};

class AmplitudeVector {
public:
  explicit AmplitudeVector(SpinConfig config)
      : config_(config), entries_(config.dimension(), Complex{0.0, 0.0}) {}

  AmplitudeVector(SpinConfig config, std::vector<Complex> entries)
      : config_(config), entries_(std::move(entries)) {
    if (entries_.size() != config_.dimension())
      throw Error(ErrorCode::invalid_argument, "amplitude length must equal n^N");
    for (Complex z : entries_)
      require_finite(z, "amplitude entry");
  }

  /// Standard basis vector for 0-based labels.
  static AmplitudeVector basis(SpinConfig config, const std::vector<int> &labels) {
    AmplitudeVector v(config);
    v.entries_[config.index_of(labels)] = 1.0;
    return v;
  }

  static AmplitudeVector basis(SpinConfig config, std::size_t index) {
    AmplitudeVector v(config);
    if (index >= v.entries_.size())
      throw Error(ErrorCode::index_out_of_range, "basis index out of range");
    v.entries_[index] = 1.0;
    return v;
  }

  const SpinConfig &config() const { return config_; }
  const std::vector<Complex> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Complex operator[](std::size_t i) const { return entries_[i]; }

  AmplitudeVector &operator+=(const AmplitudeVector &o) {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      entries_[i] += o.entries_[i];
    return *this;
  }
  AmplitudeVector &operator-=(const AmplitudeVector &o) {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      entries_[i] -= o.entries_[i];
    return *this;
  }
  AmplitudeVector &operator*=(Complex s) {
    for (Complex &z : entries_)
      z *= s;
    return *this;
  }

  friend AmplitudeVector operator+(AmplitudeVector a, const AmplitudeVector &b) { return a += b; }
  friend AmplitudeVector operator-(AmplitudeVector a, const AmplitudeVector &b) { return a -= b; }
  friend AmplitudeVector operator*(Complex s, AmplitudeVector a) { return a *= s; }

  double norm() const {
    double s = 0.0;
    for (Complex z : entries_)
      s += std::norm(z);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (Complex z : entries_)
      m = std::max(m, std::abs(z));
    return m;
  }

private:
  SpinConfig config_;
  std::vector<Complex> entries_;
};

inline double max_abs_diff(const AmplitudeVector &a, const AmplitudeVector &b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Swaps the labels s_i and s_j (1-based particles, i < j). Index permutation only.
inline AmplitudeVector transposition_apply(int i, int j, const AmplitudeVector &v) {
  const SpinConfig &cfg = v.config();
  if (i < 1 || j <= i || j > cfg.num_particles())
    throw Error(ErrorCode::index_out_of_range, "transposition needs 1 <= i < j <= N");
  const std::size_t n = static_cast<std::size_t>(cfg.num_states());
  const std::size_t si = cfg.stride(i), sj = cfg.stride(j);

  std::vector<Complex> out(v.size());
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    const std::size_t di = (idx / si) % n, dj = (idx / sj) % n;
    const std::size_t swapped = idx - di * si - dj * sj + dj * si + di * sj;
    out[swapped] = v[idx];
  }
  return AmplitudeVector(cfg, std::move(out));
}

/// P^{i,i+1}: +p for bosons, -p for fermions.
inline AmplitudeVector signed_exchange(int i, const AmplitudeVector &v) {
  if (i < 1 || i >= v.config().num_particles())
    throw Error(ErrorCode::index_out_of_range, "exchange needs 1 <= i <= N-1");
  AmplitudeVector out = transposition_apply(i, i + 1, v);
  if (v.config().statistics() == Statistics::fermion)
    out *= -1.0;
  return out;
}

} // namespace pointint
