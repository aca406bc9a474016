// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only reference computations. Nothing here calls into the library's
// solver, exchange or Y-operator code paths.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using C = std::complex<long double>;
using Cd = std::complex<double>;

/// Weierstrass (Durand-Kerner) iteration for beta k^2 + i tau k - gamma = 0 in
/// long double. Returns both roots; no discriminant formula involved.
inline std::vector<Cd> dispersion_roots(Cd alpha, Cd beta, Cd gamma, Cd delta) {
  const C b = C(beta.real(), beta.imag());
  const C tau = C((alpha + delta).real(), (alpha + delta).imag());
  const C g = C(gamma.real(), gamma.imag());
  const C i(0.0L, 1.0L);
  const C p1 = i * tau / b, p0 = -g / b; // monic k^2 + p1 k + p0
  auto poly = [&](C k) { return k * k + p1 * k + p0; };

  C z1(0.4L, 0.9L), z2 = z1 * z1;
  for (int it = 0; it < 2000; ++it) {
    const C d1 = z1 - z2;
    const C d2 = z2 - z1;
    const C n1 = z1 - poly(z1) / d1;
    const C n2 = z2 - poly(z2) / d2;
    z1 = n1;
    z2 = n2;
  }
  // Newton polish
  for (int it = 0; it < 20; ++it) {
    for (C *z : {&z1, &z2}) {
      const C d = 2.0L * *z + p1;
      if (std::abs(d) > 1e-30L)
        *z -= poly(*z) / d;
    }
  }
  return {Cd(double(z1.real()), double(z1.imag())), Cd(double(z2.real()), double(z2.imag()))};
}

/// Dense complex matrix, row-major.
struct Dense {
  std::size_t dim;
  std::vector<Cd> a;

  explicit Dense(std::size_t d) : dim(d), a(d * d) {}
  Cd &operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  Cd operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

  static Dense identity(std::size_t d) {
    Dense m(d);
    for (std::size_t i = 0; i < d; ++i)
      m(i, i) = 1.0;
    return m;
  }

  friend Dense operator*(const Dense &x, const Dense &y) {
    Dense z(x.dim);
    for (std::size_t r = 0; r < x.dim; ++r)
      for (std::size_t k = 0; k < x.dim; ++k)
        for (std::size_t c = 0; c < x.dim; ++c)
          z(r, c) += x(r, k) * y(k, c);
    return z;
  }
};

inline double max_abs_diff(const Dense &x, const Dense &y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

/// All label tuples (s_1, ..., s_N) in order, produced by an odometer.
inline std::vector<std::vector<int>> label_tuples(int big_n, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(static_cast<std::size_t>(big_n), 0);
  while (true) {
    out.push_back(s);
    int pos = big_n - 1;
    while (pos >= 0 && ++s[static_cast<std::size_t>(pos)] == n) {
      s[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0)
      return out;
  }
}

/// Dense signed exchange of particles (i, i+1), 1-based, built by matching tuples.
inline Dense exchange_matrix(int big_n, int n, int i, bool fermion) {
  const auto tuples = label_tuples(big_n, n);
  Dense p(tuples.size());
  for (std::size_t col = 0; col < tuples.size(); ++col) {
    auto t = tuples[col];
    std::swap(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]);
    for (std::size_t row = 0; row < tuples.size(); ++row)
      if (tuples[row] == t)
        p(row, col) = fermion ? -1.0 : 1.0;
  }
  return p;
}

/// Dense Y-operator from the rational formula, computed entry by entry.
inline Dense y_matrix(Cd alpha, Cd beta, Cd gamma, Cd delta, Cd k, int big_n, int n, int pair,
                      bool fermion) {
  const Cd i(0.0, 1.0);
  const Cd den = i * k * (alpha + delta) + k * k * beta - gamma;
  const Cd pc = 2.0 * i * k * (alpha * delta - beta * gamma) / den;
  const Cd ic = (i * k * (alpha - delta) + k * k * beta + gamma) / den;
  const Dense p = exchange_matrix(big_n, n, pair, fermion);
  Dense y(p.dim);
  for (std::size_t r = 0; r < p.dim; ++r)
    for (std::size_t c = 0; c < p.dim; ++c)
      y(r, c) = pc * p(r, c) + (r == c ? ic : 0.0);
  return y;
}

} // namespace oracle
