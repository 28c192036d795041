// Copyright 2026 The bellkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Grid-search oracles for frozen-state Bell maxima, independent of the
// see-saw path they are used to check. The two qubit-2 measurement vectors
// (resp. the four on sites B and C) are swept over angles in the x-z plane;
// the remaining site's vectors are eliminated exactly, since for fixed
// partners the expectation is linear in each direction and the maximum over
// a unit vector of a linear form is its norm.

#pragma once

#include <array>
#include <cmath>

#include "bellkit/bellkit.hpp"

namespace bellkit::testing {

namespace oracle_detail {

struct Tensor2 {
  double t[3][3];
};

struct Tensor3 {
  double t[3][3][3];
};

// Expectations computed directly from kron'd Pauli matrices; deliberately
// not routed through the maximizer's correlation_tensor.
inline Tensor2 tensor2(const PureState& psi) {
  const Matrix* paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
  Tensor2 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.t[i][j] = expectation(kron(*paulis[i], *paulis[j]), psi);
  return out;
}

inline Tensor3 tensor3(const PureState& psi) {
  const Matrix* paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
  Tensor3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.t[i][j][k] =
            expectation(kron(*paulis[i], kron(*paulis[j], *paulis[k])), psi);
  return out;
}

inline std::array<double, 3> planar(double angle) {
  return {std::sin(angle), 0.0, std::cos(angle)};
}

inline double norm3(const std::array<double, 3>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

inline double chsh_objective(const Tensor2& t, double tb, double tbp) {
  const std::array<double, 3> b = planar(tb);
  const std::array<double, 3> bp = planar(tbp);
  std::array<double, 3> u{}, v{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      u[i] += t.t[i][j] * (b[j] + bp[j]);
      v[i] += t.t[i][j] * (b[j] - bp[j]);
    }
  return norm3(u) + norm3(v);
}

inline double klyshko_objective(const Tensor3& t, double tb, double tbp,
                                double tc, double tcp) {
  const std::array<double, 3> b = planar(tb);
  const std::array<double, 3> bp = planar(tbp);
  const std::array<double, 3> c = planar(tc);
  const std::array<double, 3> cp = planar(tcp);
  std::array<double, 3> u{}, v{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double tijk = t.t[i][j][k];
        u[i] += tijk * (bp[j] * cp[k] - b[j] * c[k]);
        v[i] += tijk * (bp[j] * c[k] + b[j] * cp[k]);
      }
  return norm3(u) + norm3(v);
}

}  // namespace oracle_detail

/// Best CHSH expectation for a fixed two-qubit state, by dense planar grid
/// over the site-B angles with three local refinement stages.
inline double grid_max_chsh(const PureState& psi) {
  const oracle_detail::Tensor2 t = oracle_detail::tensor2(psi);
  const double two_pi = 6.283185307179586476925286766559;
  double best = -1e300, best_b = 0.0, best_bp = 0.0;

  const int coarse = 720;
  for (int i = 0; i < coarse; ++i)
    for (int j = 0; j < coarse; ++j) {
      const double tb = two_pi * i / coarse;
      const double tbp = two_pi * j / coarse;
      const double value = oracle_detail::chsh_objective(t, tb, tbp);
      if (value > best) {
        best = value;
        best_b = tb;
        best_bp = tbp;
      }
    }
  double span = two_pi / coarse;
  for (int stage = 0; stage < 3; ++stage) {
    const int fine = 64;
    double lo_b = best_b - span, lo_bp = best_bp - span;
    const double step = 2.0 * span / fine;
    for (int i = 0; i <= fine; ++i)
      for (int j = 0; j <= fine; ++j) {
        const double tb = lo_b + step * i;
        const double tbp = lo_bp + step * j;
        const double value = oracle_detail::chsh_objective(t, tb, tbp);
        if (value > best) {
          best = value;
          best_b = tb;
          best_bp = tbp;
        }
      }
    span = step;
  }
  return best;
}

/// Best Klyshko expectation for a fixed three-qubit state, planar grid over
/// the four site-B/site-C angles with two refinement stages.
inline double grid_max_klyshko(const PureState& psi) {
  const oracle_detail::Tensor3 t = oracle_detail::tensor3(psi);
  const double two_pi = 6.283185307179586476925286766559;
  double best = -1e300;
  std::array<double, 4> at{};

  const int coarse = 36;
  for (int i = 0; i < coarse; ++i)
    for (int j = 0; j < coarse; ++j)
      for (int k = 0; k < coarse; ++k)
        for (int l = 0; l < coarse; ++l) {
          const double value = oracle_detail::klyshko_objective(
              t, two_pi * i / coarse, two_pi * j / coarse, two_pi * k / coarse,
              two_pi * l / coarse);
          if (value > best) {
            best = value;
            at = {two_pi * i / coarse, two_pi * j / coarse, two_pi * k / coarse,
                  two_pi * l / coarse};
          }
        }
  double span = two_pi / coarse;
  for (int stage = 0; stage < 2; ++stage) {
    const int fine = 10;
    const double step = 2.0 * span / fine;
    const std::array<double, 4> lo = {at[0] - span, at[1] - span, at[2] - span,
                                      at[3] - span};
    for (int i = 0; i <= fine; ++i)
      for (int j = 0; j <= fine; ++j)
        for (int k = 0; k <= fine; ++k)
          for (int l = 0; l <= fine; ++l) {
            const double value = oracle_detail::klyshko_objective(
                t, lo[0] + step * i, lo[1] + step * j, lo[2] + step * k,
                lo[3] + step * l);
            if (value > best) {
              best = value;
              at = {lo[0] + step * i, lo[1] + step * j, lo[2] + step * k,
                    lo[3] + step * l};
            }
          }
    span = step;
  }
  return best;
}

}  // namespace bellkit::testing
