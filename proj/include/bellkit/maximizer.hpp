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

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bellkit/bell_operators.hpp"
#include "bellkit/linalg.hpp"
#include "bellkit/rng.hpp"
#include "bellkit/state.hpp"

namespace bellkit {

/// Correlation tensor T_ij = <sigma_i (x) sigma_j> (order 2) or
/// T_ijk = <sigma_i (x) sigma_j (x) sigma_k> (order 3), axes indexed x, y, z.
/// The Bell expectation is linear in each direction vector through this
/// tensor, which is what makes the closed-form settings update possible.
struct CorrelationTensor {
  int order = 2;
  std::array<double, 27> values{};

  double& at(int i, int j) { return values[static_cast<std::size_t>(3 * i + j)]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(3 * i + j)]; }
  double& at(int i, int j, int k) {
    return values[static_cast<std::size_t>(9 * i + 3 * j + k)];
  }
  double at(int i, int j, int k) const {
    return values[static_cast<std::size_t>(9 * i + 3 * j + k)];
  }
};

inline CorrelationTensor correlation_tensor(const PureState& psi) {
  const Matrix* paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
  CorrelationTensor t;
  t.order = psi.n_qubits();
  if (t.order == 2) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        t.at(i, j) = expectation(kron(*paulis[i], *paulis[j]), psi);
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Matrix ij = kron(*paulis[i], *paulis[j]);
        for (int k = 0; k < 3; ++k)
          t.at(i, j, k) = expectation(kron(ij, *paulis[k]), psi);
      }
  }
  return t;
}

/// Largest eigenvalue of a Bell operator together with a maximizing state.
/// With degenerate top eigenvalues the eigensolver's choice is kept as is;
/// any maximizer is acceptable and the choice is deterministic.
struct BestState {
  double value;
  PureState state;
};

inline BestState best_state(const Matrix& bell_op) {
  if (bell_op.rows() != 4 && bell_op.rows() != 8) {
    throw InvalidInput("best_state: operator must be 4x4 or 8x8");
  }
  const EigResult eig = eig_hermitian(bell_op);
  const std::size_t n = bell_op.rows();
  const std::size_t top = n - 1;
  std::vector<Complex> amps(n);
  for (std::size_t i = 0; i < n; ++i) amps[i] = eig.eigenvectors(i, top);
  // Eigenvector columns are orthonormal to solver precision; renormalize so
  // the state constructor's invariant holds exactly.
  double nrm = vector_norm(amps);
  for (Complex& a : amps) a /= nrm;
  return BestState{eig.eigenvalues[top],
                   PureState(n == 4 ? 2 : 3, std::move(amps))};
}

namespace detail {

inline Vec3 renormalize_or_keep(const Vec3& candidate, const Vec3& previous) {
  const double n = norm(candidate);
  if (n < 1e-12) return previous;  // degenerate direction, keep the old one
  return (1.0 / n) * candidate;
}

inline Vec3 contract_left(const CorrelationTensor& t, const Vec3& v) {
  // u_i = sum_j T_ij v_j
  Vec3 u;
  const double vj[3] = {v.x, v.y, v.z};
  double out[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += t.at(i, j) * vj[j];
  u.x = out[0];
  u.y = out[1];
  u.z = out[2];
  return u;
}

inline Vec3 contract_right(const CorrelationTensor& t, const Vec3& v) {
  // u_j = sum_i T_ij v_i
  Vec3 u;
  const double vi[3] = {v.x, v.y, v.z};
  double out[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[j] += t.at(i, j) * vi[i];
  u.x = out[0];
  u.y = out[1];
  u.z = out[2];
  return u;
}

// sum_{jk} T_ijk p_j q_k and its permutations for the two other slots.
inline Vec3 contract3(const CorrelationTensor& t, int slot, const Vec3& p,
                      const Vec3& q) {
  const double pv[3] = {p.x, p.y, p.z};
  const double qv[3] = {q.x, q.y, q.z};
  double out[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (slot == 0)
          out[i] += t.at(i, j, k) * pv[j] * qv[k];
        else if (slot == 1)
          out[j] += t.at(i, j, k) * pv[i] * qv[k];
        else
          out[k] += t.at(i, j, k) * pv[i] * qv[j];
      }
  return Vec3{out[0], out[1], out[2]};
}

}  // namespace detail

/// One settings half-step of the see-saw: each direction vector is replaced
/// by the normalized gradient of <B> with respect to it, site by site, using
/// already-updated vectors for the later sites. The expectation value never
/// decreases.
inline ChshSettings best_settings_step(const PureState& psi,
                                       const ChshSettings& s) {
  const CorrelationTensor t = correlation_tensor(psi);
  const Vec3 b = s.b.direction, bp = s.b_prime.direction;
  const Vec3 a_new = detail::renormalize_or_keep(
      detail::contract_left(t, b + bp), s.a.direction);
  const Vec3 ap_new = detail::renormalize_or_keep(
      detail::contract_left(t, b - bp), s.a_prime.direction);
  const Vec3 b_new = detail::renormalize_or_keep(
      detail::contract_right(t, a_new + ap_new), s.b.direction);
  const Vec3 bp_new = detail::renormalize_or_keep(
      detail::contract_right(t, a_new - ap_new), s.b_prime.direction);
  return ChshSettings{observable_from_vector(a_new),
                      observable_from_vector(ap_new),
                      observable_from_vector(b_new),
                      observable_from_vector(bp_new)};
}

inline KlyshkoSettings best_settings_step(const PureState& psi,
                                          const KlyshkoSettings& s) {
  const CorrelationTensor t = correlation_tensor(psi);
  Vec3 a = s.a.direction, ap = s.a_prime.direction;
  Vec3 b = s.b.direction, bp = s.b_prime.direction;
  Vec3 c = s.c.direction, cp = s.c_prime.direction;
  // Gradients follow the sign pattern of A'B'C + A'BC' + AB'C' - ABC.
  a = detail::renormalize_or_keep(
      detail::contract3(t, 0, bp, cp) - detail::contract3(t, 0, b, c), a);
  ap = detail::renormalize_or_keep(
      detail::contract3(t, 0, bp, c) + detail::contract3(t, 0, b, cp), ap);
  b = detail::renormalize_or_keep(
      detail::contract3(t, 1, ap, cp) - detail::contract3(t, 1, a, c), b);
  bp = detail::renormalize_or_keep(
      detail::contract3(t, 1, ap, c) + detail::contract3(t, 1, a, cp), bp);
  c = detail::renormalize_or_keep(
      detail::contract3(t, 2, ap, bp) - detail::contract3(t, 2, a, b), c);
  cp = detail::renormalize_or_keep(
      detail::contract3(t, 2, ap, b) + detail::contract3(t, 2, a, bp), cp);
  return KlyshkoSettings{observable_from_vector(a), observable_from_vector(ap),
                         observable_from_vector(b), observable_from_vector(bp),
                         observable_from_vector(c), observable_from_vector(cp)};
}

using Settings = std::variant<ChshSettings, KlyshkoSettings>;

struct MaximizerResult {
  double value = 0.0;
  PureState state;
  Settings settings;
  int iterations = 0;
  int restarts_used = 0;
  double orthogonality_residual = 0.0;
  /// Objective after every accepted half-step of the winning restart;
  /// non-decreasing by construction.
  std::vector<double> value_trace;
};

struct SeesawOptions {
  int restarts = 50;
  double tol = 1e-12;
  int max_iters = 500;
  std::uint64_t seed = 0;
  /// When set, the state is held fixed and only the settings are optimized.
  std::optional<PureState> frozen_state;
};

namespace detail {

inline Vec3 random_unit_vector(SplitMix64& rng) {
  while (true) {
    const Vec3 v{rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian()};
    const double n = norm(v);
    if (n > 1e-6) return (1.0 / n) * v;
  }
}

template <typename SettingsT>
SettingsT random_settings(SplitMix64& rng);

template <>
inline ChshSettings random_settings<ChshSettings>(SplitMix64& rng) {
  return ChshSettings{observable_from_vector(random_unit_vector(rng)),
                      observable_from_vector(random_unit_vector(rng)),
                      observable_from_vector(random_unit_vector(rng)),
                      observable_from_vector(random_unit_vector(rng))};
}

template <>
inline KlyshkoSettings random_settings<KlyshkoSettings>(SplitMix64& rng) {
  return KlyshkoSettings{observable_from_vector(random_unit_vector(rng)),
                         observable_from_vector(random_unit_vector(rng)),
                         observable_from_vector(random_unit_vector(rng)),
                         observable_from_vector(random_unit_vector(rng)),
                         observable_from_vector(random_unit_vector(rng)),
                         observable_from_vector(random_unit_vector(rng))};
}

inline Matrix build_operator(const ChshSettings& s) { return chsh_operator(s); }
inline Matrix build_operator(const KlyshkoSettings& s) {
  return klyshko_operator(s);
}

template <typename SettingsT>
MaximizerResult seesaw_impl(const SeesawOptions& opts) {
  if (opts.restarts < 1) throw InvalidInput("seesaw: restarts must be >= 1");
  if (!(opts.tol > 0.0)) throw InvalidInput("seesaw: tol must be positive");
  if (opts.max_iters < 1) throw InvalidInput("seesaw: max_iters must be >= 1");

  SplitMix64 master(opts.seed);
  std::optional<MaximizerResult> best;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    SplitMix64 rng(master.next_u64());
    SettingsT settings = random_settings<SettingsT>(rng);

    PureState psi = opts.frozen_state
                        ? *opts.frozen_state
                        : best_state(build_operator(settings)).state;
    double value = expectation(build_operator(settings), psi);
    std::vector<double> trace = {value};

    int iters = 0;
    while (iters < opts.max_iters) {
      ++iters;
      settings = best_settings_step(psi, settings);
      const Matrix op = build_operator(settings);
      double improved = expectation(op, psi);
      trace.push_back(improved);
      if (!opts.frozen_state) {
        BestState bs = best_state(op);
        improved = bs.value;
        psi = std::move(bs.state);
        trace.push_back(improved);
      }
      const double gain = improved - value;
      value = improved;
      if (gain < opts.tol) break;
    }

    if (!best || value > best->value) {
      best = MaximizerResult{value,
                             psi,
                             Settings{settings},
                             iters,
                             0,
                             orthogonality_residual(settings),
                             std::move(trace)};
    }
  }
  best->restarts_used = opts.restarts;
  return *best;
}

}  // namespace detail

/// Alternating maximization over the state (exact top eigenvector) and the
/// settings (closed-form normalized-gradient updates). Deterministic for a
/// given seed; per-restart seeds are derived from the master seed, and the
/// best restart wins with ties resolved in favor of the earlier index.
inline MaximizerResult seesaw_maximize(int n_qubits,
                                       const SeesawOptions& opts = {}) {
  if (n_qubits != 2 && n_qubits != 3) {
    throw InvalidInput("seesaw_maximize: qubit count must be 2 or 3");
  }
  if (opts.frozen_state && opts.frozen_state->n_qubits() != n_qubits) {
    throw InvalidInput("seesaw_maximize: frozen state has wrong qubit count");
  }
  if (n_qubits == 2) return detail::seesaw_impl<ChshSettings>(opts);
  return detail::seesaw_impl<KlyshkoSettings>(opts);
}

/// Best Klyshko value reachable with the state pinned to |W>; stays strictly
/// below the maximal violation 4.
inline double w_max_klyshko(int restarts, std::uint64_t seed) {
  SeesawOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  opts.frozen_state = w_state();
  return seesaw_maximize(3, opts).value;
}

}  // namespace bellkit
