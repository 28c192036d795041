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

// Shared fixtures for the test and acceptance suites: canonical maximal
// settings, random unitaries, and locally dressed maximizer instances.

#pragma once

#include <cmath>
#include <utility>

#include "bellkit/bellkit.hpp"

namespace bellkit::testing {

/// a = z, a' = x, b = (z+x)/sqrt(2), b' = (z-x)/sqrt(2): the textbook
/// settings at which the Bell state reaches the CHSH quantum maximum.
inline ChshSettings standard_chsh_settings() {
  const double r = 1.0 / std::sqrt(2.0);
  return ChshSettings{observable_from_vector(Vec3{0.0, 0.0, 1.0}),
                      observable_from_vector(Vec3{1.0, 0.0, 0.0}),
                      observable_from_vector(Vec3{r, 0.0, r}),
                      observable_from_vector(Vec3{-r, 0.0, r})};
}

/// A = -x, A' = -y, B = x, B' = y, C = x, C' = y: settings at which the GHZ
/// state reaches the Klyshko maximum of 4.
inline KlyshkoSettings ghz_maximal_settings() {
  return KlyshkoSettings{observable_from_vector(Vec3{-1.0, 0.0, 0.0}),
                         observable_from_vector(Vec3{0.0, -1.0, 0.0}),
                         observable_from_vector(Vec3{1.0, 0.0, 0.0}),
                         observable_from_vector(Vec3{0.0, 1.0, 0.0}),
                         observable_from_vector(Vec3{1.0, 0.0, 0.0}),
                         observable_from_vector(Vec3{0.0, 1.0, 0.0})};
}

inline Vec3 random_unit_vec(SplitMix64& rng) {
  while (true) {
    const Vec3 v{rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian()};
    if (norm(v) > 1e-6) return normalized(v);
  }
}

inline SpinObservable random_observable(SplitMix64& rng) {
  return observable_from_vector(random_unit_vec(rng));
}

inline ChshSettings random_chsh_settings(SplitMix64& rng) {
  return ChshSettings{random_observable(rng), random_observable(rng),
                      random_observable(rng), random_observable(rng)};
}

inline KlyshkoSettings random_klyshko_settings(SplitMix64& rng) {
  return KlyshkoSettings{random_observable(rng), random_observable(rng),
                         random_observable(rng), random_observable(rng),
                         random_observable(rng), random_observable(rng)};
}

/// Orthogonal unit pair via Gram-Schmidt; near-parallel draws are rejected.
inline std::pair<Vec3, Vec3> random_orthogonal_pair(SplitMix64& rng) {
  while (true) {
    const Vec3 a = random_unit_vec(rng);
    const Vec3 g = random_unit_vec(rng);
    const Vec3 b = g - dot(g, a) * a;
    if (norm(b) < 1e-8 || norm(cross(a, normalized(b))) < 1e-8) continue;
    return {a, normalized(b)};
  }
}

/// Random 2x2 unitary via Gram-Schmidt on Gaussian columns.
inline Matrix random_unitary2(SplitMix64& rng) {
  Complex c0(rng.next_gaussian(), rng.next_gaussian());
  Complex c1(rng.next_gaussian(), rng.next_gaussian());
  Complex d0(rng.next_gaussian(), rng.next_gaussian());
  Complex d1(rng.next_gaussian(), rng.next_gaussian());
  const double n0 = std::sqrt(std::norm(c0) + std::norm(c1));
  c0 /= n0;
  c1 /= n0;
  const Complex proj = std::conj(c0) * d0 + std::conj(c1) * d1;
  d0 -= proj * c0;
  d1 -= proj * c1;
  const double n1 = std::sqrt(std::norm(d0) + std::norm(d1));
  d0 /= n1;
  d1 /= n1;
  return Matrix(2, 2, {c0, d0, c1, d1});
}

/// V (v.sigma) V^dagger is again a spin observable; read the rotated
/// direction off the conjugated matrix and rebuild it.
inline SpinObservable conjugate_observable(const Matrix& v,
                                           const SpinObservable& o) {
  const Matrix m = v * o.matrix * adjoint(v);
  const Vec3 dir{m(1, 0).real(), m(1, 0).imag(), m(0, 0).real()};
  return observable_from_vector(normalized(dir));
}

inline PureState normalized_state(int n_qubits, std::vector<Complex> amps) {
  double nrm = vector_norm(amps);
  for (Complex& a : amps) a /= nrm;
  return PureState(n_qubits, std::move(amps));
}

inline PureState random_state(SplitMix64& rng, int n_qubits) {
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  for (Complex& a : amps) a = Complex(rng.next_gaussian(), rng.next_gaussian());
  return normalized_state(n_qubits, std::move(amps));
}

struct DressedChsh {
  PureState state;
  ChshSettings settings;
};

/// (V_A (x) V_B)|Bell> together with the standard settings conjugated site
/// by site; a maximizer by covariance of the CHSH expectation under local
/// unitaries.
inline DressedChsh dressed_bell_maximizer(SplitMix64& rng) {
  const Matrix va = random_unitary2(rng);
  const Matrix vb = random_unitary2(rng);
  const ChshSettings base = standard_chsh_settings();
  PureState psi =
      normalized_state(2, mat_vec(kron(va, vb), bell_state().amplitudes()));
  ChshSettings s{conjugate_observable(va, base.a),
                 conjugate_observable(va, base.a_prime),
                 conjugate_observable(vb, base.b),
                 conjugate_observable(vb, base.b_prime)};
  return DressedChsh{std::move(psi), std::move(s)};
}

struct DressedKlyshko {
  PureState state;
  KlyshkoSettings settings;
};

inline DressedKlyshko dressed_ghz_maximizer(SplitMix64& rng) {
  const Matrix va = random_unitary2(rng);
  const Matrix vb = random_unitary2(rng);
  const Matrix vc = random_unitary2(rng);
  const KlyshkoSettings base = ghz_maximal_settings();
  PureState psi = normalized_state(
      3, mat_vec(kron(va, kron(vb, vc)), ghz_state().amplitudes()));
  KlyshkoSettings s{conjugate_observable(va, base.a),
                    conjugate_observable(va, base.a_prime),
                    conjugate_observable(vb, base.b),
                    conjugate_observable(vb, base.b_prime),
                    conjugate_observable(vc, base.c),
                    conjugate_observable(vc, base.c_prime)};
  return DressedKlyshko{std::move(psi), std::move(s)};
}

}  // namespace bellkit::testing
