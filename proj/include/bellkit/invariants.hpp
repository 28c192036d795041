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
#include <string>

#include "bellkit/errors.hpp"
#include "bellkit/linalg.hpp"
#include "bellkit/state.hpp"

namespace bellkit {

/// Schmidt decomposition of a two-qubit pure state:
/// psi = c_0 a_0 (x) b_0 + c_1 a_1 (x) b_1 with descending non-negative
/// coefficients and orthonormal local frames.
struct SchmidtForm {
  std::array<double, 2> coefficients;
  std::array<std::array<Complex, 2>, 2> basis_a;
  std::array<std::array<Complex, 2>, 2> basis_b;
};

inline SchmidtForm schmidt(const PureState& psi) {
  if (psi.n_qubits() != 2) {
    throw InvalidInput("schmidt: state must have exactly 2 qubits");
  }
  // Amplitude matrix with qubit 1 indexing rows.
  Matrix m(2, 2,
           {psi.amplitudes()[0], psi.amplitudes()[1], psi.amplitudes()[2],
            psi.amplitudes()[3]});
  const SvdResult s = svd(m);
  SchmidtForm form;
  form.coefficients = {s.singular_values[0], s.singular_values[1]};
  for (int k = 0; k < 2; ++k) {
    form.basis_a[k] = {s.u(0, k), s.u(1, k)};
    // m = U S V^dagger means the site-2 vectors are the conjugated V columns.
    form.basis_b[k] = {std::conj(s.v(0, k)), std::conj(s.v(1, k))};
  }
  return form;
}

/// Entanglement entropy in bits: -sum c^2 log2 c^2 over Schmidt
/// coefficients, with 0 log 0 = 0. Ranges over [0, 1] for a qubit pair.
inline double entanglement_entropy(const PureState& psi) {
  const SchmidtForm form = schmidt(psi);
  double h = 0.0;
  for (double c : form.coefficients) {
    const double p = c * c;
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

/// Residual tangle of a three-qubit pure state, 4 |Cayley hyperdeterminant|
/// of the amplitude tensor: 1 on the GHZ orbit, 0 on the W orbit and on
/// product states.
inline double three_tangle(const PureState& psi) {
  if (psi.n_qubits() != 3) {
    throw InvalidInput("three_tangle: state must have exactly 3 qubits");
  }
  const std::vector<Complex>& t = psi.amplitudes();
  auto a = [&](int i, int j, int k) { return t[static_cast<std::size_t>(4 * i + 2 * j + k)]; };

  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                     a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);

  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

enum class StateClass { BellClass, GhzClass, Other };

inline std::string to_string(StateClass c) {
  switch (c) {
    case StateClass::BellClass:
      return "BellClass";
    case StateClass::GhzClass:
      return "GhzClass";
    default:
      return "Other";
  }
}

/// Local-unitary class certificate. Two qubits: BellClass iff the
/// entanglement entropy is maximal. Three qubits: GhzClass iff the 3-tangle
/// is 1 and every single-site marginal is maximally mixed; the marginal
/// condition is required on top of the tangle so the certificate stays
/// strict.
inline StateClass certify_target_class(const PureState& psi) {
  if (psi.n_qubits() == 2) {
    return entanglement_entropy(psi) >= 1.0 - 1e-6 ? StateClass::BellClass
                                                   : StateClass::Other;
  }
  if (three_tangle(psi) < 1.0 - 1e-6) return StateClass::Other;
  const Matrix half_identity = 0.5 * Matrix::identity(2);
  for (int site = 0; site < 3; ++site) {
    if (operator_norm(reduced_density(psi, site) - half_identity) > 1e-6) {
      return StateClass::Other;
    }
  }
  return StateClass::GhzClass;
}

}  // namespace bellkit
