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

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "bellkit/errors.hpp"
#include "bellkit/linalg.hpp"

namespace bellkit {

/// Normalized pure state of two or three qubits. Basis order is
/// |q1 q2> (resp. |q1 q2 q3>) with qubit 1 as the most significant bit, the
/// same convention kron() realizes.
class PureState {
 public:
  PureState(int n_qubits, std::vector<Complex> amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ != 2 && n_qubits_ != 3) {
      throw InvalidInput("PureState: qubit count must be 2 or 3");
    }
    if (amplitudes_.size() != dimension()) {
      throw InvalidInput("PureState: amplitude count does not match qubits");
    }
    double norm_sq = 0.0;
    for (const Complex& a : amplitudes_) norm_sq += std::norm(a);
    if (std::abs(norm_sq - 1.0) > 1e-12) {
      throw InvalidInput("PureState: amplitudes are not normalized");
    }
  }

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return std::size_t{1} << n_qubits_; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// (|00> + |11>) / sqrt(2)
inline PureState bell_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return PureState(2, {Complex(r, 0.0), 0.0, 0.0, Complex(r, 0.0)});
}

/// (|000> + |111>) / sqrt(2)
inline PureState ghz_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return PureState(3, {Complex(r, 0.0), 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
                       Complex(r, 0.0)});
}

/// (|001> + |010> + |100>) / sqrt(3)
inline PureState w_state() {
  const double r = 1.0 / std::sqrt(3.0);
  return PureState(3, {0.0, Complex(r, 0.0), Complex(r, 0.0), 0.0,
                       Complex(r, 0.0), 0.0, 0.0, 0.0});
}

inline Complex overlap(const PureState& a, const PureState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw InvalidInput("overlap: qubit count mismatch");
  }
  return dot(a.amplitudes(), b.amplitudes());
}

/// <psi| op |psi>, real part. Intended for Hermitian operators.
inline double expectation(const Matrix& op, const PureState& psi) {
  if (op.rows() != psi.dimension() || op.cols() != psi.dimension()) {
    throw InvalidInput("expectation: operator dimension mismatch");
  }
  return dot(psi.amplitudes(), mat_vec(op, psi.amplitudes())).real();
}

/// Single-site reduced density matrix. Sites are 0-based from the left, so
/// site 0 is qubit 1 (the most significant bit).
inline Matrix reduced_density(const PureState& psi, int site) {
  if (site < 0 || site >= psi.n_qubits()) {
    throw InvalidInput("reduced_density: site out of range");
  }
  const int shift = psi.n_qubits() - 1 - site;
  const std::size_t dim = psi.dimension();
  Matrix rho(2, 2);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if ((i & ~(std::size_t{1} << shift)) != (j & ~(std::size_t{1} << shift)))
        continue;
      const std::size_t bi = (i >> shift) & 1;
      const std::size_t bj = (j >> shift) & 1;
      rho(bi, bj) += psi.amplitudes()[i] * std::conj(psi.amplitudes()[j]);
    }
  }
  return rho;
}

}  // namespace bellkit
