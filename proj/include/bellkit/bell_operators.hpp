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

#include <algorithm>
#include <cmath>

#include "bellkit/linalg.hpp"
#include "bellkit/observables.hpp"

namespace bellkit {

/// Measurement settings for the CHSH expression: observables A, A' on
/// qubit 1 and B, B' on qubit 2. Observables are validated where they are
/// built (observable_from_vector); the operator constructors below do not
/// re-validate.
struct ChshSettings {
  SpinObservable a, a_prime, b, b_prime;
};

/// Settings for the three-qubit Klyshko expression; C, C' act on qubit 3.
struct KlyshkoSettings {
  SpinObservable a, a_prime, b, b_prime, c, c_prime;
};

inline ChshSettings chsh_part(const KlyshkoSettings& s) {
  return ChshSettings{s.a, s.a_prime, s.b, s.b_prime};
}

/// B2 = AB + AB' + A'B - A'B'  (4x4, Hermitian, operator norm <= 2 sqrt 2).
inline Matrix chsh_operator(const ChshSettings& s) {
  return kron(s.a.matrix, s.b.matrix + s.b_prime.matrix) +
         kron(s.a_prime.matrix, s.b.matrix - s.b_prime.matrix);
}

/// B2' = A'B' + A'B + AB' - AB, the CHSH expression with primed and unprimed
/// observables exchanged on both sites.
inline Matrix chsh_prime_operator(const ChshSettings& s) {
  return kron(s.a_prime.matrix, s.b_prime.matrix + s.b.matrix) +
         kron(s.a.matrix, s.b_prime.matrix - s.b.matrix);
}

/// Residual of the square identity B2^2 = 4 + 4 (A x A') (B x B'); zero for
/// every choice of settings.
inline double chsh_square_residual(const ChshSettings& s) {
  const Matrix b2 = chsh_operator(s);
  const Matrix cross_term = kron(cross_observable(s.a, s.a_prime).matrix,
                                 cross_observable(s.b, s.b_prime).matrix);
  return operator_norm(b2 * b2 - 4.0 * Matrix::identity(4) -
                       4.0 * cross_term);
}

/// B3 = A'B'C + A'BC' + AB'C' - ABC  (8x8, Hermitian, operator norm <= 4).
inline Matrix klyshko_operator(const KlyshkoSettings& s) {
  const Matrix& a = s.a.matrix;
  const Matrix& ap = s.a_prime.matrix;
  const Matrix& b = s.b.matrix;
  const Matrix& bp = s.b_prime.matrix;
  const Matrix& c = s.c.matrix;
  const Matrix& cp = s.c_prime.matrix;
  return kron(ap, kron(bp, c)) + kron(ap, kron(b, cp)) +
         kron(a, kron(bp, cp)) - kron(a, kron(b, c));
}

/// Residual of the three-qubit square identity
///   B3^2 = 4 + 4 [ (AxA')(BxB') + (AxA')(CxC') + (BxB')(CxC') ],
/// each pair acting on its own sites and the identity on the remaining one.
inline double klyshko_square_residual(const KlyshkoSettings& s) {
  const Matrix b3 = klyshko_operator(s);
  const Matrix xa = cross_observable(s.a, s.a_prime).matrix;
  const Matrix xb = cross_observable(s.b, s.b_prime).matrix;
  const Matrix xc = cross_observable(s.c, s.c_prime).matrix;
  const Matrix id2 = Matrix::identity(2);
  const Matrix cross_terms =
      kron(xa, kron(xb, id2)) + kron(xa, kron(id2, xc)) +
      kron(id2, kron(xb, xc));
  return operator_norm(b3 * b3 - 4.0 * Matrix::identity(8) -
                       4.0 * cross_terms);
}

/// Residual of the splitting of B3 over the third site,
///   B3 = B2' (x) (C + C')/2  -  B2 (x) (C - C')/2,
/// which regroups the four triple products by their C factor. Zero for every
/// choice of settings.
inline double klyshko_decomposition_residual(const KlyshkoSettings& s) {
  const ChshSettings ab = chsh_part(s);
  const Matrix half_sum = 0.5 * (s.c.matrix + s.c_prime.matrix);
  const Matrix half_diff = 0.5 * (s.c.matrix - s.c_prime.matrix);
  const Matrix recomposed = kron(chsh_prime_operator(ab), half_sum) -
                            kron(chsh_operator(ab), half_diff);
  return operator_norm(klyshko_operator(s) - recomposed);
}

/// max over sites of |(X, X')|; zero exactly when every site pair is
/// orthogonal, the condition characterizing settings that admit maximal
/// violation.
inline double orthogonality_residual(const ChshSettings& s) {
  return std::max(std::abs(inner(s.a, s.a_prime)),
                  std::abs(inner(s.b, s.b_prime)));
}

inline double orthogonality_residual(const KlyshkoSettings& s) {
  return std::max({std::abs(inner(s.a, s.a_prime)),
                   std::abs(inner(s.b, s.b_prime)),
                   std::abs(inner(s.c, s.c_prime))});
}

}  // namespace bellkit
