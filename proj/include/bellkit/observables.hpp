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

#include "bellkit/errors.hpp"
#include "bellkit/linalg.hpp"

namespace bellkit {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
              a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return Vec3{a.x + b.x, a.y + b.y, a.z + b.z};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return Vec3{a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Vec3 operator*(double s, const Vec3& a) {
  return Vec3{s * a.x, s * a.y, s * a.z};
}

inline Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n == 0.0) throw InvalidInput("normalized: zero vector");
  return (1.0 / n) * a;
}

inline const Matrix& pauli_x() {
  static const Matrix m(2, 2, {0.0, 1.0, 1.0, 0.0});
  return m;
}

inline const Matrix& pauli_y() {
  static const Matrix m(2, 2,
                        {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
  return m;
}

inline const Matrix& pauli_z() {
  static const Matrix m(2, 2, {1.0, 0.0, 0.0, -1.0});
  return m;
}

/// v . sigma as an explicit 2x2 matrix.
inline Matrix pauli_combination(const Vec3& v) {
  return Matrix(2, 2,
                {Complex(v.z, 0.0), Complex(v.x, -v.y), Complex(v.x, v.y),
                 Complex(-v.z, 0.0)});
}

/// Spin observable a . sigma for a unit direction a: Hermitian, traceless,
/// squares to the identity, eigenvalues +-1.
struct SpinObservable {
  Vec3 direction;
  Matrix matrix;
};

inline SpinObservable observable_from_vector(const Vec3& a) {
  if (std::abs(norm(a) - 1.0) > 1e-12) {
    throw InvalidInput("observable_from_vector: direction is not unit length");
  }
  return SpinObservable{a, pauli_combination(a)};
}

/// Dot product of the underlying direction vectors.
inline double inner(const SpinObservable& a, const SpinObservable& a_prime) {
  return dot(a.direction, a_prime.direction);
}

/// (a x a') . sigma with its (generally non-unit) direction vector.
struct CrossObservable {
  Vec3 direction;
  Matrix matrix;
};

inline CrossObservable cross_observable(const SpinObservable& a,
                                        const SpinObservable& a_prime) {
  const Vec3 d = cross(a.direction, a_prime.direction);
  return CrossObservable{d, pauli_combination(d)};
}

/// Residuals of the Pauli-triad product identities for a candidate triple
/// (A, A', A''): each field is the worse (operator-norm) residual of the two
/// orientations of its product rule, and `squares` covers all three
/// involution checks.
struct TriadResiduals {
  double product_a_aprime;       // A A'  = i A''  and  A' A  = -i A''
  double product_aprime_adprime; // A' A'' = i A   and  A'' A' = -i A
  double product_adprime_a;      // A'' A = i A'   and  A A''  = -i A'
  double squares;                // A^2 = A'^2 = A''^2 = 1

  double max() const {
    return std::max({product_a_aprime, product_aprime_adprime,
                     product_adprime_a, squares});
  }
};

inline TriadResiduals verify_triad(const SpinObservable& a,
                                   const SpinObservable& a_prime,
                                   const Matrix& a_dprime) {
  if (a_dprime.rows() != 2 || a_dprime.cols() != 2) {
    throw InvalidInput("verify_triad: third operator must be 2x2");
  }
  const Matrix& ma = a.matrix;
  const Matrix& mp = a_prime.matrix;
  const Matrix& md = a_dprime;
  const Complex i_unit(0.0, 1.0);
  const Matrix id = Matrix::identity(2);

  TriadResiduals r{};
  r.product_a_aprime = std::max(operator_norm(ma * mp - i_unit * md),
                                operator_norm(mp * ma + i_unit * md));
  r.product_aprime_adprime = std::max(operator_norm(mp * md - i_unit * ma),
                                      operator_norm(md * mp + i_unit * ma));
  r.product_adprime_a = std::max(operator_norm(md * ma - i_unit * mp),
                                 operator_norm(ma * md + i_unit * mp));
  r.squares = std::max({operator_norm(ma * ma - id),
                        operator_norm(mp * mp - id),
                        operator_norm(md * md - id)});
  return r;
}

}  // namespace bellkit
