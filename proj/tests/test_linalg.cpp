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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bellkit/linalg.hpp"
#include "bellkit/observables.hpp"
#include "bellkit/rng.hpp"
#include "support/test_util.hpp"

using namespace bellkit;
using Catch::Approx;

namespace {

Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = Complex(rng.next_gaussian(), rng.next_gaussian());
  return m;
}

Matrix random_hermitian(SplitMix64& rng, std::size_t n) {
  Matrix m = random_matrix(rng, n, n);
  return 0.5 * (m + adjoint(m));
}

}  // namespace

TEST_CASE("kron reproduces the textbook small cases", "[linalg]") {
  SECTION("identity times identity") {
    const Matrix result = kron(Matrix::identity(2), Matrix::identity(2));
    REQUIRE(max_abs(result - Matrix::identity(4)) == 0.0);
  }
  SECTION("sigma_z with sigma_z is diag(1,-1,-1,1)") {
    const Matrix result = kron(pauli_z(), pauli_z());
    Matrix expected(4, 4);
    expected(0, 0) = 1.0;
    expected(1, 1) = -1.0;
    expected(2, 2) = -1.0;
    expected(3, 3) = 1.0;
    REQUIRE(max_abs(result - expected) == 0.0);
  }
  SECTION("sigma_x with sigma_x is the anti-diagonal of ones") {
    const Matrix result = kron(pauli_x(), pauli_x());
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        REQUIRE(result(r, c) == (r + c == 3 ? Complex(1.0) : Complex(0.0)));
  }
}

TEST_CASE("kron is associative and bilinear", "[linalg]") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(rng, 2, 2);
    const Matrix b = random_matrix(rng, 2, 2);
    const Matrix c = random_matrix(rng, 2, 2);
    REQUIRE(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) <= 1e-12);

    const Complex s(rng.next_gaussian(), rng.next_gaussian());
    REQUIRE(max_abs(kron(a + b, c) - (kron(a, c) + kron(b, c))) <= 1e-12);
    REQUIRE(max_abs(kron(s * a, c) - s * kron(a, c)) <= 1e-12);
    REQUIRE(max_abs(kron(a, s * c) - s * kron(a, c)) <= 1e-12);
  }
}

TEST_CASE("eig_hermitian on Pauli matrices", "[linalg]") {
  SECTION("sigma_z") {
    const EigResult e = eig_hermitian(pauli_z());
    REQUIRE(e.eigenvalues[0] == Approx(-1.0));
    REQUIRE(e.eigenvalues[1] == Approx(1.0));
    // -1 eigenvector is |1>, +1 eigenvector is |0>, up to phase
    REQUIRE(std::abs(e.eigenvectors(1, 0)) == Approx(1.0));
    REQUIRE(std::abs(e.eigenvectors(0, 1)) == Approx(1.0));
  }
  SECTION("sigma_x") {
    const EigResult e = eig_hermitian(pauli_x());
    REQUIRE(e.eigenvalues[0] == Approx(-1.0));
    REQUIRE(e.eigenvalues[1] == Approx(1.0));
    const double r = 1.0 / std::sqrt(2.0);
    // (1, -1)/sqrt(2) and (1, 1)/sqrt(2) up to a global phase each
    REQUIRE(std::abs(e.eigenvectors(0, 0)) == Approx(r));
    REQUIRE(std::abs(e.eigenvectors(1, 0)) == Approx(r));
    REQUIRE(std::abs(e.eigenvectors(0, 0) + e.eigenvectors(1, 0)) ==
            Approx(0.0).margin(1e-12));
    REQUIRE(std::abs(e.eigenvectors(0, 1) - e.eigenvectors(1, 1)) ==
            Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("eig_hermitian spectrum of the maximal CHSH operator", "[linalg]") {
  // B2 at the standard settings reduces to sqrt(2) (ZZ + XX), whose
  // spectrum is {-2 sqrt 2, 0, 0, 2 sqrt 2}.
  const Matrix b2 = chsh_operator(testing::standard_chsh_settings());
  const EigResult e = eig_hermitian(b2);
  const double m = 2.0 * std::sqrt(2.0);
  REQUIRE(e.eigenvalues[0] == Approx(-m).margin(1e-10));
  REQUIRE(e.eigenvalues[1] == Approx(0.0).margin(1e-10));
  REQUIRE(e.eigenvalues[2] == Approx(0.0).margin(1e-10));
  REQUIRE(e.eigenvalues[3] == Approx(m).margin(1e-10));
}

TEST_CASE("eig_hermitian postconditions on random input", "[linalg]") {
  SplitMix64 rng(202);
  for (std::size_t n : {2u, 4u, 8u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix m = random_hermitian(rng, n);
      const EigResult e = eig_hermitian(m);

      REQUIRE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
      REQUIRE(frobenius_norm(adjoint(e.eigenvectors) * e.eigenvectors -
                             Matrix::identity(n)) <= 1e-10);
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Complex> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = e.eigenvectors(i, k);
        std::vector<Complex> mv = mat_vec(m, v);
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          residual += std::norm(mv[i] - e.eigenvalues[k] * v[i]);
        REQUIRE(std::sqrt(residual) <= 1e-10);
      }
      // full reconstruction
      Matrix d(n, n);
      for (std::size_t i = 0; i < n; ++i) d(i, i) = e.eigenvalues[i];
      REQUIRE(frobenius_norm(m - e.eigenvectors * d * adjoint(e.eigenvectors)) <=
              1e-9);
    }
  }
}

TEST_CASE("eig_hermitian rejects bad input", "[linalg]") {
  REQUIRE_THROWS_AS(eig_hermitian(Matrix(2, 3)), InvalidInput);
  Matrix not_hermitian(2, 2, {0.0, 1.0, 0.0, 0.0});
  REQUIRE_THROWS_AS(eig_hermitian(not_hermitian), InvalidInput);
}

TEST_CASE("svd handles the degenerate and structured cases", "[linalg]") {
  SECTION("identity") {
    const SvdResult s = svd(Matrix::identity(2));
    REQUIRE(s.singular_values[0] == Approx(1.0));
    REQUIRE(s.singular_values[1] == Approx(1.0));
  }
  SECTION("zero matrix") {
    const SvdResult s = svd(Matrix(2, 2));
    REQUIRE(s.singular_values[0] == 0.0);
    REQUIRE(s.singular_values[1] == 0.0);
    REQUIRE(frobenius_norm(adjoint(s.u) * s.u - Matrix::identity(2)) <= 1e-12);
  }
  SECTION("Bell amplitude matrix") {
    const double r = 1.0 / std::sqrt(2.0);
    const Matrix m(2, 2, {Complex(r), 0.0, 0.0, Complex(r)});
    const SvdResult s = svd(m);
    REQUIRE(s.singular_values[0] == Approx(r).margin(1e-12));
    REQUIRE(s.singular_values[1] == Approx(r).margin(1e-12));
  }
}

TEST_CASE("svd factors random matrices", "[linalg]") {
  SplitMix64 rng(303);
  for (std::size_t n : {2u, 4u, 8u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix m = random_matrix(rng, n, n);
      const SvdResult s = svd(m);
      REQUIRE(std::is_sorted(s.singular_values.rbegin(),
                             s.singular_values.rend()));
      for (double sv : s.singular_values) REQUIRE(sv >= 0.0);
      Matrix sigma(n, n);
      for (std::size_t i = 0; i < n; ++i) sigma(i, i) = s.singular_values[i];
      REQUIRE(frobenius_norm(m - s.u * sigma * adjoint(s.v)) <= 1e-10);
      REQUIRE(frobenius_norm(adjoint(s.u) * s.u - Matrix::identity(n)) <= 1e-10);
      REQUIRE(frobenius_norm(adjoint(s.v) * s.v - Matrix::identity(n)) <= 1e-10);
    }
  }
  SECTION("rank-deficient input") {
    Matrix m(3, 3);
    m(0, 0) = 2.0;  // rank one
    const SvdResult s = svd(m);
    REQUIRE(s.singular_values[0] == Approx(2.0));
    REQUIRE(s.singular_values[1] <= 1e-12);
    Matrix sigma(3, 3);
    for (std::size_t i = 0; i < 3; ++i) sigma(i, i) = s.singular_values[i];
    REQUIRE(frobenius_norm(m - s.u * sigma * adjoint(s.v)) <= 1e-10);
    REQUIRE(frobenius_norm(adjoint(s.u) * s.u - Matrix::identity(3)) <= 1e-10);
  }
}

TEST_CASE("operator_norm", "[linalg]") {
  REQUIRE(operator_norm(pauli_x()) == Approx(1.0));
  REQUIRE(operator_norm(2.0 * Matrix::identity(4)) == Approx(2.0));
  REQUIRE(operator_norm(chsh_operator(testing::standard_chsh_settings())) ==
          Approx(2.0 * std::sqrt(2.0)).margin(1e-10));
  REQUIRE_THROWS_AS(operator_norm(Matrix(2, 3)), InvalidInput);
}
