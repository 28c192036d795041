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
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "bellkit/errors.hpp"

namespace bellkit {

using Complex = std::complex<double>;

/// Dense complex matrix in row-major order. Everything in this library lives
/// in dimension <= 8, so the representation is deliberately simple: a flat
/// vector plus shape, value semantics throughout.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw InvalidInput("Matrix: entry count does not match shape");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("matrix addition: shape mismatch");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("matrix subtraction: shape mismatch");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

inline Matrix operator*(const Complex& s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = s * a(r, c);
  return out;
}

inline Matrix operator*(double s, const Matrix& a) {
  return Complex(s, 0.0) * a;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidInput("matrix product: inner dimension mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

inline Matrix adjoint(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

inline Complex trace(const Matrix& a) {
  if (!a.is_square()) throw InvalidInput("trace: matrix must be square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

inline double hermiticity_defect(const Matrix& a) {
  if (!a.is_square()) throw InvalidInput("hermiticity_defect: non-square");
  return frobenius_norm(a - adjoint(a));
}

/// Matrix-vector product.
inline std::vector<Complex> mat_vec(const Matrix& a,
                                  const std::vector<Complex>& x) {
  if (a.cols() != x.size()) throw InvalidInput("mat_vec: dimension mismatch");
  std::vector<Complex> y(a.rows(), Complex(0.0, 0.0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) y[r] += a(r, c) * x[c];
  return y;
}

inline double vector_norm(const std::vector<Complex>& x) {
  double s = 0.0;
  for (const Complex& z : x) s += std::norm(z);
  return std::sqrt(s);
}

/// <x|y> with the physics convention: conjugate-linear in the first slot.
inline Complex dot(const std::vector<Complex>& x,
                   const std::vector<Complex>& y) {
  if (x.size() != y.size()) throw InvalidInput("dot: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

/// Kronecker product; the left factor owns the most significant index block,
/// matching the repo-wide convention that qubit 1 is the most significant bit.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex v = a(ar, ac);
      if (v == Complex(0.0, 0.0)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
    }
  return out;
}

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // orthonormal columns, same ordering
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One two-sided Jacobi rotation annihilating a(p,q). The rotation is the
// complex analogue of the classical symmetric Schur rotation: strip the phase
// of a(p,q), then rotate by the smaller-angle solution of
// tan(2*theta) = 2|a(p,q)| / (a(p,p) - a(q,q)).
inline void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex phase = apq / g;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (app - aqq) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex sp = s * phase;              // s e^{i phi}
  const Complex spc = s * std::conj(phase);  // s e^{-i phi}

  const std::size_t n = a.rows();
  // Column update: A <- A * J, where J has columns
  //   p: (c, s e^{-i phi})  q: (-s, c e^{-i phi}) at rows (p, q).
  for (std::size_t i = 0; i < n; ++i) {
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    a(i, p) = c * aip + spc * aiq;
    a(i, q) = -s * aip + c * std::conj(phase) * aiq;
  }
  // Row update: A <- J^dagger * A.
  for (std::size_t j = 0; j < n; ++j) {
    const Complex apj = a(p, j);
    const Complex aqj = a(q, j);
    a(p, j) = c * apj + sp * aqj;
    a(q, j) = -s * apj + c * phase * aqj;
  }
  // Accumulate eigenvectors: V <- V * J.
  for (std::size_t i = 0; i < n; ++i) {
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = c * vip + spc * viq;
    v(i, q) = -s * vip + c * std::conj(phase) * viq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

}  // namespace detail

/// Hermitian eigendecomposition by cyclic Jacobi sweeps. Deterministic; for
/// 2x2 input a single rotation is exact, which doubles as the closed form.
/// Eigenvalues are returned ascending with matching eigenvector columns.
inline EigResult eig_hermitian(const Matrix& m) {
  if (!m.is_square()) {
    throw InvalidInput("eig_hermitian: matrix must be square");
  }
  if (m.rows() == 0) throw InvalidInput("eig_hermitian: empty matrix");
  if (hermiticity_defect(m) > 1e-10) {
    throw InvalidInput("eig_hermitian: matrix is not Hermitian within 1e-10");
  }
  const std::size_t n = m.rows();
  Matrix a = 0.5 * (m + adjoint(m));
  Matrix v = Matrix::identity(n);
  const double threshold = 1e-13 * std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < 64; ++sweep) {
    if (detail::off_diagonal_norm(a) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i)
      result.eigenvectors(i, k) = v(i, order[k]);
  }
  return result;
}

struct SvdResult {
  Matrix u;                            // rows x rows, orthonormal columns
  std::vector<double> singular_values;  // descending, length min(rows, cols)
  Matrix v;                            // cols x cols, orthonormal columns
};

/// Singular value decomposition m = U diag(s) V^dagger via the Hermitian
/// eigenproblem of m^dagger m. Left vectors are re-orthonormalized so the
/// factors stay unitary even when singular values cluster; columns belonging
/// to (numerically) zero singular values are completed from the coordinate
/// basis, deterministically.
inline SvdResult svd(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw InvalidInput("svd: empty matrix");
  if (m.rows() < m.cols()) {
    SvdResult t = svd(adjoint(m));
    return SvdResult{t.v, t.singular_values, t.u};
  }
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();

  Matrix b = adjoint(m) * m;
  b = 0.5 * (b + adjoint(b));
  EigResult eig = eig_hermitian(b);

  std::vector<std::vector<Complex>> right(nc);
  std::vector<std::vector<Complex>> images(nc);
  std::vector<double> sigma(nc);
  for (std::size_t k = 0; k < nc; ++k) {
    const std::size_t src = nc - 1 - k;  // descending
    std::vector<Complex> vk(nc);
    for (std::size_t i = 0; i < nc; ++i) vk[i] = eig.eigenvectors(i, src);
    images[k] = mat_vec(m, vk);
    // Recomputing s as |m v| keeps each column residual at rounding level.
    sigma[k] = vector_norm(images[k]);
    right[k] = std::move(vk);
  }
  std::vector<std::size_t> order(nc);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  SvdResult result;
  result.v = Matrix(nc, nc);
  result.singular_values.resize(nc);
  for (std::size_t k = 0; k < nc; ++k) {
    result.singular_values[k] = sigma[order[k]];
    for (std::size_t i = 0; i < nc; ++i) result.v(i, k) = right[order[k]][i];
  }
  {
    std::vector<std::vector<Complex>> tmp(nc);
    for (std::size_t k = 0; k < nc; ++k) tmp[k] = std::move(images[order[k]]);
    images = std::move(tmp);
  }

  const double smax = result.singular_values.empty()
                          ? 0.0
                          : *std::max_element(result.singular_values.begin(),
                                              result.singular_values.end());
  const double cutoff = 1e-13 * std::max(1.0, smax);

  result.u = Matrix(nr, nr);
  std::vector<std::vector<Complex>> ucols(nr);
  std::vector<bool> assigned(nr, false);
  auto orthogonalize = [&](std::vector<Complex> w) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < nr; ++j) {
        if (!assigned[j]) continue;
        const Complex proj = dot(ucols[j], w);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= proj * ucols[j][i];
      }
    return w;
  };
  for (std::size_t k = 0; k < nc; ++k) {
    if (result.singular_values[k] <= cutoff) continue;
    std::vector<Complex> w = orthogonalize(images[k]);
    const double norm = vector_norm(w);
    if (norm <= cutoff) continue;  // numerically dependent; complete below
    for (Complex& z : w) z /= norm;
    ucols[k] = std::move(w);
    assigned[k] = true;
  }
  std::size_t n_assigned =
      static_cast<std::size_t>(std::count(assigned.begin(), assigned.end(), true));
  for (std::size_t cand = 0; cand < nr && n_assigned < nr; ++cand) {
    std::vector<Complex> w(nr, Complex(0.0, 0.0));
    w[cand] = 1.0;
    w = orthogonalize(std::move(w));
    const double norm = vector_norm(w);
    if (norm < 1e-6) continue;
    for (Complex& z : w) z /= norm;
    const std::size_t slot = static_cast<std::size_t>(
        std::find(assigned.begin(), assigned.end(), false) - assigned.begin());
    ucols[slot] = std::move(w);
    assigned[slot] = true;
    ++n_assigned;
  }
  for (std::size_t k = 0; k < nr; ++k)
    for (std::size_t i = 0; i < nr; ++i) result.u(i, k) = ucols[k][i];
  return result;
}

/// Largest singular value of a square matrix.
inline double operator_norm(const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("operator_norm: matrix must be square");
  const SvdResult s = svd(m);
  return s.singular_values.empty() ? 0.0 : s.singular_values.front();
}

}  // namespace bellkit
