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
#include <optional>
#include <vector>

#include "bellkit/bell_operators.hpp"
#include "bellkit/linalg.hpp"
#include "bellkit/observables.hpp"
#include "bellkit/state.hpp"

namespace bellkit {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Wrap an angle into [0, 2*pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  if (a >= 2.0 * kPi) a = 0.0;
  return a + 0.0;  // flush -0.0
}

/// Signed distance of an angle from 0 modulo 2*pi, in (-pi, pi].
inline double angle_distance(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a > kPi) a -= 2.0 * kPi;
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

/// Eigenbasis of A'' = A x A' for an orthogonal pair (A, A'), together with
/// the phase through which A acts across it:
///   A''|0> = +|0>,  A''|1> = -|1>,
///   A |0>  = e^{-i phase} |1>,   A'|0> = i e^{-i phase} |1>.
/// Ket phases are fixed by making the first component of magnitude > 1e-10
/// real and positive; the extracted phase absorbs that convention.
struct PauliFrame {
  std::array<Complex, 2> ket0;
  std::array<Complex, 2> ket1;
  double phase;  // in [0, 2*pi)
};

namespace detail {

inline void fix_ket_phase(std::array<Complex, 2>& ket) {
  for (const Complex& component : ket) {
    const double mag = std::abs(component);
    if (mag > 1e-10) {
      const Complex factor = std::conj(component) / mag;
      ket[0] *= factor;
      ket[1] *= factor;
      return;
    }
  }
}

inline std::array<Complex, 2> apply2(const Matrix& m,
                                     const std::array<Complex, 2>& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

inline Complex dot2(const std::array<Complex, 2>& x,
                    const std::array<Complex, 2>& y) {
  return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1];
}

}  // namespace detail

inline PauliFrame pauli_frame(const SpinObservable& a,
                              const SpinObservable& a_prime) {
  if (std::abs(inner(a, a_prime)) > 1e-8) {
    throw PreconditionError(
        "pauli_frame: observable pair is not orthogonal, the eigenbasis "
        "construction requires (A, A') = 0");
  }
  const CrossObservable a_dprime = cross_observable(a, a_prime);
  const EigResult eig = eig_hermitian(a_dprime.matrix);

  PauliFrame frame;
  frame.ket1 = {eig.eigenvectors(0, 0), eig.eigenvectors(1, 0)};  // -1 branch
  frame.ket0 = {eig.eigenvectors(0, 1), eig.eigenvectors(1, 1)};  // +1 branch
  detail::fix_ket_phase(frame.ket0);
  detail::fix_ket_phase(frame.ket1);

  const Complex transition =
      detail::dot2(frame.ket1, detail::apply2(a.matrix, frame.ket0));
  if (std::abs(std::abs(transition) - 1.0) > 1e-10) {
    throw PreconditionError(
        "pauli_frame: A does not map between the A'' eigenvectors with unit "
        "amplitude (corrupted triad)");
  }
  frame.phase = wrap_angle(-std::arg(transition));

  // Consistency of the primed relation A'|0> = i e^{-i phase} |1>.
  const std::array<Complex, 2> lhs =
      detail::apply2(a_prime.matrix, frame.ket0);
  const Complex expected = Complex(0.0, 1.0) * transition;
  const double residual =
      std::sqrt(std::norm(lhs[0] - expected * frame.ket1[0]) +
                std::norm(lhs[1] - expected * frame.ket1[1]));
  if (residual > 1e-8) {
    throw PreconditionError(
        "pauli_frame: A' is inconsistent with the extracted frame phase "
        "(corrupted triad)");
  }
  return frame;
}

/// Basis-change unitary whose columns are the frame kets, i.e. the map from
/// the computational basis to the frame basis.
inline Matrix frame_unitary(const PauliFrame& f) {
  return Matrix(2, 2, {f.ket0[0], f.ket1[0], f.ket0[1], f.ket1[1]});
}

enum class CanonicalTarget { Bell, Ghz };

/// Local unitaries carrying the Bell (resp. GHZ) state onto a maximally
/// violating input state, with the phases read off along the way and the
/// achieved reconstruction fidelity |<psi| (x)U |target>|.
struct CanonicalDecomposition {
  CanonicalTarget target;
  std::vector<Matrix> local_unitaries;  // one 2x2 unitary per site
  double alpha;
  double beta;
  std::optional<double> gamma;  // three-qubit only
  double theta;
  std::optional<double> phi;  // three-qubit only
  double fidelity;
};

namespace detail {

inline std::vector<Complex> kron_kets(const std::array<Complex, 2>& x,
                                      const std::array<Complex, 2>& y) {
  return {x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1]};
}

inline std::vector<Complex> kron_kets(const std::array<Complex, 2>& x,
                                      const std::array<Complex, 2>& y,
                                      const std::array<Complex, 2>& z) {
  std::vector<Complex> out;
  out.reserve(8);
  for (const Complex& xi : {x[0], x[1]})
    for (const Complex& yi : {y[0], y[1]})
      for (const Complex& zi : {z[0], z[1]}) out.push_back(xi * yi * zi);
  return out;
}

inline Matrix phase_diag(Complex top, Complex bottom) {
  return Matrix(2, 2, {top, 0.0, 0.0, bottom});
}

}  // namespace detail

/// Factor a maximally violating two-qubit state as (U_A (x) U_B) |Bell>.
///
/// The state is expanded in the joint frame basis of (A, A') and (B, B');
/// maximality forces the cross components to vanish and the two surviving
/// amplitudes to have modulus 1/sqrt(2) with their relative phase locked to
/// alpha + beta - pi/4. The unitaries are then
///   U_A = e^{i theta} U_1,   U_B = U_2 diag(e^{i(alpha+beta-pi/4)}, 1),
/// with U_1, U_2 the basis-change maps and theta the phase of the |11>
/// component.
inline CanonicalDecomposition canonicalize_two_qubit(const PureState& psi,
                                                     const ChshSettings& s) {
  if (psi.n_qubits() != 2) {
    throw InvalidInput("canonicalize_two_qubit: state must have 2 qubits");
  }
  const double value = expectation(chsh_operator(s), psi);
  const double bound = 2.0 * std::sqrt(2.0);
  if (value < bound - 1e-6) {
    throw PreconditionError(
        "canonicalize_two_qubit: state does not maximally violate the "
        "CHSH inequality for these settings");
  }
  const PauliFrame fa = pauli_frame(s.a, s.a_prime);
  const PauliFrame fb = pauli_frame(s.b, s.b_prime);

  const Complex l00 = dot(detail::kron_kets(fa.ket0, fb.ket0), psi.amplitudes());
  const Complex l01 = dot(detail::kron_kets(fa.ket0, fb.ket1), psi.amplitudes());
  const Complex l10 = dot(detail::kron_kets(fa.ket1, fb.ket0), psi.amplitudes());
  const Complex l11 = dot(detail::kron_kets(fa.ket1, fb.ket1), psi.amplitudes());

  if (std::abs(l01) > 1e-6 || std::abs(l10) > 1e-6) {
    throw PreconditionError(
        "canonicalize_two_qubit: cross components survive in the frame "
        "basis; the input is not a maximizer");
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (std::abs(std::abs(l00) - inv_sqrt2) > 1e-6 ||
      std::abs(std::abs(l11) - inv_sqrt2) > 1e-6) {
    throw PreconditionError(
        "canonicalize_two_qubit: frame amplitudes are not balanced at "
        "1/sqrt(2)");
  }
  const double locked = fa.phase + fb.phase - kPi / 4.0;
  if (std::abs(angle_distance(std::arg(l00) - std::arg(l11) - locked)) >
      1e-6) {
    throw PreconditionError(
        "canonicalize_two_qubit: relative phase of the frame amplitudes is "
        "not locked to alpha + beta - pi/4");
  }

  const double theta = wrap_angle(std::arg(l11));
  const Complex i_unit(0.0, 1.0);
  const Matrix u_a =
      std::exp(i_unit * theta) * frame_unitary(fa);
  const Matrix u_b =
      frame_unitary(fb) *
      detail::phase_diag(std::exp(i_unit * locked), 1.0);

  const PureState reconstructed(
      2, mat_vec(kron(u_a, u_b), bell_state().amplitudes()));
  const double fidelity = std::abs(overlap(psi, reconstructed));

  return CanonicalDecomposition{CanonicalTarget::Bell,
                                {u_a, u_b},
                                fa.phase,
                                fb.phase,
                                std::nullopt,
                                theta,
                                std::nullopt,
                                fidelity};
}

/// Factor a maximally violating three-qubit state as
/// (U_A (x) U_B (x) U_C) |GHZ>. In the joint frame basis the six cross
/// components vanish and |000>/|111> carry modulus 1/sqrt(2) each; their
/// phases phi and theta are absorbed into
///   U_A = U_1 diag(e^{i phi}, 1),  U_B = U_2 diag(1, e^{i theta}),
///   U_C = U_3.
inline CanonicalDecomposition canonicalize_three_qubit(
    const PureState& psi, const KlyshkoSettings& s) {
  if (psi.n_qubits() != 3) {
    throw InvalidInput("canonicalize_three_qubit: state must have 3 qubits");
  }
  const double value = expectation(klyshko_operator(s), psi);
  if (value < 4.0 - 1e-6) {
    throw PreconditionError(
        "canonicalize_three_qubit: state does not maximally violate the "
        "Klyshko inequality for these settings");
  }
  const PauliFrame fa = pauli_frame(s.a, s.a_prime);
  const PauliFrame fb = pauli_frame(s.b, s.b_prime);
  const PauliFrame fc = pauli_frame(s.c, s.c_prime);

  const std::array<Complex, 2>* kets[3][2] = {
      {&fa.ket0, &fa.ket1}, {&fb.ket0, &fb.ket1}, {&fc.ket0, &fc.ket1}};
  Complex lambda[8];
  for (int idx = 0; idx < 8; ++idx) {
    const std::vector<Complex> basis_vec = detail::kron_kets(
        *kets[0][(idx >> 2) & 1], *kets[1][(idx >> 1) & 1], *kets[2][idx & 1]);
    lambda[idx] = dot(basis_vec, psi.amplitudes());
  }
  for (int idx = 1; idx < 7; ++idx) {
    if (std::abs(lambda[idx]) > 1e-6) {
      throw PreconditionError(
          "canonicalize_three_qubit: cross components survive in the frame "
          "basis; the input is not a maximizer");
    }
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (std::abs(std::abs(lambda[0]) - inv_sqrt2) > 1e-6 ||
      std::abs(std::abs(lambda[7]) - inv_sqrt2) > 1e-6) {
    throw PreconditionError(
        "canonicalize_three_qubit: frame amplitudes are not balanced at "
        "1/sqrt(2)");
  }

  const double phi = wrap_angle(std::arg(lambda[0]));
  const double theta = wrap_angle(std::arg(lambda[7]));
  const Complex i_unit(0.0, 1.0);
  const Matrix u_a =
      frame_unitary(fa) * detail::phase_diag(std::exp(i_unit * phi), 1.0);
  const Matrix u_b =
      frame_unitary(fb) * detail::phase_diag(1.0, std::exp(i_unit * theta));
  const Matrix u_c = frame_unitary(fc);

  const PureState reconstructed(
      3, mat_vec(kron(u_a, kron(u_b, u_c)), ghz_state().amplitudes()));
  const double fidelity = std::abs(overlap(psi, reconstructed));

  return CanonicalDecomposition{CanonicalTarget::Ghz,
                                {u_a, u_b, u_c},
                                fa.phase,
                                fb.phase,
                                fc.phase,
                                theta,
                                phi,
                                fidelity};
}

/// Residual of the amplitude-balance relations that force |a| = |b| for a
/// state a|000> + b|111> in the frame basis: acting with the Klyshko
/// operator and matching components on the third site yields
///   1/2 a e^{-i gamma} [(1+i) B2' - (1-i) B2] |00>  =  4 b |11>,
///   1/2 b e^{+i gamma} [(1-i) B2' - (1+i) B2] |11>  =  4 a |00>,
/// on the first two sites. Returns the larger of the two norm differences.
inline double amplitude_balance_residual(const PureState& psi,
                                         const KlyshkoSettings& s) {
  if (psi.n_qubits() != 3) {
    throw InvalidInput("amplitude_balance_residual: state must have 3 qubits");
  }
  const PauliFrame fa = pauli_frame(s.a, s.a_prime);
  const PauliFrame fb = pauli_frame(s.b, s.b_prime);
  const PauliFrame fc = pauli_frame(s.c, s.c_prime);

  const std::array<Complex, 2>* kets[3][2] = {
      {&fa.ket0, &fa.ket1}, {&fb.ket0, &fb.ket1}, {&fc.ket0, &fc.ket1}};
  Complex lambda[8];
  for (int idx = 0; idx < 8; ++idx) {
    const std::vector<Complex> basis_vec = detail::kron_kets(
        *kets[0][(idx >> 2) & 1], *kets[1][(idx >> 1) & 1], *kets[2][idx & 1]);
    lambda[idx] = dot(basis_vec, psi.amplitudes());
  }
  for (int idx = 1; idx < 7; ++idx) {
    if (std::abs(lambda[idx]) > 1e-6) {
      throw PreconditionError(
          "amplitude_balance_residual: state is not of the a|000> + b|111> "
          "form in the frame basis");
    }
  }
  const Complex a = lambda[0];
  const Complex b = lambda[7];

  const ChshSettings ab = chsh_part(s);
  const Matrix b2 = chsh_operator(ab);
  const Matrix b2p = chsh_prime_operator(ab);
  const std::vector<Complex> ket00 = detail::kron_kets(fa.ket0, fb.ket0);
  const std::vector<Complex> ket11 = detail::kron_kets(fa.ket1, fb.ket1);

  const Complex i_unit(0.0, 1.0);
  const Complex eg = std::exp(-i_unit * fc.phase);

  std::vector<Complex> lhs1 =
      mat_vec((1.0 + i_unit) * b2p - (1.0 - i_unit) * b2, ket00);
  double r1 = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    r1 += std::norm(0.5 * a * eg * lhs1[k] - 4.0 * b * ket11[k]);
  }
  std::vector<Complex> lhs2 =
      mat_vec((1.0 - i_unit) * b2p - (1.0 + i_unit) * b2, ket11);
  double r2 = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    r2 += std::norm(0.5 * b * std::conj(eg) * lhs2[k] - 4.0 * a * ket00[k]);
  }
  return std::sqrt(std::max(r1, r2));
}

}  // namespace bellkit
