// Copyright 2026 The paircav Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file atom_pair.hpp
 * @brief Two-qubit atomic density matrices, the injected pure-state family,
 *        and the concurrence entanglement measure.
 *
 * Basis order is fixed project-wide as {|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>}.
 * Every module indexing a pair state relies on this ordering.
 */

#pragma once

#include <algorithm>
#include <cmath>

#include "paircav/errors.hpp"
#include "paircav/types.hpp"

namespace paircav {

/// Fixed basis indices for the two-atom space.
enum BasisIndex : int { kEE = 0, kEG = 1, kGE = 2, kGG = 3 };

/// Two-qubit density matrix with validated physicality.
struct AtomPairState {
  Matrix4cd rho;

  static constexpr double hermitian_tol = 1e-12;
  static constexpr double trace_tol = 1e-12;
  static constexpr double psd_tol = 1e-12;

  explicit AtomPairState(const Matrix4cd& m) : rho(m) { validate(); }

  /// Throws InvalidStateError unless rho is Hermitian, unit-trace and PSD
  /// within the module tolerances.
  void validate() const {
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > hermitian_tol)
      throw InvalidStateError("atom pair state is not Hermitian (max |rho_ij - conj(rho_ji)| = " +
                              std::to_string(herm) + ")");
    const double tr_err = std::abs(rho.trace() - cplx(1.0, 0.0));
    if (tr_err > trace_tol)
      throw InvalidStateError("atom pair state trace differs from 1 by " + std::to_string(tr_err));
    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw InvalidStateError("eigendecomposition of atom pair state failed");
    if (es.eigenvalues().minCoeff() < -psd_tol)
      throw InvalidStateError("atom pair state has eigenvalue " +
                              std::to_string(es.eigenvalues().minCoeff()) + " below -1e-12");
  }
};

/// Amplitudes of the injected pure family
///   |psi> = N ( a |e1 e2> + b (|g1 e2> + e^{i phi} |e1 g2>) + c |g1 g2> ).
struct PureFamilyParams {
  double a = 1.0;    ///< doubly-excited amplitude
  double b = 0.0;    ///< single-excitation pair amplitude
  double c = 1.0;    ///< double-ground amplitude
  double phi = 0.0;  ///< relative phase of the singly-excited components (rad)
};

/// Normalized amplitude vector of the pure family in the fixed basis order.
inline Vector4cd pure_family_amplitudes(const PureFamilyParams& p) {
  const double norm2 = p.a * p.a + 2.0 * p.b * p.b + p.c * p.c;
  if (norm2 == 0.0)
    throw UnnormalizableStateError("pure family amplitudes a, b, c are all zero");
  const double norm = 1.0 / std::sqrt(norm2);
  Vector4cd psi;
  psi(kEE) = norm * p.a;
  psi(kEG) = norm * p.b * std::exp(iu * p.phi);
  psi(kGE) = norm * p.b;
  psi(kGG) = norm * p.c;
  return psi;
}

/// rho = |psi><psi| for the pure family.
inline AtomPairState build_pure_family(const PureFamilyParams& p) {
  const Vector4cd psi = pure_family_amplitudes(p);
  return AtomPairState((psi * psi.adjoint()).eval());
}

/// sigma_y (x) sigma_y in the fixed basis order.
inline const Matrix4cd& spin_flip_operator() {
  static const Matrix4cd yy = [] {
    Matrix4cd m = Matrix4cd::Zero();
    m(kEE, kGG) = -1.0;
    m(kEG, kGE) = 1.0;
    m(kGE, kEG) = 1.0;
    m(kGG, kEE) = -1.0;
    return m;
  }();
  return yy;
}

/// Spin-flipped state (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y).
inline Matrix4cd spin_flip(const AtomPairState& state) {
  const Matrix4cd& yy = spin_flip_operator();
  return yy * state.rho.conjugate() * yy;
}

namespace detail {

// Eigenvalues clamped per the tiny-negative policy: values in [-1e-12, 0)
// are floating-point noise and become 0; anything more negative is invalid.
inline Eigen::Vector4d clamped_spectrum(const Matrix4cd& hermitian, const char* what) {
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(hermitian);
  if (es.info() != Eigen::Success) throw InvalidStateError(std::string("eigendecomposition failed for ") + what);
  Eigen::Vector4d vals = es.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (vals(i) < -1e-12)
      throw InvalidStateError(std::string(what) + " has eigenvalue below -1e-12: " + std::to_string(vals(i)));
    vals(i) = std::max(vals(i), 0.0);
  }
  return vals;
}

inline Matrix4cd hermitian_sqrt(const Matrix4cd& hermitian, const char* what) {
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(hermitian);
  if (es.info() != Eigen::Success) throw InvalidStateError(std::string("eigendecomposition failed for ") + what);
  Eigen::Vector4d vals = es.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (vals(i) < -1e-12)
      throw InvalidStateError(std::string(what) + " has eigenvalue below -1e-12: " + std::to_string(vals(i)));
    vals(i) = std::sqrt(std::max(vals(i), 0.0));
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace detail

/**
 * Wootters concurrence in [0, 1].
 *
 * With lambda_i the descending eigenvalues of the Hermitian product
 * sqrt(rho) rho~ sqrt(rho), returns max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)).
 * Zero for product states, one for Bell states.
 */
inline double concurrence(const AtomPairState& state) {
  const Matrix4cd sqrt_rho = detail::hermitian_sqrt(state.rho, "atom pair state");
  Matrix4cd m = sqrt_rho * spin_flip(state) * sqrt_rho;
  m = 0.5 * (m + m.adjoint()).eval();  // scrub roundoff asymmetry
  const Eigen::Vector4d lam = detail::clamped_spectrum(m, "concurrence product matrix");
  // Eigen returns ascending order; lam(3) is the largest.
  const double c = std::sqrt(lam(3)) - std::sqrt(lam(2)) - std::sqrt(lam(1)) - std::sqrt(lam(0));
  return std::clamp(c, 0.0, 1.0);
}

}  // namespace paircav
