// Copyright 2026 The paircav Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cavity_map.hpp
 * @brief Cavity state on a truncated Fock space and the one-collision maps:
 *        the exact micromaser map Tr_a[U rho_a (x) rho_c U^dag] and its
 *        second-order Markovian superoperator.
 */

#pragma once

#include <cmath>

#include "paircav/atom_pair.hpp"
#include "paircav/errors.hpp"
#include "paircav/fock.hpp"
#include "paircav/joint_unitary.hpp"
#include "paircav/reservoir.hpp"
#include "paircav/types.hpp"

namespace paircav {

/// Density matrix of the cavity mode plus truncation diagnostics.
struct CavityState {
  MatrixXcd rho;
  double tail_mass = 0.0;  ///< population of the top 10% of Fock levels

  static constexpr double hermitian_tol = 1e-10;
  static constexpr double trace_tol = 1e-8;
  static constexpr double psd_tol = 1e-8;
  static constexpr double default_tail_tol = 1e-6;

  explicit CavityState(MatrixXcd m, bool check = true) : rho(std::move(m)) {
    if (rho.rows() != rho.cols() || rho.rows() < 2)
      throw InvalidDimensionError("cavity state must be square with dim >= 2");
    tail_mass = compute_tail_mass(rho);
    if (check) validate();
  }

  int dim() const { return int(rho.rows()); }

  static double compute_tail_mass(const MatrixXcd& m) {
    const int d = int(m.rows());
    const int k_tail = std::max(1, int(std::ceil(0.1 * d)));
    double mass = 0.0;
    for (int k = d - k_tail; k < d; ++k) mass += m(k, k).real();
    return mass;
  }

  /// True when the truncation can be trusted for quantitative results.
  bool trusted(double tail_tol = default_tail_tol) const { return tail_mass < tail_tol; }

  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

  void validate() const {
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > hermitian_tol)
      throw InvalidStateError("cavity state not Hermitian within 1e-10 (defect " +
                              std::to_string(herm) + ")");
    const double tr_err = std::abs(rho.trace() - cplx(1.0, 0.0));
    if (tr_err > trace_tol)
      throw InvalidStateError("cavity state trace differs from 1 by " + std::to_string(tr_err));
    const double lam = min_eigenvalue();
    if (lam < -psd_tol)
      throw InvalidStateError("cavity state eigenvalue " + std::to_string(lam) + " below -1e-8");
  }

  double mean_photons(const FockSpace& f) const { return (f.n * rho).trace().real(); }
  cplx mean_field(const FockSpace& f) const { return (f.a * rho).trace(); }

  static CavityState vacuum(int dim) {
    MatrixXcd m = MatrixXcd::Zero(dim, dim);
    m(0, 0) = 1.0;
    return CavityState(std::move(m));
  }

  static CavityState number_state(int dim, int k) {
    if (k < 0 || k >= dim) throw InvalidDimensionError("number state outside truncation");
    MatrixXcd m = MatrixXcd::Zero(dim, dim);
    m(k, k) = 1.0;
    return CavityState(std::move(m));
  }

  /// Diagonal state with the given populations (renormalized).
  static CavityState diagonal(const VectorXd& populations) {
    const int d = int(populations.size());
    MatrixXcd m = MatrixXcd::Zero(d, d);
    const double total = populations.sum();
    for (int k = 0; k < d; ++k) m(k, k) = populations(k) / total;
    return CavityState(std::move(m));
  }
};

/**
 * One exact collision: rho_c(t + tau) = Tr_a[ U (rho_a (x) rho_c) U^dag ].
 * Trace is preserved up to the unitary's reported truncation leakage.
 */
inline CavityState exact_map(const CavityState& cavity, const AtomPairState& atoms,
                             const JointUnitary& unitary) {
  const int d = cavity.dim();
  if (unitary.U.rows() != 4 * d)
    throw DimensionMismatchError("joint unitary dimension does not match cavity state");
  const MatrixXcd joint = kron(atoms.rho, cavity.rho);
  const MatrixXcd evolved = unitary.U * joint * unitary.U.adjoint();
  MatrixXcd out = MatrixXcd::Zero(d, d);
  for (int k = 0; k < 4; ++k) out += evolved.block(k * d, k * d, d, d);
  return CavityState(std::move(out), /*check=*/false);
}

/**
 * Second-order superoperator S(tau) rho: all sixteen rho_ij-weighted terms of
 * the Markovian expansion, second order in g*tau, at delta1 = delta2.
 *
 * Two print-level corrections relative to the published expansion are baked
 * in, both forced by exactness requirements (trace preservation and
 * Hermiticity of the map, verified against exact_map):
 *   - the rho44-weighted damping acts through a^dag a, not a a^dag;
 *   - the rho32 term is the adjoint of the rho23 term.
 */
inline CavityState superoperator_second_order(const CavityState& cavity,
                                              const AtomPairState& atoms,
                                              const InteractionParams& params,
                                              const FockSpace& space) {
  if (space.dim != cavity.dim())
    throw DimensionMismatchError("Fock space dimension does not match cavity state");
  const Matrix4cd& r = atoms.rho;
  const MatrixXcd& rho = cavity.rho;
  const MatrixXcd& a = space.a;
  const MatrixXcd& ad = space.adag;

  const double x = params.delta * params.tau;
  const DetuningEnvelope env = detuning_envelope(params.delta, params.tau);
  const cplx D = env.D, R = env.R;
  const double s = sinc(0.5 * x);
  const double s2 = s * s;
  const double gt2 = params.g_tau() * params.g_tau();
  const cplx f = std::exp(-iu * (0.5 * x));

  const MatrixXcd aad = a * ad;
  const MatrixXcd ada = space.n;
  const MatrixXcd a2 = a * a;
  const MatrixXcd ad2 = ad * ad;

  const double pop_ee = r(kEE, kEE).real();
  const double pop_eg = r(kEG, kEG).real();
  const double pop_ge = r(kGE, kGE).real();
  const double pop_gg = r(kGG, kGG).real();

  MatrixXcd out = (pop_ee + pop_eg + pop_ge + pop_gg) * rho;

  // Doubly excited pairs: emission-dominated damping through a a^dag.
  out -= gt2 * pop_ee *
         (std::conj(R) * rho * aad + R * aad * rho - 2.0 * s2 * ad * rho * a);
  // Singly excited pairs (both orderings identical at delta1 = delta2).
  out -= gt2 * (pop_eg + pop_ge) *
         (D * aad * rho + std::conj(D) * ada * rho + D * rho * ada + std::conj(D) * rho * aad -
          s2 * (ad * rho * a + a * rho * ad));
  // Double-ground pairs: absorption through a^dag a.
  out -= gt2 * pop_gg *
         (std::conj(R) * ada * rho + R * rho * ada - 2.0 * s2 * a * rho * ad);

  // Two-photon excitation / de-excitation driven by the rho14 / rho41 coherences.
  const cplx w14 = gt2 * s2 * std::exp(-iu * x) * r(kEE, kGG);
  const cplx w41 = gt2 * s2 * std::exp(iu * x) * r(kGG, kEE);
  out += w14 * (2.0 * ad * rho * ad - ad2 * rho - rho * ad2);
  out += w41 * (2.0 * a * rho * a - a2 * rho - rho * a2);

  // Cross coherence of the singly excited components.
  const cplx w23 = gt2 * s2 * r(kEG, kGE);
  const cplx w32 = gt2 * s2 * r(kGE, kEG);
  out += w23 * (ad * rho * a + a * rho * ad - rho * aad - ada * rho);
  out += w32 * (ad * rho * a + a * rho * ad - aad * rho - rho * ada);

  // First order: coherent drive from the single-excitation coherences.
  const cplx w_up = iu * params.g_tau() * s * f *
                    (r(kEE, kEG) + r(kEE, kGE) + r(kEG, kGG) + r(kGE, kGG));
  const cplx w_dn = iu * params.g_tau() * s * std::conj(f) *
                    (r(kEG, kEE) + r(kGE, kEE) + r(kGG, kEG) + r(kGG, kGE));
  out += w_up * (rho * ad - ad * rho);
  out += w_dn * (rho * a - a * rho);

  return CavityState(std::move(out), /*check=*/false);
}

}  // namespace paircav
