// Copyright 2026 The paircav Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lindblad.hpp
 * @brief Lindblad master equation for the cavity mode: right-hand side,
 *        adaptive time integration, and steady-state solvers.
 *
 * d rho / dt = -i [H_eff, rho]
 *   + p1 (2 a^dag rho a - a a^dag rho - rho a a^dag)
 *   + (p2 + kappa/2) (2 a rho a^dag - a^dag a rho - rho a^dag a)
 *   + mu (2 a rho a - a^2 rho - rho a^2)
 *   + mu* (2 a^dag rho a^dag - a^dag^2 rho - rho a^dag^2)
 *
 * with gain p1 = gamma n_th and loss p2 + kappa/2 = gamma (n_th + 1). The
 * drive term of H_eff is always on; the frequency pushing/pulling terms are
 * opt-in (they contribute negligibly but must be testable).
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "paircav/cavity_map.hpp"
#include "paircav/errors.hpp"
#include "paircav/fock.hpp"
#include "paircav/reservoir.hpp"
#include "paircav/types.hpp"

namespace paircav {

/// Precomputed operators for repeated right-hand-side evaluations.
class LindbladGenerator {
 public:
  LindbladGenerator(const ReservoirCoefficients& coeffs, const FockSpace& space,
                    bool include_heff = false)
      : gain_(coeffs.gain_rate()),
        loss_(coeffs.loss_rate()),
        mu_(coeffs.mu),
        drive_(coeffs.drive_strength),
        push_pull_(include_heff ? coeffs.push_pull : 0.0),
        a_(space.a),
        ad_(space.adag),
        aad_(space.a * space.adag),
        ada_(space.n),
        a2_(space.a * space.a),
        ad2_(space.adag * space.adag) {
    h_ = drive_ * ad_ + std::conj(drive_) * a_;
    if (include_heff) {
      h_ += coeffs.push_pull * aad_;
      h_ += coeffs.const_shift * MatrixXcd::Identity(space.dim, space.dim);
    }
  }

  MatrixXcd rhs(const MatrixXcd& rho) const {
    MatrixXcd out = -iu * (h_ * rho - rho * h_);
    out += gain_ * (2.0 * (ad_ * rho * a_) - aad_ * rho - rho * aad_);
    out += loss_ * (2.0 * (a_ * rho * ad_) - ada_ * rho - rho * ada_);
    if (mu_ != cplx(0.0, 0.0)) {
      out += mu_ * (2.0 * (a_ * rho * a_) - a2_ * rho - rho * a2_);
      out += std::conj(mu_) * (2.0 * (ad_ * rho * ad_) - ad2_ * rho - rho * ad2_);
    }
    return out;
  }

  /// Characteristic rate magnitude, used to scale tolerances and horizons.
  double rate_scale() const {
    return gain_ + loss_ + std::abs(mu_) + std::abs(drive_) + std::abs(push_pull_);
  }

 private:
  double gain_, loss_;
  cplx mu_, drive_;
  double push_pull_;
  MatrixXcd a_, ad_, aad_, ada_, a2_, ad2_;
  MatrixXcd h_;
};

/// dRho/dt for a single state (convenience wrapper over LindbladGenerator).
inline MatrixXcd lindblad_rhs(const CavityState& cavity, const ReservoirCoefficients& coeffs,
                              const FockSpace& space, bool include_heff = false) {
  if (space.dim != cavity.dim())
    throw DimensionMismatchError("Fock space dimension does not match cavity state");
  return LindbladGenerator(coeffs, space, include_heff).rhs(cavity.rho);
}

struct TrajectoryPoint {
  double t;
  double n_mean;
  double re_a, im_a;
  double trace_err;
  double min_eig;
  double tail_mass;
};

struct EvolveOptions {
  double tol = 1e-8;        ///< per-step embedded error bound (Frobenius)
  bool include_heff = false;
  double tail_tol = 1e-6;   ///< abort when tail mass exceeds this
  double trace_tol = 1e-6;  ///< abort when |tr rho - 1| exceeds this
  long max_steps = 4000000;
  bool record = true;       ///< keep per-step observables
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  CavityState final_state;
  double t_final = 0.0;
  bool capped = false;  ///< horizon reduced because the reservoir was above threshold
  long accepted = 0;
  long rejected = 0;
};

namespace detail {

// Dormand-Prince 5(4) tableau.
struct Dp45 {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
};

struct Dp45Result {
  MatrixXcd y;
  double err;
};

template <typename Rhs>
Dp45Result dp45_step(const Rhs& f, const MatrixXcd& y, double h) {
  using T = Dp45;
  const MatrixXcd k1 = f(y);
  const MatrixXcd k2 = f(y + h * (T::a21 * k1));
  const MatrixXcd k3 = f(y + h * (T::a31 * k1 + T::a32 * k2));
  const MatrixXcd k4 = f(y + h * (T::a41 * k1 + T::a42 * k2 + T::a43 * k3));
  const MatrixXcd k5 = f(y + h * (T::a51 * k1 + T::a52 * k2 + T::a53 * k3 + T::a54 * k4));
  const MatrixXcd k6 =
      f(y + h * (T::a61 * k1 + T::a62 * k2 + T::a63 * k3 + T::a64 * k4 + T::a65 * k5));
  MatrixXcd y5 = y + h * (T::b1 * k1 + T::b3 * k3 + T::b4 * k4 + T::b5 * k5 + T::b6 * k6);
  const MatrixXcd k7 = f(y5);
  const MatrixXcd errm =
      h * (T::e1 * k1 + T::e3 * k3 + T::e4 * k4 + T::e5 * k5 + T::e6 * k6 + T::e7 * k7);
  return {std::move(y5), errm.norm()};
}

inline TrajectoryPoint observe(double t, const MatrixXcd& rho, const FockSpace& space) {
  TrajectoryPoint p;
  p.t = t;
  p.n_mean = (space.n * rho).trace().real();
  const cplx am = (space.a * rho).trace();
  p.re_a = am.real();
  p.im_a = am.imag();
  p.trace_err = std::abs(rho.trace() - cplx(1.0, 0.0));
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  p.min_eig = es.eigenvalues().minCoeff();
  p.tail_mass = CavityState::compute_tail_mass(rho);
  return p;
}

}  // namespace detail

/**
 * Integrate the master equation from `initial` to t_final with adaptive
 * Dormand-Prince stepping. Each accepted step re-symmetrizes rho and records
 * observables. Aborts on trace drift or tail mass beyond tolerance. Above
 * threshold the horizon is capped at 10 characteristic times and flagged.
 */
inline Trajectory evolve(const CavityState& initial, const ReservoirCoefficients& coeffs,
                         const FockSpace& space, double t_final, const EvolveOptions& opt = {}) {
  if (space.dim != initial.dim())
    throw DimensionMismatchError("Fock space dimension does not match initial state");
  const LindbladGenerator gen(coeffs, space, opt.include_heff);
  const double scale = std::max(gen.rate_scale(), 1e-300);

  bool capped = false;
  if (coeffs.above_threshold && t_final > 10.0 / scale) {
    t_final = 10.0 / scale;
    capped = true;
  }

  auto f = [&gen](const MatrixXcd& y) { return gen.rhs(y); };

  MatrixXcd rho = initial.rho;
  double t = 0.0;
  double h = std::min(t_final, 1e-2 / scale);
  long accepted = 0, rejected = 0;

  std::vector<TrajectoryPoint> points;
  if (opt.record) points.push_back(detail::observe(t, rho, space));

  while (t < t_final) {
    h = std::min(h, t_final - t);
    auto step = detail::dp45_step(f, rho, h);
    if (accepted + rejected >= opt.max_steps)
      throw ConvergenceError("evolve exceeded step budget at t = " + std::to_string(t));
    if (step.err > opt.tol) {
      ++rejected;
      h *= std::max(0.2, 0.9 * std::pow(opt.tol / step.err, 0.2));
      continue;
    }
    rho = 0.5 * (step.y + step.y.adjoint());
    t += h;
    ++accepted;
    const double grow = step.err > 0.0 ? 0.9 * std::pow(opt.tol / step.err, 0.2) : 5.0;
    h *= std::clamp(grow, 0.2, 5.0);

    const double trace_err = std::abs(rho.trace() - cplx(1.0, 0.0));
    if (trace_err > opt.trace_tol)
      throw TraceDriftError("trace drifted by " + std::to_string(trace_err) + " at t = " +
                            std::to_string(t) + " after " + std::to_string(accepted) + " steps");
    const double tail = CavityState::compute_tail_mass(rho);
    if (tail > opt.tail_tol)
      throw TruncationError("tail mass " + std::to_string(tail) + " at t = " + std::to_string(t) +
                            "; increase the Fock dimension beyond " + std::to_string(space.dim));
    if (opt.record) points.push_back(detail::observe(t, rho, space));
  }

  return Trajectory{std::move(points), CavityState(std::move(rho)), t_final, capped, accepted,
                    rejected};
}

struct MomentSteadyState {
  double n_ss;  ///< mean photon number n_th + |g N alpha|^2 / gamma^2
  cplx a_ss;    ///< field amplitude -i g N alpha / gamma
};

/// Closed-form steady state of the first two moments; requires gamma > 0.
inline MomentSteadyState steady_state_moments(const ReservoirCoefficients& coeffs) {
  const double n_th = coeffs.thermal_occupancy();
  const cplx a_ss = -iu * coeffs.drive_strength / coeffs.gamma;
  const double n_ss = n_th + std::norm(coeffs.drive_strength) / (coeffs.gamma * coeffs.gamma);
  return {n_ss, a_ss};
}

enum class SteadyStateMethod { long_time, null_space };

/// Direct steady state as the null space of the vectorized Liouvillian,
/// with the unit-trace row appended. Dense; restricted to dim <= 32.
inline CavityState steady_state_null_space(const ReservoirCoefficients& coeffs,
                                           const FockSpace& space, bool include_heff = false) {
  const int d = space.dim;
  if (d > 32) throw InvalidDimensionError("null-space steady state restricted to dim <= 32");
  if (coeffs.above_threshold)
    throw AboveThresholdError("no steady state above threshold", coeffs.gamma);

  const MatrixXcd id = space.identity();
  const MatrixXcd& a = space.a;
  const MatrixXcd& ad = space.adag;
  const MatrixXcd aad = a * ad;
  const MatrixXcd& ada = space.n;
  const MatrixXcd a2 = a * a;
  const MatrixXcd ad2 = ad * ad;

  MatrixXcd h = coeffs.drive_strength * ad + std::conj(coeffs.drive_strength) * a;
  if (include_heff) h += coeffs.push_pull * aad + coeffs.const_shift * id;

  // vec(A rho B) = (B^T (x) A) vec(rho), column-major.
  auto sandwich = [&](const MatrixXcd& lhs, const MatrixXcd& rhs) {
    return kron(rhs.transpose(), lhs);
  };
  MatrixXcd liouville = -iu * (sandwich(h, id) - sandwich(id, h));
  liouville += coeffs.gain_rate() *
               (2.0 * sandwich(ad, a) - sandwich(aad, id) - sandwich(id, aad));
  liouville += coeffs.loss_rate() *
               (2.0 * sandwich(a, ad) - sandwich(ada, id) - sandwich(id, ada));
  liouville += coeffs.mu * (2.0 * sandwich(a, a) - sandwich(a2, id) - sandwich(id, a2));
  liouville += std::conj(coeffs.mu) *
               (2.0 * sandwich(ad, ad) - sandwich(ad2, id) - sandwich(id, ad2));

  const double scale =
      std::max(coeffs.gain_rate() + coeffs.loss_rate() + std::abs(coeffs.mu) +
                   std::abs(coeffs.drive_strength),
               1e-300);
  MatrixXcd system(d * d + 1, d * d);
  system.topRows(d * d) = liouville / scale;
  system.row(d * d).setZero();
  for (int k = 0; k < d; ++k) system(d * d, k * d + k) = 1.0;
  VectorXcd rhs = VectorXcd::Zero(d * d + 1);
  rhs(d * d) = 1.0;

  const VectorXcd x = system.colPivHouseholderQr().solve(rhs);
  MatrixXcd rho = Eigen::Map<const MatrixXcd>(x.data(), d, d);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return CavityState(std::move(rho));
}

/**
 * Numerical steady state. The default long-time method integrates from vacuum
 * until ||d rho/dt|| <= tol * rate_scale; the null-space method solves the
 * vectorized linear system directly (dim <= 32).
 */
inline CavityState steady_state_numeric(const ReservoirCoefficients& coeffs,
                                        const FockSpace& space, double tol = 1e-10,
                                        SteadyStateMethod method = SteadyStateMethod::long_time,
                                        bool include_heff = false) {
  if (coeffs.above_threshold)
    throw AboveThresholdError("no steady state above threshold", coeffs.gamma);
  if (method == SteadyStateMethod::null_space)
    return steady_state_null_space(coeffs, space, include_heff);

  const LindbladGenerator gen(coeffs, space, include_heff);
  const double scale = gen.rate_scale();
  const double chunk = 2.0 / coeffs.gamma;
  constexpr int max_chunks = 600;

  EvolveOptions opt;
  opt.tol = std::min(tol * 1e-2, 1e-9);
  opt.include_heff = include_heff;
  opt.record = false;

  CavityState state = CavityState::vacuum(space.dim);
  std::vector<double> residual_log;
  for (int i = 0; i < max_chunks; ++i) {
    Trajectory traj = evolve(state, coeffs, space, chunk, opt);
    state = std::move(traj.final_state);
    const double resid = gen.rhs(state.rho).norm();
    residual_log.push_back(resid);
    if (resid <= tol * scale) return state;
  }
  // Estimate the relaxation (spectral gap) rate from the residual decay.
  double gap = 0.0;
  if (residual_log.size() >= 2) {
    const double r0 = residual_log[residual_log.size() - 2];
    const double r1 = residual_log.back();
    if (r0 > 0.0 && r1 > 0.0) gap = std::log(r0 / r1) / chunk;
  }
  throw ConvergenceError(
      "steady state not reached within " + std::to_string(max_chunks) +
      " relaxation chunks; residual " + std::to_string(residual_log.back()) +
      ", estimated spectral gap " + std::to_string(gap) + " 1/s vs gamma " +
      std::to_string(coeffs.gamma));
}

}  // namespace paircav
