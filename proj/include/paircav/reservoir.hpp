// Copyright 2026 The paircav Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file reservoir.hpp
 * @brief Coefficients of the effective reservoir seen by the cavity mode.
 *
 * An injected atom-pair beam plus the vacuum (kappa) bath act on the cavity
 * as one engineered reservoir. Given a pair state and the interaction
 * parameters, this module produces every coefficient of the cavity master
 * equation: incoherent gain/loss rates p1/p2, two-photon rate mu, coherent
 * drive alpha, effective decay gamma, thermal occupancy n_th, and the
 * frequency pushing/pulling terms of the effective Hamiltonian.
 */

#pragma once

#include <cmath>
#include <limits>

#include "paircav/atom_pair.hpp"
#include "paircav/errors.hpp"
#include "paircav/types.hpp"

namespace paircav {

/// Physical parameters of one pair-cavity interaction (angular units).
struct InteractionParams {
  double g = 0.0;        ///< atom-field coupling (rad/s)
  double tau = 0.0;      ///< interaction time (s)
  double kappa = 0.0;    ///< cavity decay rate (rad/s)
  double delta = 0.0;    ///< detuning delta1 = delta2 = delta (rad/s)
  double n_pair = 1.0;   ///< effective number of pairs r_a * tau
  double omega_a = 0.0;  ///< mean atomic transition frequency (rad/s)

  double g_tau() const { return g * tau; }
  double fly_rate() const { return n_pair / tau; }  // r_a

  /// Second-order (Markovian) map is accurate for g*tau well below 0.2.
  bool markovian() const { return g_tau() < 0.2; }

  void validate() const {
    if (!(g > 0.0)) throw InvalidParamsError("coupling g must be positive");
    if (!(tau > 0.0)) throw InvalidParamsError("interaction time tau must be positive");
    if (kappa < 0.0) throw InvalidParamsError("cavity decay kappa must be nonnegative");
    if (!(n_pair > 0.0)) throw InvalidParamsError("n_pair must be positive");
  }
};

/// Detuning envelope entering the second-order rates. R = D + E always;
/// at delta = 0 it reduces to R = 1, D = E = 1/2.
struct DetuningEnvelope {
  cplx R, D, E;
  double a1 = 0.0, b1 = 0.0;
};

/**
 * Envelope functions of x = delta * tau.
 *
 * a1 = sinc(x/2)/2,  b1 = (cos(x/2) - sinc(x/2))/x,  D = E = (a1 + i b1) e^{i x/2}.
 * Below |x| = 1e-6 the cancellation in b1 is replaced by its series
 * -x/12 + x^3/480; a1 by 1/2 - x^2/48.
 */
inline DetuningEnvelope detuning_envelope(double delta, double tau) {
  if (!(tau > 0.0)) throw InvalidParamsError("detuning_envelope requires tau > 0");
  const double x = delta * tau;
  DetuningEnvelope env;
  if (std::abs(x) < 1e-6) {
    env.a1 = 0.5 - x * x / 48.0;
    env.b1 = -x / 12.0 + x * x * x / 480.0;
  } else {
    const double u = 0.5 * x;
    const double s = std::sin(u) / u;
    env.a1 = 0.5 * s;
    env.b1 = (std::cos(u) - s) / x;
  }
  const cplx phase = std::exp(iu * (0.5 * x));
  env.D = cplx(env.a1, env.b1) * phase;
  env.E = env.D;  // delta1 = delta2
  env.R = env.D + env.E;
  return env;
}

/**
 * Coefficients of the cavity master equation for a given fuel state.
 *
 * Dissipator rates: gain = p1 = gamma*n_th, loss = p2 + kappa/2 = gamma*(n_th+1).
 * When gamma <= 0 (above threshold) n_th is undefined and recorded as NaN;
 * accessors that need it throw AboveThresholdError carrying the margin.
 */
struct ReservoirCoefficients {
  double p1 = 0.0;            ///< incoherent gain rate (1/s)
  double p2 = 0.0;            ///< incoherent loss rate from the pairs (1/s)
  cplx mu{0.0, 0.0};          ///< two-photon (squeezing-type) rate (1/s)
  cplx alpha{0.0, 0.0};       ///< coherent drive parameter (dimensionless)
  double gamma = 0.0;         ///< effective decay kappa/2 + (p2 - p1) (1/s)
  double n_th = 0.0;          ///< thermal occupancy p1/gamma; NaN above threshold
  cplx drive_strength{0, 0};  ///< g * n_pair * alpha (rad/s)
  double push_pull = 0.0;     ///< coefficient of a a^dag in H_eff (rad/s)
  double const_shift = 0.0;   ///< constant term in H_eff (rad/s)
  bool above_threshold = false;

  double gain_rate() const { return p1; }
  double loss_rate() const { return p1 + gamma; }  // identically p2 + kappa/2
  double margin() const { return gamma; }          // (p2 + kappa/2) - p1

  double thermal_occupancy() const {
    if (above_threshold)
      throw AboveThresholdError("reservoir above threshold: gamma = " + std::to_string(gamma) +
                                    " <= 0, no finite steady state",
                                gamma);
    return n_th;
  }
};

/**
 * Build the reservoir coefficients from a fuel state and parameters.
 *
 * p1 = g^2 tau N Re(R) [rho11 + rho22/2 + rho33/2 + (rho23 + rho32)/2]
 * p2 = same with rho44 in place of rho11
 * mu = g^2 tau N rho41 Re(R) e^{i delta tau}
 * alpha = (rho13 + rho24 + rho12 + rho34) sinc(delta tau / 2) e^{-i delta tau / 2}
 *
 * The coherence term enters p1/p2 with weight 1/2, the form the second-order
 * superoperator reproduces; it makes both rates expectation values of PSD
 * collective operators, so n_th >= 0 for every valid state below threshold.
 */
inline ReservoirCoefficients reservoir_coefficients(const AtomPairState& state,
                                                    const InteractionParams& params) {
  params.validate();
  const Matrix4cd& r = state.rho;
  const DetuningEnvelope env = detuning_envelope(params.delta, params.tau);
  const double re_r = env.R.real();
  const double im_r = env.R.imag();
  const double x = params.delta * params.tau;
  const double gt = params.g_tau();
  const double base = params.g * gt * params.n_pair;  // g^2 tau N_pair
  const double ra = params.fly_rate();

  const double pop_ee = r(kEE, kEE).real();
  const double pop_eg = r(kEG, kEG).real();
  const double pop_ge = r(kGE, kGE).real();
  const double pop_gg = r(kGG, kGG).real();
  const double coh_sym = r(kEG, kGE).real();  // (rho23 + rho32)/2

  ReservoirCoefficients out;
  out.p1 = base * re_r * (pop_ee + 0.5 * (pop_eg + pop_ge) + coh_sym);
  out.p2 = base * re_r * (pop_gg + 0.5 * (pop_eg + pop_ge) + coh_sym);
  out.mu = base * r(kGG, kEE) * re_r * std::exp(iu * x);
  out.alpha = (r(kEE, kGE) + r(kEG, kGG) + r(kEE, kEG) + r(kGE, kGG)) * sinc(0.5 * x) *
              std::exp(-iu * (0.5 * x));
  out.gamma = 0.5 * params.kappa + (out.p2 - out.p1);
  out.above_threshold = !(out.gamma > 0.0);
  out.n_th = out.above_threshold ? std::numeric_limits<double>::quiet_NaN() : out.p1 / out.gamma;
  out.drive_strength = params.g * params.n_pair * out.alpha;
  out.push_pull = -ra * (pop_gg - pop_ee) * im_r * gt * gt;
  out.const_shift = -0.5 * ra * (pop_eg - pop_ge) * im_r * gt * gt;
  return out;
}

/**
 * Temperature of the effective reservoir in kelvin:
 * T_R = hbar omega_a / (k_B log(1 + 1/n_th)); zero at n_th = 0.
 */
inline double reservoir_temperature(const ReservoirCoefficients& coeffs, double omega_a) {
  const double n = coeffs.thermal_occupancy();
  if (n == 0.0) return 0.0;
  return hbar * omega_a / (k_boltzmann * std::log1p(1.0 / n));
}

struct OperatingRegime {
  double margin;         ///< (p2 + kappa/2) - p1, i.e. gamma (1/s)
  bool below_threshold;  ///< true iff margin > 0
};

/// Threshold check: the cavity has a finite steady state iff p1 < p2 + kappa/2.
inline OperatingRegime operating_regime(const ReservoirCoefficients& coeffs) {
  return {coeffs.gamma, coeffs.gamma > 0.0};
}

}  // namespace paircav
