// Copyright 2026 The paircav Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file engine.hpp
 * @brief Engine-cycle thermodynamics of the driven cavity field.
 *
 * The cycle runs four strokes in the (omega_c, n) plane around a nominal
 * cavity frequency omega_c0 = omega_a:
 *   1->2 isochoric heating at delta = 0 (field reaches n_ss),
 *   2->3 iso-energetic expansion sweeping delta from 0 to delta_final < 0,
 *   3->4 isochoric cooling (field relaxes to n_th),
 *   4->1 iso-energetic compression back to resonance.
 *
 * Convention: omega_c = omega_a + delta, so the expansion stroke lowers the
 * cavity frequency and dQ = -n dOmega_c > 0 heat enters while work is
 * extracted. All heats/works are in rad/s photon units (hbar = 1 internally);
 * kelvin appears only at the temperature outputs.
 */

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "paircav/atom_pair.hpp"
#include "paircav/errors.hpp"
#include "paircav/lindblad.hpp"
#include "paircav/reservoir.hpp"
#include "paircav/types.hpp"

namespace paircav {

/// Entropy S/k_B of a thermal field with occupancy n_th:
/// (n+1) log(n+1) - n log n, with the n -> 0 limit equal to 0.
inline double field_entropy(double n_th) {
  if (n_th < 0.0) throw DomainError("field_entropy requires n_th >= 0");
  if (n_th == 0.0) return 0.0;
  return (n_th + 1.0) * std::log(n_th + 1.0) - n_th * std::log(n_th);
}

/**
 * Effective field temperature of an iso-energetic stroke,
 * T_eff = hbar omega_c n_ss / (n_th k_B log(1 + 1/n_th)).
 * With n_ss = n_th this is the plain thermal-field temperature. Returns 0 in
 * the fully cold limit n_ss = n_th = 0; diverges (DomainError) when n_th = 0
 * with photons present.
 */
inline double effective_temperature(double omega_c, double n_ss, double n_th) {
  if (n_th < 0.0 || n_ss < 0.0) throw DomainError("effective_temperature requires n >= 0");
  if (n_th == 0.0) {
    if (n_ss == 0.0) return 0.0;
    throw DomainError("effective temperature diverges: n_th = 0 with n_ss > 0");
  }
  return hbar * omega_c * n_ss / (n_th * k_boltzmann * std::log1p(1.0 / n_th));
}

/// Closed-form engine efficiency eta = 1 / (1 + (gamma^2/|alpha|^2) n_th/(g N)^2),
/// identically 1 - n_th/n_ss; zero when the drive is off.
inline double efficiency_closed_form(const ReservoirCoefficients& coeffs,
                                     const InteractionParams& params) {
  const double n_th = coeffs.thermal_occupancy();
  const double alpha2 = std::norm(coeffs.alpha);
  if (alpha2 == 0.0) return 0.0;
  const double g_n = params.g * params.n_pair;
  return 1.0 / (1.0 + (coeffs.gamma * coeffs.gamma / alpha2) * (n_th / (g_n * g_n)));
}

enum class CycleStage { heating, expansion, cooling, compression };

inline const char* stage_name(CycleStage s) {
  switch (s) {
    case CycleStage::heating: return "heating";
    case CycleStage::expansion: return "expansion";
    case CycleStage::cooling: return "cooling";
    case CycleStage::compression: return "compression";
  }
  return "?";
}

/// How the stroke integrand n(delta) is evaluated. stroke_entry freezes the
/// resonance values (reproducing the closed-form efficiency); pointwise
/// re-evaluates the reservoir at every quadrature node (loop-shape mode).
enum class StrokeMode { stroke_entry, pointwise };

struct CyclePoint {
  CycleStage stage;
  double delta;    ///< rad/s
  double omega_c;  ///< rad/s
  double n_ss;     ///< reservoir-driven occupancy at this detuning
  double n_th;     ///< thermal occupancy at this detuning
  double q_cum;    ///< accumulated heat into the field (rad/s photons)
  double w_cum;    ///< accumulated work done by the engine (rad/s photons)
};

struct CycleResult {
  double q23 = 0.0;  ///< heat drawn from the hot reservoir during expansion (positive)
  double q41 = 0.0;  ///< heat discarded during compression (positive)
  double q12 = 0.0;  ///< isochoric heating heat (signed, positive in)
  double q34 = 0.0;  ///< isochoric cooling heat (signed, negative)
  double w_net = 0.0;
  double eta = 0.0;
  double t_eff_hot = 0.0;   ///< K
  double t_eff_cold = 0.0;  ///< K
  double entropy = 0.0;     ///< S/k_B of the stationary field
  bool work_extracted = false;  ///< false when q23 <= 0 (engine not operating)
  bool cold_limit = false;      ///< n_th = 0; temperatures not defined
};

struct CycleOutput {
  CycleResult result;
  std::vector<CyclePoint> points;
};

/**
 * Run one engine cycle. delta_final must be negative; `steps` trapezoid
 * panels discretize each iso-energetic stroke. Invariants by construction:
 * w_net = q23 - q41 and eta = 1 - q41/q23 whenever q23 > 0.
 */
inline CycleOutput run_cycle(const AtomPairState& state, const InteractionParams& params,
                             double delta_final, int steps,
                             StrokeMode mode = StrokeMode::stroke_entry) {
  if (!(delta_final < 0.0)) throw InvalidParamsError("run_cycle requires delta_final < 0");
  if (steps < 2) throw InvalidParamsError("run_cycle requires steps >= 2");
  params.validate();

  InteractionParams at_resonance = params;
  at_resonance.delta = 0.0;
  const ReservoirCoefficients coeffs0 = reservoir_coefficients(state, at_resonance);
  if (coeffs0.above_threshold)
    throw AboveThresholdError("engine cannot run above threshold", coeffs0.gamma);
  const double n_th0 = coeffs0.n_th;
  const MomentSteadyState m0 = steady_state_moments(coeffs0);
  const double n_ss0 = m0.n_ss;

  const double omega0 = params.omega_a;
  const int npts = steps + 1;

  // Reservoir occupancies along the detuning ramp.
  std::vector<double> deltas(npts), n_hot(npts), n_cold(npts);
  for (int j = 0; j < npts; ++j) {
    deltas[j] = delta_final * double(j) / double(steps);
    if (mode == StrokeMode::stroke_entry) {
      n_hot[j] = n_ss0;
      n_cold[j] = n_th0;
    } else {
      InteractionParams pj = params;
      pj.delta = deltas[j];
      const ReservoirCoefficients cj = reservoir_coefficients(state, pj);
      n_hot[j] = steady_state_moments(cj).n_ss;  // gamma(delta) >= gamma(0) > 0
      n_cold[j] = cj.n_th;
    }
  }

  // Trapezoid heats over the frequency ramp (omega_c = omega_a + delta).
  double q23 = 0.0, q41 = 0.0;
  for (int j = 0; j < steps; ++j) {
    const double dw = deltas[j] - deltas[j + 1];  // positive: omega_c decreases
    q23 += 0.5 * (n_hot[j] + n_hot[j + 1]) * dw;
    q41 += 0.5 * (n_cold[j] + n_cold[j + 1]) * dw;
  }

  CycleResult res;
  res.q23 = q23;
  res.q41 = q41;
  res.w_net = q23 - q41;
  res.work_extracted = q23 > 0.0;
  res.eta = res.work_extracted ? 1.0 - q41 / q23 : 0.0;
  res.q12 = omega0 * (n_ss0 - n_th0);
  res.q34 = (omega0 + delta_final) * (n_cold[steps] - n_hot[steps]);
  res.entropy = field_entropy(n_th0);
  res.cold_limit = n_th0 == 0.0;
  if (!res.cold_limit) {
    res.t_eff_hot = effective_temperature(omega0, n_ss0, n_th0);
    res.t_eff_cold = effective_temperature(omega0, n_th0, n_th0);
  }

  // State-space trace for the cycle diagram, with running heat/work totals.
  CycleOutput out;
  out.result = res;
  auto& pts = out.points;
  pts.reserve(2 * npts + 4);
  double q_cum = 0.0, w_cum = 0.0;

  pts.push_back({CycleStage::heating, 0.0, omega0, n_ss0, n_th0, q_cum, w_cum});
  q_cum += res.q12;
  pts.push_back({CycleStage::heating, 0.0, omega0, n_ss0, n_th0, q_cum, w_cum});

  for (int j = 0; j < npts; ++j) {
    if (j > 0) {
      const double dq = 0.5 * (n_hot[j - 1] + n_hot[j]) * (deltas[j - 1] - deltas[j]);
      q_cum += dq;
      w_cum += dq;
    }
    pts.push_back({CycleStage::expansion, deltas[j], omega0 + deltas[j], n_hot[j], n_cold[j],
                   q_cum, w_cum});
  }

  pts.push_back({CycleStage::cooling, delta_final, omega0 + delta_final, n_hot[steps],
                 n_cold[steps], q_cum, w_cum});
  q_cum += res.q34;
  pts.push_back({CycleStage::cooling, delta_final, omega0 + delta_final, n_hot[steps],
                 n_cold[steps], q_cum, w_cum});

  for (int j = steps; j >= 0; --j) {
    if (j < steps) {
      const double dq = 0.5 * (n_cold[j] + n_cold[j + 1]) * (deltas[j] - deltas[j + 1]);
      q_cum -= dq;
      w_cum -= dq;
    }
    pts.push_back({CycleStage::compression, deltas[j], omega0 + deltas[j], n_hot[j], n_cold[j],
                   q_cum, w_cum});
  }

  return out;
}

}  // namespace paircav
