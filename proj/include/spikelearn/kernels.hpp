// Copyright 2026 The Spikelearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>

namespace spikelearn {

/// Constants of the simplified spike-response neuron model and of the
/// stochastic escape-rate extension. All kernel evaluations are pure
/// closed forms of these parameters.
///
/// The PSP coefficient eps0 and the per-spike charge are linked by
/// eps0 = (charge / capacitance) * tau_m / (tau_m - tau_s); construction
/// from either side must agree (see validate()).
struct NeuronParams {
  double eps0 = 4.0;         // PSP coefficient, mV
  double tau_m = 10.0;       // membrane time constant, ms
  double tau_s = 5.0;        // synaptic time constant, ms
  double theta = 15.0;       // firing threshold above rest, mV
  double u_reset = 0.0;      // reset potential, mV
  double tau_q = 10.0;       // output-filter time constant, ms
  double capacitance = 2.5;  // membrane capacitance, nF
  double charge = 5.0;       // charge per presynaptic spike, pC
  double rho0 = 0.01;        // escape rate at threshold, 1/ms
  double delta_u = 1.0;      // threshold smoothness, mV

  /// Reset-kernel coefficient, -(theta - u_reset); derived, never stored.
  double reset_coefficient() const { return -(theta - u_reset); }

  void validate() const;

  /// Build from the PSP coefficient; the per-spike charge is derived so the
  /// consistency identity holds exactly.
  static NeuronParams from_eps0(double eps0, double tau_m, double tau_s,
                                double theta, double u_reset,
                                double tau_q, double capacitance = 2.5);

  /// Build from electrical quantities; eps0 is derived.
  static NeuronParams from_charge(double charge, double capacitance,
                                  double tau_m, double tau_s,
                                  double theta, double u_reset, double tau_q);
};

/// Postsynaptic current kernel, nA. Zero for negative lag.
inline double current_kernel(double s, const NeuronParams& p) {
  if (s < 0.0) return 0.0;
  return p.charge / p.tau_s * std::exp(-s / p.tau_s);
}

/// PSP kernel, mV: the double-exponential voltage response to one input
/// spike. Zero for negative lag and at zero lag.
inline double psp_kernel(double s, const NeuronParams& p) {
  if (s < 0.0) return 0.0;
  return p.eps0 * (std::exp(-s / p.tau_m) - std::exp(-s / p.tau_s));
}

/// Reset kernel, mV: the negative exponential applied after each output
/// spike. Zero for negative lag.
inline double reset_kernel(double s, const NeuronParams& p) {
  if (s < 0.0) return 0.0;
  return p.reset_coefficient() * std::exp(-s / p.tau_m);
}

/// Learning window of the filtered-error rule, mV: the PSP kernel
/// correlated with an exponentially filtered output spike. Continuous at
/// s = 0 and non-zero for post-before-pre lags (s < 0).
inline double filt_window(double s, const NeuronParams& p) {
  const double cm = p.tau_m / (p.tau_m + p.tau_q);
  const double cs = p.tau_s / (p.tau_s + p.tau_q);
  if (s > 0.0)
    return p.eps0 * (cm * std::exp(-s / p.tau_m) - cs * std::exp(-s / p.tau_s));
  if (p.tau_q <= 0.0) return 0.0;  // filter degenerates to a delta
  return p.eps0 * (cm - cs) * std::exp(s / p.tau_q);
}

struct PspPeak {
  double lag;    // ms
  double value;  // mV
};

/// Analytic argmax and maximum of the PSP kernel.
PspPeak psp_peak(const NeuronParams& p);

/// Smallest target lag that remains a stable fixed point of the
/// filtered-error rule for a given filter constant. Equals the PSP peak lag
/// at tau_q = 0 and decreases monotonically towards 0 as tau_q grows; it is
/// also the argmax of filt_window over s > 0.
double filt_min_target_time(double tau_q, const NeuronParams& p);

}  // namespace spikelearn
