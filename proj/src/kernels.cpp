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

#include "spikelearn/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace spikelearn {

void NeuronParams::validate() const {
  if (!(tau_s > 0.0) || !(tau_m > tau_s))
    throw std::invalid_argument("require tau_m > tau_s > 0");
  if (!(tau_q >= 0.0)) throw std::invalid_argument("require tau_q >= 0");
  if (!(theta > u_reset)) throw std::invalid_argument("require theta > u_reset");
  if (!(eps0 > 0.0)) throw std::invalid_argument("require eps0 > 0");
  if (!(capacitance > 0.0)) throw std::invalid_argument("require capacitance > 0");
  const double derived = charge / capacitance * tau_m / (tau_m - tau_s);
  if (std::abs(derived - eps0) > 1e-9 * std::abs(eps0))
    throw std::invalid_argument("eps0 inconsistent with charge/capacitance");
}

NeuronParams NeuronParams::from_eps0(double eps0, double tau_m, double tau_s,
                                     double theta, double u_reset,
                                     double tau_q, double capacitance) {
  NeuronParams p;
  p.eps0 = eps0;
  p.tau_m = tau_m;
  p.tau_s = tau_s;
  p.theta = theta;
  p.u_reset = u_reset;
  p.tau_q = tau_q;
  p.capacitance = capacitance;
  p.charge = eps0 * capacitance * (tau_m - tau_s) / tau_m;
  p.validate();
  return p;
}

NeuronParams NeuronParams::from_charge(double charge, double capacitance,
                                       double tau_m, double tau_s,
                                       double theta, double u_reset, double tau_q) {
  NeuronParams p;
  p.charge = charge;
  p.capacitance = capacitance;
  p.tau_m = tau_m;
  p.tau_s = tau_s;
  p.theta = theta;
  p.u_reset = u_reset;
  p.tau_q = tau_q;
  p.eps0 = charge / capacitance * tau_m / (tau_m - tau_s);
  p.validate();
  return p;
}

PspPeak psp_peak(const NeuronParams& p) {
  const double lag = p.tau_m * p.tau_s / (p.tau_m - p.tau_s) * std::log(p.tau_m / p.tau_s);
  return {lag, psp_kernel(lag, p)};
}

double filt_min_target_time(double tau_q, const NeuronParams& p) {
  return p.tau_m * p.tau_s / (p.tau_m - p.tau_s) *
         std::log((p.tau_m + tau_q) / (p.tau_s + tau_q));
}

}  // namespace spikelearn
