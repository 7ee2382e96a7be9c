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

#include "spikelearn/neuron.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spikelearn {

namespace {

struct TimedImpulse {
  double time;
  double amplitude;
};

// Input spikes flattened to (time, w_j * eps0) impulses, sorted by time with
// the synapse index as tie-breaker for determinism.
std::vector<TimedImpulse> input_impulses(const InputPattern& pattern,
                                         const WeightVector& w, const NeuronParams& p) {
  std::vector<std::pair<double, std::size_t>> keyed;
  for (std::size_t j = 0; j < pattern.trains.size(); ++j)
    for (double t : pattern.trains[j].times) keyed.emplace_back(t, j);
  std::sort(keyed.begin(), keyed.end());
  std::vector<TimedImpulse> events;
  events.reserve(keyed.size());
  for (const auto& [t, j] : keyed) events.push_back({t, w[j] * p.eps0});
  return events;
}

void check_dimensions(const InputPattern& pattern, const WeightVector& w) {
  if (pattern.trains.size() != w.size())
    throw std::invalid_argument("weight vector length must match input count");
}

// Shared stepping core: the input PSP sum is carried by two exponential
// accumulators (one per time constant) and the reset sum by a third, so each
// grid step costs three multiplies plus any impulses that fell inside it.
// Off-grid impulse times are decayed exactly from their own instant.
class GridState {
 public:
  GridState(const NeuronParams& p, double dt)
      : p_(p),
        decay_m_(std::exp(-dt / p.tau_m)),
        decay_s_(std::exp(-dt / p.tau_s)) {}

  void advance() {
    acc_m_ *= decay_m_;
    acc_s_ *= decay_s_;
    reset_ *= decay_m_;
  }

  void add_input(double now, const TimedImpulse& ev) {
    acc_m_ += ev.amplitude * std::exp(-(now - ev.time) / p_.tau_m);
    acc_s_ += ev.amplitude * std::exp(-(now - ev.time) / p_.tau_s);
  }

  void add_reset(double now, double spike_time) {
    reset_ += p_.reset_coefficient() * std::exp(-(now - spike_time) / p_.tau_m);
  }

  double potential() const { return acc_m_ - acc_s_ + reset_; }

 private:
  const NeuronParams& p_;
  double decay_m_, decay_s_;
  double acc_m_ = 0.0, acc_s_ = 0.0, reset_ = 0.0;
};

}  // namespace

long grid_steps(double duration, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const long n = std::llround(duration / dt);
  if (n < 1 || std::abs(static_cast<double>(n) * dt - duration) >
                   1e-9 * std::max(1.0, std::abs(duration)))
    throw std::invalid_argument("dt must divide the duration");
  return n;
}

double membrane_potential(double t, const InputPattern& pattern,
                          const WeightVector& w, const SpikeTrain& output_history,
                          const NeuronParams& p) {
  check_dimensions(pattern, w);
  double u = 0.0;
  for (std::size_t j = 0; j < pattern.trains.size(); ++j) {
    double sum = 0.0;
    for (double tf : pattern.trains[j].times) sum += psp_kernel(t - tf, p);
    u += w[j] * sum;
  }
  for (double tf : output_history.times) u += reset_kernel(t - tf, p);
  return u;
}

SimulationResult simulate(const InputPattern& pattern, const WeightVector& w,
                          const NeuronParams& p, double dt, bool keep_trace) {
  check_dimensions(pattern, w);
  const long n = grid_steps(pattern.duration, dt);
  const auto events = input_impulses(pattern, w, p);

  SimulationResult result;
  result.trace.dt = dt;
  if (keep_trace) result.trace.u.reserve(static_cast<std::size_t>(n) + 1);

  GridState state(p, dt);
  std::size_t next_event = 0;
  for (long k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (k > 0) state.advance();
    while (next_event < events.size() && events[next_event].time <= t) {
      state.add_input(t, events[next_event]);
      ++next_event;
    }
    double u = state.potential();
    if (u >= p.theta) {
      result.output.times.push_back(t);
      state.add_reset(t, t);
      u = state.potential();
    }
    if (keep_trace) result.trace.u.push_back(u);
  }
  return result;
}

SimulationResult simulate_reference(const InputPattern& pattern, const WeightVector& w,
                                    const NeuronParams& p, double dt, bool keep_trace) {
  check_dimensions(pattern, w);
  const long n = grid_steps(pattern.duration, dt);

  SimulationResult result;
  result.trace.dt = dt;
  if (keep_trace) result.trace.u.reserve(static_cast<std::size_t>(n) + 1);

  for (long k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) * dt;
    double u = membrane_potential(t, pattern, w, result.output, p);
    if (u >= p.theta) {
      result.output.times.push_back(t);
      u += p.reset_coefficient();
    }
    if (keep_trace) result.trace.u.push_back(u);
  }
  return result;
}

double escape_rate(double u, const NeuronParams& p) {
  if (!(p.delta_u > 0.0))
    throw std::invalid_argument("escape rate requires delta_u > 0");
  return p.rho0 * std::exp((u - p.theta) / p.delta_u);
}

std::vector<double> potential_grid(const InputPattern& pattern, const WeightVector& w,
                                   const SpikeTrain& conditioning,
                                   const NeuronParams& p, double dt) {
  check_dimensions(pattern, w);
  const long n = grid_steps(pattern.duration, dt);
  const auto events = input_impulses(pattern, w, p);

  std::vector<double> u(static_cast<std::size_t>(n) + 1);
  GridState state(p, dt);
  std::size_t next_event = 0;
  std::size_t next_reset = 0;
  for (long k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (k > 0) state.advance();
    while (next_event < events.size() && events[next_event].time <= t) {
      state.add_input(t, events[next_event]);
      ++next_event;
    }
    while (next_reset < conditioning.times.size() && conditioning.times[next_reset] <= t) {
      state.add_reset(t, conditioning.times[next_reset]);
      ++next_reset;
    }
    u[static_cast<std::size_t>(k)] = state.potential();
  }
  return u;
}

std::vector<double> intensity_trace(const InputPattern& pattern, const WeightVector& w,
                                    const SpikeTrain& conditioning,
                                    const NeuronParams& p, double dt) {
  auto rho = potential_grid(pattern, w, conditioning, p, dt);
  for (double& v : rho) v = escape_rate(v, p);
  return rho;
}

}  // namespace spikelearn
