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

#include <vector>

#include "spikelearn/kernels.hpp"
#include "spikelearn/types.hpp"

namespace spikelearn {

/// Membrane potential at time t, mV: weighted PSP sum over the input pattern
/// plus the reset sum over the given output history. A history spike at
/// exactly t contributes the full reset coefficient.
double membrane_potential(double t, const InputPattern& pattern,
                          const WeightVector& w, const SpikeTrain& output_history,
                          const NeuronParams& p);

struct SimulationResult {
  SpikeTrain output;
  MembraneTrace trace;  // empty when keep_trace is false
};

/// Deterministic threshold simulation on a fixed grid of step dt (dt must
/// divide the pattern duration). A spike is recorded at the first grid point
/// whose potential reaches threshold; its reset acts from that instant on.
/// The trace stores the potential of the final recorded train, i.e. the
/// post-reset value at spike steps.
///
/// State is carried by exponential accumulators, so the cost per step is
/// constant; simulate_reference below evaluates the kernel sums directly and
/// is kept as the slow reference the tests and the benchmark compare against.
SimulationResult simulate(const InputPattern& pattern, const WeightVector& w,
                          const NeuronParams& p, double dt, bool keep_trace = true);

/// Reference implementation of simulate: per-step closed-form evaluation of
/// the full kernel sums, O(steps * spikes). Must produce identical spikes.
SimulationResult simulate_reference(const InputPattern& pattern, const WeightVector& w,
                                    const NeuronParams& p, double dt,
                                    bool keep_trace = true);

/// Instantaneous stochastic firing rate, 1/ms, for a membrane potential u.
/// Requires delta_u > 0; the deterministic limit is the job of simulate().
double escape_rate(double u, const NeuronParams& p);

/// Membrane potential sampled on the grid, conditioned on a fixed output
/// history (the reset terms come from `conditioning`, with a spike at a grid
/// point taking effect at that point).
std::vector<double> potential_grid(const InputPattern& pattern, const WeightVector& w,
                                   const SpikeTrain& conditioning,
                                   const NeuronParams& p, double dt);

/// Escape rate sampled on the grid for the conditioned potential.
std::vector<double> intensity_trace(const InputPattern& pattern, const WeightVector& w,
                                    const SpikeTrain& conditioning,
                                    const NeuronParams& p, double dt);

/// Number of grid steps for a duration (grid has n+1 points including both
/// endpoints). Throws unless dt divides the duration to 1e-9.
long grid_steps(double duration, double dt);

}  // namespace spikelearn
