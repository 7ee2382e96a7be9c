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

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spikelearn {

// Units used throughout the library: times in ms, potentials in mV,
// currents in nA, charge in pC, capacitance in nF, rates in 1/ms.
// Synaptic weights are dimensionless multipliers of the PSP kernel.

/// A finite sequence of spike times in ms, strictly increasing.
struct SpikeTrain {
  std::vector<double> times;

  SpikeTrain() = default;
  SpikeTrain(std::initializer_list<double> t) : times(t) {}
  explicit SpikeTrain(std::vector<double> t) : times(std::move(t)) {}

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }

  bool strictly_increasing() const {
    for (std::size_t i = 1; i < times.size(); ++i)
      if (times[i] <= times[i - 1]) return false;
    return true;
  }

  /// Throws if the train is not strictly increasing or leaves [0, duration].
  void validate(double duration) const {
    if (!strictly_increasing())
      throw std::invalid_argument("spike train must be strictly increasing");
    if (!times.empty() && (times.front() < 0.0 || times.back() > duration))
      throw std::invalid_argument("spike times must lie in [0, duration]");
  }
};

/// One spike train per presynaptic neuron plus the trial duration in ms.
struct InputPattern {
  std::vector<SpikeTrain> trains;
  double duration = 0.0;

  std::size_t n_inputs() const { return trains.size(); }

  void validate() const {
    if (trains.empty()) throw std::invalid_argument("pattern needs at least one input");
    if (duration <= 0.0) throw std::invalid_argument("pattern duration must be positive");
    for (const auto& train : trains) train.validate(duration);
  }
};

/// Per-synapse efficacies for a single postsynaptic neuron. Negative values
/// are permitted; length must match the pattern's input count.
using WeightVector = std::vector<double>;

/// Membrane potential sampled on the simulation grid (mV per grid point).
struct MembraneTrace {
  double dt = 0.0;
  std::vector<double> u;
};

}  // namespace spikelearn
