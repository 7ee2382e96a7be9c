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

#include "spikelearn/types.hpp"

namespace spikelearn {

/// Exponentially filtered spike train at time t, dimensionless. The filter
/// has unit amplitude (no 1/tau_q prefactor), which calibrates the distance
/// below so that one unmatched spike contributes exactly 0.5.
double filtered_train_value(const SpikeTrain& train, double tau_q, double t);

/// van-Rossum-style distance between two spike trains: the normalized
/// squared-difference integral of their unit-amplitude filtered versions,
/// evaluated in closed form over spike pairs. Symmetric, >= 0, zero iff the
/// trains are identical; saturates at 1 for two single spikes far apart.
double vrd(const SpikeTrain& a, const SpikeTrain& b, double tau_q);

struct ClassificationOutcome {
  bool correct = false;
  // |actual - target| per spike, filled only when the counts match.
  std::vector<double> per_spike_errors;
};

/// Correct iff the spike counts match and, pairing in sorted order, every
/// actual spike falls within `precision` ms of its target.
ClassificationOutcome classify(const SpikeTrain& actual, const SpikeTrain& target,
                               double precision);

/// Fraction of correct outcomes as a percentage. Rejects an empty list.
double performance(const std::vector<ClassificationOutcome>& outcomes);

}  // namespace spikelearn
