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

#include "spikelearn/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace spikelearn {

double filtered_train_value(const SpikeTrain& train, double tau_q, double t) {
  if (!(tau_q > 0.0)) throw std::invalid_argument("filter requires tau_q > 0");
  double value = 0.0;
  for (double tf : train.times)
    if (tf <= t) value += std::exp(-(t - tf) / tau_q);
  return value;
}

namespace {

// Sum of exp(-|ta - tb| / tau_q) over all spike pairs; each pair is the
// overlap integral of two unit-amplitude filter tails, up to tau_q/2.
double pair_sum(const SpikeTrain& a, const SpikeTrain& b, double tau_q) {
  double sum = 0.0;
  for (double ta : a.times)
    for (double tb : b.times) sum += std::exp(-std::abs(ta - tb) / tau_q);
  return sum;
}

}  // namespace

double vrd(const SpikeTrain& a, const SpikeTrain& b, double tau_q) {
  if (!(tau_q > 0.0)) throw std::invalid_argument("vrd requires tau_q > 0");
  const double d = 0.5 * (pair_sum(a, a, tau_q) + pair_sum(b, b, tau_q) -
                          2.0 * pair_sum(a, b, tau_q));
  return d < 0.0 ? 0.0 : d;  // clamp the roundoff of identical trains
}

ClassificationOutcome classify(const SpikeTrain& actual, const SpikeTrain& target,
                               double precision) {
  if (!(precision > 0.0)) throw std::invalid_argument("precision must be positive");
  ClassificationOutcome outcome;
  if (actual.size() != target.size()) return outcome;
  outcome.correct = true;
  outcome.per_spike_errors.reserve(actual.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const double err = std::abs(actual.times[i] - target.times[i]);
    outcome.per_spike_errors.push_back(err);
    if (err > precision) outcome.correct = false;
  }
  return outcome;
}

double performance(const std::vector<ClassificationOutcome>& outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("performance of an empty list is undefined");
  std::size_t correct = 0;
  for (const auto& o : outcomes) correct += o.correct ? 1 : 0;
  return 100.0 * static_cast<double>(correct) / static_cast<double>(outcomes.size());
}

}  // namespace spikelearn
