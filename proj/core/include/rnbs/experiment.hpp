// Copyright 2026 The rnbs-sim Authors
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

#ifndef RNBS_EXPERIMENT_HPP_
#define RNBS_EXPERIMENT_HPP_

#include <cstdint>
#include <vector>

#include "rnbs/input_sampling.hpp"
#include "rnbs/interferometer.hpp"

namespace rnbs {

// One accepted shot. probability is the raw transition probability of
// (input -> output) through the network, not the table-renormalized value.
struct SampleRecord {
  InputSample input;
  OutputSample output;
  double probability = 0.0;
  std::int64_t attempts = 0;
};

// Runs `shots` post-selected cycles: draw an input (rejection on the click
// threshold), build the conditional output table for the config's mode
// (collision-free unless allow_bunching; the click filter applies in
// bunching mode), draw one output. All randomness comes from `rng` in
// shot order on a single stream, so a seed fixes the whole record vector.
// Throws InvalidConfigError if u.dim() != config.m_ports and
// InfeasibleError if collision-free mode cannot hold the largest possible
// photon number (source_count * per-source cap > m_ports).
std::vector<SampleRecord> run_experiment(const ExperimentConfig& config,
                                         const UnitaryMatrix& u,
                                         std::int64_t shots, SeededRng& rng,
                                         int threads = 1);

}  // namespace rnbs

#endif  // RNBS_EXPERIMENT_HPP_
