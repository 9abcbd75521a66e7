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

#ifndef RNBS_INPUT_SAMPLING_HPP_
#define RNBS_INPUT_SAMPLING_HPP_

#include <cstdint>
#include <vector>

#include "rnbs/rng.hpp"
#include "rnbs/sources.hpp"

namespace rnbs {

// One experiment: ceil(a * n_min) sources feed the first ports of an
// m_ports-mode interferometer; a run is accepted when at least n_min
// sources fire.
struct ExperimentConfig {
  std::int64_t n_min = 1;     // post-selection threshold N
  double a = 1.0;             // source factor
  std::int64_t m_ports = 1;   // interferometer modes M
  SourceModel source;
  bool allow_bunching = false;
  std::uint64_t seed = 0;

  std::int64_t source_count() const;  // ceil(a * n_min)

  // Throws InvalidConfigError unless n_min >= 1, a >= 1,
  // n_min <= source_count() <= m_ports, and the source model is valid.
  // (File-loaded configs additionally require a > 1; see io.)
  void validate() const;
};

// Input occupations over the source ports. k_occupied (number of firing
// sources) and n_total (total photon number) are derived from the
// occupation vector, never stored independently.
struct InputSample {
  std::vector<int> occupations;
  std::int64_t k_occupied = 0;
  std::int64_t n_total = 0;
};

InputSample make_input_sample(std::vector<int> occupations);

// One un-postselected draw of all source occupations, in port order, one
// uniform per source. Exposed so acceptance-rate statistics can be measured
// without the rejection loop.
std::vector<int> draw_source_occupations(const ExperimentConfig& config,
                                         SeededRng& rng);

struct InputDraw {
  InputSample sample;
  std::int64_t attempts;  // cycles consumed, accepted draw included
};

// Draws source occupations until at least n_min sources fire, counting
// attempts. Before drawing, the analytic acceptance probability is
// checked; below 1e-9 the call refuses with CannotPostselectError instead
// of looping effectively forever.
InputDraw sample_input(const ExperimentConfig& config, SeededRng& rng);

}  // namespace rnbs

#endif  // RNBS_INPUT_SAMPLING_HPP_
