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

#ifndef RNBS_OCCUPATION_HPP_
#define RNBS_OCCUPATION_HPP_

#include <cstdint>
#include <vector>

#include "rnbs/errors.hpp"

namespace rnbs {

// kCollisionFree: every detector sees at most one photon (occupations in
// {0, 1}). kBunching: arbitrary occupations, with outputs admitted only
// when at least `n_min` detectors click.
enum class OutputMode { kCollisionFree, kBunching };

// Detector occupations over all output ports; clicks counts occupied
// detectors and is derived from the vector.
struct OutputSample {
  std::vector<int> occupations;
  std::int64_t clicks = 0;
};

OutputSample make_output_sample(std::vector<int> occupations);

// Distribution tables are refused above this entry count.
inline constexpr std::int64_t kMaxTableEntries = 10'000'000;

// All admissible detector patterns for n_total photons over m ports, in
// ascending lexicographic order of the sorted detector-index multiset:
// e.g. (m=3, n=2, collision-free) -> (1,1,0), (1,0,1), (0,1,1) and
// (m=2, n=2, bunching) -> (2,0), (1,1), (0,2). In bunching mode, patterns
// with fewer than n_min clicks are filtered out; collision-free ignores
// n_min. Throws InfeasibleError when n_total > m in collision-free mode
// and SizeGuardError when the table would exceed kMaxTableEntries.
std::vector<OutputSample> enumerate_outputs(std::int64_t m_ports,
                                            std::int64_t n_total,
                                            OutputMode mode,
                                            std::int64_t n_min = 0);

// Number of patterns enumerate_outputs would emit before click filtering:
// C(m, n) collision-free, C(m + n - 1, n) bunching. Saturates at
// kMaxTableEntries + 1 instead of overflowing.
std::int64_t count_outputs(std::int64_t m_ports, std::int64_t n_total,
                           OutputMode mode);

}  // namespace rnbs

#endif  // RNBS_OCCUPATION_HPP_
