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

#ifndef RNBS_INTERFEROMETER_HPP_
#define RNBS_INTERFEROMETER_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "rnbs/complex_matrix.hpp"
#include "rnbs/input_sampling.hpp"
#include "rnbs/occupation.hpp"
#include "rnbs/rng.hpp"
#include "rnbs/unitary.hpp"

namespace rnbs {

// N_tot x N_tot scattering submatrix for the transition input -> output:
// column s of u repeated input.occupations[s] times, and of that, row d
// repeated output.occupations[d] times. Throws ConservationError if input
// and output photon totals differ, InvalidDimensionError for empty or
// ill-shaped samples.
ComplexMatrix build_submatrix(const UnitaryMatrix& u, const InputSample& input,
                              const OutputSample& output);

// |permanent(submatrix)|^2 / (prod_s n_s! * prod_d n_d!), the probability
// of observing `output` given `input` through u.
double transition_probability(const UnitaryMatrix& u, const InputSample& input,
                              const OutputSample& output, int threads = 1);

// Conditional output law of one input through u. `entries` hold every
// admissible pattern for the mode in enumeration order with probabilities
// renormalized to sum to 1; total_mass is the raw probability the input
// scatters into an admitted pattern and discarded_mass = 1 - total_mass is
// what the mode/click filter rejected. For the unfiltered bunching table
// total_mass is 1 up to rounding (probability conservation).
struct DistributionTable {
  InputSample input;
  OutputMode mode = OutputMode::kCollisionFree;
  std::vector<std::pair<OutputSample, double>> entries;
  double total_mass = 0.0;
  double discarded_mass = 0.0;
};

// Builds the full table; entry probabilities are computed independently
// (parallel across entries for threads > 1, identical values either way).
// Throws InfeasibleError when no admitted pattern carries probability,
// plus everything enumerate_outputs can throw.
DistributionTable output_distribution(const UnitaryMatrix& u,
                                      const InputSample& input,
                                      OutputMode mode, std::int64_t n_min = 0,
                                      int threads = 1);

// Inverse-CDF draw from a table; one uniform consumed per call.
std::size_t sample_output_index(const DistributionTable& table, SeededRng& rng);
OutputSample sample_output(const DistributionTable& table, SeededRng& rng);

}  // namespace rnbs

#endif  // RNBS_INTERFEROMETER_HPP_
