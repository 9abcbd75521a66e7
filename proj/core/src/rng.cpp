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

#include "rnbs/rng.hpp"

#include <cmath>
#include <numbers>

namespace rnbs {

std::pair<double, double> SeededRng::normal_pair() {
  const double u1 = uniform();
  const double u2 = uniform();
  // 1 - u1 is in (0, 1]; log of it is finite and <= 0.
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

std::uint64_t SeededRng::derive_stream_seed(std::uint64_t master_seed,
                                            std::uint64_t stream_index) {
  // SplitMix64 finalizer over golden-ratio-spaced inputs; index 0 maps away
  // from the master seed itself.
  std::uint64_t z = master_seed + (stream_index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace rnbs
