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

#ifndef RNBS_RNG_HPP_
#define RNBS_RNG_HPP_

#include <cstdint>
#include <random>
#include <utility>

namespace rnbs {

// Deterministic random stream shared by every stochastic routine in the
// library. Reproducibility contract:
//
//   * The engine is std::mt19937_64, whose 64-bit output sequence for a given
//     seed is fixed by the C++ standard on every conforming platform (the
//     standard pins the 10000th draw of a default-constructed engine at
//     9981545732273789042; the test suite asserts it).
//   * uniform() consumes exactly one engine draw and keeps the top 53 bits:
//     (x >> 11) * 2^-53, giving a double in [0, 1).
//   * normal_pair() consumes exactly two uniform() draws u1, u2 and applies
//     the basic Box-Muller form with r = sqrt(-2 ln(1 - u1)) and
//     theta = 2 pi u2; the cosine branch is returned first. No rejection, no
//     caching, so draw positions are a pure function of call counts.
//   * Complex matrix fills consume entries in row-major order, real part
//     before imaginary part (one normal_pair() per entry).
//
// Anything sampled with the same seed therefore reproduces bit-for-bit,
// including across thread counts (parallel code never shares a stream; see
// derive_stream_seed).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution; one engine draw.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Two independent standard normals via basic-form Box-Muller; two engine
  // draws. 1 - u1 lies in (0, 1], so the log argument is never zero.
  std::pair<double, double> normal_pair();

  // Seed for the stream_index-th logical substream of master_seed, via a
  // SplitMix64 finalizer. Distinct indices give statistically independent
  // streams without consuming draws from the master stream.
  static std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                          std::uint64_t stream_index);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace rnbs

#endif  // RNBS_RNG_HPP_
