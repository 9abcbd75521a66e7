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

// Independent small-scale binomial tail oracle: Pascal-triangle
// coefficients (exact in binary64 up to T = 50) and direct powers. No
// shared code with the library's evaluator.

#ifndef RNBS_TESTS_SUPPORT_BINOMIAL_ORACLE_HPP_
#define RNBS_TESTS_SUPPORT_BINOMIAL_ORACLE_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rnbs::testing {

// P(K >= k_min) for K ~ Binomial(trials, p), trials <= 50.
inline double binomial_upper_tail_oracle(std::int64_t trials,
                                         std::int64_t k_min, double p) {
  if (trials < 0 || trials > 50) {
    throw std::invalid_argument("oracle supports at most 50 trials");
  }
  std::vector<double> row{1.0};  // C(0, .)
  for (std::int64_t t = 1; t <= trials; ++t) {
    std::vector<double> next(static_cast<std::size_t>(t) + 1, 1.0);
    for (std::int64_t k = 1; k < t; ++k) {
      next[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] +
          row[static_cast<std::size_t>(k)];
    }
    row = std::move(next);
  }
  double tail = 0.0;
  for (std::int64_t k = std::max<std::int64_t>(k_min, 0); k <= trials; ++k) {
    tail += row[static_cast<std::size_t>(k)] *
            std::pow(p, static_cast<double>(k)) *
            std::pow(1.0 - p, static_cast<double>(trials - k));
  }
  return tail;
}

}  // namespace rnbs::testing

#endif  // RNBS_TESTS_SUPPORT_BINOMIAL_ORACLE_HPP_
