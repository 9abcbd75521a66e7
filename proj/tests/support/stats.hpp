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

// Statistical helpers for goodness-of-fit tests.

#ifndef RNBS_TESTS_SUPPORT_STATS_HPP_
#define RNBS_TESTS_SUPPORT_STATS_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

namespace rnbs::testing {

// Upper tail of the chi-square distribution with df degrees of freedom.
inline double chi_square_pvalue(double statistic, double df) {
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(df / 2.0, statistic / 2.0);
}

// Pearson chi-square p-value of observed counts against expected
// probabilities. Bins with expected count below min_expected are pooled
// into one bin so that the asymptotic distribution is trustworthy.
inline double pearson_gof_pvalue(const std::vector<std::int64_t>& observed,
                                 const std::vector<double>& probabilities,
                                 double min_expected = 5.0) {
  if (observed.size() != probabilities.size()) {
    throw std::invalid_argument("observed/probabilities size mismatch");
  }
  std::int64_t total = 0;
  for (auto c : observed) total += c;
  const double n = static_cast<double>(total);

  double stat = 0.0;
  std::size_t bins = 0;
  double pooled_obs = 0.0, pooled_exp = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = n * probabilities[i];
    if (expected < min_expected) {
      pooled_obs += static_cast<double>(observed[i]);
      pooled_exp += expected;
      continue;
    }
    const double d = static_cast<double>(observed[i]) - expected;
    stat += d * d / expected;
    ++bins;
  }
  if (pooled_exp > 0.0) {
    const double d = pooled_obs - pooled_exp;
    stat += d * d / pooled_exp;
    ++bins;
  }
  if (bins < 2) return 1.0;
  return chi_square_pvalue(stat, static_cast<double>(bins - 1));
}

// Total variation distance between an empirical count vector and a
// probability vector.
inline double total_variation(const std::vector<std::int64_t>& observed,
                              const std::vector<double>& probabilities) {
  std::int64_t total = 0;
  for (auto c : observed) total += c;
  double tv = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double empirical =
        static_cast<double>(observed[i]) / static_cast<double>(total);
    tv += std::abs(empirical - probabilities[i]);
  }
  return 0.5 * tv;
}

}  // namespace rnbs::testing

#endif  // RNBS_TESTS_SUPPORT_STATS_HPP_
