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

#ifndef RNBS_ANALYTICS_HPP_
#define RNBS_ANALYTICS_HPP_

#include <cstdint>
#include <vector>

namespace rnbs {

// Number of sources for threshold n_min and source factor a: ceil(a * n_min),
// with a snap guard: if a * n_min lands within 1e-9 of an integer it is
// taken to *be* that integer before the ceiling. Without the snap,
// 2.2 * 500 = 1100.0000000000002 in binary64 and the ceiling silently adds a
// source. Requires a > 0 and finite; the result is capped at 1e8 trials.
std::int64_t ceil_trials(double a, std::int64_t n_min);

// Probability that at least n_min of ceil(a * n_min) independent sources
// with occupation probability p fire in one cycle: the binomial upper tail
// sum_{K = n_min}^{T} C(T, K) p^K (1-p)^(T-K) with T = ceil(a * n_min).
//
// Terms are evaluated relative to the distribution's mode by the exact
// ratio recurrence and summed with compensation (all terms positive, no
// cancellation); the tail is divided by the full sum over K = 0..T, which
// is exactly 1, so the common scale drops out. Tails whose relative terms
// underflow fall back to a log-gamma log-sum-exp evaluation. Relative
// accuracy is ~1e-13 for T up to 1e4.
//
// Throws DomainError for p outside [0, 1], InvalidConfigError for
// n_min < 1 or ceil(a * n_min) < n_min.
double success_probability(std::int64_t n_min, double a, double p);

struct MeanStd {
  double mean;
  double std;
};

// Mean ceil(a * n_min) * p and standard deviation
// sqrt(ceil(a * n_min)) * sqrt(p (1 - p)) of the number of firing sources.
MeanStd binomial_mean_std(std::int64_t n_min, double a, double p);

// Smallest source factor with a nonvanishing asymptotic success
// probability: 1 / p. p outside (0, 1] is a domain error.
double min_source_factor(double p);

struct CurvePoint {
  std::int64_t n;
  double probability;
};

// success_probability evaluated over n = n_lo .. n_hi inclusive.
std::vector<CurvePoint> success_curve(std::int64_t n_lo, std::int64_t n_hi,
                                      double a, double p);

}  // namespace rnbs

#endif  // RNBS_ANALYTICS_HPP_
