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

#include "rnbs/analytics.hpp"

#include <cmath>
#include <string>

#include "kahan_sum.hpp"
#include "rnbs/errors.hpp"

namespace rnbs {

namespace {

using detail::kahan_add;

constexpr double kSnapTolerance = 1e-9;
constexpr double kMaxTrials = 1e8;

// Relative-term walk shared by the sums below: t(K+1)/t(K) for
// Binomial(T, p). Exact in the sense that each step is three roundings.
inline double up_ratio(std::int64_t trials, std::int64_t k, double p,
                       double q) {
  return (static_cast<double>(trials - k) * p) /
         (static_cast<double>(k + 1) * q);
}

inline double down_ratio(std::int64_t trials, std::int64_t k, double p,
                         double q) {
  return (static_cast<double>(k) * q) /
         (static_cast<double>(trials - k + 1) * p);
}

// Log-gamma fallback for tails whose mode-relative terms underflow: the
// leading term at k_from is evaluated in log space and the remainder summed
// relative to it. Only reached for probabilities around 1e-290 and below.
double log_space_upper_tail(std::int64_t trials, std::int64_t k_from,
                            double p, double q) {
  const double lead =
      std::lgamma(static_cast<double>(trials) + 1.0) -
      std::lgamma(static_cast<double>(k_from) + 1.0) -
      std::lgamma(static_cast<double>(trials - k_from) + 1.0) +
      static_cast<double>(k_from) * std::log(p) +
      static_cast<double>(trials - k_from) * std::log1p(-p);
  double sum = 0.0, c = 0.0, t = 1.0;
  kahan_add(sum, c, t);
  for (std::int64_t k = k_from; k < trials; ++k) {
    t *= up_ratio(trials, k, p, q);
    if (t == 0.0) break;
    kahan_add(sum, c, t);
  }
  return std::exp(lead + std::log(sum));
}

}  // namespace

std::int64_t ceil_trials(double a, std::int64_t n_min) {
  if (!std::isfinite(a) || a <= 0.0) {
    throw DomainError("source factor must be a positive finite number");
  }
  if (n_min < 1) {
    throw InvalidConfigError("threshold must be at least 1, got " +
                             std::to_string(n_min));
  }
  const double x = a * static_cast<double>(n_min);
  const double nearest = std::round(x);
  const double snapped =
      (std::abs(x - nearest) <= kSnapTolerance) ? nearest : std::ceil(x);
  if (snapped > kMaxTrials) {
    throw SizeGuardError("trial count " + std::to_string(snapped) +
                         " exceeds the cap of 1e8");
  }
  return static_cast<std::int64_t>(snapped);
}

double success_probability(std::int64_t n_min, double a, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("occupation probability must lie in [0, 1], got " +
                      std::to_string(p));
  }
  const std::int64_t trials = ceil_trials(a, n_min);
  if (trials < n_min) {
    throw InvalidConfigError(
        "ceil(a * n_min) = " + std::to_string(trials) +
        " cannot reach the threshold " + std::to_string(n_min));
  }
  if (p == 1.0) return 1.0;
  if (p == 0.0) return 0.0;
  const double q = 1.0 - p;

  std::int64_t mode = static_cast<std::int64_t>(
      std::floor(p * static_cast<double>(trials + 1)));
  if (mode > trials) mode = trials;

  // Every term is taken relative to the mode term (so all lie in (0, 1]),
  // summed with compensation; the tail/total quotient removes the common
  // scale, which is why no absolute anchor is needed on this path.
  double total = 0.0, c_total = 0.0;
  {
    double t = 1.0;
    kahan_add(total, c_total, t);
    for (std::int64_t k = mode; k >= 1; --k) {
      t *= down_ratio(trials, k, p, q);
      if (t == 0.0) break;
      kahan_add(total, c_total, t);
    }
  }
  {
    double t = 1.0;
    for (std::int64_t k = mode; k < trials; ++k) {
      t *= up_ratio(trials, k, p, q);
      if (t == 0.0) break;
      kahan_add(total, c_total, t);
    }
  }

  double tail = 0.0, c_tail = 0.0;
  if (n_min <= mode) {
    double t = 1.0;
    kahan_add(tail, c_tail, t);
    for (std::int64_t k = mode; k > n_min; --k) {
      t *= down_ratio(trials, k, p, q);
      if (t == 0.0) break;
      kahan_add(tail, c_tail, t);
    }
    t = 1.0;
    for (std::int64_t k = mode; k < trials; ++k) {
      t *= up_ratio(trials, k, p, q);
      if (t == 0.0) break;
      kahan_add(tail, c_tail, t);
    }
  } else {
    double t = 1.0;
    for (std::int64_t k = mode; k < n_min; ++k) {
      t *= up_ratio(trials, k, p, q);
      if (t == 0.0) break;
    }
    if (t == 0.0) {
      // The whole tail sits below the underflow floor relative to the
      // mode; switch to absolute log-space evaluation.
      return log_space_upper_tail(trials, n_min, p, q);
    }
    kahan_add(tail, c_tail, t);
    for (std::int64_t k = n_min; k < trials; ++k) {
      t *= up_ratio(trials, k, p, q);
      if (t == 0.0) break;
      kahan_add(tail, c_tail, t);
    }
  }

  double result = tail / total;
  if (result > 1.0) result = 1.0;
  if (result < 0.0) result = 0.0;
  return result;
}

MeanStd binomial_mean_std(std::int64_t n_min, double a, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("occupation probability must lie in [0, 1], got " +
                      std::to_string(p));
  }
  const std::int64_t trials = ceil_trials(a, n_min);
  const double t = static_cast<double>(trials);
  return {t * p, std::sqrt(t) * std::sqrt(p * (1.0 - p))};
}

double min_source_factor(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw DomainError("occupation probability must lie in (0, 1], got " +
                      std::to_string(p));
  }
  return 1.0 / p;
}

std::vector<CurvePoint> success_curve(std::int64_t n_lo, std::int64_t n_hi,
                                      double a, double p) {
  if (n_lo < 1 || n_hi < n_lo) {
    throw InvalidConfigError("curve range must satisfy 1 <= n_lo <= n_hi");
  }
  std::vector<CurvePoint> curve;
  curve.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    curve.push_back({n, success_probability(n, a, p)});
  }
  return curve;
}

}  // namespace rnbs
