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

#include "rnbs/input_sampling.hpp"

#include <string>

#include "rnbs/analytics.hpp"
#include "rnbs/errors.hpp"

namespace rnbs {

namespace {

constexpr double kMinAcceptanceProbability = 1e-9;

// Inverse-CDF draw from the geometric photon-number law truncated at
// kThermalOccupationCap and renormalized; one uniform consumed.
int draw_thermal_occupation(double gamma, SeededRng& rng) {
  const double g2 = gamma * gamma;
  if (g2 == 0.0) return 0;
  // Truncated mass: sum_{n=0}^{cap} (1-g2) g2^n = 1 - g2^(cap+1).
  double g2_pow = 1.0;
  for (int k = 0; k <= kThermalOccupationCap; ++k) g2_pow *= g2;
  const double target = rng.uniform() * (1.0 - g2_pow);

  double cumulative = 0.0;
  double term = 1.0 - g2;
  for (int n = 0; n < kThermalOccupationCap; ++n) {
    cumulative += term;
    if (target < cumulative) return n;
    term *= g2;
  }
  return kThermalOccupationCap;
}

}  // namespace

std::int64_t ExperimentConfig::source_count() const {
  return ceil_trials(a, n_min);
}

void ExperimentConfig::validate() const {
  if (n_min < 1) {
    throw InvalidConfigError("n_min must be at least 1, got " +
                             std::to_string(n_min));
  }
  if (!(a >= 1.0)) {
    throw InvalidConfigError("source factor a must be at least 1, got " +
                             std::to_string(a));
  }
  if (m_ports < 1) {
    throw InvalidConfigError("m_ports must be at least 1, got " +
                             std::to_string(m_ports));
  }
  std::int64_t sources = 0;
  try {
    sources = source_count();
  } catch (const Error& e) {
    throw InvalidConfigError(std::string("invalid source count: ") + e.what());
  }
  if (sources < n_min) {
    throw InvalidConfigError("source count " + std::to_string(sources) +
                             " is below the threshold " +
                             std::to_string(n_min));
  }
  if (sources > m_ports) {
    throw InvalidConfigError("source count " + std::to_string(sources) +
                             " exceeds the port count " +
                             std::to_string(m_ports));
  }
  switch (source.kind) {
    case SourceKind::kSingleEmission:
      if (!(source.p >= 0.0 && source.p <= 1.0)) {
        throw InvalidConfigError("emission probability must lie in [0, 1]");
      }
      break;
    case SourceKind::kThermalSpdc:
      if (!(source.gamma >= 0.0) || !(source.gamma < 1.0)) {
        throw InvalidConfigError("squeezing parameter must lie in [0, 1)");
      }
      break;
  }
}

InputSample make_input_sample(std::vector<int> occupations) {
  if (occupations.empty()) {
    throw InvalidDimensionError("input occupation vector must not be empty");
  }
  InputSample s;
  s.k_occupied = 0;
  s.n_total = 0;
  for (int n : occupations) {
    if (n < 0) {
      throw DomainError("occupation numbers must be nonnegative");
    }
    if (n > 0) ++s.k_occupied;
    s.n_total += n;
  }
  s.occupations = std::move(occupations);
  return s;
}

std::vector<int> draw_source_occupations(const ExperimentConfig& config,
                                         SeededRng& rng) {
  const std::int64_t sources = config.source_count();
  std::vector<int> occ(static_cast<std::size_t>(sources), 0);
  if (config.source.kind == SourceKind::kSingleEmission) {
    for (auto& n : occ) n = (rng.uniform() < config.source.p) ? 1 : 0;
  } else {
    for (auto& n : occ) n = draw_thermal_occupation(config.source.gamma, rng);
  }
  return occ;
}

InputDraw sample_input(const ExperimentConfig& config, SeededRng& rng) {
  config.validate();
  const double acceptance = success_probability(
      config.n_min, config.a, config.source.occupation_probability());
  if (acceptance < kMinAcceptanceProbability) {
    throw CannotPostselectError(
        "analytic acceptance probability " + std::to_string(acceptance) +
        " is below 1e-9; the rejection loop would not terminate in practice");
  }
  for (std::int64_t attempts = 1;; ++attempts) {
    InputSample sample = make_input_sample(draw_source_occupations(config, rng));
    if (sample.k_occupied >= config.n_min) {
      return {std::move(sample), attempts};
    }
  }
}

}  // namespace rnbs
