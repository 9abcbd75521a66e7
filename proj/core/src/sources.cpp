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

#include "rnbs/sources.hpp"

#include <cmath>

namespace rnbs {

namespace {

void check_gamma(double gamma) {
  if (!(gamma >= 0.0) || !(gamma < 1.0)) {
    throw DomainError("squeezing parameter must lie in [0, 1), got " +
                      std::to_string(gamma));
  }
}

}  // namespace

SourceModel SourceModel::single_emission(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidConfigError("emission probability must lie in [0, 1], got " +
                             std::to_string(p));
  }
  SourceModel m;
  m.kind = SourceKind::kSingleEmission;
  m.p = p;
  return m;
}

SourceModel SourceModel::thermal_spdc(double gamma) {
  check_gamma(gamma);
  SourceModel m;
  m.kind = SourceKind::kThermalSpdc;
  m.gamma = gamma;
  return m;
}

double SourceModel::occupation_probability() const {
  return kind == SourceKind::kSingleEmission ? p : gamma * gamma;
}

double prob_at_least_one(double gamma) {
  check_gamma(gamma);
  return gamma * gamma;
}

double prob_exactly_one(double gamma) {
  check_gamma(gamma);
  const double g2 = gamma * gamma;
  return (1.0 - g2) * g2;
}

double spdc_photon_pmf(double gamma, std::uint64_t n) {
  check_gamma(gamma);
  const double g2 = gamma * gamma;
  if (n <= 512) {
    // Same expression tree as prob_exactly_one at n = 1, so the two agree
    // bit-for-bit.
    double g2n = 1.0;
    for (std::uint64_t k = 0; k < n; ++k) g2n *= g2;
    return (1.0 - g2) * g2n;
  }
  return (1.0 - g2) * std::pow(g2, static_cast<double>(n));
}

}  // namespace rnbs
