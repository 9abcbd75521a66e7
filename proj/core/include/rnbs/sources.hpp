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

#ifndef RNBS_SOURCES_HPP_
#define RNBS_SOURCES_HPP_

#include <cstdint>

#include "rnbs/errors.hpp"

namespace rnbs {

// Photon-number law of one heralded source per experimental cycle.
//
// kSingleEmission: the source emits exactly one photon with probability p,
// otherwise nothing. kThermalSpdc: the (heralded) signal mode carries
// thermal statistics P(n) = (1 - gamma^2) gamma^(2n) with squeezing
// parameter gamma, so the occupation probability P(n >= 1) is gamma^2.
enum class SourceKind { kSingleEmission, kThermalSpdc };

struct SourceModel {
  SourceKind kind = SourceKind::kSingleEmission;
  double p = 0.0;      // emission probability (kSingleEmission)
  double gamma = 0.0;  // squeezing parameter (kThermalSpdc)

  static SourceModel single_emission(double p);
  static SourceModel thermal_spdc(double gamma);

  // P(n >= 1): p for single emission, gamma^2 for thermal.
  double occupation_probability() const;
};

// P(n >= 1) = gamma^2 for a thermal source. gamma outside [0, 1) is a
// domain error.
double prob_at_least_one(double gamma);

// P(n = 1) = (1 - gamma^2) gamma^2.
double prob_exactly_one(double gamma);

// P(n) = (1 - gamma^2) gamma^(2n). Computed by repeated multiplication of
// gamma^2 for small n so that spdc_photon_pmf(gamma, 1) equals
// prob_exactly_one(gamma) bit-for-bit.
double spdc_photon_pmf(double gamma, std::uint64_t n);

// Sampled thermal occupations are truncated at this photon number; the
// truncated geometric law is renormalized. With gamma^2 <= 0.9 the clipped
// mass is below 0.2%.
inline constexpr int kThermalOccupationCap = 16;

}  // namespace rnbs

#endif  // RNBS_SOURCES_HPP_
