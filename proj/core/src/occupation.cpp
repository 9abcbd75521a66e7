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

#include "rnbs/occupation.hpp"

#include <string>

namespace rnbs {

OutputSample make_output_sample(std::vector<int> occupations) {
  if (occupations.empty()) {
    throw InvalidDimensionError("output occupation vector must not be empty");
  }
  OutputSample s;
  s.clicks = 0;
  for (int n : occupations) {
    if (n < 0) {
      throw DomainError("occupation numbers must be nonnegative");
    }
    if (n > 0) ++s.clicks;
  }
  s.occupations = std::move(occupations);
  return s;
}

std::int64_t count_outputs(std::int64_t m_ports, std::int64_t n_total,
                           OutputMode mode) {
  if (m_ports < 1) {
    throw InvalidDimensionError("port count must be at least 1");
  }
  if (n_total < 0) {
    throw DomainError("photon number must be nonnegative");
  }
  // C(top, n_total) with top = m (collision-free) or m + n - 1 (bunching),
  // computed multiplicatively and saturated at the table cap.
  const std::int64_t top =
      (mode == OutputMode::kCollisionFree) ? m_ports : m_ports + n_total - 1;
  if (mode == OutputMode::kCollisionFree && n_total > m_ports) return 0;
  if (n_total == 0) return 1;
  double count = 1.0;
  for (std::int64_t i = 1; i <= n_total; ++i) {
    count *= static_cast<double>(top - n_total + i) / static_cast<double>(i);
    if (count > static_cast<double>(kMaxTableEntries) * 2.0) {
      return kMaxTableEntries + 1;
    }
  }
  const std::int64_t rounded =
      static_cast<std::int64_t>(count + 0.5);
  return rounded > kMaxTableEntries ? kMaxTableEntries + 1 : rounded;
}

std::vector<OutputSample> enumerate_outputs(std::int64_t m_ports,
                                            std::int64_t n_total,
                                            OutputMode mode,
                                            std::int64_t n_min) {
  if (m_ports < 1) {
    throw InvalidDimensionError("port count must be at least 1");
  }
  if (n_total < 0) {
    throw DomainError("photon number must be nonnegative");
  }
  if (mode == OutputMode::kCollisionFree && n_total > m_ports) {
    throw InfeasibleError(
        "collision-free outputs cannot place " + std::to_string(n_total) +
        " photons into " + std::to_string(m_ports) + " ports");
  }
  const std::int64_t count = count_outputs(m_ports, n_total, mode);
  if (count > kMaxTableEntries) {
    throw SizeGuardError("output table would exceed " +
                         std::to_string(kMaxTableEntries) + " entries");
  }

  std::vector<OutputSample> out;
  out.reserve(static_cast<std::size_t>(count));
  const std::size_t m = static_cast<std::size_t>(m_ports);
  const std::size_t n = static_cast<std::size_t>(n_total);

  if (n == 0) {
    OutputSample zero = make_output_sample(std::vector<int>(m, 0));
    if (mode == OutputMode::kCollisionFree || zero.clicks >= n_min) {
      out.push_back(std::move(zero));
    }
    return out;
  }

  // Walk detector-index multisets idx[0] <= ... <= idx[n-1] in ascending
  // lexicographic order (strictly ascending in collision-free mode), which
  // fixes the row order of every table and CSV.
  std::vector<std::size_t> idx(n);
  const bool strict = (mode == OutputMode::kCollisionFree);
  for (std::size_t i = 0; i < n; ++i) idx[i] = strict ? i : 0;

  for (;;) {
    std::vector<int> occ(m, 0);
    for (std::size_t i = 0; i < n; ++i) ++occ[idx[i]];
    OutputSample sample = make_output_sample(std::move(occ));
    if (mode == OutputMode::kCollisionFree || sample.clicks >= n_min) {
      out.push_back(std::move(sample));
    }

    // Successor: bump the rightmost index with headroom, reset the rest.
    std::size_t pos = n;
    while (pos-- > 0) {
      const std::size_t limit = strict ? m - (n - pos) : m - 1;
      if (idx[pos] < limit) break;
      if (pos == 0) return out;
    }
    ++idx[pos];
    for (std::size_t i = pos + 1; i < n; ++i) {
      idx[i] = strict ? idx[i - 1] + 1 : idx[pos];
    }
  }
}

}  // namespace rnbs
