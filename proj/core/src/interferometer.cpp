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

#include "rnbs/interferometer.hpp"

#include <algorithm>
#include <string>

#include "kahan_sum.hpp"
#include "rnbs/parallel.hpp"
#include "rnbs/permanent.hpp"

namespace rnbs {

namespace {

// Occupation counts stay inside the per-source cap, so every factorial
// here is exactly representable.
double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

double occupation_factorial_product(const std::vector<int>& occupations) {
  double prod = 1.0;
  for (int n : occupations) prod *= factorial(n);
  return prod;
}

}  // namespace

ComplexMatrix build_submatrix(const UnitaryMatrix& u, const InputSample& input,
                              const OutputSample& output) {
  const std::size_t m = u.dim();
  if (input.occupations.size() > m) {
    throw InvalidDimensionError(
        "input occupies more ports than the network has");
  }
  if (output.occupations.size() != m) {
    throw InvalidDimensionError(
        "output occupation vector length must equal the port count");
  }
  std::int64_t out_total = 0;
  for (int n : output.occupations) out_total += n;
  if (input.n_total != out_total) {
    throw ConservationError("input and output photon totals differ: " +
                            std::to_string(input.n_total) + " vs " +
                            std::to_string(out_total));
  }
  if (input.n_total < 1) {
    throw InvalidDimensionError("transition needs at least one photon");
  }

  // Column s of u repeated n_s times, then row d repeated n_d times.
  const std::size_t n = static_cast<std::size_t>(input.n_total);
  ComplexMatrix sub(n, n);
  std::vector<std::size_t> col_ports;
  col_ports.reserve(n);
  for (std::size_t s = 0; s < input.occupations.size(); ++s) {
    for (int r = 0; r < input.occupations[s]; ++r) col_ports.push_back(s);
  }
  std::size_t row = 0;
  for (std::size_t d = 0; d < m; ++d) {
    for (int r = 0; r < output.occupations[d]; ++r, ++row) {
      for (std::size_t c = 0; c < n; ++c) {
        sub(row, c) = u(d, col_ports[c]);
      }
    }
  }
  return sub;
}

double transition_probability(const UnitaryMatrix& u, const InputSample& input,
                              const OutputSample& output, int threads) {
  const ComplexMatrix sub = build_submatrix(u, input, output);
  const PermanentResult perm = permanent(sub, threads);
  const double norm = occupation_factorial_product(input.occupations) *
                      occupation_factorial_product(output.occupations);
  return abs_squared(perm.value) / norm;
}

DistributionTable output_distribution(const UnitaryMatrix& u,
                                      const InputSample& input,
                                      OutputMode mode, std::int64_t n_min,
                                      int threads) {
  const std::int64_t m = static_cast<std::int64_t>(u.dim());
  std::vector<OutputSample> outputs =
      enumerate_outputs(m, input.n_total, mode, n_min);
  if (outputs.empty()) {
    throw InfeasibleError("no admissible output pattern for this input");
  }

  // Each entry's probability is an independent computation; chunks only
  // batch entries, so values cannot depend on the thread count.
  std::vector<double> raw(outputs.size(), 0.0);
  const std::size_t chunk = 16;
  const std::size_t nchunks = (outputs.size() + chunk - 1) / chunk;
  run_blocks(nchunks, threads, [&](std::size_t b) {
    const std::size_t lo = b * chunk;
    const std::size_t hi = std::min(lo + chunk, outputs.size());
    for (std::size_t i = lo; i < hi; ++i) {
      raw[i] = transition_probability(u, input, outputs[i], 1);
    }
  });

  double total = 0.0, c = 0.0;
  for (double v : raw) detail::kahan_add(total, c, v);
  if (!(total > 0.0)) {
    throw InfeasibleError(
        "admitted output patterns carry zero probability; the mode/click "
        "filter post-selects on an impossible event");
  }

  DistributionTable table;
  table.input = input;
  table.mode = mode;
  table.entries.reserve(outputs.size());
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    table.entries.emplace_back(std::move(outputs[i]), raw[i] / total);
  }
  table.total_mass = total;
  table.discarded_mass = std::max(0.0, 1.0 - total);
  return table;
}

std::size_t sample_output_index(const DistributionTable& table,
                                SeededRng& rng) {
  if (table.entries.empty()) {
    throw InfeasibleError("cannot sample from an empty distribution table");
  }
  const double u = rng.uniform();
  double cumulative = 0.0;
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    cumulative += table.entries[i].second;
    if (u < cumulative) return i;
  }
  // Rounding can leave the final cumulative a hair under 1; the draw then
  // lands on the last entry.
  return table.entries.size() - 1;
}

OutputSample sample_output(const DistributionTable& table, SeededRng& rng) {
  return table.entries[sample_output_index(table, rng)].first;
}

}  // namespace rnbs
