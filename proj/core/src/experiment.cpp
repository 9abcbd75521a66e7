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

#include "rnbs/experiment.hpp"

#include <string>

namespace rnbs {

std::vector<SampleRecord> run_experiment(const ExperimentConfig& config,
                                         const UnitaryMatrix& u,
                                         std::int64_t shots, SeededRng& rng,
                                         int threads) {
  config.validate();
  if (shots < 0) {
    throw InvalidConfigError("shot count must be nonnegative");
  }
  if (static_cast<std::int64_t>(u.dim()) != config.m_ports) {
    throw InvalidConfigError(
        "network has " + std::to_string(u.dim()) + " ports but the config "
        "expects " + std::to_string(config.m_ports));
  }
  if (!config.allow_bunching) {
    // Collision-free detection must be able to hold the worst-case photon
    // number, or some accepted input would have no admissible output.
    const std::int64_t per_source =
        config.source.kind == SourceKind::kSingleEmission
            ? 1
            : kThermalOccupationCap;
    if (config.source_count() * per_source > config.m_ports) {
      throw InfeasibleError(
          "collision-free detection cannot hold up to " +
          std::to_string(config.source_count() * per_source) +
          " photons in " + std::to_string(config.m_ports) + " ports");
    }
  }

  const OutputMode mode = config.allow_bunching ? OutputMode::kBunching
                                                : OutputMode::kCollisionFree;
  std::vector<SampleRecord> records;
  records.reserve(static_cast<std::size_t>(shots));
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    InputDraw draw = sample_input(config, rng);
    DistributionTable table = output_distribution(
        u, draw.sample, mode, config.n_min, threads);
    const std::size_t idx = sample_output_index(table, rng);

    SampleRecord record;
    record.input = std::move(draw.sample);
    record.output = table.entries[idx].first;
    // Raw transition probability, not the table-renormalized one.
    record.probability = table.entries[idx].second * table.total_mass;
    record.attempts = draw.attempts;
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace rnbs
