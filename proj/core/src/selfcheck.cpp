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

#include "rnbs/selfcheck.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "rnbs/analytics.hpp"
#include "rnbs/input_sampling.hpp"
#include "rnbs/interferometer.hpp"
#include "rnbs/permanent.hpp"
#include "rnbs/rng.hpp"
#include "rnbs/unitary.hpp"

namespace rnbs {

namespace {

double rel_diff(const cplx& x, const cplx& y) {
  const double scale = std::max(std::abs(y), 1e-300);
  return std::abs(x - y) / scale;
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

CheckResult run_one(const std::string& name,
                    const std::function<std::pair<bool, std::string>()>& body) {
  CheckResult r;
  r.name = name;
  try {
    auto [ok, detail] = body();
    r.passed = ok;
    r.detail = detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("threw: ") + e.what();
  }
  return r;
}

std::pair<bool, std::string> check_permanent_small(int threads) {
  SeededRng rng(20260801);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const ComplexMatrix a = ginibre_matrix(n, rng);
      const cplx oracle = permanent_naive(a);
      worst = std::max(worst, rel_diff(permanent_ryser(a, threads), oracle));
      worst = std::max(worst, rel_diff(permanent_glynn(a), oracle));
    }
  }
  return {worst <= 1e-10,
          "worst kernel disagreement vs definition: " + fmt(worst)};
}

std::pair<bool, std::string> check_permanent_cross(int threads) {
  SeededRng rng(20260802);
  double worst = 0.0;
  for (std::size_t n : {10, 12, 14}) {
    const ComplexMatrix a = ginibre_matrix(n, rng);
    worst = std::max(
        worst, rel_diff(permanent_ryser(a, threads), permanent_glynn(a)));
  }
  const ComplexMatrix b = ginibre_matrix(14, rng);
  const bool thread_stable = permanent_ryser(b, 1) == permanent_ryser(b, 4);
  return {worst <= 1e-10 && thread_stable,
          "worst cross-kernel disagreement: " + fmt(worst) +
              (thread_stable ? ", thread-count invariant"
                             : ", THREAD-COUNT DEPENDENT")};
}

std::pair<bool, std::string> check_haar_unitarity(int) {
  double worst = 0.0;
  for (std::size_t m : {1, 2, 3, 5, 8, 13, 16}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      SeededRng rng(SeededRng::derive_stream_seed(20260803, m * 10 + seed));
      const UnitaryMatrix u = haar_unitary(m, rng);
      worst = std::max(worst, unitarity_defect(u.matrix()));
    }
  }
  return {worst <= 1e-10, "worst unitarity defect: " + fmt(worst)};
}

std::pair<bool, std::string> check_haar_columns(int) {
  SeededRng rng(20260804);
  const UnitaryMatrix u = haar_unitary(8, rng);
  double worst = 0.0;
  for (std::size_t j = 0; j < 8; ++j) {
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < 8; ++i) norm_sq += abs_squared(u(i, j));
    worst = std::max(worst, std::abs(std::sqrt(norm_sq) - 1.0));
  }
  return {worst <= 1e-12, "worst column-norm deviation: " + fmt(worst)};
}

std::pair<bool, std::string> check_normalization(int threads) {
  SeededRng rng(20260805);
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const std::size_t m = 3 + static_cast<std::size_t>(rng.uniform() * 4.0);
    const UnitaryMatrix u = haar_unitary(m, rng);
    std::vector<int> occ(m, 0);
    const int photons = 2 + static_cast<int>(rng.uniform() * 2.0);
    for (int k = 0; k < photons; ++k) {
      occ[static_cast<std::size_t>(rng.uniform() * static_cast<double>(m))]++;
    }
    const InputSample input = make_input_sample(occ);
    const DistributionTable table =
        output_distribution(u, input, OutputMode::kBunching, 0, threads);
    worst = std::max(worst, std::abs(table.total_mass - 1.0));
  }
  return {worst <= 1e-9, "worst |total mass - 1|: " + fmt(worst)};
}

std::pair<bool, std::string> check_interference_dip(int threads) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix coupler(2, 2);
  coupler(0, 0) = {s, 0.0};
  coupler(0, 1) = {s, 0.0};
  coupler(1, 0) = {s, 0.0};
  coupler(1, 1) = {-s, 0.0};
  const UnitaryMatrix u{std::move(coupler)};
  const InputSample input = make_input_sample({1, 1});
  const DistributionTable table =
      output_distribution(u, input, OutputMode::kBunching, 0, threads);
  double err = 0.0;
  for (const auto& [sample, probability] : table.entries) {
    const double expected =
        (sample.occupations[0] == 1 && sample.occupations[1] == 1) ? 0.0 : 0.5;
    err = std::max(err, std::abs(probability * table.total_mass - expected));
  }
  return {err <= 1e-12,
          "two-photon coincidence suppressed; worst deviation " + fmt(err)};
}

std::pair<bool, std::string> check_acceptance_closed_forms(int) {
  const double p1 = success_probability(1, 2.0, 0.5);
  const double p2 = success_probability(2, 2.0, 0.5);
  const double p3 = success_probability(3, 1.5, 1.0);
  const double e1 = std::abs(p1 - 0.75);
  const double e2 = std::abs(p2 - 0.6875);
  const double e3 = std::abs(p3 - 1.0);
  const double worst = std::max({e1, e2, e3});
  return {worst <= 1e-12, "worst closed-form deviation: " + fmt(worst)};
}

std::pair<bool, std::string> check_acceptance_monte_carlo(int) {
  ExperimentConfig cfg;
  cfg.n_min = 2;
  cfg.a = 2.0;
  cfg.m_ports = 4;
  cfg.source = SourceModel::single_emission(0.5);
  cfg.seed = 20260806;
  SeededRng rng(cfg.seed);

  const int cycles = 20000;
  int accepted = 0;
  for (int i = 0; i < cycles; ++i) {
    const InputSample s = make_input_sample(draw_source_occupations(cfg, rng));
    if (s.k_occupied >= cfg.n_min) ++accepted;
  }
  const double rate = static_cast<double>(accepted) / cycles;
  const double predicted = success_probability(cfg.n_min, cfg.a, 0.5);
  const double sigma = std::sqrt(predicted * (1.0 - predicted) / cycles);
  const double pull = std::abs(rate - predicted) / sigma;
  return {pull <= 4.0, "empirical rate " + fmt(rate) + " vs predicted " +
                           fmt(predicted) + " (" + fmt(pull) + " sigma)"};
}

std::pair<bool, std::string> check_acceptance_limit(int) {
  const double shortfall = 1.0 - success_probability(1000, 1.15, 0.9);
  return {shortfall <= 1e-3,
          "failure probability at threshold 1000: " + fmt(shortfall)};
}

std::pair<bool, std::string> check_permanent_large_cross(int threads) {
  SeededRng rng(20260807);
  const ComplexMatrix a = ginibre_matrix(16, rng);
  const double diff = rel_diff(permanent_ryser(a, threads),
                               permanent_glynn(a));
  return {diff <= 1e-10, "order-16 cross-kernel disagreement: " + fmt(diff)};
}

std::pair<bool, std::string> check_bunching_filter(int threads) {
  SeededRng rng(20260808);
  const UnitaryMatrix u = haar_unitary(4, rng);
  const InputSample input = make_input_sample({1, 1, 1, 0});
  const DistributionTable table =
      output_distribution(u, input, OutputMode::kBunching, 3, threads);
  double entry_sum = 0.0;
  for (const auto& entry : table.entries) entry_sum += entry.second;
  const double renorm_err = std::abs(entry_sum - 1.0);
  const double mass_err =
      std::abs(table.total_mass + table.discarded_mass - 1.0);
  bool clicks_ok = true;
  for (const auto& entry : table.entries) {
    if (entry.first.clicks < 3) clicks_ok = false;
  }
  return {renorm_err <= 1e-12 && mass_err <= 1e-9 && clicks_ok,
          "renormalization error " + fmt(renorm_err) + ", mass split error " +
              fmt(mass_err)};
}

}  // namespace

std::vector<CheckResult> run_verification(VerifyLevel level, int threads) {
  std::vector<CheckResult> results;
  results.push_back(run_one("permanent-small-agreement",
                            [&] { return check_permanent_small(threads); }));
  results.push_back(run_one("permanent-cross-agreement",
                            [&] { return check_permanent_cross(threads); }));
  results.push_back(
      run_one("haar-unitarity", [&] { return check_haar_unitarity(threads); }));
  results.push_back(run_one("haar-column-norms",
                            [&] { return check_haar_columns(threads); }));
  results.push_back(run_one("distribution-normalization",
                            [&] { return check_normalization(threads); }));
  results.push_back(run_one("two-photon-interference-dip",
                            [&] { return check_interference_dip(threads); }));
  results.push_back(run_one("acceptance-closed-forms", [&] {
    return check_acceptance_closed_forms(threads);
  }));
  results.push_back(run_one("acceptance-monte-carlo", [&] {
    return check_acceptance_monte_carlo(threads);
  }));
  if (level == VerifyLevel::kFull) {
    results.push_back(run_one("acceptance-large-threshold-limit", [&] {
      return check_acceptance_limit(threads);
    }));
    results.push_back(run_one("permanent-large-cross-agreement", [&] {
      return check_permanent_large_cross(threads);
    }));
    results.push_back(run_one("bunching-click-filter", [&] {
      return check_bunching_filter(threads);
    }));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace rnbs
