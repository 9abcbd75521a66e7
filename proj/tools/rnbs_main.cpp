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

// Command-line front end. Exit codes: 0 success, 1 usage or validation
// errors, 2 guard trips and I/O failures. Data goes to stdout (or --out),
// human-readable summaries to stderr. Every random quantity is driven by an
// explicit seed; there is no wall-clock fallback.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rnbs/analytics.hpp"
#include "rnbs/errors.hpp"
#include "rnbs/experiment.hpp"
#include "rnbs/io.hpp"
#include "rnbs/parallel.hpp"
#include "rnbs/selfcheck.hpp"
#include "rnbs/unitary.hpp"

namespace {

struct RangeSpec {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// "N" or "LO..HI", both ends inclusive.
RangeSpec parse_range(const std::string& text) {
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      const std::int64_t n = std::stoll(text);
      return {n, n};
    }
    const std::int64_t lo = std::stoll(text.substr(0, sep));
    const std::int64_t hi = std::stoll(text.substr(sep + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw rnbs::InvalidArgumentError("--n must be an integer or LO..HI, got \"" +
                                     text + "\"");
  }
}

std::vector<int> parse_occupations(const std::string& text) {
  std::vector<int> occ;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(';', pos);
    const std::string token =
        text.substr(pos, next == std::string::npos ? std::string::npos
                                                   : next - pos);
    try {
      occ.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw rnbs::InvalidArgumentError(
          "--input must be semicolon-joined occupation numbers, got \"" + text +
          "\"");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return occ;
}

int cmd_gen_unitary(std::int64_t m, std::uint64_t seed,
                    const std::string& out_path) {
  rnbs::SeededRng rng(seed);
  const rnbs::UnitaryMatrix u =
      rnbs::haar_unitary(static_cast<std::size_t>(m), rng);
  rnbs::save_unitary(u, out_path);
  std::cerr << "wrote " << out_path << ": dim " << m << ", unitarity defect "
            << rnbs::format_double(rnbs::unitarity_defect(u.matrix())) << "\n";
  return 0;
}

int cmd_success_prob(const std::string& range_text, double a, double p,
                     bool csv) {
  const RangeSpec range = parse_range(range_text);
  const auto curve = rnbs::success_curve(range.lo, range.hi, a, p);
  if (csv) {
    std::cout << "n_min,success_probability\n";
    for (const auto& point : curve) {
      std::cout << point.n << ',' << rnbs::format_double(point.probability)
                << '\n';
    }
  } else {
    for (const auto& point : curve) {
      std::cout << "N = " << point.n
                << "  P = " << rnbs::format_double(point.probability) << '\n';
    }
  }
  return 0;
}

int cmd_sample(const std::string& config_path, const std::string& unitary_path,
               std::int64_t shots, const std::string& out_path, int threads) {
  const rnbs::ExperimentConfig cfg = rnbs::load_config(config_path);
  const rnbs::UnitaryMatrix u = rnbs::load_unitary(unitary_path);
  rnbs::SeededRng rng(cfg.seed);
  const auto records = rnbs::run_experiment(cfg, u, shots, rng, threads);
  rnbs::write_text_file(out_path, rnbs::sample_csv(records));

  double sum_k = 0.0, sum_n = 0.0;
  std::int64_t sum_attempts = 0;
  for (const auto& r : records) {
    sum_k += static_cast<double>(r.input.k_occupied);
    sum_n += static_cast<double>(r.input.n_total);
    sum_attempts += r.attempts;
  }
  const double predicted = rnbs::success_probability(
      cfg.n_min, cfg.a, cfg.source.occupation_probability());
  std::cerr << "shots: " << records.size() << "\n";
  if (!records.empty()) {
    const double count = static_cast<double>(records.size());
    std::cerr << "mean K: " << rnbs::format_double(sum_k / count) << "\n"
              << "mean N_tot: " << rnbs::format_double(sum_n / count) << "\n"
              << "empirical acceptance: "
              << rnbs::format_double(count /
                                     static_cast<double>(sum_attempts))
              << "  (predicted " << rnbs::format_double(predicted) << ")\n";
  }
  return 0;
}

int cmd_distribution(const std::string& config_path,
                     const std::string& unitary_path,
                     const std::string& input_text, const std::string& out_path,
                     int threads) {
  const rnbs::ExperimentConfig cfg = rnbs::load_config(config_path);
  const rnbs::UnitaryMatrix u = rnbs::load_unitary(unitary_path);
  const rnbs::InputSample input =
      rnbs::make_input_sample(parse_occupations(input_text));
  const rnbs::OutputMode mode = cfg.allow_bunching
                                    ? rnbs::OutputMode::kBunching
                                    : rnbs::OutputMode::kCollisionFree;
  const rnbs::DistributionTable table =
      rnbs::output_distribution(u, input, mode, cfg.n_min, threads);
  const std::string csv = rnbs::distribution_csv(table);
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
  } else {
    rnbs::write_text_file(out_path, csv);
  }
  std::cerr << "entries: " << table.entries.size() << ", admitted mass: "
            << rnbs::format_double(table.total_mass) << ", discarded: "
            << rnbs::format_double(table.discarded_mass) << "\n";
  return 0;
}

int cmd_verify(const std::string& level_text, int threads) {
  const rnbs::VerifyLevel level = (level_text == "full")
                                      ? rnbs::VerifyLevel::kFull
                                      : rnbs::VerifyLevel::kQuick;
  const auto results = rnbs::run_verification(level, threads);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": "
              << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  if (failed == 0) {
    std::cout << "verification passed (" << results.size() << " checks)\n";
    return 0;
  }
  std::cout << "verification FAILED (" << failed << " of " << results.size()
            << " checks)\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact desk-scale simulator for randomized boson-sampling "
               "experiments with probabilistic photon sources"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen-unitary",
                                 "Draw a Haar-random network and write it as "
                                 "JSON");
  std::int64_t gen_m = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--m", gen_m, "Port count (1..64)")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{64}));
  gen->add_option("--seed", gen_seed, "RNG seed (required; never defaulted)")
      ->required();
  gen->add_option("--out", gen_out, "Output JSON path")->required();

  auto* sp = app.add_subcommand("success-prob",
                                "Post-selection success probability over a "
                                "threshold range");
  std::string sp_range;
  double sp_a = 0.0, sp_p = 0.0;
  bool sp_csv = false;
  sp->add_option("--n", sp_range, "Threshold N or range LO..HI")->required();
  sp->add_option("--a", sp_a, "Source factor")->required();
  sp->add_option("--p", sp_p, "Per-source occupation probability")->required();
  sp->add_flag("--csv", sp_csv, "Emit CSV instead of aligned text");

  auto* sample = app.add_subcommand("sample",
                                    "Run post-selected shots and write a "
                                    "sample CSV");
  std::string sample_config, sample_unitary, sample_out;
  std::int64_t sample_shots = 0;
  int sample_threads = 0;
  sample->add_option("--config", sample_config, "Experiment config JSON")
      ->required();
  sample->add_option("--unitary", sample_unitary, "Network JSON")->required();
  sample->add_option("--shots", sample_shots, "Accepted shots to produce")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sample->add_option("--out", sample_out, "Output CSV path")->required();
  sample->add_option("--threads", sample_threads,
                     "Worker threads (0 = hardware)");

  auto* dist = app.add_subcommand("distribution",
                                  "Exact conditional output distribution of "
                                  "one input");
  std::string dist_config, dist_unitary, dist_input, dist_out;
  int dist_threads = 0;
  dist->add_option("--config", dist_config, "Experiment config JSON")
      ->required();
  dist->add_option("--unitary", dist_unitary, "Network JSON")->required();
  dist->add_option("--input", dist_input,
                   "Input occupations, semicolon-joined (e.g. 1;1;0;0)")
      ->required();
  dist->add_option("--out", dist_out, "Output CSV path (default stdout)");
  dist->add_option("--threads", dist_threads, "Worker threads (0 = hardware)");

  auto* verify = app.add_subcommand("verify", "Run the built-in consistency "
                                              "battery");
  std::string verify_level = "quick";
  int verify_threads = 0;
  verify->add_option("--level", verify_level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--threads", verify_threads,
                     "Worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) return cmd_gen_unitary(gen_m, gen_seed, gen_out);
    if (sp->parsed()) return cmd_success_prob(sp_range, sp_a, sp_p, sp_csv);
    if (sample->parsed()) {
      return cmd_sample(sample_config, sample_unitary, sample_shots,
                        sample_out, sample_threads);
    }
    if (dist->parsed()) {
      return cmd_distribution(dist_config, dist_unitary, dist_input, dist_out,
                              dist_threads);
    }
    if (verify->parsed()) return cmd_verify(verify_level, verify_threads);
  } catch (const rnbs::InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const rnbs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
