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

#include "rnbs/io.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <doctest.h>

#include "rnbs/errors.hpp"
#include "rnbs/rng.hpp"
#include "temp_dir.hpp"

using namespace rnbs;

namespace {

std::string valid_config_json() {
  return R"({
    "n_min": 2,
    "a": 1.5,
    "m_ports": 8,
    "source": {"kind": "single", "p": 0.9},
    "allow_bunching": false,
    "seed": 42
  })";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("format_double round-trips binary64 exactly") {
  for (double v : {0.0, 1.0, -1.0, 0.1, 1.0 / 3.0, 6.5230537654151366e-24,
                   0.99884499969796506, 1e300, -2.2250738585072014e-308}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("unitary JSON round-trips bitwise") {
  SeededRng rng(2718);
  const UnitaryMatrix u = haar_unitary(5, rng);
  const UnitaryMatrix back = parse_unitary(unitary_to_json(u));
  CHECK(back.matrix() == u.matrix());
}

TEST_CASE("unitary save and load through a file") {
  SeededRng rng(999);
  const UnitaryMatrix u = haar_unitary(4, rng);
  testing::TempDir dir;
  const std::string path = dir.file("u.json");
  save_unitary(u, path);
  const UnitaryMatrix back = load_unitary(path);
  CHECK(back.matrix() == u.matrix());
}

TEST_CASE("writing a unitary twice is byte-identical") {
  SeededRng rng(31415);
  const UnitaryMatrix u = haar_unitary(6, rng);
  CHECK(unitary_to_json(u) == unitary_to_json(u));
}

TEST_CASE("tampered unitary entries fail the unitarity gate") {
  SeededRng rng(161803);
  const UnitaryMatrix u = haar_unitary(3, rng);
  std::string text = unitary_to_json(u);
  const std::string needle = format_double(u(0, 0).real());
  const std::size_t pos = text.find(needle);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, needle.size(), "0.5");
  try {
    parse_unitary(text);
    FAIL("tampered matrix must be rejected");
  } catch (const UnitarityError& e) {
    // The defect magnitude is part of the message.
    CHECK(std::string(e.what()).find("defect") != std::string::npos);
  }
}

TEST_CASE("unitary parser rejects malformed input") {
  CHECK_THROWS_AS(parse_unitary("not json at all"), IoError);
  CHECK_THROWS_AS(parse_unitary(R"({"dim": 1})"), InvalidConfigError);
  CHECK_THROWS_AS(
      parse_unitary(
          R"({"dim": 1, "re": [[1.0]], "im": [[0.0]], "extra": 1})"),
      InvalidConfigError);
  CHECK_THROWS_AS(parse_unitary(R"({"dim": 2, "re": [[1.0]], "im": [[0.0]]})"),
                  InvalidConfigError);
  CHECK_THROWS_AS(
      parse_unitary(R"({"dim": 1, "re": [["x"]], "im": [[0.0]]})"),
      InvalidConfigError);
  CHECK_THROWS_AS(parse_unitary(R"({"dim": 0, "re": [], "im": []})"),
                  InvalidConfigError);
}

TEST_CASE("config parsing accepts the documented shape") {
  const ExperimentConfig cfg = parse_config(valid_config_json());
  CHECK(cfg.n_min == 2);
  CHECK(cfg.a == 1.5);
  CHECK(cfg.m_ports == 8);
  CHECK(cfg.source.kind == SourceKind::kSingleEmission);
  CHECK(cfg.source.p == 0.9);
  CHECK(cfg.allow_bunching == false);
  CHECK(cfg.seed == 42);

  const ExperimentConfig thermal = parse_config(R"({
    "n_min": 1, "a": 1.2, "m_ports": 4,
    "source": {"kind": "thermal", "gamma": 0.5},
    "allow_bunching": true, "seed": 7
  })");
  CHECK(thermal.source.kind == SourceKind::kThermalSpdc);
  CHECK(thermal.source.gamma == 0.5);
  CHECK(thermal.allow_bunching == true);
}

TEST_CASE("config parsing rejects every malformed variant") {
  CHECK_THROWS_AS(parse_config("{"), IoError);

  // Missing field.
  CHECK_THROWS_AS(parse_config(R"({
    "n_min": 2, "a": 1.5, "m_ports": 8,
    "source": {"kind": "single", "p": 0.9},
    "allow_bunching": false
  })"),
                  InvalidConfigError);

  // Unknown top-level field.
  CHECK_THROWS_AS(parse_config(R"({
    "n_min": 2, "a": 1.5, "m_ports": 8,
    "source": {"kind": "single", "p": 0.9},
    "allow_bunching": false, "seed": 1, "typo": 1
  })"),
                  InvalidConfigError);

  // Unknown field inside source.
  CHECK_THROWS_AS(parse_config(R"({
    "n_min": 2, "a": 1.5, "m_ports": 8,
    "source": {"kind": "single", "p": 0.9, "gamma": 0.5},
    "allow_bunching": false, "seed": 1
  })"),
                  InvalidConfigError);

  // Wrong types.
  CHECK_THROWS_AS(parse_config(R"({
    "n_min": "two", "a": 1.5, "m_ports": 8,
    "source": {"kind": "single", "p": 0.9},
    "allow_bunching": false, "seed": 1
  })"),
                  InvalidConfigError);
  CHECK_THROWS_AS(parse_config(R"({
    "n_min": 2, "a": 1.5, "m_ports": 8,
    "source": {"kind": "single", "p": 0.9},
    "allow_bunching": "no", "seed": 1
  })"),
                  InvalidConfigError);
  CHECK_THROWS_AS(parse_config(R"({
    "n_min": 2, "a": 1.5, "m_ports": 8,
    "source": {"kind": "single", "p": 0.9},
    "allow_bunching": false, "seed": -1
  })"),
                  InvalidConfigError);

  // Bad source kind.
  CHECK_THROWS_AS(parse_config(R"({
    "n_min": 2, "a": 1.5, "m_ports": 8,
    "source": {"kind": "laser", "p": 0.9},
    "allow_bunching": false, "seed": 1
  })"),
                  InvalidConfigError);

  // Out-of-range parameters.
  CHECK_THROWS_AS(parse_config(R"({
    "n_min": 2, "a": 1.5, "m_ports": 8,
    "source": {"kind": "single", "p": 1.5},
    "allow_bunching": false, "seed": 1
  })"),
                  InvalidConfigError);
  CHECK_THROWS_AS(parse_config(R"({
    "n_min": 2, "a": 1.5, "m_ports": 8,
    "source": {"kind": "thermal", "gamma": 1.0},
    "allow_bunching": false, "seed": 1
  })"),
                  DomainError);

  // The file route requires a strictly above 1.
  CHECK_THROWS_AS(parse_config(R"({
    "n_min": 2, "a": 1.0, "m_ports": 8,
    "source": {"kind": "single", "p": 0.9},
    "allow_bunching": false, "seed": 1
  })"),
                  InvalidConfigError);

  // Sources exceeding ports (validate applies to file configs too).
  CHECK_THROWS_AS(parse_config(R"({
    "n_min": 4, "a": 1.5, "m_ports": 2,
    "source": {"kind": "single", "p": 0.9},
    "allow_bunching": false, "seed": 1
  })"),
                  InvalidConfigError);
}

TEST_CASE("occupation joining") {
  CHECK(occupations_joined({1, 0, 2}) == "1;0;2");
  CHECK(occupations_joined({7}) == "7");
  CHECK(occupations_joined({}) == "");
}

TEST_CASE("sample CSV layout") {
  CHECK(sample_csv_header() ==
        "shot,attempts,K,N_tot,input_occupations,output_occupations,"
        "probability");

  SampleRecord record;
  record.input = make_input_sample({1, 0, 1});
  record.output = make_output_sample({0, 1, 1});
  record.probability = 0.25;
  record.attempts = 3;
  CHECK(sample_csv_row(7, record) == "7,3,2,2,1;0;1,0;1;1,0.25");

  const std::string csv = sample_csv({record});
  CHECK(csv == sample_csv_header() + "\n" + sample_csv_row(0, record) + "\n");
}

TEST_CASE("distribution CSV carries the normalization row") {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2, 2);
  m(0, 0) = cplx(r, 0.0);
  m(0, 1) = cplx(r, 0.0);
  m(1, 0) = cplx(r, 0.0);
  m(1, 1) = cplx(-r, 0.0);
  const UnitaryMatrix bs{m};
  const DistributionTable table = output_distribution(
      bs, make_input_sample({1, 1}), OutputMode::kBunching);
  const std::string csv = distribution_csv(table);

  CHECK(csv.rfind("output_occupations,probability\n", 0) == 0);
  CHECK(csv.find("2;0,0.5\n") != std::string::npos);
  CHECK(csv.find("0;2,0.5\n") != std::string::npos);
  CHECK(csv.find("normalization,") != std::string::npos);
  CHECK(csv.back() == '\n');
}

TEST_CASE("text file round-trip and error paths") {
  testing::TempDir dir;
  const std::string path = dir.file("t.txt");
  write_text_file(path, "line1\nline2\n");
  CHECK(read_text_file(path) == "line1\nline2\n");
  CHECK_THROWS_AS(read_text_file(dir.file("missing.txt")), IoError);
  CHECK_THROWS_AS(write_text_file(dir.path() + "/no/such/dir/f.txt", "x"),
                  IoError);
}

}  // TEST_SUITE
