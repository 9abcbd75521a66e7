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

#ifndef RNBS_IO_HPP_
#define RNBS_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rnbs/experiment.hpp"
#include "rnbs/input_sampling.hpp"
#include "rnbs/interferometer.hpp"
#include "rnbs/unitary.hpp"

namespace rnbs {

// Shortest decimal form that round-trips a binary64 exactly (17 significant
// digits via %.17g); locale-independent. All numeric output goes through
// this, so byte-identical runs imply bit-identical numbers.
std::string format_double(double v);

// Unitary files: {"dim": M, "re": [[...]], "im": [[...]]}, row-major.
// Writing is deterministic; parsing rejects unknown fields, shape
// mismatches, and matrices whose unitarity defect exceeds the tolerance
// (UnitarityError, defect included in the message).
std::string unitary_to_json(const UnitaryMatrix& u);
void save_unitary(const UnitaryMatrix& u, const std::string& path);
UnitaryMatrix parse_unitary(const std::string& json_text);
UnitaryMatrix load_unitary(const std::string& path);

// Config files:
//   {"n_min": N, "a": A, "m_ports": M,
//    "source": {"kind": "single"|"thermal", "p"|"gamma": X},
//    "allow_bunching": B, "seed": S}
// Unknown fields anywhere are rejected (typos must not pass silently); the
// seed is mandatory, never defaulted from the clock; the file route
// enforces a > 1 strictly.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

// CSV forms. Occupation vectors are semicolon-joined ("1;0;2"); rows use
// LF line endings; fields never need quoting.
std::string occupations_joined(const std::vector<int>& occupations);
std::string sample_csv_header();
std::string sample_csv_row(std::int64_t shot, const SampleRecord& record);
std::string sample_csv(const std::vector<SampleRecord>& records);

// Distribution CSV: header, one row per entry in table order, and a
// trailing "normalization" row carrying the raw admitted mass.
std::string distribution_csv(const DistributionTable& table);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rnbs

#endif  // RNBS_IO_HPP_
