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

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rnbs {

using nlohmann::json;

namespace {

// Rejects keys outside `allowed` so config typos cannot pass silently.
void require_keys(const json& obj, const std::vector<std::string>& allowed,
                  const std::string& where) {
  if (!obj.is_object()) {
    throw InvalidConfigError(where + " must be a JSON object");
  }
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const auto& key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw InvalidConfigError("unknown field \"" + item.key() + "\" in " +
                               where);
    }
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) {
      throw InvalidConfigError("missing field \"" + key + "\" in " + where);
    }
  }
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError("cannot parse " + what + ": " + e.what());
  }
}

std::int64_t get_count(const json& obj, const std::string& key,
                       const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw InvalidConfigError("field \"" + key + "\" in " + where +
                             " must be an integer");
  }
  return v.get<std::int64_t>();
}

double get_number(const json& obj, const std::string& key,
                  const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw InvalidConfigError("field \"" + key + "\" in " + where +
                             " must be a number");
  }
  return v.get<double>();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string unitary_to_json(const UnitaryMatrix& u) {
  const std::size_t m = u.dim();
  std::ostringstream out;
  out << "{\n  \"dim\": " << m << ",\n";
  for (int part = 0; part < 2; ++part) {
    out << "  \"" << (part == 0 ? "re" : "im") << "\": [\n";
    for (std::size_t r = 0; r < m; ++r) {
      out << "    [";
      for (std::size_t c = 0; c < m; ++c) {
        const cplx& z = u(r, c);
        out << format_double(part == 0 ? z.real() : z.imag());
        if (c + 1 < m) out << ", ";
      }
      out << (r + 1 < m ? "],\n" : "]\n");
    }
    out << (part == 0 ? "  ],\n" : "  ]\n");
  }
  out << "}\n";
  return out.str();
}

void save_unitary(const UnitaryMatrix& u, const std::string& path) {
  write_text_file(path, unitary_to_json(u));
}

UnitaryMatrix parse_unitary(const std::string& json_text) {
  const json j = parse_json(json_text, "unitary file");
  require_keys(j, {"dim", "re", "im"}, "unitary file");
  const std::int64_t dim = get_count(j, "dim", "unitary file");
  if (dim < 1) {
    throw InvalidConfigError("unitary dim must be at least 1");
  }
  const std::size_t m = static_cast<std::size_t>(dim);

  ComplexMatrix mat(m, m);
  for (int part = 0; part < 2; ++part) {
    const char* name = part == 0 ? "re" : "im";
    const json& rows = j.at(name);
    if (!rows.is_array() || rows.size() != m) {
      throw InvalidConfigError(std::string("unitary \"") + name +
                               "\" must be a dim x dim array");
    }
    for (std::size_t r = 0; r < m; ++r) {
      const json& row = rows[r];
      if (!row.is_array() || row.size() != m) {
        throw InvalidConfigError(std::string("unitary \"") + name +
                                 "\" must be a dim x dim array");
      }
      for (std::size_t c = 0; c < m; ++c) {
        if (!row[c].is_number()) {
          throw InvalidConfigError("unitary entries must be numbers");
        }
        const double v = row[c].get<double>();
        if (part == 0) {
          mat(r, c) = cplx{v, mat(r, c).imag()};
        } else {
          mat(r, c) = cplx{mat(r, c).real(), v};
        }
      }
    }
  }
  return UnitaryMatrix(std::move(mat));  // validates unitarity
}

UnitaryMatrix load_unitary(const std::string& path) {
  return parse_unitary(read_text_file(path));
}

ExperimentConfig parse_config(const std::string& json_text) {
  const json j = parse_json(json_text, "config file");
  require_keys(j, {"n_min", "a", "m_ports", "source", "allow_bunching", "seed"},
               "config file");

  ExperimentConfig cfg;
  cfg.n_min = get_count(j, "n_min", "config file");
  cfg.a = get_number(j, "a", "config file");
  cfg.m_ports = get_count(j, "m_ports", "config file");

  if (!j.at("allow_bunching").is_boolean()) {
    throw InvalidConfigError("field \"allow_bunching\" must be a boolean");
  }
  cfg.allow_bunching = j.at("allow_bunching").get<bool>();

  const json& seed = j.at("seed");
  if (!(seed.is_number_unsigned() ||
        (seed.is_number_integer() && seed.get<std::int64_t>() >= 0))) {
    throw InvalidConfigError("field \"seed\" must be a nonnegative integer");
  }
  cfg.seed = seed.get<std::uint64_t>();

  const json& src = j.at("source");
  if (!src.is_object() || !src.contains("kind") ||
      !src.at("kind").is_string()) {
    throw InvalidConfigError("field \"source\" must be an object with a "
                             "\"kind\" string");
  }
  const std::string kind = src.at("kind").get<std::string>();
  if (kind == "single") {
    require_keys(src, {"kind", "p"}, "source");
    cfg.source = SourceModel::single_emission(get_number(src, "p", "source"));
  } else if (kind == "thermal") {
    require_keys(src, {"kind", "gamma"}, "source");
    cfg.source = SourceModel::thermal_spdc(get_number(src, "gamma", "source"));
  } else {
    throw InvalidConfigError("source kind must be \"single\" or \"thermal\", "
                             "got \"" + kind + "\"");
  }

  // The file route is strict about the source factor; library callers may
  // sit on the a = 1 boundary, configs from disk may not.
  if (!(cfg.a > 1.0)) {
    throw InvalidConfigError("source factor a must exceed 1, got " +
                             std::to_string(cfg.a));
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  return parse_config(read_text_file(path));
}

std::string occupations_joined(const std::vector<int>& occupations) {
  std::string out;
  for (std::size_t i = 0; i < occupations.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(occupations[i]);
  }
  return out;
}

std::string sample_csv_header() {
  return "shot,attempts,K,N_tot,input_occupations,output_occupations,"
         "probability";
}

std::string sample_csv_row(std::int64_t shot, const SampleRecord& record) {
  std::string out = std::to_string(shot);
  out += ',';
  out += std::to_string(record.attempts);
  out += ',';
  out += std::to_string(record.input.k_occupied);
  out += ',';
  out += std::to_string(record.input.n_total);
  out += ',';
  out += occupations_joined(record.input.occupations);
  out += ',';
  out += occupations_joined(record.output.occupations);
  out += ',';
  out += format_double(record.probability);
  return out;
}

std::string sample_csv(const std::vector<SampleRecord>& records) {
  std::string out = sample_csv_header();
  out += '\n';
  for (std::size_t i = 0; i < records.size(); ++i) {
    out += sample_csv_row(static_cast<std::int64_t>(i), records[i]);
    out += '\n';
  }
  return out;
}

std::string distribution_csv(const DistributionTable& table) {
  std::string out = "output_occupations,probability\n";
  for (const auto& [sample, probability] : table.entries) {
    out += occupations_joined(sample.occupations);
    out += ',';
    out += format_double(probability);
    out += '\n';
  }
  out += "normalization,";
  out += format_double(table.total_mass);
  out += '\n';
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open \"" + path + "\" for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failure on \"" + path + "\"");
  }
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open \"" + path + "\" for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("write failure on \"" + path + "\"");
  }
}

}  // namespace rnbs
