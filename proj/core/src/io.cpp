/*
   Copyright 2026 The qeccov Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qeccov/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qeccov {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(what + ": " + e.what());
  }
}

const json& get_field(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.is_object()) throw config_error(ctx + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw config_error(ctx + ": missing field '" + key + "'");
  return *it;
}

Index get_index(const json& j, const std::string& key, const std::string& ctx) {
  const json& f = get_field(j, key, ctx);
  if (!f.is_number_integer() || f.get<long>() <= 0)
    throw config_error(ctx + ": field '" + key + "' must be a positive integer");
  return static_cast<Index>(f.get<long>());
}

Matrix matrix_from_json(const json& j, const std::string& ctx) {
  const Index rows = get_index(j, "rows", ctx);
  const Index cols = get_index(j, "cols", ctx);
  const json& data = get_field(j, "data", ctx);
  if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols) {
    std::ostringstream os;
    os << ctx << ": 'data' must hold " << rows * cols << " [re,im] pairs";
    throw config_error(os.str());
  }
  Matrix m(rows, cols);
  for (Index k = 0; k < rows * cols; ++k) {
    const json& cell = data[static_cast<size_t>(k)];
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
      std::ostringstream os;
      os << ctx << ": data[" << k << "] must be a [re,im] number pair";
      throw config_error(os.str());
    }
    m(k / cols, k % cols) = Complex(cell[0].get<double>(), cell[1].get<double>());
  }
  if (!all_finite(m)) throw config_error(ctx + ": matrix entries must be finite");
  return m;
}

KrausChannel channel_from_json(const json& j, const std::string& ctx) {
  if (!j.is_object()) throw config_error(ctx + ": expected a channel object");
  if (j.contains("builtin")) {
    const std::string name = get_field(j, "builtin", ctx).get<std::string>();
    std::map<std::string, double> params;
    std::string inner_name;
    int site = -1, n_qubits = -1;
    if (j.contains("params")) {
      const json& p = j.at("params");
      if (!p.is_object()) throw config_error(ctx + ": 'params' must be an object");
      for (auto it = p.begin(); it != p.end(); ++it) {
        if (it.key() == "name") {
          inner_name = it.value().get<std::string>();
        } else if (name == "single_site" && it.key() == "site") {
          site = it.value().get<int>();
        } else if (name == "single_site" && it.key() == "n_qubits") {
          n_qubits = it.value().get<int>();
        } else if (it.value().is_number()) {
          params[it.key()] = it.value().get<double>();
        } else {
          throw config_error(ctx + ": parameter '" + it.key() + "' must be a number");
        }
      }
    }
    if (name == "single_site") {
      if (inner_name.empty() || site < 0 || n_qubits < 0)
        throw config_error(ctx + ": single_site needs 'name', 'site' and 'n_qubits'");
      return single_site_channel(inner_name, params, site, n_qubits);
    }
    return builtin_channel(name, params);
  }
  const Index d_in = get_index(j, "d_in", ctx);
  const Index d_out = get_index(j, "d_out", ctx);
  const json& kraus = get_field(j, "kraus", ctx);
  if (!kraus.is_array() || kraus.empty())
    throw config_error(ctx + ": 'kraus' must be a nonempty array of matrices");
  std::vector<Matrix> ops;
  ops.reserve(kraus.size());
  for (size_t i = 0; i < kraus.size(); ++i) {
    std::ostringstream os;
    os << ctx << ".kraus[" << i << "]";
    ops.push_back(matrix_from_json(kraus[i], os.str()));
  }
  return KrausChannel(d_in, d_out, std::move(ops));
}

KrausChannel encoding_from_json(const json& j, const std::string& ctx) {
  if (j.is_object() && j.contains("isometry"))
    return Isometry(matrix_from_json(j.at("isometry"), ctx + ".isometry")).channel();
  return channel_from_json(j, ctx);
}

U1Spec u1_from_json(const json& j, const std::string& ctx) {
  return U1Spec(HermitianOperator(matrix_from_json(get_field(j, "H_L", ctx), ctx + ".H_L")),
                HermitianOperator(matrix_from_json(get_field(j, "H_S", ctx), ctx + ".H_S")));
}

}  // namespace

Matrix parse_matrix(const std::string& json_text) {
  return matrix_from_json(parse_json_text(json_text, "matrix"), "matrix");
}

KrausChannel parse_channel(const std::string& json_text) {
  return channel_from_json(parse_json_text(json_text, "channel"), "channel");
}

CodeNoisePair parse_pair(const std::string& json_text) {
  const json j = parse_json_text(json_text, "pair");
  return CodeNoisePair(encoding_from_json(get_field(j, "encoding", "pair"), "pair.encoding"),
                       channel_from_json(get_field(j, "noise", "pair"), "pair.noise"));
}

U1Spec parse_u1(const std::string& json_text) {
  return u1_from_json(parse_json_text(json_text, "u1"), "u1");
}

LieAlgebraBasis parse_generators(const std::string& json_text) {
  const json j = parse_json_text(json_text, "generators");
  const std::string label = get_field(j, "label", "generators").get<std::string>();
  const json& gens = get_field(j, "generators", "generators");
  if (!gens.is_array() || gens.empty())
    throw config_error("generators: 'generators' must be a nonempty array");
  std::vector<HermitianOperator> ops;
  ops.reserve(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    std::ostringstream os;
    os << "generators[" << i << "]";
    ops.emplace_back(matrix_from_json(gens[i], os.str()));
  }
  return LieAlgebraBasis(label, std::move(ops));
}

std::string matrix_to_json(const Matrix& m) {
  std::string out = "{\"rows\":" + std::to_string(m.rows()) +
                    ",\"cols\":" + std::to_string(m.cols()) + ",\"data\":[";
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (i != 0 || j != 0) out += ',';
      out += '[' + format_g17(m(i, j).real()) + ',' + format_g17(m(i, j).imag()) + ']';
    }
  out += "]}";
  return out;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::verify: return "verify";
    case Command::infidelity: return "infidelity";
    case Command::noncovariance: return "noncovariance";
    case Command::tradeoff: return "tradeoff";
    case Command::random_avg: return "random-avg";
    case Command::haar_check: return "haar-check";
  }
  return "?";
}

namespace {

Command command_from_name(const std::string& name) {
  for (Command c : {Command::verify, Command::infidelity, Command::noncovariance,
                    Command::tradeoff, Command::random_avg, Command::haar_check})
    if (name == command_name(c)) return c;
  throw config_error("unknown command '" + name + "'");
}

void apply_tolerance_override(Tolerances& t, const std::string& key, const json& value,
                              const std::string& ctx) {
  auto num = [&]() {
    if (!value.is_number()) throw config_error(ctx + ": tolerance '" + key + "' must be a number");
    return value.get<double>();
  };
  if (key == "herm") t.herm = num();
  else if (key == "trace_one") t.trace_one = num();
  else if (key == "psd_clamp") t.psd_clamp = num();
  else if (key == "pure_norm") t.pure_norm = num();
  else if (key == "completeness") t.completeness = num();
  else if (key == "isometry") t.isometry = num();
  else if (key == "choi_marginal") t.choi_marginal = num();
  else if (key == "basis_orthonormal") t.basis_orthonormal = num();
  else if (key == "kraus_cutoff") t.kraus_cutoff = num();
  else if (key == "kl_default") t.kl_default = num();
  else if (key == "hks_default") t.hks_default = num();
  else if (key == "covariance_default") t.covariance_default = num();
  else if (key == "radicand_floor") t.radicand_floor = num();
  else if (key == "eigenvalue_match") t.eigenvalue_match = num();
  else if (key == "chain_slack") t.chain_slack = num();
  else if (key == "complementary_cap") t.complementary_cap = static_cast<long>(num());
  else throw config_error(ctx + ": unknown tolerance '" + key + "'");
}

std::string canonical_config_string(const ExperimentConfig& cfg) {
  // nlohmann objects iterate in sorted key order, so dump() is canonical.
  const json inputs = parse_json_text(cfg.inputs_json, "inputs");
  std::ostringstream os;
  os << command_name(cfg.command) << '\n'
     << inputs.dump() << '\n'
     << cfg.seed << ' ' << cfg.samples << ' ' << static_cast<int>(cfg.format) << '\n';
  if (cfg.sweep) {
    os << cfg.sweep->parameter;
    for (double v : cfg.sweep->values) os << ' ' << format_g17(v);
    os << '\n';
  }
  const Tolerances& t = cfg.tolerances;
  for (double v : {t.herm, t.trace_one, t.psd_clamp, t.pure_norm, t.completeness, t.isometry,
                   t.choi_marginal, t.basis_orthonormal, t.kraus_cutoff, t.kl_default,
                   t.hks_default, t.covariance_default, t.radicand_floor, t.eigenvalue_match,
                   t.chain_slack})
    os << format_g17(v) << ' ';
  os << t.complementary_cap;
  return os.str();
}

}  // namespace

void finalize_config(ExperimentConfig& cfg) {
  cfg.config_hash = fnv1a_hex(canonical_config_string(cfg));
}

ExperimentConfig load_config_file(const std::string& path, double tol_scale) {
  const std::string text = read_file(path);
  const json j = parse_json_text(text, "config " + path);
  if (!j.is_object()) throw config_error("config " + path + ": top level must be an object");

  ExperimentConfig cfg;
  cfg.command = command_from_name(get_field(j, "command", "config").get<std::string>());

  json inputs = j.contains("inputs") ? j.at("inputs") : json::object();
  if (!inputs.is_object()) throw config_error("config: 'inputs' must be an object");
  const fs::path base = fs::path(path).parent_path();
  for (auto it = inputs.begin(); it != inputs.end(); ++it) {
    if (it.value().is_string()) {
      const fs::path ref = base / it.value().get<std::string>();
      if (!fs::exists(ref))
        throw config_error("config: input file '" + ref.string() + "' does not exist");
      it.value() = parse_json_text(read_file(ref.string()), "input file " + ref.string());
    }
  }
  cfg.inputs_json = inputs.dump();

  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("samples")) {
    cfg.samples = j.at("samples").get<long>();
    if (cfg.samples < 1) throw config_error("config: 'samples' must be >= 1");
  }

  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    SweepSpec spec;
    spec.parameter = get_field(s, "parameter", "config.sweep").get<std::string>();
    const json& values = get_field(s, "values", "config.sweep");
    if (!values.is_array() || values.empty())
      throw config_error("config.sweep: 'values' must be a nonempty grid");
    for (const json& v : values) {
      if (!v.is_number()) throw config_error("config.sweep: grid values must be scalars");
      spec.values.push_back(v.get<double>());
    }
    cfg.sweep = std::move(spec);
  }

  if (j.contains("output")) {
    const json& o = j.at("output");
    if (o.contains("path")) cfg.out_path = o.at("path").get<std::string>();
    if (o.contains("format")) {
      const std::string f = o.at("format").get<std::string>();
      if (f == "json") cfg.format = OutputFormat::json;
      else if (f == "csv") cfg.format = OutputFormat::csv;
      else throw config_error("config.output: format must be 'json' or 'csv'");
    }
  }

  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    if (!t.is_object()) throw config_error("config: 'tolerances' must be an object");
    for (auto it = t.begin(); it != t.end(); ++it)
      apply_tolerance_override(cfg.tolerances, it.key(), it.value(), "config.tolerances");
  }
  cfg.tolerances = cfg.tolerances.scaled(tol_scale);

  finalize_config(cfg);
  return cfg;
}

namespace {

json inputs_object(const ExperimentConfig& cfg) {
  return parse_json_text(cfg.inputs_json, "inputs");
}

}  // namespace

CodeNoisePair inputs_pair(const ExperimentConfig& cfg) {
  const json j = inputs_object(cfg);
  const json& p = get_field(j, "pair", "inputs");
  return CodeNoisePair(encoding_from_json(get_field(p, "encoding", "inputs.pair"),
                                          "inputs.pair.encoding"),
                       channel_from_json(get_field(p, "noise", "inputs.pair"),
                                         "inputs.pair.noise"));
}

KrausChannel inputs_channel(const ExperimentConfig& cfg) {
  const json j = inputs_object(cfg);
  return encoding_from_json(get_field(j, "channel", "inputs"), "inputs.channel");
}

std::optional<Isometry> inputs_isometry(const ExperimentConfig& cfg) {
  const json j = inputs_object(cfg);
  if (j.contains("isometry"))
    return Isometry(matrix_from_json(j.at("isometry"), "inputs.isometry"));
  if (j.contains("channel") && j.at("channel").is_object() &&
      j.at("channel").contains("isometry"))
    return Isometry(matrix_from_json(j.at("channel").at("isometry"),
                                     "inputs.channel.isometry"));
  return std::nullopt;
}

U1Spec inputs_u1(const ExperimentConfig& cfg) {
  const json j = inputs_object(cfg);
  return u1_from_json(get_field(j, "u1", "inputs"), "inputs.u1");
}

KrausChannel inputs_noise(const ExperimentConfig& cfg) {
  const json j = inputs_object(cfg);
  return channel_from_json(get_field(j, "noise", "inputs"), "inputs.noise");
}

McQuantity inputs_quantity(const ExperimentConfig& cfg) {
  const json j = inputs_object(cfg);
  const std::string q = get_field(j, "quantity", "inputs").get<std::string>();
  if (q == "infidelity_sq") return McQuantity::infidelity_sq;
  if (q == "noncovariance") return McQuantity::noncovariance;
  throw config_error("inputs: quantity must be 'infidelity_sq' or 'noncovariance'");
}

Index inputs_index(const ExperimentConfig& cfg, const std::string& key) {
  return get_index(inputs_object(cfg), key, "inputs");
}

std::vector<Index> inputs_dims(const ExperimentConfig& cfg, const std::string& key,
                               std::vector<Index> fallback) {
  const json j = inputs_object(cfg);
  if (!j.contains(key)) return fallback;
  const json& a = j.at(key);
  if (!a.is_array() || a.empty())
    throw config_error("inputs: '" + key + "' must be a nonempty array of integers");
  std::vector<Index> dims;
  for (const json& v : a) {
    if (!v.is_number_integer() || v.get<long>() < 1)
      throw config_error("inputs: '" + key + "' entries must be positive integers");
    dims.push_back(static_cast<Index>(v.get<long>()));
  }
  return dims;
}

std::string rewrite_input_number(const std::string& inputs_json, const std::string& path,
                                 double value) {
  json j = parse_json_text(inputs_json, "inputs");
  json* node = &j;
  size_t begin = 0;
  while (true) {
    const size_t dot = path.find('.', begin);
    const std::string key = path.substr(begin, dot == std::string::npos ? dot : dot - begin);
    if (!node->is_object() || !node->contains(key))
      throw config_error("sweep: inputs have no field at '" + path + "'");
    node = &node->at(key);
    if (dot == std::string::npos) break;
    begin = dot + 1;
  }
  if (!node->is_number()) throw config_error("sweep: '" + path + "' is not a scalar parameter");
  *node = value;
  return j.dump();
}

std::string format_g17(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string format_shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

void JsonWriter::comma() {
  if (need_comma_) out_ += ',';
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ += '{';
  need_comma_ = false;
  return *this;
}

JsonWriter& JsonWriter::begin_object(const std::string& key) {
  comma();
  out_ += '"' + json_escape(key) + "\":{";
  need_comma_ = false;
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& key) {
  comma();
  out_ += '"' + json_escape(key) + "\":[";
  need_comma_ = false;
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, double value) {
  comma();
  out_ += '"' + json_escape(key) + "\":";
  out_ += std::isfinite(value) ? format_g17(value) : "null";
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, bool value) {
  comma();
  out_ += '"' + json_escape(key) + "\":";
  out_ += value ? "true" : "false";
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, long value) {
  comma();
  out_ += '"' + json_escape(key) + "\":" + std::to_string(value);
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const std::string& value) {
  comma();
  out_ += '"' + json_escape(key) + "\":\"" + json_escape(value) + '"';
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::element(double value) {
  comma();
  out_ += std::isfinite(value) ? format_g17(value) : "null";
  need_comma_ = true;
  return *this;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out_ += ',';
    out_ += header[i];
  }
  out_ += '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_)
    throw dimension_error("CsvWriter: row width does not match the header");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += cells[i];
  }
  out_ += '\n';
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw config_error("short write to '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a_hex(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(bytes)));
  return std::string(buf);
}

}  // namespace qeccov
