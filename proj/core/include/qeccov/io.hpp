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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qeccov/covariance.hpp"
#include "qeccov/haar.hpp"

namespace qeccov {

// ---------------------------------------------------------------------------
// JSON schemas. Matrices are {"rows":R,"cols":C,"data":[[re,im],...]} with
// the data array row-major. Channels are either explicit,
//   {"d_in":_, "d_out":_, "kraus":[Matrix,...]},
// or builtin, {"builtin":"dephasing","params":{"p":0.3}} (single_site takes
// {"name":..., "site":..., "n_qubits":..., <inner params>}). Code/noise
// pairs are {"encoding": Channel | {"isometry": Matrix}, "noise": Channel};
// U(1) pairs are {"H_L": Matrix, "H_S": Matrix}; generator sets are
// {"label":..., "generators":[Matrix,...]}.
// ---------------------------------------------------------------------------

Matrix parse_matrix(const std::string& json_text);
KrausChannel parse_channel(const std::string& json_text);
CodeNoisePair parse_pair(const std::string& json_text);
U1Spec parse_u1(const std::string& json_text);
LieAlgebraBasis parse_generators(const std::string& json_text);

std::string matrix_to_json(const Matrix& m);

// ---------------------------------------------------------------------------
// Experiment configs.
// ---------------------------------------------------------------------------

enum class Command { verify, infidelity, noncovariance, tradeoff, random_avg, haar_check };
enum class OutputFormat { json, csv };

const char* command_name(Command c);

struct SweepSpec {
  std::string parameter;        // builtin channel parameter, or "d_S"
  std::vector<double> values;   // nonempty grid
};

/// A run configuration with all file references resolved: `inputs_json` is
/// fully inline. Tolerance overrides and QECCOV_TOL_SCALE are already folded
/// into `tolerances`.
struct ExperimentConfig {
  Command command = Command::verify;
  std::string inputs_json = "{}";
  std::uint64_t seed = 0;
  long samples = 2000;
  std::optional<SweepSpec> sweep;
  std::string out_path;
  OutputFormat format = OutputFormat::json;
  Tolerances tolerances{};
  std::string config_hash;  // fnv1a-64 of the resolved config, hex
};

/// Loads and resolves a config file. String-valued input references are
/// read as file paths relative to the config's directory; `tol_scale` is
/// applied on top of any per-field tolerance overrides. Recomputes the
/// resolved hash.
ExperimentConfig load_config_file(const std::string& path, double tol_scale = 1.0);

/// Re-applies seed/samples/output overrides and refreshes the hash.
void finalize_config(ExperimentConfig& cfg);

// Typed views of the inputs object (throw config_error when absent or
// malformed).
CodeNoisePair inputs_pair(const ExperimentConfig& cfg);
KrausChannel inputs_channel(const ExperimentConfig& cfg);       // "channel" or {"isometry":...}
std::optional<Isometry> inputs_isometry(const ExperimentConfig& cfg);
U1Spec inputs_u1(const ExperimentConfig& cfg);
KrausChannel inputs_noise(const ExperimentConfig& cfg);
McQuantity inputs_quantity(const ExperimentConfig& cfg);
Index inputs_index(const ExperimentConfig& cfg, const std::string& key);  // d_L, d_A, ...
std::vector<Index> inputs_dims(const ExperimentConfig& cfg, const std::string& key,
                               std::vector<Index> fallback);

/// Rewrites one numeric field of the inputs object (dotted path into the
/// JSON, e.g. "noise.params.p") and returns the new inputs text.
std::string rewrite_input_number(const std::string& inputs_json, const std::string& path,
                                 double value);

// ---------------------------------------------------------------------------
// Deterministic emission. JSON floats are written with 17 significant
// digits (round-trip exact); CSV floats use the shortest round-trip form.
// Non-finite values become null / the usual inf/nan spellings.
// ---------------------------------------------------------------------------

std::string format_g17(double x);
std::string format_shortest(double x);

/// Minimal ordered JSON writer: keys appear exactly in insertion order, so
/// equal inputs give byte-equal output.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array(const std::string& key);
  JsonWriter& begin_object(const std::string& key);
  JsonWriter& end_array();
  JsonWriter& field(const std::string& key, double value);
  JsonWriter& field(const std::string& key, bool value);
  JsonWriter& field(const std::string& key, long value);
  JsonWriter& field(const std::string& key, const std::string& value);
  JsonWriter& element(double value);
  std::string str() const { return out_; }

 private:
  void comma();
  std::string out_;
  bool need_comma_ = false;
};

/// CSV with a fixed header; one row per call.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  std::string str() const { return out_; }

 private:
  size_t width_;
  std::string out_;
};

/// Write via a temp file in the same directory plus rename, so readers
/// never observe a partial report.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

std::uint64_t fnv1a(std::string_view bytes);
std::string fnv1a_hex(std::string_view bytes);

}  // namespace qeccov
