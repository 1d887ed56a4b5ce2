// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef FWLAB_HARNESS_HPP
#define FWLAB_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fwlab/besov.hpp"
#include "fwlab/spectral.hpp"

namespace fwlab {

enum class ExperimentKind {
  Norm,
  Transport,
  Simulate,
  Iterate,
  Lifespan,
  Stability,
  Continuity,
  Verify,
  PartitionCheck,
};

std::string_view kind_name(ExperimentKind kind);
/// Accepts the canonical names plus "lifespan-sweep".
ExperimentKind parse_kind(std::string_view name);

/// Flat run configuration. Every field maps to one config key and one CLI
/// flag of the same name (underscores become dashes on the command line).
struct RunConfig {
  ExperimentKind kind = ExperimentKind::Simulate;
  std::size_t N = 256;
  double L = 8.0;
  double dt = 0.01;
  double T = 1.0;
  double t_cap = 4.0;
  BesovParams params;
  std::optional<double> C; // empty: fitted from a random transport family
  std::size_t n_max = 10;
  std::string preset = "sine";
  double amplitude = 0.1;
  std::string u0;   // CSV path overriding the preset when non-empty
  std::string rho0; // CSV path overriding the preset when non-empty
  std::string field = "sine";
  std::vector<double> amplitudes{0.25, 0.5, 1.0, 2.0};
  std::vector<double> deltas{1e-2, 1e-3, 1e-4};
  std::size_t j_max = 4;
  std::string velocity = "constant";
  double velocity_amplitude = 1.0;
  std::string forcing = "zero";
  double forcing_amplitude = 1.0;
  bool fit_constant = false;
  std::size_t family_size = 10;
  std::string mode = "direct";
  std::string output = "fwlab_out";
  std::uint64_t seed = 20240601;

  /// Range checks plus the admissibility condition the kind requires.
  void validate() const;
  bool operator==(const RunConfig &) const = default;
};

/// Keys accepted by parse_config, in serialization order.
const std::vector<std::string> &config_keys();

/// Parses a JSON object. Unknown keys, wrong types and inadmissible Besov
/// indices raise Error(Parse) or Error(Inadmissible).
RunConfig parse_config(std::string_view text);
/// Applies one "key = value" override; value is parsed as JSON, falling
/// back to a bare string.
void set_config_value(RunConfig &cfg, std::string_view key, std::string_view value);
/// Complete JSON document with every key; parse_config inverts it.
std::string serialize_config(const RunConfig &cfg);

struct Table {
  std::string name; // file stem
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct Verdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentReport {
  RunConfig config;
  std::string version;
  double wall_seconds = 0.0;
  std::vector<Table> tables;
  std::vector<std::pair<std::string, double>> scalars;
  std::vector<Verdict> verdicts;

  bool passed() const;
  const Table *table(std::string_view name) const;
  std::optional<double> scalar(std::string_view name) const;
};

std::string_view library_version();

/// Runs the configured experiment. Downstream errors are rethrown with the
/// experiment name prefixed.
ExperimentReport run_experiment(const RunConfig &cfg);

/// Human-readable summary: version, wall time, config echo, scalars, verdicts.
std::string summary_text(const ExperimentReport &report);

/// Writes <table>.csv for every table, summary.csv (name,value),
/// config.json and summary.txt. Only summary.txt carries the wall time.
void write_report(const ExperimentReport &report, const std::filesystem::path &dir);

/// CSV text of a table, numbers printed with 17 significant digits.
std::string table_csv(const Table &table);

void emit_field_csv(const GridFunction &f, const std::filesystem::path &path);
/// Requires header "x,value" and exactly N rows whose x column equals the
/// grid nodes in order (to 1e-9 relative to the period).
GridFunction read_field_csv(const std::filesystem::path &path, const GridPtr &grid);

/// Rows xi, chi, phi_q0, ..., phi_q<q_max> in ascending xi.
Table mask_table(const LPPartition &part);

} // namespace fwlab

#endif // FWLAB_HARNESS_HPP
