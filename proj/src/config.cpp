// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "fwlab/error.hpp"
#include "fwlab/harness.hpp"

namespace fwlab {

namespace {

using Json = nlohmann::ordered_json;

struct KindName {
  ExperimentKind kind;
  std::string_view name;
};

constexpr KindName kKinds[] = {
    {ExperimentKind::Norm, "norm"},
    {ExperimentKind::Transport, "transport"},
    {ExperimentKind::Simulate, "simulate"},
    {ExperimentKind::Iterate, "iterate"},
    {ExperimentKind::Lifespan, "lifespan"},
    {ExperimentKind::Stability, "stability"},
    {ExperimentKind::Continuity, "continuity"},
    {ExperimentKind::Verify, "verify"},
    {ExperimentKind::PartitionCheck, "partition-check"},
};

bool is_fw_kind(ExperimentKind kind) {
  switch (kind) {
  case ExperimentKind::Simulate:
  case ExperimentKind::Iterate:
  case ExperimentKind::Lifespan:
  case ExperimentKind::Stability:
  case ExperimentKind::Continuity:
    return true;
  default:
    return false;
  }
}

[[noreturn]] void bad_value(const std::string &key, const std::string &expected) {
  fail(ErrorCode::Parse, "config key '" + key + "' expects " + expected);
}

double as_number(const Json &v, const std::string &key) {
  if (v.is_number())
    return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "Infinity")
      return kInfinity;
  }
  bad_value(key, "a number");
}

std::size_t as_count(const Json &v, const std::string &key) {
  if (v.is_number_unsigned())
    return v.get<std::size_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0)
    return static_cast<std::size_t>(v.get<long long>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0.0 && std::floor(d) == d && d < 1e15)
      return static_cast<std::size_t>(d);
  }
  bad_value(key, "a nonnegative integer");
}

std::string as_string(const Json &v, const std::string &key) {
  if (!v.is_string())
    bad_value(key, "a string");
  return v.get<std::string>();
}

bool as_bool(const Json &v, const std::string &key) {
  if (!v.is_boolean())
    bad_value(key, "true or false");
  return v.get<bool>();
}

std::vector<double> as_list(const Json &v, const std::string &key) {
  if (v.is_number())
    return {v.get<double>()};
  if (!v.is_array())
    bad_value(key, "a list of numbers");
  std::vector<double> out;
  for (const auto &item : v)
    out.push_back(as_number(item, key));
  return out;
}

Json number_json(double v) {
  if (std::isinf(v))
    return v > 0 ? Json("inf") : Json("-inf");
  return Json(v);
}

void apply(RunConfig &cfg, const std::string &key, const Json &v) {
  if (key == "kind")
    cfg.kind = parse_kind(as_string(v, key));
  else if (key == "N")
    cfg.N = as_count(v, key);
  else if (key == "L")
    cfg.L = as_number(v, key);
  else if (key == "dt")
    cfg.dt = as_number(v, key);
  else if (key == "T")
    cfg.T = as_number(v, key);
  else if (key == "t_cap")
    cfg.t_cap = as_number(v, key);
  else if (key == "s")
    cfg.params.s = as_number(v, key);
  else if (key == "p")
    cfg.params.p = as_number(v, key);
  else if (key == "r")
    cfg.params.r = as_number(v, key);
  else if (key == "C") {
    if (v.is_string() && v.get<std::string>() == "auto")
      cfg.C.reset();
    else
      cfg.C = as_number(v, key);
  } else if (key == "n_max")
    cfg.n_max = as_count(v, key);
  else if (key == "preset")
    cfg.preset = as_string(v, key);
  else if (key == "amplitude")
    cfg.amplitude = as_number(v, key);
  else if (key == "u0")
    cfg.u0 = as_string(v, key);
  else if (key == "rho0")
    cfg.rho0 = as_string(v, key);
  else if (key == "field")
    cfg.field = as_string(v, key);
  else if (key == "amplitudes")
    cfg.amplitudes = as_list(v, key);
  else if (key == "deltas")
    cfg.deltas = as_list(v, key);
  else if (key == "j_max")
    cfg.j_max = as_count(v, key);
  else if (key == "velocity")
    cfg.velocity = as_string(v, key);
  else if (key == "velocity_amplitude")
    cfg.velocity_amplitude = as_number(v, key);
  else if (key == "forcing")
    cfg.forcing = as_string(v, key);
  else if (key == "forcing_amplitude")
    cfg.forcing_amplitude = as_number(v, key);
  else if (key == "fit_constant")
    cfg.fit_constant = as_bool(v, key);
  else if (key == "family_size")
    cfg.family_size = as_count(v, key);
  else if (key == "mode")
    cfg.mode = as_string(v, key);
  else if (key == "output")
    cfg.output = as_string(v, key);
  else if (key == "seed")
    cfg.seed = as_count(v, key);
  else
    fail(ErrorCode::Parse, "unknown config key '" + key + "'");
}

void require(bool ok, const std::string &message) {
  if (!ok)
    fail(ErrorCode::InvalidArgument, message);
}

} // namespace

std::string_view kind_name(ExperimentKind kind) {
  for (const auto &k : kKinds)
    if (k.kind == kind)
      return k.name;
  return "unknown";
}

ExperimentKind parse_kind(std::string_view name) {
  if (name == "lifespan-sweep")
    return ExperimentKind::Lifespan;
  for (const auto &k : kKinds)
    if (k.name == name)
      return k.kind;
  fail(ErrorCode::Parse, "unknown experiment kind '" + std::string(name) + "'");
}

const std::vector<std::string> &config_keys() {
  static const std::vector<std::string> keys{
      "kind",      "N",        "L",          "dt",       "T",
      "t_cap",     "s",        "p",          "r",        "C",
      "n_max",     "preset",   "amplitude",  "u0",       "rho0",
      "field",     "amplitudes", "deltas",   "j_max",    "velocity",
      "velocity_amplitude", "forcing", "forcing_amplitude", "fit_constant",
      "family_size", "mode",   "output",     "seed"};
  return keys;
}

void RunConfig::validate() const {
  require(N >= 8 && N % 2 == 0, "N must be even and at least 8");
  require(std::isfinite(L) && L > 0.0, "L must be positive");
  require(std::isfinite(dt) && dt > 0.0, "dt must be positive");
  require(std::isfinite(T) && T > 0.0, "T must be positive");
  require(std::isfinite(t_cap) && t_cap > 0.0, "t_cap must be positive");
  require(!C || (std::isfinite(*C) && *C > 0.0), "C must be positive or \"auto\"");
  require(n_max >= 1, "n_max must be at least 1");
  require(std::isfinite(amplitude), "amplitude must be finite");
  require(!amplitudes.empty(), "amplitudes must not be empty");
  for (double a : amplitudes)
    require(std::isfinite(a) && a > 0.0, "amplitudes must be positive");
  require(!deltas.empty(), "deltas must not be empty");
  for (double d : deltas)
    require(std::isfinite(d) && d != 0.0, "deltas must be finite and nonzero");
  require(j_max >= 3 && j_max <= 40, "j_max must lie in [3, 40]");
  require(std::isfinite(velocity_amplitude) && std::isfinite(forcing_amplitude),
          "velocity and forcing amplitudes must be finite");
  require(family_size >= 1, "family_size must be at least 1");
  require(mode == "direct" || mode == "scheme", "mode must be \"direct\" or \"scheme\"");
  require(preset == "sine" || preset == "gauss" || preset == "zero",
          "preset must be sine, gauss or zero");
  require(!output.empty(), "output must not be empty");
  require(!field.empty() && !velocity.empty() && !forcing.empty(),
          "field, velocity and forcing must name a preset or a CSV file");

  params.validate();
  if (is_fw_kind(kind)) {
    if (auto violation = params.wellposedness_violation())
      fail(ErrorCode::Inadmissible, "inadmissible (s, p, r): " + *violation);
  } else if (kind == ExperimentKind::Transport) {
    if (auto violation = params.transport_violation())
      fail(ErrorCode::Inadmissible, "inadmissible (s, p, r): " + *violation);
  }
}

RunConfig parse_config(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error &e) {
    fail(ErrorCode::Parse, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    fail(ErrorCode::Parse, "config must be a JSON object");
  RunConfig cfg;
  for (const auto &[key, value] : doc.items())
    apply(cfg, key, value);
  cfg.validate();
  return cfg;
}

void set_config_value(RunConfig &cfg, std::string_view key, std::string_view value) {
  Json v;
  try {
    v = Json::parse(value.begin(), value.end());
  } catch (const Json::parse_error &) {
    v = std::string(value);
  }
  apply(cfg, std::string(key), v);
}

std::string serialize_config(const RunConfig &cfg) {
  Json doc;
  doc["kind"] = std::string(kind_name(cfg.kind));
  doc["N"] = cfg.N;
  doc["L"] = cfg.L;
  doc["dt"] = cfg.dt;
  doc["T"] = cfg.T;
  doc["t_cap"] = cfg.t_cap;
  doc["s"] = number_json(cfg.params.s);
  doc["p"] = number_json(cfg.params.p);
  doc["r"] = number_json(cfg.params.r);
  doc["C"] = cfg.C ? Json(*cfg.C) : Json("auto");
  doc["n_max"] = cfg.n_max;
  doc["preset"] = cfg.preset;
  doc["amplitude"] = cfg.amplitude;
  doc["u0"] = cfg.u0;
  doc["rho0"] = cfg.rho0;
  doc["field"] = cfg.field;
  doc["amplitudes"] = cfg.amplitudes;
  doc["deltas"] = cfg.deltas;
  doc["j_max"] = cfg.j_max;
  doc["velocity"] = cfg.velocity;
  doc["velocity_amplitude"] = cfg.velocity_amplitude;
  doc["forcing"] = cfg.forcing;
  doc["forcing_amplitude"] = cfg.forcing_amplitude;
  doc["fit_constant"] = cfg.fit_constant;
  doc["family_size"] = cfg.family_size;
  doc["mode"] = cfg.mode;
  doc["output"] = cfg.output;
  doc["seed"] = cfg.seed;
  return doc.dump(2) + "\n";
}

} // namespace fwlab
