// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through fwlab.h.

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fwlab/fwlab.h"

namespace {

// Config keys settable from the command line; '_' becomes '-' in the flag.
const std::vector<std::string> kValueKeys = {
    "N",     "L",        "dt",         "T",          "t_cap",     "s",
    "p",     "r",        "C",          "n_max",      "preset",    "amplitude",
    "u0",    "rho0",     "field",      "amplitudes", "deltas",    "j_max",
    "velocity", "velocity_amplitude", "forcing", "forcing_amplitude", "family_size",
    "mode",  "output",   "seed"};

const std::vector<std::string> kCommands = {"norm",      "transport",  "simulate",
                                            "iterate",   "lifespan",   "stability",
                                            "continuity", "verify",    "partition-check"};

std::string flag_name(std::string key) {
  for (auto &c : key)
    if (c == '_')
      c = '-';
  return "--" + key;
}

// "0.25,0.5" -> "[0.25,0.5]" for list-valued keys.
std::string list_value(const std::string &value) {
  if (!value.empty() && value.front() == '[')
    return value;
  return "[" + value + "]";
}

int report_error(const char *context) {
  std::fprintf(stderr, "fwlab: %s: %s\n", context, fwlab_last_error());
  return 2;
}

struct Options {
  std::string config;
  std::string out;
  bool fit_constant = false;
  bool quiet = false;
  std::map<std::string, std::string> values;
};

int run(const std::string &command, const Options &opt) {
  fwlab_config *cfg = nullptr;
  const fwlab_status loaded = opt.config.empty() ? fwlab_config_default(&cfg)
                                                 : fwlab_config_load(opt.config.c_str(), &cfg);
  if (loaded != FWLAB_OK)
    return report_error("config");

  auto set = [cfg](const std::string &key, const std::string &value) {
    return fwlab_config_set(cfg, key.c_str(), value.c_str()) == FWLAB_OK;
  };
  bool ok = set("kind", "\"" + command + "\"");
  for (const auto &[key, value] : opt.values) {
    if (!ok)
      break;
    const bool is_list = key == "amplitudes" || key == "deltas";
    const bool is_text = key == "preset" || key == "u0" || key == "rho0" || key == "field" ||
                         key == "velocity" || key == "forcing" || key == "mode" || key == "output";
    ok = set(key, is_list ? list_value(value) : is_text ? "\"" + value + "\"" : value);
    if (!ok) {
      std::fprintf(stderr, "fwlab: %s: %s\n", flag_name(key).c_str(), fwlab_last_error());
      fwlab_config_free(cfg);
      return 2;
    }
  }
  if (ok && opt.fit_constant)
    ok = set("fit_constant", "true");
  if (!ok || fwlab_config_validate(cfg) != FWLAB_OK) {
    fwlab_config_free(cfg);
    return report_error("config");
  }

  fwlab_report *report = nullptr;
  const fwlab_status status = fwlab_run(cfg, &report);
  fwlab_config_free(cfg);
  if (status != FWLAB_OK)
    return report_error(command.c_str());

  char *dir = nullptr;
  if (fwlab_report_write(report, opt.out.empty() ? nullptr : opt.out.c_str(), &dir) != FWLAB_OK) {
    fwlab_report_free(report);
    return report_error("write");
  }

  if (!opt.quiet) {
    for (std::size_t i = 0; i < fwlab_report_scalar_count(report); ++i) {
      const char *name = nullptr;
      double value = 0.0;
      fwlab_report_scalar(report, i, &name, &value);
      std::printf("%-28s %.10g\n", name, value);
    }
  }
  for (std::size_t i = 0; i < fwlab_report_verdict_count(report); ++i) {
    const char *name = nullptr;
    const char *detail = nullptr;
    int passed = 0;
    fwlab_report_verdict(report, i, &name, &passed, &detail);
    std::printf("%s %s: %s\n", passed ? "PASS" : "FAIL", name, detail);
  }
  const bool passed = fwlab_report_passed(report) != 0;
  std::printf("results in %s\n", dir);
  fwlab_string_free(dir);
  fwlab_report_free(report);
  return passed ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"fwlab: pseudo-spectral Fornberg-Whitham laboratory"};
  app.set_version_flag("--version", std::string(fwlab_version()));
  app.require_subcommand(1);

  Options opt;
  std::map<std::string, std::string> raw;
  std::vector<CLI::App *> subcommands;
  for (const auto &name : kCommands) {
    CLI::App *sub = app.add_subcommand(name, "run the " + name + " experiment");
    sub->add_option("--config", opt.config, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out, "output directory (overrides FWLAB_OUT and config)");
    sub->add_flag("--fit-constant", opt.fit_constant, "fit the transport constant");
    sub->add_flag("-q,--quiet", opt.quiet, "print verdicts only");
    for (const auto &key : kValueKeys)
      sub->add_option(flag_name(key), raw[key], "config key " + key);
    subcommands.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  for (CLI::App *sub : subcommands) {
    if (!sub->parsed())
      continue;
    for (const auto &key : kValueKeys)
      if (sub->count(flag_name(key)) > 0)
        opt.values[key] = raw[key];
    return run(sub->get_name(), opt);
  }
  return 2;
}
