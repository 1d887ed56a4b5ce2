// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "fwlab/fwlab.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "fwlab/besov.hpp"
#include "fwlab/error.hpp"
#include "fwlab/fw_system.hpp"
#include "fwlab/harness.hpp"

struct fwlab_config {
  fwlab::RunConfig cfg;
};

struct fwlab_report {
  fwlab::ExperimentReport report;
};

struct fwlab_field {
  fwlab::GridFunction f;
};

namespace {

thread_local std::string last_error;

fwlab_status set_error(fwlab_status status, const char *what) {
  last_error = what;
  return status;
}

template <class Fn> fwlab_status guarded(Fn &&fn) {
  try {
    fn();
    last_error.clear();
    return FWLAB_OK;
  } catch (const fwlab::Error &e) {
    return set_error(static_cast<fwlab_status>(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return set_error(FWLAB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return set_error(FWLAB_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(FWLAB_ERR_INTERNAL, "unknown error");
  }
}

void require_arg(bool ok, const char *what) {
  if (!ok)
    fwlab::fail(fwlab::ErrorCode::InvalidArgument, what);
}

char *copy_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

} // namespace

extern "C" {

const char *fwlab_version(void) { return fwlab::library_version().data(); }

const char *fwlab_status_name(fwlab_status status) {
  switch (status) {
  case FWLAB_OK:
    return "ok";
  case FWLAB_ERR_INVALID_ARGUMENT:
    return "invalid argument";
  case FWLAB_ERR_INADMISSIBLE:
    return "inadmissible parameters";
  case FWLAB_ERR_PRECONDITION:
    return "precondition violated";
  case FWLAB_ERR_NUMERICAL:
    return "numerical failure";
  case FWLAB_ERR_IO:
    return "i/o error";
  case FWLAB_ERR_PARSE:
    return "parse error";
  case FWLAB_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

const char *fwlab_last_error(void) { return last_error.c_str(); }

void fwlab_string_free(char *s) { std::free(s); }

fwlab_status fwlab_config_default(fwlab_config **out) {
  return guarded([&] {
    require_arg(out, "out is null");
    *out = new fwlab_config{};
  });
}

fwlab_status fwlab_config_parse(const char *json_text, fwlab_config **out) {
  return guarded([&] {
    require_arg(json_text && out, "null argument");
    *out = new fwlab_config{fwlab::parse_config(json_text)};
  });
}

fwlab_status fwlab_config_load(const char *path, fwlab_config **out) {
  return guarded([&] {
    require_arg(path && out, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in)
      fwlab::fail(fwlab::ErrorCode::Io, std::string("cannot open config ") + path);
    std::ostringstream text;
    text << in.rdbuf();
    try {
      *out = new fwlab_config{fwlab::parse_config(text.str())};
    } catch (const fwlab::Error &e) {
      fwlab::fail(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

fwlab_status fwlab_config_set(fwlab_config *cfg, const char *key, const char *value) {
  return guarded([&] {
    require_arg(cfg && key && value, "null argument");
    fwlab::set_config_value(cfg->cfg, key, value);
  });
}

fwlab_status fwlab_config_validate(const fwlab_config *cfg) {
  return guarded([&] {
    require_arg(cfg, "config is null");
    cfg->cfg.validate();
  });
}

fwlab_status fwlab_config_to_string(const fwlab_config *cfg, char **out) {
  return guarded([&] {
    require_arg(cfg && out, "null argument");
    *out = copy_string(fwlab::serialize_config(cfg->cfg));
  });
}

void fwlab_config_free(fwlab_config *cfg) { delete cfg; }

fwlab_status fwlab_run(const fwlab_config *cfg, fwlab_report **out) {
  return guarded([&] {
    require_arg(cfg && out, "null argument");
    *out = new fwlab_report{fwlab::run_experiment(cfg->cfg)};
  });
}

fwlab_status fwlab_report_write(const fwlab_report *report, const char *dir, char **written_dir) {
  return guarded([&] {
    require_arg(report, "report is null");
    std::string target;
    if (dir && *dir)
      target = dir;
    else if (const char *env = std::getenv("FWLAB_OUT"); env && *env)
      target = env;
    else
      target = report->report.config.output;
    fwlab::write_report(report->report, target);
    if (written_dir)
      *written_dir = copy_string(target);
  });
}

int fwlab_report_passed(const fwlab_report *report) {
  return report && report->report.passed() ? 1 : 0;
}

fwlab_status fwlab_report_summary(const fwlab_report *report, char **out) {
  return guarded([&] {
    require_arg(report && out, "null argument");
    *out = copy_string(fwlab::summary_text(report->report));
  });
}

size_t fwlab_report_scalar_count(const fwlab_report *report) {
  return report ? report->report.scalars.size() : 0;
}

fwlab_status fwlab_report_scalar(const fwlab_report *report, size_t index, const char **name,
                                 double *value) {
  return guarded([&] {
    require_arg(report && name && value, "null argument");
    require_arg(index < report->report.scalars.size(), "scalar index out of range");
    *name = report->report.scalars[index].first.c_str();
    *value = report->report.scalars[index].second;
  });
}

size_t fwlab_report_verdict_count(const fwlab_report *report) {
  return report ? report->report.verdicts.size() : 0;
}

fwlab_status fwlab_report_verdict(const fwlab_report *report, size_t index, const char **name,
                                  int *passed, const char **detail) {
  return guarded([&] {
    require_arg(report && name && passed, "null argument");
    require_arg(index < report->report.verdicts.size(), "verdict index out of range");
    const auto &v = report->report.verdicts[index];
    *name = v.name.c_str();
    *passed = v.passed ? 1 : 0;
    if (detail)
      *detail = v.detail.c_str();
  });
}

void fwlab_report_free(fwlab_report *report) { delete report; }

fwlab_status fwlab_field_from_samples(const double *samples, size_t n, double L,
                                      fwlab_field **out) {
  return guarded([&] {
    require_arg(samples && out, "null argument");
    auto grid = fwlab::Grid::make(n, L);
    *out = new fwlab_field{
        fwlab::GridFunction::from_samples(grid, std::vector<double>(samples, samples + n))};
  });
}

fwlab_status fwlab_field_read_csv(const char *path, size_t n, double L, fwlab_field **out) {
  return guarded([&] {
    require_arg(path && out, "null argument");
    *out = new fwlab_field{fwlab::read_field_csv(path, fwlab::Grid::make(n, L))};
  });
}

fwlab_status fwlab_field_write_csv(const fwlab_field *field, const char *path) {
  return guarded([&] {
    require_arg(field && path, "null argument");
    fwlab::emit_field_csv(field->f, path);
  });
}

fwlab_status fwlab_field_samples(const fwlab_field *field, const double **data, size_t *n) {
  return guarded([&] {
    require_arg(field && data && n, "null argument");
    *data = field->f.samples().data();
    *n = field->f.samples().size();
  });
}

fwlab_status fwlab_field_besov_norm(const fwlab_field *field, double s, double p, double r,
                                    double *out) {
  return guarded([&] {
    require_arg(field && out, "null argument");
    const fwlab::BesovParams params{s, p, r};
    params.validate();
    const fwlab::LPPartition part(field->f.grid());
    *out = fwlab::besov_norm(part, field->f, params);
  });
}

void fwlab_field_free(fwlab_field *field) { delete field; }

fwlab_status fwlab_lifespan(double P0, double C, double *T) {
  return guarded([&] {
    require_arg(T, "T is null");
    *T = fwlab::lifespan(P0, C, fwlab::kInfinity).T;
  });
}

fwlab_status fwlab_write_mask_table(size_t n, double L, const char *path) {
  return guarded([&] {
    require_arg(path, "path is null");
    const fwlab::LPPartition part(fwlab::Grid::make(n, L));
    std::ofstream out(path, std::ios::binary);
    if (!out)
      fwlab::fail(fwlab::ErrorCode::Io, std::string("cannot open ") + path + " for writing");
    out << fwlab::table_csv(fwlab::mask_table(part));
    if (!out)
      fwlab::fail(fwlab::ErrorCode::Io, std::string("write failed for ") + path);
  });
}

} // extern "C"
