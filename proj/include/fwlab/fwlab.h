// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef FWLAB_FWLAB_H
#define FWLAB_FWLAB_H

#include <stddef.h>

#ifndef FWLAB_API
#define FWLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fwlab_status {
  FWLAB_OK = 0,
  FWLAB_ERR_INVALID_ARGUMENT = 1,
  FWLAB_ERR_INADMISSIBLE = 2,
  FWLAB_ERR_PRECONDITION = 3,
  FWLAB_ERR_NUMERICAL = 4,
  FWLAB_ERR_IO = 5,
  FWLAB_ERR_PARSE = 6,
  FWLAB_ERR_INTERNAL = 7
} fwlab_status;

typedef struct fwlab_config fwlab_config;
typedef struct fwlab_report fwlab_report;
typedef struct fwlab_field fwlab_field;

FWLAB_API const char *fwlab_version(void);
FWLAB_API const char *fwlab_status_name(fwlab_status status);
// Message of the last failed call on this thread; "" after a success.
FWLAB_API const char *fwlab_last_error(void);
// Releases strings returned through char** out-parameters.
FWLAB_API void fwlab_string_free(char *s);

// Configuration
FWLAB_API fwlab_status fwlab_config_default(fwlab_config **out);
FWLAB_API fwlab_status fwlab_config_parse(const char *json_text, fwlab_config **out);
FWLAB_API fwlab_status fwlab_config_load(const char *path, fwlab_config **out);
// value is JSON ("0.5", "[1,2]", "\"inf\"") or a bare string.
FWLAB_API fwlab_status fwlab_config_set(fwlab_config *cfg, const char *key, const char *value);
FWLAB_API fwlab_status fwlab_config_validate(const fwlab_config *cfg);
FWLAB_API fwlab_status fwlab_config_to_string(const fwlab_config *cfg, char **out);
FWLAB_API void fwlab_config_free(fwlab_config *cfg);

// Experiments
FWLAB_API fwlab_status fwlab_run(const fwlab_config *cfg, fwlab_report **out);
// dir NULL or empty: $FWLAB_OUT, then the config's output key.
// written_dir (optional) receives the directory actually used.
FWLAB_API fwlab_status fwlab_report_write(const fwlab_report *report, const char *dir,
                                          char **written_dir);
FWLAB_API int fwlab_report_passed(const fwlab_report *report);
FWLAB_API fwlab_status fwlab_report_summary(const fwlab_report *report, char **out);
FWLAB_API size_t fwlab_report_scalar_count(const fwlab_report *report);
// name stays valid until the report is freed.
FWLAB_API fwlab_status fwlab_report_scalar(const fwlab_report *report, size_t index,
                                           const char **name, double *value);
FWLAB_API size_t fwlab_report_verdict_count(const fwlab_report *report);
FWLAB_API fwlab_status fwlab_report_verdict(const fwlab_report *report, size_t index,
                                            const char **name, int *passed,
                                            const char **detail);
FWLAB_API void fwlab_report_free(fwlab_report *report);

// Fields on the grid [0, 2 pi L) with n samples
FWLAB_API fwlab_status fwlab_field_from_samples(const double *samples, size_t n, double L,
                                                fwlab_field **out);
FWLAB_API fwlab_status fwlab_field_read_csv(const char *path, size_t n, double L,
                                            fwlab_field **out);
FWLAB_API fwlab_status fwlab_field_write_csv(const fwlab_field *field, const char *path);
// data stays valid until the field is freed.
FWLAB_API fwlab_status fwlab_field_samples(const fwlab_field *field, const double **data,
                                           size_t *n);
// p or r may be INFINITY.
FWLAB_API fwlab_status fwlab_field_besov_norm(const fwlab_field *field, double s, double p,
                                              double r, double *out);
FWLAB_API void fwlab_field_free(fwlab_field *field);

// T = 3 / (16 C P0^2)
FWLAB_API fwlab_status fwlab_lifespan(double P0, double C, double *T);
FWLAB_API fwlab_status fwlab_write_mask_table(size_t n, double L, const char *path);

#ifdef __cplusplus
}
#endif

#endif // FWLAB_FWLAB_H
