/* Copyright 2026 the gcwave authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the gcwave solver library.
 *
 * All entry points are synchronous and single-threaded.  Failures are
 * reported through the returned status code; gcw_last_error() gives a
 * human-readable message for the most recent failure on the calling
 * thread.  Status values match the command-line exit codes.
 */

#ifndef GCWAVE_GCWAVE_H
#define GCWAVE_GCWAVE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcw_status {
  GCW_OK = 0,            /* completed, all checks passed */
  GCW_VERIFY_FAIL = 1,   /* ran to completion, a verification failed */
  GCW_INPUT_ERROR = 2,   /* bad config, bad file, bad argument */
  GCW_RUNTIME_ABORT = 3, /* solver abort (geometry, divergence, ...) */
  GCW_INTERNAL = 4       /* unexpected failure */
} gcw_status;

/* Opaque solver configuration (flat key-value model). */
typedef struct gcw_config gcw_config;

/* Returns a configuration holding the documented defaults, or NULL on
 * allocation failure.  Free with gcw_config_free. */
gcw_config* gcw_config_create(void);

/* Replaces the configuration with defaults overlaid by the key-value
 * file at `path`.  Unknown or duplicate keys are errors. */
gcw_status gcw_config_load(gcw_config* cfg, const char* path);

/* Sets a single key (same names as the config file). */
gcw_status gcw_config_set(gcw_config* cfg, const char* key,
                          const char* value);

void gcw_config_free(gcw_config* cfg);

/* Marches the configured problem to t_end.  Writes the diagnostics CSV
 * and snapshot JSON-lines file into out_dir (empty or NULL means the
 * current directory; absolute output paths in the config win). */
gcw_status gcw_run(const gcw_config* cfg, const char* out_dir, int quiet);

/* Runs the module invariant suites at the configured grid size and
 * writes verify_report.json into out_dir.  GCW_VERIFY_FAIL if any
 * check fails. */
gcw_status gcw_verify(const gcw_config* cfg, const char* out_dir,
                      int quiet);

/* Audits a snapshot trajectory (energy rate bound + operator bounds);
 * writes audit_report.csv and audit_summary.json into out_dir.  Pass
 * trajectory_path = NULL to audit the configured snapshot_path inside
 * out_dir.  GCW_VERIFY_FAIL if the rate bound fails. */
gcw_status gcw_audit(const gcw_config* cfg, const char* trajectory_path,
                     const char* out_dir, int quiet);

/* Message for the most recent failing call on this thread ("" if the
 * last call succeeded).  The pointer stays valid until the next call
 * into the library from the same thread. */
const char* gcw_last_error(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GCWAVE_GCWAVE_H */
