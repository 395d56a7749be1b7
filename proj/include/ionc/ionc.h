// Copyright 2026 The ionc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the ionc compiler. All functions are thread-compatible:
 * distinct handles may be used from different threads. Strings returned
 * through `char**` are owned by the caller and released with
 * ionc_string_free. */

#ifndef IONC_IONC_H_
#define IONC_IONC_H_

#include <stddef.h>

#if defined(_WIN32)
#define IONC_API __declspec(dllexport)
#else
#define IONC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ionc_status {
  IONC_OK = 0,
  IONC_ERR_INVALID_ARGUMENT = 1,
  IONC_ERR_PARSE = 2,
  IONC_ERR_UNSUPPORTED = 3,
  IONC_ERR_CAPACITY = 4,
  IONC_ERR_PASS_ORDER = 5,
  IONC_ERR_VERIFICATION = 6,
  IONC_ERR_IO = 7,
  IONC_ERR_INTERNAL = 8
} ionc_status;

typedef struct ionc_circuit ionc_circuit;
typedef struct ionc_compilation ionc_compilation;

typedef struct ionc_options {
  int verify;
  int verify_qubit_cap;
  size_t verify_max_gates; /* 0: no limit */
  int drop_terminal_rz;
  int naive;
  int phase_tracking;
  int block_aggregation;
} ionc_options;

IONC_API const char* ionc_version(void);
IONC_API const char* ionc_status_string(ionc_status status);
/* Message of the last failed call on this thread, or "". */
IONC_API const char* ionc_last_error(void);
IONC_API void ionc_string_free(char* s);

IONC_API void ionc_options_default(ionc_options* opts);

IONC_API ionc_status ionc_circuit_from_qasm(const char* text, ionc_circuit** out);
IONC_API ionc_status ionc_circuit_from_qasm_file(const char* path, ionc_circuit** out);
IONC_API ionc_status ionc_circuit_from_json(const char* json, ionc_circuit** out);
IONC_API void ionc_circuit_free(ionc_circuit* c);
IONC_API int ionc_circuit_qubits(const ionc_circuit* c);
IONC_API size_t ionc_circuit_gate_count(const ionc_circuit* c);
IONC_API ionc_status ionc_circuit_counts(const ionc_circuit* c, size_t* single_qubit, size_t* two_qubit);
IONC_API ionc_status ionc_circuit_to_json(const ionc_circuit* c, char** out);

IONC_API ionc_status ionc_compile(const ionc_circuit* c, const ionc_options* opts, ionc_compilation** out);
IONC_API void ionc_compilation_free(ionc_compilation* comp);
/* Circuit JSON with "schedule" and "report". */
IONC_API ionc_status ionc_compilation_to_json(const ionc_compilation* comp, char** out);
IONC_API ionc_status ionc_compilation_report_json(const ionc_compilation* comp, char** out);
IONC_API ionc_status ionc_compilation_circuit(const ionc_compilation* comp, ionc_circuit** out);
IONC_API ionc_status ionc_compilation_counts(const ionc_compilation* comp, size_t* single_qubit, size_t* two_qubit,
                                             size_t* terminal_rz);
/* "passed", "failed", "skipped" or "not-run". */
IONC_API const char* ionc_compilation_verification(const ionc_compilation* comp);

/* Oracle check of every decomposition rule. `failures` receives the number
 * of failing samples; `report_json`, if not NULL, a JSON array of results. */
IONC_API ionc_status ionc_check_rules(size_t* failures, char** report_json);

/* Compiles every .qasm file in `dir` and writes a CSV to `csv_path`. */
IONC_API ionc_status ionc_bench(const char* dir, const ionc_options* opts, int jobs, const char* csv_path,
                                size_t* rows, size_t* failed);

#ifdef __cplusplus
}
#endif

#endif /* IONC_IONC_H_ */
