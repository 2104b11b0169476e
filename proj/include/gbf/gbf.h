// Copyright 2026 The gbent-cayley Authors.
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

#ifndef GBF_GBF_H_
#define GBF_GBF_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GBF_API __declspec(dllexport)
#else
#define GBF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gbf_function gbf_function;

typedef enum gbf_status {
  GBF_OK = 0,
  GBF_ERR_NULL_ARGUMENT = 1,
  GBF_ERR_INVALID_ARGUMENT = 2,
  GBF_ERR_DIMENSION_MISMATCH = 3,
  GBF_ERR_PARSE = 4,
  GBF_ERR_LIMIT_EXCEEDED = 5,
  GBF_ERR_DOMAIN = 6,
  GBF_ERR_IO = 7,
  GBF_ERR_ARITHMETIC = 8,
  GBF_ERR_INTERNAL = 9,
  GBF_ERR_OUT_OF_MEMORY = 10
} gbf_status;

typedef enum gbf_format { GBF_FORMAT_TEXT = 0, GBF_FORMAT_JSON = 1 } gbf_format;

typedef enum gbf_convention {
  GBF_CONVENTION_ALL_VERTICES = 0,
  GBF_CONVENTION_EXCLUDE_ENDPOINTS = 1
} gbf_convention;

typedef enum gbf_audit_scope {
  GBF_AUDIT_EXHAUSTIVE = 0,
  GBF_AUDIT_RANDOM = 1,
  GBF_AUDIT_FIXTURES = 2
} gbf_audit_scope;

typedef enum gbf_search_mode {
  GBF_SEARCH_EXHAUSTIVE = 0,
  GBF_SEARCH_RANDOM = 1,
  GBF_SEARCH_CONSTRUCT = 2
} gbf_search_mode;

/* Bits of gbf_audit_options.conventions. */
#define GBF_AUDIT_ALL_VERTICES 1u
#define GBF_AUDIT_EXCLUDE_ENDPOINTS 2u

typedef struct gbf_check_options {
  const char* which;          /* see gbf_check_names */
  gbf_convention convention;
  const char* x;              /* comma lists of weights, or NULL */
  const char* x2;
  const char* y;
} gbf_check_options;

typedef struct gbf_audit_options {
  int n;
  int k;
  gbf_audit_scope scope;
  uint64_t count;             /* random scope */
  uint64_t seed;
  uint64_t budget;            /* 0: GBF_AUDIT_BUDGET or the built-in default */
  unsigned conventions;       /* GBF_AUDIT_* bits */
  int per_function;
  unsigned threads;           /* 0: hardware concurrency */
} gbf_audit_options;

typedef struct gbf_search_options {
  int n;
  int k;
  gbf_search_mode mode;
  uint64_t count;
  uint64_t seed;
  uint64_t budget;
  size_t fixture_count;
} gbf_search_options;

GBF_API const char* gbf_version(void);
GBF_API const char* gbf_status_string(gbf_status status);
/* Message of the last failure on the calling thread; empty after success. */
GBF_API const char* gbf_last_error(void);

GBF_API gbf_status gbf_function_from_expression(const char* expression, int n, int k, gbf_function** out);
GBF_API gbf_status gbf_function_from_table(int n, int k, const uint8_t* table, size_t length, gbf_function** out);
GBF_API gbf_status gbf_function_from_gbf_text(const char* text, gbf_function** out);
GBF_API gbf_status gbf_function_load(const char* path, gbf_function** out);
GBF_API gbf_status gbf_function_from_graph_json(const char* json, gbf_function** out);
GBF_API void gbf_function_free(gbf_function* f);

GBF_API gbf_status gbf_function_dims(const gbf_function* f, int* n, int* k);
/* Copies min(capacity, 2^n) entries; *length receives 2^n. */
GBF_API gbf_status gbf_function_table(const gbf_function* f, uint8_t* buffer, size_t capacity, size_t* length);
GBF_API gbf_status gbf_function_to_gbf_text(const gbf_function* f, char** out);

GBF_API gbf_status gbf_is_gbent(const gbf_function* f, int* result);
GBF_API gbf_status gbf_butson_check(const gbf_function* f, int* result);
GBF_API gbf_status gbf_spectrum_json(const gbf_function* f, char** out);

GBF_API gbf_status gbf_analyze(const gbf_function* f, gbf_format format, char** out);
/* Newline-separated list of the names accepted by gbf_check. */
GBF_API const char* gbf_check_names(void);
GBF_API gbf_status gbf_check(const gbf_function* f, const gbf_check_options* options, gbf_format format, char** out);

GBF_API void gbf_audit_options_init(gbf_audit_options* options);
GBF_API gbf_status gbf_audit(const gbf_audit_options* options, char** json, char** summary, uint64_t* forbidden);

GBF_API gbf_status gbf_export(const gbf_function* f, const char* format, const char* variant, char** out);

GBF_API void gbf_search_options_init(gbf_search_options* options);
GBF_API gbf_status gbf_search(const gbf_search_options* options, gbf_format format, char** out, uint64_t* found);

/* Releases strings returned through char** parameters. */
GBF_API void gbf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif  // GBF_GBF_H_
