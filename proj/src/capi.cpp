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

#include "gbf/gbf.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "gbf/expression.hpp"
#include "gbf/report.hpp"

struct gbf_function {
  gbf::Gbf value;
};

namespace {

thread_local std::string last_error;

gbf_status to_status(gbf::ErrorCode code) {
  switch (code) {
    case gbf::ErrorCode::InvalidArgument:
      return GBF_ERR_INVALID_ARGUMENT;
    case gbf::ErrorCode::DimensionMismatch:
      return GBF_ERR_DIMENSION_MISMATCH;
    case gbf::ErrorCode::Parse:
      return GBF_ERR_PARSE;
    case gbf::ErrorCode::LimitExceeded:
      return GBF_ERR_LIMIT_EXCEEDED;
    case gbf::ErrorCode::Domain:
      return GBF_ERR_DOMAIN;
    case gbf::ErrorCode::Io:
      return GBF_ERR_IO;
    case gbf::ErrorCode::Arithmetic:
      return GBF_ERR_ARITHMETIC;
    case gbf::ErrorCode::Internal:
      return GBF_ERR_INTERNAL;
  }
  return GBF_ERR_INTERNAL;
}

template <class Fn>
gbf_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return GBF_OK;
  } catch (const gbf::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GBF_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GBF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return GBF_ERR_INTERNAL;
  }
}

gbf_status null_argument(const char* name) {
  last_error = std::string("null argument: ") + name;
  return GBF_ERR_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gbf::Convention convention_of(gbf_convention c) {
  switch (c) {
    case GBF_CONVENTION_ALL_VERTICES:
      return gbf::Convention::AllVertices;
    case GBF_CONVENTION_EXCLUDE_ENDPOINTS:
      return gbf::Convention::ExcludeEndpoints;
  }
  gbf::fail(gbf::ErrorCode::InvalidArgument, "unknown convention value");
}

gbf::OutputFormat format_of(gbf_format f) {
  switch (f) {
    case GBF_FORMAT_TEXT:
      return gbf::OutputFormat::Text;
    case GBF_FORMAT_JSON:
      return gbf::OutputFormat::Json;
  }
  gbf::fail(gbf::ErrorCode::InvalidArgument, "unknown output format value");
}

gbf_status make_function(gbf_function** out, auto&& build) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new gbf_function{build()}; });
}

}  // namespace

extern "C" {

const char* gbf_version(void) { return "1.0.0"; }

const char* gbf_status_string(gbf_status status) {
  switch (status) {
    case GBF_OK:
      return "ok";
    case GBF_ERR_NULL_ARGUMENT:
      return "null argument";
    case GBF_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case GBF_ERR_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case GBF_ERR_PARSE:
      return "parse error";
    case GBF_ERR_LIMIT_EXCEEDED:
      return "limit exceeded";
    case GBF_ERR_DOMAIN:
      return "outside the domain of the statement";
    case GBF_ERR_IO:
      return "i/o error";
    case GBF_ERR_ARITHMETIC:
      return "arithmetic error";
    case GBF_ERR_INTERNAL:
      return "internal error";
    case GBF_ERR_OUT_OF_MEMORY:
      return "out of memory";
  }
  return "unknown status";
}

const char* gbf_last_error(void) { return last_error.c_str(); }

gbf_status gbf_function_from_expression(const char* expression, int n, int k, gbf_function** out) {
  if (!expression) return null_argument("expression");
  return make_function(out, [&] { return gbf::parse_expression(expression, n, k); });
}

gbf_status gbf_function_from_table(int n, int k, const uint8_t* table, size_t length, gbf_function** out) {
  if (!table) return null_argument("table");
  return make_function(out, [&] { return gbf::Gbf(n, k, std::vector<std::uint8_t>(table, table + length)); });
}

gbf_status gbf_function_from_gbf_text(const char* text, gbf_function** out) {
  if (!text) return null_argument("text");
  return make_function(out, [&] { return gbf::parse_gbf(text); });
}

gbf_status gbf_function_load(const char* path, gbf_function** out) {
  if (!path) return null_argument("path");
  return make_function(out, [&] { return gbf::load_gbf(path); });
}

gbf_status gbf_function_from_graph_json(const char* json, gbf_function** out) {
  if (!json) return null_argument("json");
  return make_function(out, [&] { return gbf::function_from_graph_json(json); });
}

void gbf_function_free(gbf_function* f) { delete f; }

gbf_status gbf_function_dims(const gbf_function* f, int* n, int* k) {
  if (!f) return null_argument("f");
  if (!n || !k) return null_argument("n/k");
  *n = f->value.n();
  *k = f->value.k();
  last_error.clear();
  return GBF_OK;
}

gbf_status gbf_function_table(const gbf_function* f, uint8_t* buffer, size_t capacity, size_t* length) {
  if (!f) return null_argument("f");
  if (!length) return null_argument("length");
  if (!buffer && capacity > 0) return null_argument("buffer");
  const auto& t = f->value.table();
  *length = t.size();
  if (capacity > 0) std::memcpy(buffer, t.data(), std::min(capacity, t.size()));
  last_error.clear();
  return GBF_OK;
}

gbf_status gbf_function_to_gbf_text(const gbf_function* f, char** out) {
  if (!f) return null_argument("f");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(gbf::format_gbf(f->value)); });
}

gbf_status gbf_is_gbent(const gbf_function* f, int* result) {
  if (!f) return null_argument("f");
  if (!result) return null_argument("result");
  return guarded([&] { *result = gbf::is_gbent(f->value).gbent ? 1 : 0; });
}

gbf_status gbf_butson_check(const gbf_function* f, int* result) {
  if (!f) return null_argument("f");
  if (!result) return null_argument("result");
  return guarded([&] { *result = gbf::butson_check(f->value).butson ? 1 : 0; });
}

gbf_status gbf_spectrum_json(const gbf_function* f, char** out) {
  if (!f) return null_argument("f");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(gbf::spectrum_json(gbf::gwht_fast(f->value))); });
}

gbf_status gbf_analyze(const gbf_function* f, gbf_format format, char** out) {
  if (!f) return null_argument("f");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(gbf::analyze_report(f->value, format_of(format))); });
}

const char* gbf_check_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : gbf::check_names()) s += n + "\n";
    return s;
  }();
  return names.c_str();
}

gbf_status gbf_check(const gbf_function* f, const gbf_check_options* options, gbf_format format, char** out) {
  if (!f) return null_argument("f");
  if (!options || !options->which) return null_argument("options");
  if (!out) return null_argument("out");
  return guarded([&] {
    gbf::CheckRequest req;
    req.which = options->which;
    req.convention = convention_of(options->convention);
    if (options->x) req.x = options->x;
    if (options->x2) req.x2 = options->x2;
    if (options->y) req.y = options->y;
    *out = copy_string(gbf::check_report(f->value, req, format_of(format)));
  });
}

void gbf_audit_options_init(gbf_audit_options* options) {
  if (!options) return;
  *options = gbf_audit_options{};
  options->n = 2;
  options->k = 2;
  options->scope = GBF_AUDIT_EXHAUSTIVE;
  options->seed = 42;
  options->conventions = GBF_AUDIT_ALL_VERTICES | GBF_AUDIT_EXCLUDE_ENDPOINTS;
}

gbf_status gbf_audit(const gbf_audit_options* options, char** json, char** summary, uint64_t* forbidden) {
  if (!options) return null_argument("options");
  if (json) *json = nullptr;
  if (summary) *summary = nullptr;
  return guarded([&] {
    gbf::AuditOptions o;
    o.n = options->n;
    o.k = options->k;
    switch (options->scope) {
      case GBF_AUDIT_EXHAUSTIVE:
        o.scope = gbf::AuditScope::Exhaustive;
        break;
      case GBF_AUDIT_RANDOM:
        o.scope = gbf::AuditScope::Random;
        break;
      case GBF_AUDIT_FIXTURES:
        o.scope = gbf::AuditScope::Fixtures;
        break;
      default:
        gbf::fail(gbf::ErrorCode::InvalidArgument, "unknown audit scope value");
    }
    o.count = options->count;
    o.seed = options->seed;
    o.budget = options->budget;
    o.conventions.clear();
    if (options->conventions & GBF_AUDIT_ALL_VERTICES) o.conventions.push_back(gbf::Convention::AllVertices);
    if (options->conventions & GBF_AUDIT_EXCLUDE_ENDPOINTS) o.conventions.push_back(gbf::Convention::ExcludeEndpoints);
    o.per_function = options->per_function != 0;
    o.threads = options->threads;
    const auto report = gbf::audit(o);
    std::string j = json ? gbf::audit_json(report) : std::string();
    std::string s = summary ? gbf::audit_summary(report) : std::string();
    if (json) *json = copy_string(j);
    if (summary) {
      try {
        *summary = copy_string(s);
      } catch (...) {
        if (json) {
          std::free(*json);
          *json = nullptr;
        }
        throw;
      }
    }
    if (forbidden) *forbidden = report.forbidden;
  });
}

gbf_status gbf_export(const gbf_function* f, const char* format, const char* variant, char** out) {
  if (!f) return null_argument("f");
  if (!format || !variant) return null_argument("format/variant");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(gbf::export_graph(f->value, gbf::parse_export_format(format), gbf::parse_graph_variant(variant)));
  });
}

void gbf_search_options_init(gbf_search_options* options) {
  if (!options) return;
  *options = gbf_search_options{};
  options->n = 2;
  options->k = 2;
  options->mode = GBF_SEARCH_EXHAUSTIVE;
  options->seed = 42;
  options->fixture_count = 16;
}

gbf_status gbf_search(const gbf_search_options* options, gbf_format format, char** out, uint64_t* found) {
  if (!options) return null_argument("options");
  if (!out) return null_argument("out");
  return guarded([&] {
    gbf::SearchOptions o;
    o.n = options->n;
    o.k = options->k;
    switch (options->mode) {
      case GBF_SEARCH_EXHAUSTIVE:
        o.mode = gbf::SearchMode::Exhaustive;
        break;
      case GBF_SEARCH_RANDOM:
        o.mode = gbf::SearchMode::Random;
        break;
      case GBF_SEARCH_CONSTRUCT:
        o.mode = gbf::SearchMode::Construct;
        break;
      default:
        gbf::fail(gbf::ErrorCode::InvalidArgument, "unknown search mode value");
    }
    o.count = options->count;
    o.seed = options->seed;
    o.budget = options->budget;
    o.fixture_count = options->fixture_count;
    const auto result = gbf::search_gbent(o);
    *out = copy_string(gbf::search_report(o, result, format_of(format)));
    if (found) *found = result.found.size();
  });
}

void gbf_string_free(char* s) { std::free(s); }

}  // extern "C"
