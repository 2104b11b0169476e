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

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gbf/gbf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FunctionDeleter {
  void operator()(gbf_function* f) const { gbf_function_free(f); }
};
using FunctionPtr = std::unique_ptr<gbf_function, FunctionDeleter>;

struct StringDeleter {
  void operator()(char* s) const { gbf_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

void check(gbf_status status) {
  if (status != GBF_OK) throw UsageError(std::string(gbf_status_string(status)) + ": " + gbf_last_error());
}

struct InputFlags {
  std::string expression;
  std::string file;
  std::string table;
  int n = 0;
  int k = 0;

  void attach(CLI::App* app) {
    app->add_option("-e,--expression", expression, "Formula over Z_q, e.g. \"x1*x2 + 2*x1\"");
    app->add_option("-f,--file", file, ".gbf truth-table file");
    app->add_option("-t,--table", table, "Inline truth table, comma or space separated");
    app->add_option("-n", n, "Number of variables");
    app->add_option("-k", k, "q = 2^k");
  }

  FunctionPtr load() const {
    const int sources = !expression.empty() + !file.empty() + !table.empty();
    if (sources != 1) throw UsageError("exactly one of -e, -f, -t is required");
    gbf_function* f = nullptr;
    if (!file.empty()) {
      check(gbf_function_load(file.c_str(), &f));
    } else if (!expression.empty()) {
      if (n <= 0 || k <= 0) throw UsageError("-e needs -n and -k");
      check(gbf_function_from_expression(expression.c_str(), n, k, &f));
    } else {
      if (k <= 0) throw UsageError("-t needs -k");
      std::vector<std::uint8_t> values;
      std::string cleaned = table;
      for (auto& c : cleaned)
        if (c == ',') c = ' ';
      std::istringstream in(cleaned);
      unsigned v = 0;
      while (in >> v) {
        if (v > 255) throw UsageError("table value " + std::to_string(v) + " is out of range");
        values.push_back(static_cast<std::uint8_t>(v));
      }
      if (!in.eof()) throw UsageError("malformed table '" + table + "'");
      int dims = n;
      if (dims <= 0) {
        dims = 0;
        while ((std::size_t{1} << dims) < values.size()) ++dims;
      }
      check(gbf_function_from_table(dims, k, values.data(), values.size(), &f));
    }
    return FunctionPtr(f);
  }
};

gbf_format parse_format(const std::string& name) {
  if (name == "text") return GBF_FORMAT_TEXT;
  if (name == "json") return GBF_FORMAT_JSON;
  throw UsageError("unknown format '" + name + "'");
}

gbf_convention parse_convention(const std::string& name) {
  if (name == "all-vertices" || name == "all") return GBF_CONVENTION_ALL_VERTICES;
  if (name == "exclude-endpoints" || name == "exclude") return GBF_CONVENTION_EXCLUDE_ENDPOINTS;
  throw UsageError("unknown convention '" + name + "'");
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized bent functions and their weighted Cayley graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gbf_version()));

  InputFlags analyze_in;
  std::string analyze_format = "text";
  auto* analyze = app.add_subcommand("analyze", "Spectrum, components, regularity and verdicts of one function");
  analyze_in.attach(analyze);
  analyze->add_option("--format", analyze_format, "text or json");

  InputFlags check_in;
  std::string check_which, check_format = "json", check_convention = "all-vertices", check_x, check_x2, check_y;
  auto* check_cmd = app.add_subcommand("check", "Run one named check");
  check_cmd->add_option("which", check_which, "Check name")->required();
  check_in.attach(check_cmd);
  check_cmd->add_option("--convention", check_convention, "all-vertices or exclude-endpoints");
  check_cmd->add_option("--x", check_x, "Weight set X (comma list)");
  check_cmd->add_option("--x2", check_x2, "Second pair class for the generalized srg check");
  check_cmd->add_option("--y", check_y, "Weight set Y (comma list)");
  check_cmd->add_option("--format", check_format, "text or json");

  int audit_n = 0, audit_k = 0, audit_threads = 0;
  bool audit_exhaustive = false, audit_fixtures = false, audit_per_function = false;
  std::uint64_t audit_random = 0, audit_seed = 42, audit_budget = 0;
  std::vector<std::string> audit_conventions;
  std::string audit_out, audit_format = "text";
  auto* audit_cmd = app.add_subcommand("audit", "Tally every stated equivalence over a set of functions");
  audit_cmd->add_option("-n", audit_n, "Number of variables")->required();
  audit_cmd->add_option("-k", audit_k, "q = 2^k")->required();
  auto* ex = audit_cmd->add_flag("--exhaustive", audit_exhaustive, "All q^(2^n) functions");
  auto* rnd = audit_cmd->add_option("--random", audit_random, "Number of random functions (plus gbent fixtures)");
  auto* fx = audit_cmd->add_flag("--fixtures", audit_fixtures, "Constructed gbent fixtures only");
  ex->excludes(rnd)->excludes(fx);
  rnd->excludes(fx);
  audit_cmd->add_option("--seed", audit_seed, "Seed for random scope and fixtures");
  audit_cmd->add_option("--budget", audit_budget, "Override the exhaustive budget");
  audit_cmd->add_option("--convention", audit_conventions, "Conventions to audit (default both)");
  audit_cmd->add_option("--out", audit_out, "Write the JSON report to this file");
  audit_cmd->add_option("--format", audit_format, "Standard output: text summary or json report");
  audit_cmd->add_flag("--per-function", audit_per_function, "Include one record per function");
  audit_cmd->add_option("--threads", audit_threads, "Worker threads (0: all cores)");

  InputFlags export_in;
  std::string export_format = "dot", export_variant = "full", export_out;
  auto* export_cmd = app.add_subcommand("export", "Export the weighted Cayley graph");
  export_in.attach(export_cmd);
  export_cmd->add_option("--format", export_format, "dot, graphml or json");
  export_cmd->add_option("--variant", export_variant, "full or modified");
  export_cmd->add_option("--out", export_out, "Output file");

  int search_n = 0, search_k = 0;
  bool search_exhaustive = false, search_construct = false;
  std::uint64_t search_random = 0, search_seed = 42, search_budget = 0;
  std::size_t search_count = 16;
  std::string search_format = "text";
  auto* search_cmd = app.add_subcommand("search", "List gbent functions");
  search_cmd->add_option("-n", search_n, "Number of variables")->required();
  search_cmd->add_option("-k", search_k, "q = 2^k")->required();
  auto* sex = search_cmd->add_flag("--exhaustive", search_exhaustive, "Scan all q^(2^n) functions");
  auto* srnd = search_cmd->add_option("--random", search_random, "Scan this many random functions");
  auto* scon = search_cmd->add_flag("--construct", search_construct, "Emit constructed fixtures");
  sex->excludes(srnd)->excludes(scon);
  srnd->excludes(scon);
  search_cmd->add_option("--seed", search_seed, "Seed");
  search_cmd->add_option("--budget", search_budget, "Override the exhaustive budget");
  search_cmd->add_option("--count", search_count, "Number of constructed fixtures");
  search_cmd->add_option("--format", search_format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      const auto f = analyze_in.load();
      char* out = nullptr;
      check(gbf_analyze(f.get(), parse_format(analyze_format), &out));
      StringPtr holder(out);
      std::cout << out;
      return kExitOk;
    }

    if (*check_cmd) {
      const auto f = check_in.load();
      gbf_check_options options{};
      options.which = check_which.c_str();
      options.convention = parse_convention(check_convention);
      options.x = check_x.empty() ? nullptr : check_x.c_str();
      options.x2 = check_x2.empty() ? nullptr : check_x2.c_str();
      options.y = check_y.empty() ? nullptr : check_y.c_str();
      char* out = nullptr;
      check(gbf_check(f.get(), &options, parse_format(check_format), &out));
      StringPtr holder(out);
      std::cout << out;
      return kExitOk;
    }

    if (*audit_cmd) {
      gbf_audit_options options;
      gbf_audit_options_init(&options);
      options.n = audit_n;
      options.k = audit_k;
      if (audit_random > 0)
        options.scope = GBF_AUDIT_RANDOM;
      else if (audit_fixtures)
        options.scope = GBF_AUDIT_FIXTURES;
      else if (audit_exhaustive)
        options.scope = GBF_AUDIT_EXHAUSTIVE;
      else
        throw UsageError("audit needs one of --exhaustive, --random N, --fixtures");
      options.count = audit_random;
      options.seed = audit_seed;
      options.budget = audit_budget;
      options.per_function = audit_per_function ? 1 : 0;
      options.threads = static_cast<unsigned>(std::max(0, audit_threads));
      if (!audit_conventions.empty()) {
        options.conventions = 0;
        for (const auto& c : audit_conventions)
          options.conventions |=
              parse_convention(c) == GBF_CONVENTION_ALL_VERTICES ? GBF_AUDIT_ALL_VERTICES : GBF_AUDIT_EXCLUDE_ENDPOINTS;
      }
      const auto format = parse_format(audit_format);
      char* json = nullptr;
      char* summary = nullptr;
      std::uint64_t forbidden = 0;
      check(gbf_audit(&options, &json, &summary, &forbidden));
      StringPtr json_holder(json), summary_holder(summary);
      if (!audit_out.empty()) write_output(json, audit_out);
      std::cout << (format == GBF_FORMAT_JSON ? json : summary);
      return forbidden ? kExitViolation : kExitOk;
    }

    if (*export_cmd) {
      const auto f = export_in.load();
      char* out = nullptr;
      check(gbf_export(f.get(), export_format.c_str(), export_variant.c_str(), &out));
      StringPtr holder(out);
      write_output(out, export_out);
      return kExitOk;
    }

    if (*search_cmd) {
      gbf_search_options options;
      gbf_search_options_init(&options);
      options.n = search_n;
      options.k = search_k;
      if (search_random > 0)
        options.mode = GBF_SEARCH_RANDOM;
      else if (search_construct)
        options.mode = GBF_SEARCH_CONSTRUCT;
      else if (search_exhaustive)
        options.mode = GBF_SEARCH_EXHAUSTIVE;
      else
        throw UsageError("search needs one of --exhaustive, --random N, --construct");
      options.count = search_random;
      options.seed = search_seed;
      options.budget = search_budget;
      options.fixture_count = search_count;
      char* out = nullptr;
      check(gbf_search(&options, parse_format(search_format), &out, nullptr));
      StringPtr holder(out);
      std::cout << out;
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
