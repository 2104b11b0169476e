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

#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

#include "gbf/gbf.h"

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { gbf_string_free(s); }
};

struct Handle {
  gbf_function* f = nullptr;
  ~Handle() { gbf_function_free(f); }
};

}  // namespace

TEST(CApi, NullArguments) {
  gbf_function* f = nullptr;
  EXPECT_EQ(gbf_function_from_expression(nullptr, 2, 2, &f), GBF_ERR_NULL_ARGUMENT);
  EXPECT_EQ(gbf_function_from_expression("x1", 2, 2, nullptr), GBF_ERR_NULL_ARGUMENT);
  EXPECT_STRNE(gbf_last_error(), "");
  int r = 0;
  EXPECT_EQ(gbf_is_gbent(nullptr, &r), GBF_ERR_NULL_ARGUMENT);
  EXPECT_EQ(gbf_audit(nullptr, nullptr, nullptr, nullptr), GBF_ERR_NULL_ARGUMENT);
  gbf_function_free(nullptr);
  gbf_string_free(nullptr);
}

TEST(CApi, StatusCodes) {
  Handle h;
  EXPECT_EQ(gbf_function_from_expression("x1 +", 2, 2, &h.f), GBF_ERR_PARSE);
  EXPECT_EQ(h.f, nullptr);
  const std::uint8_t bad[] = {0, 0, 4, 1};
  EXPECT_EQ(gbf_function_from_table(2, 2, bad, 4, &h.f), GBF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(gbf_function_from_table(2, 2, bad, 3, &h.f), GBF_ERR_DIMENSION_MISMATCH);
  EXPECT_EQ(gbf_function_load("/nonexistent/x.gbf", &h.f), GBF_ERR_IO);
  EXPECT_STREQ(gbf_status_string(GBF_ERR_DOMAIN), "outside the domain of the statement");

  ASSERT_EQ(gbf_function_from_expression("x1 + x2 + x3", 3, 2, &h.f), GBF_OK);
  EXPECT_STREQ(gbf_last_error(), "");
  gbf_check_options opt{};
  opt.which = "gb4";
  Owned out;
  EXPECT_EQ(gbf_check(h.f, &opt, GBF_FORMAT_JSON, &out.s), GBF_ERR_DOMAIN);
  opt.which = "no-such-check";
  EXPECT_EQ(gbf_check(h.f, &opt, GBF_FORMAT_JSON, &out.s), GBF_ERR_INVALID_ARGUMENT);
}

TEST(CApi, SmallQ4RoundTrip) {
  Handle h;
  ASSERT_EQ(gbf_function_from_expression("x1*x2 + 2*x1", 2, 2, &h.f), GBF_OK);
  int n = 0, k = 0;
  ASSERT_EQ(gbf_function_dims(h.f, &n, &k), GBF_OK);
  EXPECT_EQ(n, 2);
  EXPECT_EQ(k, 2);
  std::uint8_t table[4] = {};
  std::size_t len = 0;
  ASSERT_EQ(gbf_function_table(h.f, table, 4, &len), GBF_OK);
  EXPECT_EQ(len, 4u);
  EXPECT_EQ(std::vector<std::uint8_t>(table, table + 4), (std::vector<std::uint8_t>{0, 0, 2, 3}));
  ASSERT_EQ(gbf_function_table(h.f, nullptr, 0, &len), GBF_OK);

  Owned text;
  ASSERT_EQ(gbf_function_to_gbf_text(h.f, &text.s), GBF_OK);
  Handle back;
  ASSERT_EQ(gbf_function_from_gbf_text(text.s, &back.f), GBF_OK);
  std::uint8_t again[4] = {};
  ASSERT_EQ(gbf_function_table(back.f, again, 4, &len), GBF_OK);
  EXPECT_EQ(std::vector<std::uint8_t>(again, again + 4), (std::vector<std::uint8_t>{0, 0, 2, 3}));

  int gbent = 1, butson = 1;
  ASSERT_EQ(gbf_is_gbent(h.f, &gbent), GBF_OK);
  ASSERT_EQ(gbf_butson_check(h.f, &butson), GBF_OK);
  EXPECT_EQ(gbent, 0);
  EXPECT_EQ(butson, 0);

  Owned spec;
  ASSERT_EQ(gbf_spectrum_json(h.f, &spec.s), GBF_OK);
  const auto doc = nlohmann::json::parse(spec.s);
  EXPECT_EQ(doc["values"][2]["coeffs"], nlohmann::json({3, 1}));
  EXPECT_EQ(doc["norms"], nlohmann::json({2, 2, 10, 2}));

  Owned graph;
  ASSERT_EQ(gbf_export(h.f, "json", "full", &graph.s), GBF_OK);
  Handle from_graph;
  ASSERT_EQ(gbf_function_from_graph_json(graph.s, &from_graph.f), GBF_OK);
  ASSERT_EQ(gbf_function_table(from_graph.f, again, 4, &len), GBF_OK);
  EXPECT_EQ(std::vector<std::uint8_t>(again, again + 4), (std::vector<std::uint8_t>{0, 0, 2, 3}));
  EXPECT_EQ(gbf_export(h.f, "svg", "full", &graph.s), GBF_ERR_INVALID_ARGUMENT);
}

TEST(CApi, CheckNamesAreAccepted) {
  Handle h;
  ASSERT_EQ(gbf_function_from_expression("x1 + 2*(x1*x2 (+) x3*x4)", 4, 2, &h.f), GBF_OK);
  Handle boolean;
  ASSERT_EQ(gbf_function_from_expression("x1*x2 (+) x3*x4", 4, 1, &boolean.f), GBF_OK);
  std::string names = gbf_check_names();
  std::size_t start = 0, count = 0;
  while (start < names.size()) {
    const auto end = names.find('\n', start);
    const auto name = names.substr(start, end - start);
    start = end + 1;
    const bool k1 = name == "bent" || name == "classical-srg";
    gbf_check_options opt{};
    opt.which = name.c_str();
    opt.x = k1 ? "1" : "0,1";
    opt.y = k1 ? "1" : "2,3";
    Owned out;
    ASSERT_EQ(gbf_check(k1 ? boolean.f : h.f, &opt, GBF_FORMAT_JSON, &out.s), GBF_OK) << name << ": " << gbf_last_error();
    const auto doc = nlohmann::json::parse(out.s);
    EXPECT_EQ(doc["schema_version"], 1);
    ++count;
  }
  EXPECT_GE(count, 10u);
}

TEST(CApi, AuditAndSearch) {
  gbf_audit_options o;
  gbf_audit_options_init(&o);
  o.threads = 1;
  Owned json, summary;
  std::uint64_t forbidden = 99;
  ASSERT_EQ(gbf_audit(&o, &json.s, &summary.s, &forbidden), GBF_OK);
  EXPECT_EQ(forbidden, 0u);
  EXPECT_EQ(nlohmann::json::parse(json.s)["total"], 256);
  EXPECT_NE(std::string(summary.s).find("forbidden exceptions: 0"), std::string::npos);

  gbf_search_options s;
  gbf_search_options_init(&s);
  Owned out;
  std::uint64_t found = 0;
  ASSERT_EQ(gbf_search(&s, GBF_FORMAT_TEXT, &out.s, &found), GBF_OK);
  EXPECT_EQ(found, 64u);
  gbf_string_free(out.s);
  out.s = nullptr;
  s.mode = GBF_SEARCH_CONSTRUCT;
  s.n = 3;
  ASSERT_EQ(gbf_search(&s, GBF_FORMAT_TEXT, &out.s, &found), GBF_OK);
  EXPECT_EQ(found, 0u);
  gbf_string_free(out.s);
  out.s = nullptr;
  s.n = 0;
  EXPECT_EQ(gbf_search(&s, GBF_FORMAT_TEXT, &out.s, &found), GBF_ERR_INVALID_ARGUMENT);
}
