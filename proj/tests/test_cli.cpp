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
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GBF_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string fixture(const char* name) { return std::string(GBF_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, AnalyzeSmallQ4) {
  const auto r = run("analyze -e \"x1*x2 + 2*x1\" -n 2 -k 2 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["table"], nlohmann::json({0, 0, 2, 3}));
  EXPECT_EQ(j["spectrum"]["values"][0]["coeffs"], nlohmann::json({1, -1}));
  EXPECT_EQ(j["spectrum"]["values"][1]["coeffs"], nlohmann::json({-1, 1}));
  EXPECT_EQ(j["spectrum"]["values"][2]["coeffs"], nlohmann::json({3, 1}));
  EXPECT_EQ(j["spectrum"]["values"][3]["coeffs"], nlohmann::json({1, -1}));
  EXPECT_EQ(j["gbent"]["value"], false);
  const auto text = run("analyze -f " + fixture("small_q4.gbf"));
  ASSERT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("gbent:\n  value: false"), std::string::npos);
}

TEST(Cli, AnalyzeGbentQ4File) {
  const auto r = run("analyze -f " + fixture("gbent_q4.gbf") + " --format json");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["gbent"]["value"], true);
}

TEST(Cli, Checks) {
  auto j = nlohmann::json::parse(run("check gb4 -f " + fixture("gbent_q4.gbf")).out);
  EXPECT_EQ(j["result"]["passes"], true);
  j = nlohmann::json::parse(run("check srg -f " + fixture("gbent_q4.gbf") + " --x 0,1 --y 2,3").out);
  EXPECT_EQ(j["result"]["certified"], true);
  EXPECT_EQ(j["result"]["e"], j["result"]["d"]);
  j = nlohmann::json::parse(run("check butson -e \"x1*x2 + 2*x1\" -n 2 -k 2").out);
  EXPECT_EQ(j["result"]["value"], false);
  EXPECT_TRUE(j["result"].contains("witness"));
}

TEST(Cli, AuditExitCodesAndDeterminism) {
  const auto a = run("audit -n 2 -k 2 --exhaustive --format json --threads 1");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(nlohmann::json::parse(a.out)["total"], 256);
  const auto b = run("audit -n 2 -k 2 --exhaustive --format json --threads 2");
  EXPECT_EQ(a.out, b.out);
  const auto path = (std::filesystem::temp_directory_path() / "gbf_cli_audit.json").string();
  const auto c = run("audit -n 2 -k 2 --exhaustive --out " + path);
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(slurp(path), a.out);
  std::filesystem::remove(path);
  EXPECT_EQ(run("audit -n 3 -k 2 --exhaustive --budget 10").status, 2);
  EXPECT_EQ(run("audit -n 2 -k 2").status, 2);
}

TEST(Cli, AuditN2K3Tally) {
  const auto r = run("audit -n 2 -k 3 --exhaustive --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total"], 4096);
  EXPECT_EQ(j["forbidden"], 0);
}

TEST(Cli, ExportDot) {
  const auto r = run("export -f " + fixture("small_q4.gbf") + " --format dot --variant full");
  ASSERT_EQ(r.status, 0);
  std::size_t edges = 0;
  for (auto pos = r.out.find(" -- "); pos != std::string::npos; pos = r.out.find(" -- ", pos + 1)) ++edges;
  EXPECT_EQ(edges, 6u);
  EXPECT_EQ(run("export -f " + fixture("small_q4.gbf") + " --format png").status, 2);
}

TEST(Cli, Search) {
  const auto r = run("search -n 2 -k 2 --exhaustive");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("# found 64 gbent of 256 examined"), std::string::npos);
  const auto c = run("search -n 4 -k 2 --construct --count 4 --format json");
  ASSERT_EQ(c.status, 0);
  EXPECT_EQ(nlohmann::json::parse(c.out)["found"], 4);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("analyze").status, 2);
  EXPECT_EQ(run("analyze -e x1").status, 2);
  EXPECT_EQ(run("analyze -e \"x1 +\" -n 2 -k 2").status, 2);
  EXPECT_EQ(run("check bogus -t 0,1 -k 1").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("--version").status, 0);
}
