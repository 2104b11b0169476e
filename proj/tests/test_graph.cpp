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
#include <random>
#include <regex>

#include "gbf/graph.hpp"
#include "gbf/theorems.hpp"
#include "oracles.hpp"

using namespace gbf;

namespace {

std::uint64_t count_of(const std::string& s, const std::string& needle) {
  std::uint64_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Adjacency, SmallQ4Multiplicative) {
  const auto a = adjacency_matrix(oracle::small_q4(), WeightMode::Multiplicative);
  const std::complex<double> i1{0, 1};
  const std::vector<std::vector<std::complex<double>>> expected{
      {1.0, 1.0, -1.0, -i1}, {1.0, 1.0, -i1, -1.0}, {-1.0, -i1, 1.0, 1.0}, {-i1, -1.0, 1.0, 1.0}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const auto z = a.root_at(r, c).to_complex();
      EXPECT_NEAR(std::abs(z - expected[r][c]), 0.0, 1e-12) << r << "," << c;
    }
  EXPECT_EQ(a.root_at(0, 3), -root_of_unity(1, 2));
  EXPECT_TRUE(a.symmetric());
}

TEST(Adjacency, SmallQ4Additive) {
  const auto a = adjacency_matrix(oracle::small_q4(), WeightMode::Additive);
  const unsigned want[4][4] = {{0, 0, 2, 3}, {0, 0, 3, 2}, {2, 3, 0, 0}, {3, 2, 0, 0}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(a.at(r, c), want[r][c]);
  EXPECT_THROW(adjacency_matrix(Gbf::zero(kMatrixMaxN + 1, 1), WeightMode::Additive), Error);
}

TEST(Adjacency, DyadicProperty) {
  EXPECT_TRUE(dyadic_check(oracle::small_q4()));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(dyadic_check(oracle::random_gbf(5, 3, rng)));
  auto a = adjacency_matrix(oracle::small_q4(), WeightMode::Additive);
  a.set(0, 1, 1);
  a.set(1, 0, 1);
  EXPECT_FALSE(dyadic_check(a));
}

TEST(Regularity, SmallQ4) {
  const auto wr = weighted_regularity(oracle::small_q4());
  EXPECT_EQ(wr.v, 4u);
  EXPECT_EQ(wr.r, (std::vector<std::uint64_t>{1, 0, 1, 1}));
  EXPECT_EQ(wr.loop_weight, 0u);
  EXPECT_EQ(wr.r_of(WeightSet(4, {2, 3})), 2u);
  EXPECT_FALSE(weighted_regularity_violation(adjacency_matrix(oracle::small_q4(), WeightMode::Additive)));
  auto broken = adjacency_matrix(oracle::small_q4(), WeightMode::Additive);
  broken.set(2, 3, 1);
  EXPECT_TRUE(weighted_regularity_violation(broken));
}

TEST(Regularity, ComplementReversal) {
  const auto f = oracle::small_q4();
  const auto bar = complement_graph(f);
  EXPECT_EQ(bar.function().table(), (std::vector<std::uint8_t>{3, 3, 1, 0}));
  const auto rbar = weighted_regularity(bar.function());
  EXPECT_EQ(rbar.r, (std::vector<std::uint64_t>{1, 1, 0, 1}));
  EXPECT_TRUE(complement_regularity_reversed(weighted_regularity(f), rbar));
  std::mt19937_64 rng(32);
  for (int i = 0; i < 1000; ++i) {
    const auto g = oracle::random_gbf(1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3), rng);
    ASSERT_TRUE(complement_regularity_reversed(weighted_regularity(g), weighted_regularity(complement_function(g))));
  }
}

TEST(Neighbours, SmallQ4Count) {
  EXPECT_EQ(neighbor_count(oracle::small_q4(), 0b00, 0b01, WeightSet(4, {2, 3}), Convention::AllVertices), 2u);
}

TEST(Neighbours, TranslationInvarianceAndOracle) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto f = oracle::random_gbf(n, 2, rng);
    WeightSet y(4);
    for (unsigned v = 0; v < 4; ++v)
      if (rng() & 1) y.insert(v);
    for (auto conv : {Convention::AllVertices, Convention::ExcludeEndpoints}) {
      const bool exclude = conv == Convention::ExcludeEndpoints;
      const auto by_z = neighbor_counts_by_difference(f, y, conv);
      for (int trial = 0; trial < 20; ++trial) {
        const Vertex a = static_cast<Vertex>(rng() % f.size()), b = static_cast<Vertex>(rng() % f.size());
        if (a == b) continue;
        const auto want = oracle::common_neighbours(f, a, b, y, exclude);
        ASSERT_EQ(neighbor_count(f, a, b, y, conv), want);
        ASSERT_EQ(by_z[a ^ b], want);
      }
    }
  }
}

TEST(Srg, GbentQ4Bisection) {
  const auto f = oracle::gbent_q4();
  const WeightSet x(4, {0, 1});
  const auto r = srg_check(f, x, x.complement(), Convention::AllVertices);
  EXPECT_TRUE(r.certified);
  EXPECT_TRUE(r.bisection);
  ASSERT_TRUE(r.e && r.d);
  EXPECT_EQ(*r.e, *r.d);
  const auto brute = oracle::counts_on_class(f, x, x.complement(), false);
  ASSERT_EQ(brute.size(), 1u);
  EXPECT_EQ(*r.e, *brute.begin());
}

TEST(Srg, SmallQ4Bisection) {
  // Pairs at difference 01 see 2 common {2,3}-neighbours, pairs at 10 and 11
  // see none, so the bisection {0,1} is certified with e = 2, d = 0.
  const auto f = oracle::small_q4();
  const auto r = srg_check(f, WeightSet(4, {0, 1}), WeightSet(4, {2, 3}), Convention::AllVertices);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.e, 2u);
  EXPECT_EQ(r.d, 0u);
}

TEST(Srg, SmallQ4EveryClassAgainstBruteForce) {
  const auto f = oracle::small_q4();
  int refuted = 0;
  for (unsigned xb = 1; xb < 15; ++xb)
    for (unsigned yb = 1; yb < 16; ++yb) {
      WeightSet x(4), y(4);
      for (unsigned v = 0; v < 4; ++v) {
        if ((xb >> v) & 1) x.insert(v);
        if ((yb >> v) & 1) y.insert(v);
      }
      for (auto conv : {Convention::AllVertices, Convention::ExcludeEndpoints}) {
        const bool exclude = conv == Convention::ExcludeEndpoints;
        const auto r = srg_check(f, x, y, conv);
        const auto e = oracle::counts_on_class(f, x, y, exclude), d = oracle::counts_on_class(f, r.x2, y, exclude);
        ASSERT_EQ(r.certified, e.size() <= 1 && d.size() <= 1);
        if (r.certified) continue;
        ++refuted;
        ASSERT_TRUE(r.witness);
        const auto& w = *r.witness;
        EXPECT_EQ(oracle::common_neighbours(f, w.a, w.b, y, exclude), w.count_ab);
        EXPECT_EQ(oracle::common_neighbours(f, w.c, w.d, y, exclude), w.count_cd);
        EXPECT_NE(w.count_ab, w.count_cd);
        const auto cls = r.refuted_class == "x" ? x : r.x2;
        EXPECT_TRUE(cls.contains(f[w.a ^ w.b]));
        EXPECT_TRUE(cls.contains(f[w.c ^ w.d]));
      }
    }
  EXPECT_GT(refuted, 0);
}

TEST(Srg, BooleanBentClassicalParameters) {
  const auto g = oracle::quadratic_bent4();
  const Gbf f(4, 1, g.table());
  const WeightSet one(2, {1});
  const auto r = srg_check(f, one, one, Convention::ExcludeEndpoints);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.e, 2u);
  EXPECT_EQ(r.d, 2u);
  EXPECT_EQ(weighted_regularity(f).r_of(one), 6u);
  EXPECT_TRUE(counting_identity_check(r, weighted_regularity(f)));

  const auto c = classical_srg_check(g);
  EXPECT_TRUE(c.certified);
  EXPECT_EQ(c.v, 16u);
  EXPECT_EQ(c.r, 6u);
  EXPECT_EQ(c.e, 2u);
  EXPECT_EQ(c.d, 2u);
  EXPECT_EQ(c.counting_identity, true);
  EXPECT_EQ(c.three_eigenvalue_identities, true);
  EXPECT_EQ(c.matrix_identity, true);
  EXPECT_EQ(6 * (6 - 2 - 1), 2 * (16 - 6 - 1));
}

TEST(Srg, MatchesBruteForceOnRandomClasses) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto f = i % 3 == 0 ? gbent_fixtures(4, 2, 8, i)[i % 8] : oracle::random_gbf(n, 2, rng);
    WeightSet x(4), y(4);
    for (unsigned v = 0; v < 4; ++v) {
      if (rng() & 1) x.insert(v);
      if (rng() & 1) y.insert(v);
    }
    for (auto conv : {Convention::AllVertices, Convention::ExcludeEndpoints}) {
      const bool exclude = conv == Convention::ExcludeEndpoints;
      const auto r = srg_check(f, x, y, conv);
      const auto ex = oracle::counts_on_class(f, x, y, exclude);
      const auto ex2 = oracle::counts_on_class(f, r.x2, y, exclude);
      EXPECT_EQ(r.certified, ex.size() <= 1 && ex2.size() <= 1) << table_string(f);
      if (r.certified) {
        EXPECT_EQ(r.e.has_value(), ex.size() == 1);
        if (r.e) EXPECT_EQ(*r.e, *ex.begin());
        if (r.d) EXPECT_EQ(*r.d, *ex2.begin());
      }
    }
  }
}

TEST(Srg, GeneralizedRestrictsToClasses) {
  const auto f = oracle::gbent_q4();
  const WeightSet x1(4, {1}), x2(4, {2}), y(4, {2, 3});
  const auto r = srg_check_generalized(f, x1, x2, y, Convention::AllVertices);
  const auto c1 = oracle::counts_on_class(f, x1, y, false), c2 = oracle::counts_on_class(f, x2, y, false);
  EXPECT_EQ(r.certified, c1.size() <= 1 && c2.size() <= 1);
  EXPECT_FALSE(r.bisection);
  EXPECT_TRUE(r.generalized);
  if (r.e) EXPECT_EQ(*r.e, *c1.begin());
  if (r.d) EXPECT_EQ(*r.d, *c2.begin());
  EXPECT_THROW(srg_check_generalized(f, WeightSet(4, {1, 2}), WeightSet(4, {2}), y, Convention::AllVertices), Error);
}

TEST(Srg, ClassicalAgreesWithBruteForce) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_boolean(1 + static_cast<int>(rng() % 5), rng);
    const auto c = classical_srg_check(g);
    const auto s = oracle::classical(g);
    EXPECT_EQ(c.certified, s.e.size() <= 1 && s.d.size() <= 1);
    if (c.certified && c.e) EXPECT_EQ(*c.e, *s.e.begin());
    if (c.certified && c.d) EXPECT_EQ(*c.d, *s.d.begin());
    if (c.counting_identity) EXPECT_TRUE(*c.counting_identity);
    if (c.three_eigenvalue_identities) EXPECT_TRUE(*c.three_eigenvalue_identities);
    if (c.matrix_identity) EXPECT_TRUE(*c.matrix_identity);
  }
}

TEST(Srg, BernasconiCodenottiOnQuadraticForms) {
  // Every quadratic form sum_{i<j} b_ij x_i x_j on four variables.
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<std::uint8_t> t(16, 0);
    for (Vertex x = 0; x < 16; ++x) {
      unsigned bit = 0, v = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j, ++bit)
          if ((mask >> bit) & 1) v ^= ((x >> (3 - i)) & (x >> (3 - j))) & 1;
      t[x] = static_cast<std::uint8_t>(v);
    }
    const BooleanFunction g(4, t);
    const auto bc = bernasconi_codenotti_check(g);
    EXPECT_TRUE(bc.holds) << mask;
    EXPECT_EQ(bc.bent, oracle::bent(g));
    EXPECT_TRUE(bernasconi_codenotti_check(~g).holds) << mask;
  }
}

TEST(Srg, ConstancyWitnessIsGenuine) {
  const auto f = oracle::small_q4();
  const auto r = neighbor_count_constancy(f, WeightSet(4, {1, 2}), Convention::AllVertices);
  const auto brute = oracle::counts_on_class(f, WeightSet::all(4), WeightSet(4, {1, 2}), false);
  EXPECT_EQ(r.constant, brute.size() == 1);
  if (!r.constant) {
    ASSERT_TRUE(r.witness);
    EXPECT_NE(r.witness->count_ab, r.witness->count_cd);
  }
}

TEST(Eigen, SmallQ4Exact) {
  const auto v = eigen_verify(oracle::small_q4());
  EXPECT_TRUE(v.exact);
  EXPECT_TRUE(v.numeric_checked);
  EXPECT_TRUE(v.numeric_match);
  EXPECT_LE(v.max_deviation, 1e-9);
  EXPECT_EQ(spectrum_via_wht(oracle::small_q4()), gwht_fast(oracle::small_q4()));
}

TEST(Eigen, RandomFunctions) {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 50; ++i) {
    const auto f = oracle::random_gbf(6, 3, rng);
    const auto v = eigen_verify(f);
    ASSERT_TRUE(v.exact);
    ASSERT_TRUE(v.numeric_match);
    ASSERT_EQ(spectrum_via_wht(f), gwht_fast(f));
  }
}

TEST(Butson, Verdicts) {
  EXPECT_TRUE(butson_check(oracle::gbent_q4()).butson);
  const auto ex = butson_check(oracle::small_q4());
  EXPECT_FALSE(ex.butson);
  ASSERT_TRUE(ex.row && ex.column && ex.entry);
  EXPECT_EQ(*ex.entry, oracle::gram_entry(oracle::small_q4(), *ex.row, *ex.column));
  for (std::uint64_t i = 0; i < 256; ++i) {
    const auto f = oracle::nth_function(2, 2, i);
    ASSERT_EQ(butson_check(f).butson, oracle::butson(f));
    ASSERT_EQ(butson_check(f).butson, is_gbent(f).gbent);
  }
}

TEST(Butson, LargeNUsesAutocorrelation) {
  const auto f = gbent_fixtures(10, 2, 1, 3)[0];
  const auto v = butson_check(f);
  EXPECT_TRUE(v.butson);
  EXPECT_FALSE(v.direct);
}

TEST(Strength, SmallQ4) {
  for (Vertex a = 0; a < 4; ++a) EXPECT_EQ(strength(oracle::small_q4(), a), 5);
}

TEST(LocalSrg, SmallQ4MatchesEnumeration) {
  const auto f = oracle::small_q4();
  const auto r = local_srg_check(f);
  EXPECT_EQ(r.weights, (std::vector<unsigned>{2, 3}));
  // Modified graph: edges with f(u + v) != 0 are 0-2, 0-3, 1-2, 1-3; every
  // vertex has one edge of each weight.
  EXPECT_EQ(r.k.at(2), 1u);
  EXPECT_EQ(r.k.at(3), 1u);
  EXPECT_TRUE(r.certified);
}

TEST(LocalSrg, CollapsesToClassicalForBent) {
  const auto g = oracle::quadratic_bent4();
  const auto r = local_srg_check(Gbf(4, 1, g.table()));
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.k.at(1), 6u);
  EXPECT_EQ(r.lambda.at({1, 1, 1}), 2u);
  EXPECT_EQ(r.mu.at({1, 1}), 2u);
}

TEST(Export, DotCounts) {
  const auto dot = export_graph(oracle::small_q4(), ExportFormat::Dot, GraphVariant::Full);
  EXPECT_EQ(count_of(dot, "[label=\""), 4u);
  EXPECT_EQ(count_of(dot, " -- "), 6u);
  const auto modified = export_graph(oracle::small_q4(), ExportFormat::Dot, GraphVariant::Modified);
  EXPECT_EQ(count_of(modified, " -- "), 4u);
  const auto fig = export_graph(complement_function(oracle::small_q4()), ExportFormat::Dot, GraphVariant::Full);
  EXPECT_EQ(count_of(fig, " -- "), 10u);
}

TEST(Export, GraphMlCounts) {
  const auto xml = export_graph(oracle::gbent_q4(), ExportFormat::GraphMl, GraphVariant::Full);
  EXPECT_EQ(count_of(xml, "<node "), 16u);
  EXPECT_EQ(count_of(xml, "<edge "), 120u);
}

TEST(Export, JsonRoundTrip) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    const auto f = oracle::random_gbf(1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 3), rng);
    for (auto variant : {GraphVariant::Full, GraphVariant::Modified}) {
      const auto json = export_graph(f, ExportFormat::Json, variant);
      ASSERT_EQ(function_from_graph_json(json), f);
      const auto doc = nlohmann::json::parse(json);
      EXPECT_EQ(doc["schema_version"], 1);
    }
  }
}

TEST(Export, JsonRejectsNonCayley) {
  auto doc = nlohmann::json::parse(export_graph(oracle::small_q4(), ExportFormat::Json, GraphVariant::Full));
  for (auto& e : doc["edges"])
    if (e["source"] == 1 && e["target"] == 2) e["weight"] = 1;
  EXPECT_THROW(function_from_graph_json(doc.dump()), Error);
  EXPECT_THROW(function_from_graph_json("{"), Error);
}

TEST(Export, Limit) {
  EXPECT_THROW(export_graph(Gbf::zero(kExportMaxN + 1, 1), ExportFormat::Dot, GraphVariant::Full), Error);
}
