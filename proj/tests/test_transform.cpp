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

#include <random>

#include "gbf/transform.hpp"
#include "oracles.hpp"

using namespace gbf;

TEST(Gwht, SmallQ4Spectrum) {
  const auto s = gwht_fast(oracle::small_q4());
  EXPECT_EQ(s.value(0b00), CyclotomicInteger(2, {1, -1}));
  EXPECT_EQ(s.value(0b01), CyclotomicInteger(2, {-1, 1}));
  EXPECT_EQ(s.value(0b10), CyclotomicInteger(2, {3, 1}));
  EXPECT_EQ(s.value(0b11), CyclotomicInteger(2, {1, -1}));
  EXPECT_EQ(gwht_naive(oracle::small_q4()), s);
}

TEST(Gwht, MatchesResidueCountOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto f = oracle::random_gbf(n, k, rng);
    const auto s = gwht_fast(f);
    for (Vertex u = 0; u < f.size(); ++u) ASSERT_EQ(s.value(u), oracle::spectrum_value(f, u));
  }
}

TEST(Gwht, FastEqualsNaiveExhaustiveN2) {
  for (int k : {2, 3}) {
    for (std::uint64_t i = 0; i < oracle::exhaustive_count(2, k); ++i) {
      const auto f = oracle::nth_function(2, k, i);
      ASSERT_EQ(gwht_fast(f), gwht_naive(f));
    }
  }
}

TEST(Gwht, FastEqualsNaiveRandomN8Q8) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto f = oracle::random_gbf(8, 3, rng);
    ASSERT_EQ(gwht_fast(f), gwht_naive(f));
  }
}

TEST(Gwht, ParsevalAndInverse) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto f = oracle::random_gbf(n, k, rng);
    const auto s = gwht_fast(f);
    ASSERT_EQ(s.parseval_sum(), CyclotomicInteger(k, std::int64_t{1} << (2 * n)));
    ASSERT_EQ(decode_roots(gwht_inverse(s), n, k), f);
  }
  const auto s = gwht_fast(oracle::small_q4());
  EXPECT_EQ(decode_roots(gwht_inverse(s), 2, 2).table(), (std::vector<std::uint8_t>{0, 0, 2, 3}));
}

TEST(Gwht, InverseRejectsForeignSpectrum) {
  std::vector<std::int64_t> raw{1, 0, 0, 0, 0, 0, 0, 0};
  try {
    gwht_inverse(Spectrum(2, 2, raw));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Arithmetic);
  }
}

TEST(Gwht, NaiveLimit) {
  EXPECT_THROW(gwht_naive(Gbf::zero(kNaiveMaxN + 1, 1)), Error);
}

TEST(Wht, KnownValues) {
  const auto x1x2 = BooleanFunction::variable(2, 1) & BooleanFunction::variable(2, 2);
  EXPECT_EQ(wht(x1x2), (std::vector<std::int64_t>{2, 2, 2, -2}));
  std::mt19937_64 rng(24);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_boolean(1 + static_cast<int>(rng() % 7), rng);
    ASSERT_EQ(wht(g), oracle::walsh(g));
  }
}

TEST(Gbent, KnownVerdicts) {
  EXPECT_TRUE(is_gbent(oracle::gbent_q4()).gbent);
  const auto s = gwht_fast(oracle::gbent_q4());
  for (Vertex u = 0; u < 16; ++u) EXPECT_EQ(norm_squared(s.value(u)).is_integer(), 16);

  const auto v = is_gbent(oracle::small_q4());
  EXPECT_FALSE(v.gbent);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, 0u);
  EXPECT_EQ(v.witness_norm->is_integer(), 2);

  EXPECT_TRUE(is_bent(BooleanFunction::variable(2, 1) & BooleanFunction::variable(2, 2)).bent);
  EXPECT_TRUE(is_bent(oracle::quadratic_bent4()).bent);
  const auto nb = is_bent(BooleanFunction::variable(4, 1));
  EXPECT_FALSE(nb.bent);
  ASSERT_TRUE(nb.witness);
  EXPECT_EQ(nb.witness_value, oracle::walsh(BooleanFunction::variable(4, 1))[*nb.witness]);
}

TEST(Gbent, AgreesWithComplexOracle) {
  for (std::uint64_t i = 0; i < 256; ++i) {
    const auto f = oracle::nth_function(2, 2, i);
    ASSERT_EQ(is_gbent(f).gbent, oracle::gbent(f)) << table_string(f);
  }
  std::mt19937_64 rng(25);
  for (int i = 0; i < 500; ++i) {
    const auto g = oracle::random_boolean(4, rng);
    ASSERT_EQ(is_bent(g).bent, oracle::bent(g));
  }
}

TEST(Correlation, DirectMatchesOracle) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto f = oracle::random_gbf(n, k, rng), g = oracle::random_gbf(n, k, rng);
    for (Vertex z = 0; z < f.size(); ++z) ASSERT_EQ(crosscorrelation(f, g, z), oracle::crosscorrelation(f, g, z));
  }
}

TEST(Correlation, SpectralMatchesDirectExhaustivePairsN2) {
  std::vector<Gbf> all;
  for (std::uint64_t i = 0; i < 256; ++i) all.push_back(oracle::nth_function(2, 2, i));
  for (const auto& f : all)
    for (const auto& g : all)
      for (Vertex z = 0; z < 4; ++z) ASSERT_EQ(crosscorrelation_via_spectrum(f, g, z), crosscorrelation(f, g, z));
  const auto e = oracle::small_q4();
  for (Vertex z = 1; z < 4; ++z) EXPECT_EQ(crosscorrelation_via_spectrum(e, e, z), autocorrelation(e, z));
}

TEST(Correlation, ForwardIdentityWithoutScale) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto f = oracle::random_gbf(n, 3, rng), g = oracle::random_gbf(n, 3, rng);
    for (Vertex x = 0; x < f.size(); ++x) {
      CyclotomicInteger lhs(3);
      for (Vertex u = 0; u < f.size(); ++u) {
        const auto c = oracle::crosscorrelation(f, g, u);
        lhs += oracle::parity(u, x) ? -c : c;
      }
      const auto rhs = oracle::spectrum_value(f, x) * conjugate(oracle::spectrum_value(g, x));
      ASSERT_EQ(lhs, rhs);
      ASSERT_EQ(correlation_transform(f, g, x), rhs);
    }
  }
}

TEST(Correlation, DimensionMismatch) {
  EXPECT_THROW(crosscorrelation(Gbf::zero(2, 2), Gbf::zero(3, 2), 0), Error);
  EXPECT_THROW(crosscorrelation(Gbf::zero(2, 2), Gbf::zero(2, 3), 0), Error);
}
