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

#include "gbf/cyclotomic.hpp"
#include "gbf/weight_set.hpp"
#include "oracles.hpp"

using namespace gbf;

namespace {

CyclotomicInteger random_element(int k, std::mt19937_64& rng, int bound = 50) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::vector<std::int64_t> c(std::size_t{1} << (k - 1));
  for (auto& v : c) v = d(rng);
  return CyclotomicInteger(k, c);
}

void expect_close(std::complex<double> a, std::complex<double> b) {
  EXPECT_NEAR(a.real(), b.real(), 1e-9 * (1 + std::abs(b)));
  EXPECT_NEAR(a.imag(), b.imag(), 1e-9 * (1 + std::abs(b)));
}

}  // namespace

TEST(Cyclotomic, RootsMatchComplex) {
  for (int k = 1; k <= 5; ++k) {
    const unsigned q = 1u << k;
    for (unsigned a = 0; a < q; ++a) {
      expect_close(root_of_unity(a, k).to_complex(), oracle::zeta_power(a, q));
      EXPECT_EQ(root_of_unity(a, k).as_root(), a);
    }
    EXPECT_THROW(root_of_unity(q, k), Error);
  }
  EXPECT_EQ(CyclotomicInteger(2, 2).as_root(), std::nullopt);
}

TEST(Cyclotomic, RingAxiomsAgainstFloat) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a - a, CyclotomicInteger(k, 0));
    if (i % 10 == 0) {
      expect_close((a * (b + c)).to_complex(), a.to_complex() * (b.to_complex() + c.to_complex()));
      expect_close((a - b).to_complex(), a.to_complex() - b.to_complex());
    }
  }
}

TEST(Cyclotomic, ConjugateAndNorm) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto a = random_element(k, rng);
    ASSERT_EQ(conjugate(conjugate(a)), a);
    expect_close(conjugate(a).to_complex(), std::conj(a.to_complex()));
    const auto n = norm_squared(a);
    expect_close(n.to_complex(), std::norm(a.to_complex()));
  }
  EXPECT_EQ(norm_squared(CyclotomicInteger(2, {1, -1})).is_integer(), 2);
  EXPECT_EQ(norm_squared(CyclotomicInteger(2, {3, 1})).is_integer(), 10);
}

TEST(Cyclotomic, AddRootAndDivision) {
  CyclotomicInteger x(3);
  x.add_root(5);
  x.add_root(1, 2);
  EXPECT_EQ(x, root_of_unity(5, 3) + root_of_unity(1, 3) * 2);
  EXPECT_EQ(CyclotomicInteger(2, {4, -6}).divided_by(2), CyclotomicInteger(2, {2, -3}));
  EXPECT_THROW(CyclotomicInteger(2, {3, 2}).divided_by(2), Error);
}

TEST(Cyclotomic, OverflowIsReported) {
  const CyclotomicInteger big(1, std::numeric_limits<std::int64_t>::max());
  try {
    (void)(big + CyclotomicInteger(1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Arithmetic);
  }
  EXPECT_THROW((void)(big * big), Error);
}

TEST(Cyclotomic, MismatchedRingsRejected) {
  EXPECT_THROW((void)(CyclotomicInteger(2, 1) + CyclotomicInteger(3, 1)), Error);
}

TEST(Cyclotomic, ToString) {
  EXPECT_EQ(CyclotomicInteger(2, {1, -1}).to_string(), "1 - z");
  EXPECT_EQ(CyclotomicInteger(2, {0, 0}).to_string(), "0");
}

TEST(WeightSetTest, Operations) {
  const auto x = WeightSet::parse("0, 1", 4);
  EXPECT_EQ(x, WeightSet(4, {0, 1}));
  EXPECT_EQ(x.complement(), WeightSet(4, {2, 3}));
  EXPECT_EQ(x.reflect(), WeightSet(4, {2, 3}));
  EXPECT_EQ(WeightSet(4, {0, 3}).reflect(), WeightSet(4, {0, 3}));
  EXPECT_TRUE(x.disjoint(x.complement()));
  EXPECT_EQ(x.to_string(), "{0,1}");
  EXPECT_TRUE(WeightSet::parse("", 4).empty());
  EXPECT_THROW(WeightSet::parse("4", 4), Error);
  EXPECT_THROW(WeightSet::parse("1,,2", 4), Error);
  EXPECT_THROW(WeightSet(6), Error);
}
