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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gbf/error.hpp"

namespace gbf {

// A point of V_n stored as its truth-table index.
//
// Truth tables are indexed with x1 as the most significant bit:
//   enc(x1, ..., xn) = sum_j x_j * 2^(n - j).
// The weight-class constructions use the little-endian injection
//   iota(c0, ..., c_{s-1}) = sum_j c_j * 2^j
// instead; the two maps differ by bit reversal.
using Vertex = std::uint32_t;

struct Limits {
  int max_n = 24;
  int max_k = 8;
};

// Process-wide defaults consulted by the validating constructors.
const Limits& default_limits() noexcept;

std::uint64_t enc(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> enc_inverse(Vertex index, int n);
std::uint64_t iota(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> iota_inverse(std::uint64_t value, int s);
Vertex bit_reverse(Vertex index, int n) noexcept;

// Parity of u . x for two truth-table indices.
inline int dot_parity(Vertex u, Vertex x) noexcept { return __builtin_parity(u & x); }

class BooleanFunction {
 public:
  BooleanFunction() = default;
  BooleanFunction(int n, std::vector<std::uint8_t> table, const Limits& limits = default_limits());

  static BooleanFunction constant(int n, bool value);
  // x_i for 1 <= i <= n.
  static BooleanFunction variable(int n, int i);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  std::uint8_t operator[](Vertex x) const noexcept { return table_[x]; }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  BooleanFunction operator^(const BooleanFunction& other) const;
  BooleanFunction operator&(const BooleanFunction& other) const;
  BooleanFunction operator~() const;

  bool is_constant() const noexcept;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
  friend auto operator<=>(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> table_;
};

class GeneralizedBooleanFunction {
 public:
  GeneralizedBooleanFunction() = default;
  GeneralizedBooleanFunction(int n, int k, std::vector<std::uint8_t> table,
                             const Limits& limits = default_limits());

  static GeneralizedBooleanFunction zero(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  unsigned q() const noexcept { return 1u << k_; }
  std::size_t size() const noexcept { return table_.size(); }
  unsigned operator[](Vertex x) const noexcept { return table_[x]; }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  friend bool operator==(const GeneralizedBooleanFunction&, const GeneralizedBooleanFunction&) = default;
  friend auto operator<=>(const GeneralizedBooleanFunction&, const GeneralizedBooleanFunction&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<std::uint8_t> table_;
};

using Gbf = GeneralizedBooleanFunction;

void check_dimensions(int n, int k, const Limits& limits = default_limits());

unsigned evaluate(const Gbf& f, std::span<const std::uint8_t> x);

// Digit decomposition f = a0 + 2 a1 + ... + 2^(k-1) a_{k-1}.
std::vector<BooleanFunction> components(const Gbf& f);
Gbf from_components(std::span<const BooleanFunction> parts);

// f(x) -> q - 1 - f(x); digitwise this complements every component.
Gbf complement_function(const Gbf& f);

// Binary Moebius transform; entry m is the coefficient of prod_{j in m} x_j
// where m is read with the enc convention.
std::vector<std::uint8_t> boolean_anf(const BooleanFunction& g);
BooleanFunction from_anf(int n, std::vector<std::uint8_t> anf);
int algebraic_degree(const BooleanFunction& g);

std::uint64_t hamming_weight(const BooleanFunction& g) noexcept;
std::uint64_t hamming_distance(const BooleanFunction& g, const BooleanFunction& h);

std::string table_string(const Gbf& f);

}  // namespace gbf
