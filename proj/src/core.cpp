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

#include "gbf/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace gbf {

const Limits& default_limits() noexcept {
  static const Limits limits{};
  return limits;
}

void check_dimensions(int n, int k, const Limits& limits) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "number of variables must be at least 1, got " + std::to_string(n));
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1, got " + std::to_string(k));
  if (n > limits.max_n)
    fail(ErrorCode::LimitExceeded,
         "n=" + std::to_string(n) + " exceeds the configured limit " + std::to_string(limits.max_n));
  if (k > limits.max_k)
    fail(ErrorCode::LimitExceeded,
         "k=" + std::to_string(k) + " exceeds the configured limit " + std::to_string(limits.max_k));
}

std::uint64_t enc(std::span<const std::uint8_t> bits) {
  std::uint64_t index = 0;
  for (auto b : bits) {
    if (b > 1) fail(ErrorCode::InvalidArgument, "bit-vector entries must be 0 or 1");
    index = (index << 1) | b;
  }
  return index;
}

std::vector<std::uint8_t> enc_inverse(Vertex index, int n) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) bits[j] = (index >> (n - 1 - j)) & 1u;
  return bits;
}

std::uint64_t iota(std::span<const std::uint8_t> bits) {
  std::uint64_t value = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] > 1) fail(ErrorCode::InvalidArgument, "bit-vector entries must be 0 or 1");
    value |= static_cast<std::uint64_t>(bits[j]) << j;
  }
  return value;
}

std::vector<std::uint8_t> iota_inverse(std::uint64_t value, int s) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) bits[j] = (value >> j) & 1u;
  return bits;
}

Vertex bit_reverse(Vertex index, int n) noexcept {
  Vertex out = 0;
  for (int j = 0; j < n; ++j) out |= ((index >> j) & 1u) << (n - 1 - j);
  return out;
}

// ---------------------------------------------------------------------------

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table, const Limits& limits)
    : n_(n), table_(std::move(table)) {
  check_dimensions(n, 1, limits);
  if (table_.size() != (std::size_t{1} << n))
    fail(ErrorCode::DimensionMismatch, "truth table of a function on " + std::to_string(n) +
                                           " variables must have " + std::to_string(1u << n) + " entries, got " +
                                           std::to_string(table_.size()));
  for (auto v : table_)
    if (v > 1) fail(ErrorCode::InvalidArgument, "Boolean truth table entries must be 0 or 1");
}

BooleanFunction BooleanFunction::constant(int n, bool value) {
  check_dimensions(n, 1);
  return BooleanFunction(n, std::vector<std::uint8_t>(std::size_t{1} << n, value ? 1 : 0));
}

BooleanFunction BooleanFunction::variable(int n, int i) {
  check_dimensions(n, 1);
  if (i < 1 || i > n) fail(ErrorCode::InvalidArgument, "variable index out of range: x" + std::to_string(i));
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (Vertex x = 0; x < t.size(); ++x) t[x] = (x >> (n - i)) & 1u;
  return BooleanFunction(n, std::move(t));
}

BooleanFunction BooleanFunction::operator^(const BooleanFunction& other) const {
  if (n_ != other.n_) fail(ErrorCode::DimensionMismatch, "XOR of functions with different n");
  auto t = table_;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] ^= other.table_[i];
  return BooleanFunction(n_, std::move(t));
}

BooleanFunction BooleanFunction::operator&(const BooleanFunction& other) const {
  if (n_ != other.n_) fail(ErrorCode::DimensionMismatch, "AND of functions with different n");
  auto t = table_;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] &= other.table_[i];
  return BooleanFunction(n_, std::move(t));
}

BooleanFunction BooleanFunction::operator~() const {
  auto t = table_;
  for (auto& v : t) v ^= 1u;
  return BooleanFunction(n_, std::move(t));
}

bool BooleanFunction::is_constant() const noexcept {
  return std::all_of(table_.begin(), table_.end(), [&](std::uint8_t v) { return v == table_.front(); });
}

// ---------------------------------------------------------------------------

GeneralizedBooleanFunction::GeneralizedBooleanFunction(int n, int k, std::vector<std::uint8_t> table,
                                                       const Limits& limits)
    : n_(n), k_(k), table_(std::move(table)) {
  check_dimensions(n, k, limits);
  if (table_.size() != (std::size_t{1} << n))
    fail(ErrorCode::DimensionMismatch, "truth table of a function on " + std::to_string(n) +
                                           " variables must have " + std::to_string(1u << n) + " entries, got " +
                                           std::to_string(table_.size()));
  const unsigned q = 1u << k;
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (table_[x] >= q)
      fail(ErrorCode::InvalidArgument, "truth table entry " + std::to_string(table_[x]) + " at index " +
                                           std::to_string(x) + " is not in Z_" + std::to_string(q));
}

GeneralizedBooleanFunction GeneralizedBooleanFunction::zero(int n, int k) {
  check_dimensions(n, k);
  return GeneralizedBooleanFunction(n, k, std::vector<std::uint8_t>(std::size_t{1} << n, 0));
}

unsigned evaluate(const Gbf& f, std::span<const std::uint8_t> x) {
  if (static_cast<int>(x.size()) != f.n())
    fail(ErrorCode::DimensionMismatch,
         "point has " + std::to_string(x.size()) + " coordinates, function has n=" + std::to_string(f.n()));
  return f[static_cast<Vertex>(enc(x))];
}

std::vector<BooleanFunction> components(const Gbf& f) {
  std::vector<BooleanFunction> parts;
  parts.reserve(static_cast<std::size_t>(f.k()));
  for (int i = 0; i < f.k(); ++i) {
    std::vector<std::uint8_t> t(f.size());
    for (Vertex x = 0; x < t.size(); ++x) t[x] = (f[x] >> i) & 1u;
    parts.emplace_back(f.n(), std::move(t));
  }
  return parts;
}

Gbf from_components(std::span<const BooleanFunction> parts) {
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "at least one component is required");
  const int n = parts.front().n();
  for (const auto& p : parts)
    if (p.n() != n) fail(ErrorCode::DimensionMismatch, "components have mixed numbers of variables");
  std::vector<std::uint8_t> t(std::size_t{1} << n, 0);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Vertex x = 0; x < t.size(); ++x) t[x] |= static_cast<std::uint8_t>(parts[i][x] << i);
  return Gbf(n, static_cast<int>(parts.size()), std::move(t));
}

Gbf complement_function(const Gbf& f) {
  auto t = f.table();
  const unsigned top = f.q() - 1;
  for (auto& v : t) v = static_cast<std::uint8_t>(top - v);
  return Gbf(f.n(), f.k(), std::move(t));
}

namespace {

// In-place binary Moebius transform; it is its own inverse over F_2.
void moebius(std::vector<std::uint8_t>& t) {
  for (std::size_t step = 1; step < t.size(); step <<= 1)
    for (std::size_t block = 0; block < t.size(); block += 2 * step)
      for (std::size_t i = block; i < block + step; ++i) t[i + step] ^= t[i];
}

}  // namespace

std::vector<std::uint8_t> boolean_anf(const BooleanFunction& g) {
  auto t = g.table();
  moebius(t);
  return t;
}

BooleanFunction from_anf(int n, std::vector<std::uint8_t> anf) {
  moebius(anf);
  return BooleanFunction(n, std::move(anf));
}

int algebraic_degree(const BooleanFunction& g) {
  const auto anf = boolean_anf(g);
  int degree = 0;
  for (Vertex m = 0; m < anf.size(); ++m)
    if (anf[m]) degree = std::max(degree, std::popcount(m));
  return degree;
}

std::uint64_t hamming_weight(const BooleanFunction& g) noexcept {
  return static_cast<std::uint64_t>(std::count(g.table().begin(), g.table().end(), std::uint8_t{1}));
}

std::uint64_t hamming_distance(const BooleanFunction& g, const BooleanFunction& h) {
  if (g.n() != h.n()) fail(ErrorCode::DimensionMismatch, "Hamming distance of functions with different n");
  return hamming_weight(g ^ h);
}

std::string table_string(const Gbf& f) {
  std::ostringstream out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x) out << ' ';
    out << static_cast<unsigned>(f[static_cast<Vertex>(x)]);
  }
  return out.str();
}

}  // namespace gbf
