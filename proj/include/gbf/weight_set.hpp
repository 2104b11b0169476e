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

#include <bitset>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "gbf/error.hpp"

namespace gbf {

// A subset of Z_q, q <= 256.
class WeightSet {
 public:
  WeightSet() = default;
  explicit WeightSet(unsigned q) : q_(q) { check_q(q); }
  WeightSet(unsigned q, std::initializer_list<unsigned> values) : WeightSet(q) {
    for (auto v : values) insert(v);
  }
  WeightSet(unsigned q, const std::vector<unsigned>& values) : WeightSet(q) {
    for (auto v : values) insert(v);
  }

  static WeightSet all(unsigned q);
  // Parses "0,1,3" (whitespace tolerated, empty string = empty set).
  static WeightSet parse(std::string_view list, unsigned q);

  unsigned q() const noexcept { return q_; }
  bool contains(unsigned v) const noexcept { return v < q_ && bits_.test(v); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  void insert(unsigned v);

  WeightSet complement() const;
  // {q - 1 - v : v in this}
  WeightSet reflect() const;
  bool disjoint(const WeightSet& other) const { return (bits_ & other.bits_).none(); }

  std::vector<unsigned> values() const;
  std::string to_string() const;  // "{0,1}"

  friend bool operator==(const WeightSet&, const WeightSet&) = default;

 private:
  static void check_q(unsigned q) {
    if (q < 2 || q > 256 || (q & (q - 1)) != 0) fail(ErrorCode::InvalidArgument, "weight sets need q a power of two in [2, 256]");
  }

  unsigned q_ = 2;
  std::bitset<256> bits_;
};

}  // namespace gbf
