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

#include "gbf/weight_set.hpp"

#include <cctype>
#include <charconv>

namespace gbf {

WeightSet WeightSet::all(unsigned q) {
  WeightSet s(q);
  for (unsigned v = 0; v < q; ++v) s.bits_.set(v);
  return s;
}

WeightSet WeightSet::parse(std::string_view list, unsigned q) {
  WeightSet s(q);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < list.size() && std::isspace(static_cast<unsigned char>(list[pos]))) ++pos;
  };
  skip();
  if (pos == list.size()) return s;
  for (;;) {
    skip();
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(list.data() + pos, list.data() + list.size(), value);
    if (ec != std::errc{})
      fail(ErrorCode::Parse, "malformed weight list '" + std::string(list) + "' at position " + std::to_string(pos));
    pos = static_cast<std::size_t>(ptr - list.data());
    if (value >= q)
      fail(ErrorCode::InvalidArgument, "weight " + std::to_string(value) + " is not in Z_" + std::to_string(q));
    s.insert(value);
    skip();
    if (pos == list.size()) break;
    if (list[pos] != ',')
      fail(ErrorCode::Parse, "expected ',' in weight list '" + std::string(list) + "' at position " + std::to_string(pos));
    ++pos;
  }
  return s;
}

void WeightSet::insert(unsigned v) {
  if (v >= q_) fail(ErrorCode::InvalidArgument, "weight " + std::to_string(v) + " is not in Z_" + std::to_string(q_));
  bits_.set(v);
}

WeightSet WeightSet::complement() const {
  WeightSet s(q_);
  for (unsigned v = 0; v < q_; ++v)
    if (!bits_.test(v)) s.bits_.set(v);
  return s;
}

WeightSet WeightSet::reflect() const {
  WeightSet s(q_);
  for (unsigned v = 0; v < q_; ++v)
    if (bits_.test(v)) s.bits_.set(q_ - 1 - v);
  return s;
}

std::vector<unsigned> WeightSet::values() const {
  std::vector<unsigned> out;
  for (unsigned v = 0; v < q_; ++v)
    if (bits_.test(v)) out.push_back(v);
  return out;
}

std::string WeightSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto v : values()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace gbf
