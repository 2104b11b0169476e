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

#include <bit>
#include <cstdint>
#include <vector>

#include "gbf/core.hpp"

namespace gbf {

// Bitmask of a vertex subset of V_n, one bit per vertex. The overlap of the
// mask with its xor-translate by z counts #{t : t in M and t ^ z in M}.
class SupportMask {
 public:
  template <class Pred>
  static SupportMask from_predicate(int n, Pred pred) {
    SupportMask m;
    m.n_ = n;
    const std::size_t size = std::size_t{1} << n;
    m.words_.assign((size + 63) / 64, 0);
    for (Vertex t = 0; t < size; ++t)
      if (pred(t)) m.words_[t >> 6] |= std::uint64_t{1} << (t & 63);
    return m;
  }

  bool test(Vertex t) const noexcept { return (words_[t >> 6] >> (t & 63)) & 1u; }

  std::uint64_t translated_overlap(Vertex z) const noexcept {
    const std::size_t word_shift = z >> 6;
    const unsigned in_word = z & 63;
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      total += static_cast<std::uint64_t>(std::popcount(words_[w] & permute(words_[w ^ word_shift], in_word)));
    return total;
  }

 private:
  // Moves bit i to bit i ^ z inside one word (z < 64).
  static std::uint64_t permute(std::uint64_t x, unsigned z) noexcept {
    static constexpr std::uint64_t kMasks[6] = {0x5555555555555555ULL, 0x3333333333333333ULL,
                                                0x0F0F0F0F0F0F0F0FULL, 0x00FF00FF00FF00FFULL,
                                                0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
    for (unsigned b = 0; b < 6; ++b)
      if (z & (1u << b)) {
        const unsigned s = 1u << b;
        x = ((x & kMasks[b]) << s) | ((x >> s) & kMasks[b]);
      }
    return x;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gbf
