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

#include <string>
#include <string_view>

#include "gbf/core.hpp"

namespace gbf {

// Builds a function from a formula over Z_q.
//
//   sum     := xorterm (('+' | '-') xorterm)*          addition mod q
//   xorterm := product ('(+)' product)*                 bitwise XOR of residues
//   product := unary (('*')? unary)*                    multiplication mod q
//   unary   := '-' unary | atom
//   atom    := integer | 'x' index | '(' sum ')'
//
// Juxtaposition multiplies, so "2x1x2" == "2*x1*x2". On 0/1 operands '*'
// is AND and '(+)' is XOR. Whitespace is ignored between tokens.
Gbf parse_expression(std::string_view src, int n, int k, const Limits& limits = default_limits());

// .gbf text format: a header line "n=<int> k=<int>" followed by 2^n
// whitespace-separated values in enc order. '#' starts a comment.
Gbf parse_gbf(std::string_view text, const Limits& limits = default_limits());
std::string format_gbf(const Gbf& f);
Gbf load_gbf(const std::string& path, const Limits& limits = default_limits());
void save_gbf(const Gbf& f, const std::string& path);

}  // namespace gbf
