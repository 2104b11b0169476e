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

#include <optional>
#include <string>

#include "gbf/graph.hpp"
#include "gbf/theorems.hpp"

namespace gbf {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Text, Json };

OutputFormat parse_output_format(std::string_view name);

// {n, k, values: [{coeffs}], norms, gbent}; a norm that is not a rational
// integer is emitted as {coeffs}.
std::string spectrum_json(const Spectrum& s);

std::string analyze_report(const Gbf& f, OutputFormat format);

struct CheckRequest {
  std::string which;
  Convention convention = Convention::AllVertices;
  std::optional<std::string> x, x2, y;
};

// Names accepted by check_report, in display order.
const std::vector<std::string>& check_names();

std::string check_report(const Gbf& f, const CheckRequest& request, OutputFormat format);

std::string audit_json(const AuditReport& report);
std::string audit_summary(const AuditReport& report);

std::string search_report(const SearchOptions& options, const SearchResult& result, OutputFormat format);

}  // namespace gbf
