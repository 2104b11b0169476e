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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbf/core.hpp"
#include "gbf/graph.hpp"
#include "gbf/transform.hpp"
#include "gbf/weight_set.hpp"

namespace gbf {

// Masks c in V_{k-1}, listed as iota_inverse(m, k - 1) for m = 0, 1, ...
std::vector<std::vector<std::uint8_t>> weight_class_masks(int k);

// f_c = c_0 a_0 ^ ... ^ c_{k-2} a_{k-2} ^ a_{k-1}.
BooleanFunction f_c(const Gbf& f, std::span<const std::uint8_t> c);

struct WeightClassPair {
  std::vector<std::uint8_t> c;
  WeightSet x0;
  WeightSet x1;
};

// X_c^i = { iota(t) + iota(d) : t <= (c, 1), wt(t) = i mod 2, d <= not c }.
// Built from that subset description and cross-checked against the digit
// parity rule v in X_c^1 <=> c_0 v_0 ^ ... ^ c_{k-2} v_{k-2} ^ v_{k-1} = 1.
WeightClassPair weight_classes(std::span<const std::uint8_t> c, int k);

// Classical autocorrelation sum_x (-1)^(g(x) ^ g(x ^ z)) for every z.
std::vector<std::int64_t> boolean_autocorrelation(const BooleanFunction& g);
// Constant over z != 0.
bool has_constant_autocorrelation(const BooleanFunction& g);

struct Gb4Report {
  Convention convention = Convention::AllVertices;
  ConstancyResult cond_i;   // |N_{2,3}(a, b)| constant
  ConstancyResult cond_ii;  // |N_{1,2}(a, b)| constant
  bool passes() const noexcept { return cond_i.constant && cond_ii.constant; }
};

// Requires k = 2 and even n.
Gb4Report gb4_check(const Gbf& f, Convention convention = Convention::AllVertices);

// is_bent(a_1) and is_bent(a_0 ^ a_1). Requires k = 2 and even n.
bool decomposition_criterion_q4(const Gbf& f);

// A non-gbent function passing gb4_check must have a_1 or a_0 ^ a_1 with
// constant autocorrelation but not bent; this tests that description.
bool is_degenerate_gb4_exception(const Gbf& f);

struct NecessaryConditionEntry {
  WeightClassPair classes;
  ConstancyResult reading_a;  // |N_{X_c^1}(u, v)| constant over all pairs
  SrgReport reading_b;        // (X_c^0; X_c^1)-srg with e = d
  bool reading_b_holds = false;
  BentVerdict fc_bent;
};

struct NecessaryConditionReport {
  Convention convention = Convention::AllVertices;
  std::vector<NecessaryConditionEntry> entries;
  bool reading_a_holds = false;
  bool reading_b_holds = false;
  bool all_fc_bent = false;
};

// Requires k >= 2 and even n.
NecessaryConditionReport necessary_condition_check(const Gbf& f, Convention convention = Convention::AllVertices);

struct CorollaryCase {
  std::size_t a0 = 0, a1 = 0;  // indices into the set
  WeightSet x;
  SrgReport report;
};

struct BentSetCorollaryReport {
  bool is_bent_set = false;
  std::string precondition_failure;
  std::vector<CorollaryCase> cases;
  bool holds = false;
};

// For every ordered pair (a_0, a_1) from a bent set, f = a_0 + 2 a_1 must be
// (X; complement X)-srg for the six X of size 2.
BentSetCorollaryReport bent_set_corollary_check(std::span<const BooleanFunction> parts,
                                                Convention convention = Convention::AllVertices);

// f = (h ^ a1) + 2 a1; both inputs must be bent.
Gbf construct_gbent_q4(const BooleanFunction& a1, const BooleanFunction& h);

// g(x, y) = x . pi(y) ^ t(y) on n = 2m variables, x the first m coordinates.
BooleanFunction maiorana_mcfarland(int m, std::span<const Vertex> pi, std::span<const std::uint8_t> t);
// f(x, y) = 2^(k-1) (x . pi(y)) + t(y) over Z_{2^k}; always gbent.
Gbf generalized_maiorana_mcfarland(int m, int k, std::span<const Vertex> pi, std::span<const std::uint8_t> t);

// Deterministic gbent fixtures for even n, verified on construction.
std::vector<Gbf> gbent_fixtures(int n, int k, std::size_t count, std::uint64_t seed = 1);

struct ComplementTheoremReport {
  bool applicable = false;         // certified, reflect(X) in {X, complement X}, reflect(Y) == Y
  bool reflect_fixes_x = false;    // q - 1 - X == X (else == complement of X)
  SrgReport original;
  SrgReport literal;               // srg_check(fbar, q - 1 - X, Y)
  SrgReport fixed_bisection;       // srg_check(fbar, X, Y)
  bool literal_holds = false;      // certified, (e, d) preserved
  bool fixed_bisection_holds = false;  // certified, preserved or swapped per case
};

ComplementTheoremReport complement_theorem_check(const Gbf& f, const WeightSet& x, const WeightSet& y,
                                                 Convention convention);

// Bent iff the loopless Cayley graph is strongly regular with e = d, for
// nondegenerate g. Functions with g(0) = 1 are tested through their
// complement.
struct BernasconiCodenottiCheck {
  bool bent = false;
  bool degenerate = false;
  bool via_complement = false;
  bool srg_e_equals_d = false;
  bool holds = false;
};
BernasconiCodenottiCheck bernasconi_codenotti_check(const BooleanFunction& g);

// ---------------------------------------------------------------------------
// Audit

enum class AuditScope { Exhaustive, Random, Fixtures };

inline constexpr std::uint64_t kDefaultAuditBudget = 1'000'000;
// Reads GBF_AUDIT_BUDGET, falling back to kDefaultAuditBudget.
std::uint64_t audit_budget_from_env();

struct AuditOptions {
  int n = 2;
  int k = 2;
  AuditScope scope = AuditScope::Exhaustive;
  std::uint64_t count = 0;  // random scope
  std::uint64_t seed = 42;
  std::uint64_t budget = 0;  // 0: audit_budget_from_env()
  std::vector<Convention> conventions{Convention::AllVertices, Convention::ExcludeEndpoints};
  std::size_t fixture_count = 64;
  bool per_function = false;
  unsigned threads = 0;  // 0: hardware concurrency
  std::size_t max_informational_exceptions = 100;
};

struct AuditException {
  std::vector<std::uint8_t> table;
  std::string detail;
  bool permitted = false;
};

struct ClaimTally {
  std::string name;
  std::string statement;
  bool binding = true;
  std::uint64_t checked = 0;
  std::uint64_t premise = 0;
  std::uint64_t holds = 0;
  std::uint64_t violations = 0;
  std::uint64_t permitted = 0;
  std::vector<AuditException> exceptions;
  bool truncated = false;
};

struct FunctionRecord {
  std::vector<std::uint8_t> table;
  bool gbent = false;
  bool butson = false;
  std::optional<bool> decomposition;
  std::optional<bool> gb4_all_vertices;
  std::optional<bool> gb4_exclude_endpoints;
  std::optional<bool> necessary;
  std::optional<bool> all_fc_bent;
};

struct AuditReport {
  AuditOptions options;
  std::uint64_t total = 0;
  std::uint64_t fixtures = 0;
  std::uint64_t gbent = 0;
  std::vector<ClaimTally> claims;
  std::uint64_t forbidden = 0;
  std::vector<FunctionRecord> records;
};

// Number of functions in the exhaustive scope, or nullopt above 2^63.
std::optional<std::uint64_t> exhaustive_size(int n, int k);

AuditReport audit(const AuditOptions& options);

enum class SearchMode { Exhaustive, Random, Construct };

struct SearchOptions {
  int n = 2;
  int k = 2;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t count = 0;
  std::uint64_t seed = 42;
  std::uint64_t budget = 0;
  std::size_t fixture_count = 16;
};

struct SearchResult {
  std::uint64_t examined = 0;
  std::vector<Gbf> found;
};

SearchResult search_gbent(const SearchOptions& options);

}  // namespace gbf
