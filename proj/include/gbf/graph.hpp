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
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gbf/core.hpp"
#include "gbf/cyclotomic.hpp"
#include "gbf/transform.hpp"
#include "gbf/weight_set.hpp"

namespace gbf {

inline constexpr int kMatrixMaxN = 12;
inline constexpr int kButsonDirectMaxN = 8;
inline constexpr int kNumericEigenMaxN = 8;
inline constexpr int kEigenExactMaxN = 10;
inline constexpr int kExportMaxN = 8;

enum class WeightMode { Additive, Multiplicative };

// Who may serve as a common neighbour c of a pair (a, b).
//   AllVertices:      every c in V_n, including a and b (loops count).
//   ExcludeEndpoints: c not in {a, b}.
enum class Convention { AllVertices, ExcludeEndpoints };

const char* to_string(Convention c) noexcept;
Convention parse_convention(std::string_view name);

// The edge-weighted Cayley graph of f, kept implicit: w(a, b) = f(a ^ b),
// multiplicatively zeta^f(a ^ b); the loop at every vertex has weight f(0).
class CayleyGraph {
 public:
  explicit CayleyGraph(Gbf f) : f_(std::move(f)) {}

  const Gbf& function() const noexcept { return f_; }
  int n() const noexcept { return f_.n(); }
  std::size_t order() const noexcept { return f_.size(); }
  unsigned weight(Vertex a, Vertex b) const noexcept { return f_[a ^ b]; }
  unsigned loop_weight() const noexcept { return f_[0]; }

  friend bool operator==(const CayleyGraph&, const CayleyGraph&) = default;

 private:
  Gbf f_;
};

// Dense 2^n x 2^n matrix of additive weights. In multiplicative mode the
// stored value is the exponent of zeta.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix(std::size_t dim, int k, WeightMode mode, std::vector<std::uint8_t> entries);

  std::size_t dim() const noexcept { return dim_; }
  int k() const noexcept { return k_; }
  WeightMode mode() const noexcept { return mode_; }
  unsigned at(std::size_t i, std::size_t j) const noexcept { return entries_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, unsigned value);
  CyclotomicInteger root_at(std::size_t i, std::size_t j) const { return CyclotomicInteger::root(at(i, j), k_); }
  bool symmetric() const noexcept;

 private:
  std::size_t dim_;
  int k_;
  WeightMode mode_;
  std::vector<std::uint8_t> entries_;
};

AdjacencyMatrix adjacency_matrix(const Gbf& f, WeightMode mode);

// True iff A[i][j] == A[i ^ 2^m][j ^ 2^m] for every m < n, i.e. every
// 2^(m+1) block repeats its diagonal sub-blocks.
bool dyadic_check(const AdjacencyMatrix& a);
bool dyadic_check(const Gbf& f);

struct WeightedRegularity {
  std::uint64_t v = 0;
  std::vector<std::uint64_t> r;  // r[j] = #{t != 0 : f(t) = j}
  unsigned loop_weight = 0;

  std::uint64_t r_of(const WeightSet& x) const;
  friend bool operator==(const WeightedRegularity&, const WeightedRegularity&) = default;
};

WeightedRegularity weighted_regularity(const Gbf& f);

// Per-vertex weight counts of an explicit additive weight table (no Cayley
// structure assumed). Returns the first vertex whose counts differ from
// vertex 0, or nullopt when the table is weighted regular.
std::optional<Vertex> weighted_regularity_violation(const AdjacencyMatrix& additive);

// |N_Y(a, b)| by direct enumeration of c.
std::uint64_t neighbor_count(const Gbf& f, Vertex a, Vertex b, const WeightSet& y, Convention convention);

// |N_Y(0, z)| for every z (entry 0 unused), computed with word-parallel masks.
std::vector<std::uint64_t> neighbor_counts_by_difference(const Gbf& f, const WeightSet& y, Convention convention);

struct ConstancyWitness {
  Vertex a = 0, b = 0;
  std::uint64_t count_ab = 0;
  Vertex c = 0, d = 0;
  std::uint64_t count_cd = 0;
};

struct SrgReport {
  WeightSet x;   // first pair class
  WeightSet x2;  // second pair class (complement of x for the bisection form)
  WeightSet y;
  Convention convention = Convention::AllVertices;
  bool generalized = false;  // built by srg_check_generalized
  bool bisection = false;    // x2 == complement(x) and |x| == q/2
  bool certified = false;
  std::optional<std::uint64_t> e;  // count on pairs with f(a^b) in x (nullopt: no such pair)
  std::optional<std::uint64_t> d;  // count on pairs with f(a^b) in x2
  std::optional<ConstancyWitness> witness;
  std::string refuted_class;       // "x" or "x2" when refuted
  bool degenerate = false;         // Y-weighted edges (t != 0) empty or complete
};

SrgReport srg_check(const Gbf& f, const WeightSet& x, const WeightSet& y, Convention convention);
SrgReport srg_check_generalized(const Gbf& f, const WeightSet& x1, const WeightSet& x2, const WeightSet& y,
                                Convention convention);

// Constancy of |N_Y(a, b)| over all pairs a != b.
struct ConstancyResult {
  bool constant = true;
  std::optional<std::uint64_t> value;
  std::optional<ConstancyWitness> witness;
};
ConstancyResult neighbor_count_constancy(const Gbf& f, const WeightSet& y, Convention convention);

// Classical strongly regular check on the loopless Cayley graph of g. Here
// e counts common neighbours of adjacent pairs and d of nonadjacent pairs.
struct ClassicalSrgReport {
  std::uint64_t v = 0;
  std::uint64_t r = 0;
  bool has_loop = false;  // g(0) = 1; the loop is dropped
  bool certified = false;
  std::optional<std::uint64_t> e;
  std::optional<std::uint64_t> d;
  std::optional<ConstancyWitness> witness;
  bool connected = false;
  std::uint64_t components = 0;
  std::uint64_t component_order = 0;
  bool component_certified = false;  // srg restricted to one component
  std::optional<std::uint64_t> component_d;
  bool degenerate = false;  // no edges, or every component is complete
  std::vector<std::int64_t> distinct_eigenvalues;  // of the loopless graph, descending
  std::optional<bool> three_eigenvalue_identities;  // connected nondegenerate certified graphs only
  std::optional<bool> counting_identity;            // r(r - e - 1) = d(v - r - 1)
  std::optional<bool> matrix_identity;              // A^2 = (e - d)A + (r - d)I + dJ
};

ClassicalSrgReport classical_srg_check(const BooleanFunction& g);

// r_X (r_X - e_X - 1) = d_X (v - r_X - 1) for a certified (X;X) report
// computed with the ExcludeEndpoints convention.
bool counting_identity_check(const SrgReport& report, const WeightedRegularity& wr);

CayleyGraph complement_graph(const Gbf& f);
// rbar[q - 1 - j] == r[j] for every j.
bool complement_regularity_reversed(const WeightedRegularity& original, const WeightedRegularity& complement);

Spectrum spectrum_via_wht(const Gbf& f);

struct EigenVerification {
  bool exact = false;
  std::optional<Vertex> failing_character;
  bool numeric_checked = false;
  bool numeric_match = false;
  double max_deviation = 0.0;
};

// Exact (n <= kEigenExactMaxN): A_f x_chi = H_f(u) x_chi for every character
// vector. Numeric (n <= kNumericEigenMaxN): eigenvalues of the complex matrix
// match the WHT multiset within tolerance.
EigenVerification eigen_verify(const Gbf& f, double tolerance = 1e-9);

struct ButsonVerdict {
  bool butson = false;
  bool direct = false;  // full matrix product (else autocorrelation route)
  std::optional<Vertex> row, column;
  std::optional<CyclotomicInteger> entry;
};

ButsonVerdict butson_check(const Gbf& f);

std::int64_t strength(const Gbf& f, Vertex a);

struct LocalSrgReport {
  std::vector<unsigned> weights;  // W: nonzero weights present on edges
  std::map<unsigned, std::uint64_t> k;
  std::map<std::tuple<unsigned, unsigned, unsigned>, std::uint64_t> lambda;
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> mu;
  bool certified = false;
  bool connected = false;
  // Refutation: which parameter failed and two differing pairs.
  std::string failed_parameter;
  std::vector<unsigned> failed_index;
  std::optional<ConstancyWitness> witness;
};

// Edge-weighted local strong regularity on the modified graph: u ~ v iff
// u != v and f(u ^ v) != 0.
LocalSrgReport local_srg_check(const Gbf& f);

enum class ExportFormat { Dot, GraphMl, Json };
enum class GraphVariant { Full, Modified };

ExportFormat parse_export_format(std::string_view name);
GraphVariant parse_graph_variant(std::string_view name);

std::string export_graph(const Gbf& f, ExportFormat format, GraphVariant variant);
// Rebuilds f from the JSON export (either variant).
Gbf function_from_graph_json(std::string_view json);

}  // namespace gbf
