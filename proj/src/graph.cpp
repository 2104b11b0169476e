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

#include "gbf/graph.hpp"

#include <algorithm>
#include <bit>

#include "support_mask.hpp"

namespace gbf {

const char* to_string(Convention c) noexcept {
  return c == Convention::AllVertices ? "all-vertices" : "exclude-endpoints";
}

Convention parse_convention(std::string_view name) {
  if (name == "all-vertices" || name == "all") return Convention::AllVertices;
  if (name == "exclude-endpoints" || name == "exclude") return Convention::ExcludeEndpoints;
  fail(ErrorCode::InvalidArgument, "unknown convention '" + std::string(name) + "' (expected all-vertices or exclude-endpoints)");
}

// ---------------------------------------------------------------------------

AdjacencyMatrix::AdjacencyMatrix(std::size_t dim, int k, WeightMode mode, std::vector<std::uint8_t> entries)
    : dim_(dim), k_(k), mode_(mode), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) fail(ErrorCode::DimensionMismatch, "adjacency matrix storage has the wrong size");
  for (auto v : entries_)
    if (v >= (1u << k_)) fail(ErrorCode::InvalidArgument, "adjacency entry outside Z_q");
}

void AdjacencyMatrix::set(std::size_t i, std::size_t j, unsigned value) {
  if (i >= dim_ || j >= dim_) fail(ErrorCode::InvalidArgument, "matrix index out of range");
  if (value >= (1u << k_)) fail(ErrorCode::InvalidArgument, "adjacency entry outside Z_q");
  entries_[i * dim_ + j] = static_cast<std::uint8_t>(value);
}

bool AdjacencyMatrix::symmetric() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

AdjacencyMatrix adjacency_matrix(const Gbf& f, WeightMode mode) {
  if (f.n() > kMatrixMaxN)
    fail(ErrorCode::LimitExceeded, "adjacency matrices are limited to n <= " + std::to_string(kMatrixMaxN));
  const std::size_t dim = f.size();
  std::vector<std::uint8_t> entries(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) entries[i * dim + j] = static_cast<std::uint8_t>(f[static_cast<Vertex>(i ^ j)]);
  return AdjacencyMatrix(dim, f.k(), mode, std::move(entries));
}

bool dyadic_check(const AdjacencyMatrix& a) {
  const std::size_t dim = a.dim();
  for (std::size_t step = 1; step < dim; step <<= 1)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (a.at(i, j) != a.at(i ^ step, j ^ step)) return false;
  return true;
}

bool dyadic_check(const Gbf& f) { return dyadic_check(adjacency_matrix(f, WeightMode::Additive)); }

// ---------------------------------------------------------------------------

std::uint64_t WeightedRegularity::r_of(const WeightSet& x) const {
  std::uint64_t total = 0;
  for (auto j : x.values())
    if (j < r.size()) total += r[j];
  return total;
}

WeightedRegularity weighted_regularity(const Gbf& f) {
  WeightedRegularity wr;
  wr.v = f.size();
  wr.r.assign(f.q(), 0);
  wr.loop_weight = f[0];
  for (Vertex t = 1; t < f.size(); ++t) ++wr.r[f[t]];
  // Every vertex a sees the multiset {f(a ^ b) : b != a}; b -> a ^ b is a
  // bijection onto V_n \ {0}, so the counts above are shared by all vertices.
  // Spot-check that directly on small graphs.
  if (f.n() <= 10) {
    const auto violation = weighted_regularity_violation(adjacency_matrix(f, WeightMode::Additive));
    if (violation) fail(ErrorCode::Internal, "Cayley graph failed weighted regularity at vertex " + std::to_string(*violation));
  }
  return wr;
}

std::optional<Vertex> weighted_regularity_violation(const AdjacencyMatrix& additive) {
  const std::size_t dim = additive.dim();
  const unsigned q = 1u << additive.k();
  std::vector<std::uint64_t> reference(q, 0), counts(q, 0);
  for (std::size_t a = 0; a < dim; ++a) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t b = 0; b < dim; ++b)
      if (b != a) ++counts[additive.at(a, b)];
    if (a == 0)
      reference = counts;
    else if (counts != reference)
      return static_cast<Vertex>(a);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::uint64_t neighbor_count(const Gbf& f, Vertex a, Vertex b, const WeightSet& y, Convention convention) {
  if (a >= f.size() || b >= f.size()) fail(ErrorCode::InvalidArgument, "vertex outside V_n");
  if (a == b) fail(ErrorCode::InvalidArgument, "neighbor_count needs two distinct vertices");
  if (y.q() != f.q()) fail(ErrorCode::DimensionMismatch, "weight set is over Z_" + std::to_string(y.q()));
  std::uint64_t count = 0;
  for (Vertex c = 0; c < f.size(); ++c) {
    if (convention == Convention::ExcludeEndpoints && (c == a || c == b)) continue;
    if (y.contains(f[a ^ c]) && y.contains(f[b ^ c])) ++count;
  }
  return count;
}

std::vector<std::uint64_t> neighbor_counts_by_difference(const Gbf& f, const WeightSet& y, Convention convention) {
  if (y.q() != f.q()) fail(ErrorCode::DimensionMismatch, "weight set is over Z_" + std::to_string(y.q()));
  const auto mask = SupportMask::from_predicate(f.n(), [&](Vertex t) { return y.contains(f[t]); });
  std::vector<std::uint64_t> counts(f.size(), 0);
  const bool zero_in = mask.test(0);
  for (Vertex z = 1; z < f.size(); ++z) {
    std::uint64_t c = mask.translated_overlap(z);
    // c = a and c = b are the t = 0 and t = z terms of the all-vertices sum.
    if (convention == Convention::ExcludeEndpoints && zero_in && mask.test(z)) c -= 2;
    counts[z] = c;
  }
  return counts;
}

namespace {

bool y_class_degenerate(const Gbf& f, const WeightSet& y) {
  std::uint64_t inside = 0;
  for (Vertex t = 1; t < f.size(); ++t)
    if (y.contains(f[t])) ++inside;
  return inside == 0 || inside == f.size() - 1;
}

// Scans z = 1..2^n-1 in order; the first value seen in a class is the
// reference and the first disagreement is the witness.
struct ClassScan {
  std::optional<std::uint64_t> value;
  Vertex first = 0;
  std::optional<ConstancyWitness> witness;

  void feed(Vertex z, std::uint64_t count) {
    if (!value) {
      value = count;
      first = z;
    } else if (!witness && count != *value) {
      witness = ConstancyWitness{0, first, *value, 0, z, count};
    }
  }
};

}  // namespace

SrgReport srg_check_generalized(const Gbf& f, const WeightSet& x1, const WeightSet& x2, const WeightSet& y,
                                Convention convention) {
  if (x1.q() != f.q() || x2.q() != f.q() || y.q() != f.q())
    fail(ErrorCode::DimensionMismatch, "weight sets must be subsets of Z_" + std::to_string(f.q()));
  if (!x1.disjoint(x2)) fail(ErrorCode::InvalidArgument, "pair classes " + x1.to_string() + " and " + x2.to_string() + " overlap");

  SrgReport report;
  report.x = x1;
  report.x2 = x2;
  report.y = y;
  report.convention = convention;
  report.generalized = true;
  report.bisection = x2 == x1.complement() && x1.size() == f.q() / 2;
  report.degenerate = y_class_degenerate(f, y);

  const auto counts = neighbor_counts_by_difference(f, y, convention);
  ClassScan first, second;
  for (Vertex z = 1; z < f.size(); ++z) {
    const unsigned w = f[z];
    if (x1.contains(w))
      first.feed(z, counts[z]);
    else if (x2.contains(w))
      second.feed(z, counts[z]);
  }
  report.e = first.value;
  report.d = second.value;
  if (first.witness) {
    report.witness = first.witness;
    report.refuted_class = "x";
  } else if (second.witness) {
    report.witness = second.witness;
    report.refuted_class = "x2";
  }
  report.certified = !report.witness;
  return report;
}

SrgReport srg_check(const Gbf& f, const WeightSet& x, const WeightSet& y, Convention convention) {
  auto report = srg_check_generalized(f, x, x.complement(), y, convention);
  report.generalized = false;
  return report;
}

ConstancyResult neighbor_count_constancy(const Gbf& f, const WeightSet& y, Convention convention) {
  const auto counts = neighbor_counts_by_difference(f, y, convention);
  ClassScan scan;
  for (Vertex z = 1; z < f.size(); ++z) scan.feed(z, counts[z]);
  return ConstancyResult{!scan.witness, scan.value, scan.witness};
}

// ---------------------------------------------------------------------------

namespace {

// Rank over F_2 of the support, via an xor basis.
int support_rank(const std::vector<Vertex>& support) {
  std::vector<Vertex> basis;
  for (Vertex s : support) {
    Vertex v = s;
    for (Vertex b : basis) v = std::min(v, v ^ b);
    if (v) {
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return static_cast<int>(basis.size());
}

// Membership in span(basis) for every vertex, by closing under xor.
std::vector<std::uint8_t> span_indicator(const std::vector<Vertex>& support, std::size_t size) {
  std::vector<std::uint8_t> in(size, 0);
  std::vector<Vertex> members{0};
  in[0] = 1;
  for (Vertex s : support) {
    if (in[s]) continue;
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Vertex v = members[i] ^ s;
      in[v] = 1;
      members.push_back(v);
    }
  }
  return in;
}

}  // namespace

ClassicalSrgReport classical_srg_check(const BooleanFunction& g) {
  ClassicalSrgReport rep;
  const std::size_t size = g.size();
  rep.v = size;
  rep.has_loop = g[0] == 1;

  std::vector<Vertex> support;
  for (Vertex t = 1; t < size; ++t)
    if (g[t]) support.push_back(t);
  rep.r = support.size();

  const auto mask = SupportMask::from_predicate(g.n(), [&](Vertex t) { return t != 0 && g[t] == 1; });

  ClassScan adjacent, nonadjacent, nonadjacent_in_component;
  const auto in_span = span_indicator(support, size);
  for (Vertex z = 1; z < size; ++z) {
    // Loopless graph: c = 0 and c = z are never neighbours of both, so the
    // plain overlap already excludes the endpoints.
    const std::uint64_t common = mask.translated_overlap(z);
    if (g[z]) {
      adjacent.feed(z, common);
    } else {
      nonadjacent.feed(z, common);
      if (in_span[z]) nonadjacent_in_component.feed(z, common);
    }
  }

  rep.e = adjacent.value;
  rep.d = nonadjacent.value;
  rep.witness = adjacent.witness ? adjacent.witness : nonadjacent.witness;
  rep.certified = !rep.witness;

  const int rank = support_rank(support);
  rep.component_order = std::uint64_t{1} << rank;
  rep.components = size >> rank;
  rep.connected = rep.components == 1;
  rep.component_certified = !adjacent.witness && !nonadjacent_in_component.witness;
  rep.component_d = nonadjacent_in_component.value;
  rep.degenerate = rep.r == 0 || rep.r + 1 == rep.component_order;

  // Eigenvalues of the loopless Cayley graph are sum_{t in S} (-1)^(u.t).
  std::vector<std::int64_t> eig(size, 0);
  for (Vertex t : support) eig[t] = 1;
  fwht_inplace(eig);
  auto distinct = eig;
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  rep.distinct_eigenvalues = distinct;

  if (rep.certified && rep.e && rep.d) {
    const auto v = static_cast<std::int64_t>(rep.v);
    const auto r = static_cast<std::int64_t>(rep.r);
    const auto e = static_cast<std::int64_t>(*rep.e);
    const auto d = static_cast<std::int64_t>(*rep.d);
    rep.counting_identity = r * (r - e - 1) == d * (v - r - 1);

    // (A^2)_{0,z} = #{c : c in S, c ^ z in S}.
    bool matrix_ok = true;
    for (Vertex z = 0; z < size && matrix_ok; ++z) {
      const auto lhs = static_cast<std::int64_t>(z == 0 ? rep.r : mask.translated_overlap(z));
      const std::int64_t rhs = (e - d) * (z != 0 && g[z] ? 1 : 0) + (r - d) * (z == 0 ? 1 : 0) + d;
      matrix_ok = lhs == rhs;
    }
    rep.matrix_identity = matrix_ok;

    if (rep.connected && !rep.degenerate) {
      bool ok = distinct.size() == 3 && distinct[0] == r;
      if (ok) {
        const std::int64_t t1 = distinct[1], t2 = distinct[2];
        ok = e == r + t1 * t2 + t1 + t2 && d == r + t1 * t2;
      }
      rep.three_eigenvalue_identities = ok;
    }
  }
  return rep;
}

bool counting_identity_check(const SrgReport& report, const WeightedRegularity& wr) {
  if (report.generalized || !(report.y == report.x))
    fail(ErrorCode::InvalidArgument, "the counting identity applies to (X;X) reports only");
  if (report.convention != Convention::ExcludeEndpoints)
    fail(ErrorCode::InvalidArgument, "the counting identity counts proper neighbours; use the exclude-endpoints convention");
  if (!report.certified) fail(ErrorCode::InvalidArgument, "the counting identity needs a certified report");
  const auto v = static_cast<std::int64_t>(wr.v);
  const auto rx = static_cast<std::int64_t>(wr.r_of(report.x));
  // An empty pair class leaves its parameter free; it is multiplied by zero.
  const auto e = static_cast<std::int64_t>(report.e.value_or(0));
  const auto d = static_cast<std::int64_t>(report.d.value_or(0));
  return rx * (rx - e - 1) == d * (v - rx - 1);
}

CayleyGraph complement_graph(const Gbf& f) {
  CayleyGraph g(complement_function(f));
  if (!complement_regularity_reversed(weighted_regularity(f), weighted_regularity(g.function())))
    fail(ErrorCode::Internal, "complement graph violates the weight reversal rbar[q-1-j] = r[j]");
  return g;
}

bool complement_regularity_reversed(const WeightedRegularity& original, const WeightedRegularity& complement) {
  if (original.r.size() != complement.r.size() || original.v != complement.v) return false;
  const std::size_t q = original.r.size();
  for (std::size_t j = 0; j < q; ++j)
    if (complement.r[q - 1 - j] != original.r[j]) return false;
  return true;
}

// ---------------------------------------------------------------------------

Spectrum spectrum_via_wht(const Gbf& f) { return gwht_fast(f); }

ButsonVerdict butson_check(const Gbf& f) {
  ButsonVerdict verdict;
  const std::size_t size = f.size();
  const unsigned q = f.q();
  if (f.n() <= kButsonDirectMaxN) {
    verdict.direct = true;
    const auto a = adjacency_matrix(f, WeightMode::Multiplicative);
    const auto expected_diagonal = CyclotomicInteger(f.k(), static_cast<std::int64_t>(size));
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) {
        // (A A^*)_{r,c} = sum_j zeta^(A[r][j] - A[c][j]).
        CyclotomicInteger entry(f.k());
        for (std::size_t j = 0; j < size; ++j) entry.add_root((a.at(r, j) + q - a.at(c, j)) & (q - 1));
        const bool ok = r == c ? entry == expected_diagonal : entry.is_zero();
        if (!ok) {
          verdict.row = static_cast<Vertex>(r);
          verdict.column = static_cast<Vertex>(c);
          verdict.entry = std::move(entry);
          return verdict;
        }
      }
    verdict.butson = true;
    return verdict;
  }
  // (A A^*)_{a,b} = C_f(a ^ b); the diagonal is 2^n by construction.
  for (Vertex z = 1; z < size; ++z) {
    auto c = autocorrelation(f, z);
    if (!c.is_zero()) {
      verdict.row = 0;
      verdict.column = z;
      verdict.entry = std::move(c);
      return verdict;
    }
  }
  verdict.butson = true;
  return verdict;
}

std::int64_t strength(const Gbf& f, Vertex a) {
  if (a >= f.size()) fail(ErrorCode::InvalidArgument, "vertex outside V_n");
  std::int64_t s = 0;
  for (Vertex b = 0; b < f.size(); ++b) s += f[a ^ b];
  return s;
}

// ---------------------------------------------------------------------------

LocalSrgReport local_srg_check(const Gbf& f) {
  if (f.n() > kMatrixMaxN) fail(ErrorCode::LimitExceeded, "local strong regularity is limited to n <= " + std::to_string(kMatrixMaxN));
  LocalSrgReport rep;
  const std::size_t size = f.size();
  const unsigned q = f.q();

  std::vector<std::uint64_t> k(q, 0);
  std::vector<Vertex> support;
  for (Vertex t = 1; t < size; ++t)
    if (f[t] != 0) {
      ++k[f[t]];
      support.push_back(t);
    }
  for (unsigned a = 1; a < q; ++a)
    if (k[a]) {
      rep.weights.push_back(a);
      rep.k[a] = k[a];
    }
  rep.connected = support_rank(support) == f.n();

  // |N_a(u)| is the same for every u by translation; record it once.
  std::vector<std::uint64_t> table(q * q);
  // First z seen for each lambda / mu key, for witnesses.
  std::map<std::tuple<unsigned, unsigned, unsigned>, Vertex> lambda_first;
  std::map<std::pair<unsigned, unsigned>, Vertex> mu_first;
  for (Vertex z = 1; z < size; ++z) {
    std::fill(table.begin(), table.end(), 0);
    // u1 = z, u2 = 0: v in N_{a1}(z) and v in N_{a2}(0), v not in {0, z}.
    for (Vertex v = 1; v < size; ++v) {
      if (v == z) continue;
      const unsigned a1 = f[v ^ z], a2 = f[v];
      if (a1 != 0 && a2 != 0) ++table[a1 * q + a2];
    }
    const unsigned a3 = f[z];
    for (unsigned a1 : rep.weights)
      for (unsigned a2 : rep.weights) {
        const std::uint64_t count = table[a1 * q + a2];
        if (a3 != 0) {
          const auto key = std::make_tuple(a1, a2, a3);
          auto [it, inserted] = rep.lambda.emplace(key, count);
          if (inserted) {
            lambda_first[key] = z;
          } else if (it->second != count && rep.failed_parameter.empty()) {
            rep.failed_parameter = "lambda";
            rep.failed_index = {a1, a2, a3};
            rep.witness = ConstancyWitness{z, 0, count, lambda_first[key], 0, it->second};
          }
        } else {
          const auto key = std::make_pair(a1, a2);
          auto [it, inserted] = rep.mu.emplace(key, count);
          if (inserted) {
            mu_first[key] = z;
          } else if (it->second != count && rep.failed_parameter.empty()) {
            rep.failed_parameter = "mu";
            rep.failed_index = {a1, a2};
            rep.witness = ConstancyWitness{z, 0, count, mu_first[key], 0, it->second};
          }
        }
      }
  }
  rep.certified = rep.failed_parameter.empty();
  return rep;
}

}  // namespace gbf
