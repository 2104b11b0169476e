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

#include "gbf/theorems.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <thread>

namespace gbf {
namespace {

void require_even_n(const Gbf& f, const char* what) {
  if (f.n() % 2 != 0)
    fail(ErrorCode::Domain, std::string(what) + " is stated for even n only; got n=" + std::to_string(f.n()));
}

void require_q4(const Gbf& f, const char* what) {
  if (f.k() != 2) fail(ErrorCode::Domain, std::string(what) + " applies to q=4 (k=2) only; got k=" + std::to_string(f.k()));
}

std::string witness_text(const ConstancyWitness& w) {
  return "|N(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")|=" + std::to_string(w.count_ab) + " but |N(" +
         std::to_string(w.c) + "," + std::to_string(w.d) + ")|=" + std::to_string(w.count_cd);
}

}  // namespace

std::vector<std::vector<std::uint8_t>> weight_class_masks(int k) {
  if (k < 1 || k > 8) fail(ErrorCode::InvalidArgument, "k must be in [1, 8]");
  std::vector<std::vector<std::uint8_t>> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (k - 1)); ++m) masks.push_back(iota_inverse(m, k - 1));
  return masks;
}

BooleanFunction f_c(const Gbf& f, std::span<const std::uint8_t> c) {
  if (static_cast<int>(c.size()) != f.k() - 1)
    fail(ErrorCode::DimensionMismatch, "mask c must have k-1=" + std::to_string(f.k() - 1) + " entries, got " +
                                           std::to_string(c.size()));
  unsigned select = 1u << (f.k() - 1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] > 1) fail(ErrorCode::InvalidArgument, "mask entries must be 0 or 1");
    if (c[j]) select |= 1u << j;
  }
  std::vector<std::uint8_t> t(f.size());
  for (Vertex x = 0; x < f.size(); ++x) t[x] = static_cast<std::uint8_t>(std::popcount(f[x] & select) & 1);
  return BooleanFunction(f.n(), std::move(t));
}

WeightClassPair weight_classes(std::span<const std::uint8_t> c, int k) {
  if (k < 1 || k > 8) fail(ErrorCode::InvalidArgument, "k must be in [1, 8]");
  if (static_cast<int>(c.size()) != k - 1)
    fail(ErrorCode::DimensionMismatch, "mask c must have k-1=" + std::to_string(k - 1) + " entries");
  const unsigned q = 1u << k;
  std::vector<std::uint8_t> c1(c.begin(), c.end());
  c1.push_back(1);
  std::vector<std::uint8_t> cbar(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] > 1) fail(ErrorCode::InvalidArgument, "mask entries must be 0 or 1");
    cbar[j] = c[j] ^ 1u;
  }
  const auto top = static_cast<unsigned>(iota(c1));
  const auto free_bits = static_cast<unsigned>(iota(cbar));

  WeightClassPair out{std::vector<std::uint8_t>(c.begin(), c.end()), WeightSet(q), WeightSet(q)};
  // Enumerate t <= (c, 1) and d <= cbar as submasks.
  for (unsigned t = top;; t = (t - 1) & top) {
    for (unsigned d = free_bits;; d = (d - 1) & free_bits) {
      const unsigned v = t + d;
      if (v >= q) fail(ErrorCode::Internal, "weight class value outside Z_q");
      (std::popcount(t) % 2 ? out.x1 : out.x0).insert(v);
      if (d == 0) break;
    }
    if (t == 0) break;
  }

  for (unsigned v = 0; v < q; ++v) {
    const bool parity = std::popcount(v & top) % 2 == 1;
    if (parity != out.x1.contains(v) || parity == out.x0.contains(v))
      fail(ErrorCode::Internal, "weight class construction disagrees with the digit parity rule at v=" + std::to_string(v));
  }
  return out;
}

std::vector<std::int64_t> boolean_autocorrelation(const BooleanFunction& g) {
  // C_g = 2^-n WHT(W_g^2).
  auto w = wht(g);
  for (auto& v : w) v *= v;
  fwht_inplace(w);
  for (auto& v : w) v >>= g.n();
  return w;
}

bool has_constant_autocorrelation(const BooleanFunction& g) {
  const auto c = boolean_autocorrelation(g);
  return std::all_of(c.begin() + 1, c.end(), [&](std::int64_t v) { return c.size() < 2 || v == c[1]; });
}

Gb4Report gb4_check(const Gbf& f, Convention convention) {
  require_q4(f, "the GB4 characterization");
  require_even_n(f, "the GB4 characterization");
  Gb4Report r;
  r.convention = convention;
  r.cond_i = neighbor_count_constancy(f, WeightSet(4, {2, 3}), convention);
  r.cond_ii = neighbor_count_constancy(f, WeightSet(4, {1, 2}), convention);
  return r;
}

bool decomposition_criterion_q4(const Gbf& f) {
  require_q4(f, "the decomposition criterion");
  require_even_n(f, "the decomposition criterion");
  const auto parts = components(f);
  return is_bent(parts[1]).bent && is_bent(parts[0] ^ parts[1]).bent;
}

bool is_degenerate_gb4_exception(const Gbf& f) {
  require_q4(f, "the GB4 exception class");
  const auto parts = components(f);
  for (const auto& g : {parts[1], parts[0] ^ parts[1]})
    if (!is_bent(g).bent && has_constant_autocorrelation(g)) return true;
  return false;
}

NecessaryConditionReport necessary_condition_check(const Gbf& f, Convention convention) {
  if (f.k() < 2) fail(ErrorCode::Domain, "the necessary condition needs k >= 2");
  require_even_n(f, "the necessary condition");
  NecessaryConditionReport rep;
  rep.convention = convention;
  rep.reading_a_holds = rep.reading_b_holds = rep.all_fc_bent = true;
  for (const auto& c : weight_class_masks(f.k())) {
    NecessaryConditionEntry e;
    e.classes = weight_classes(c, f.k());
    e.reading_a = neighbor_count_constancy(f, e.classes.x1, convention);
    e.reading_b = srg_check(f, e.classes.x0, e.classes.x1, convention);
    e.reading_b_holds = e.reading_b.certified && (!e.reading_b.e || !e.reading_b.d || *e.reading_b.e == *e.reading_b.d);
    e.fc_bent = is_bent(f_c(f, c));
    rep.reading_a_holds = rep.reading_a_holds && e.reading_a.constant;
    rep.reading_b_holds = rep.reading_b_holds && e.reading_b_holds;
    rep.all_fc_bent = rep.all_fc_bent && e.fc_bent.bent;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

BentSetCorollaryReport bent_set_corollary_check(std::span<const BooleanFunction> parts, Convention convention) {
  BentSetCorollaryReport rep;
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "a bent set needs at least one function");
  const int n = parts.front().n();
  for (const auto& p : parts)
    if (p.n() != n) fail(ErrorCode::DimensionMismatch, "bent set members have mixed numbers of variables");
  for (std::size_t i = 0; i < parts.size() && rep.precondition_failure.empty(); ++i) {
    if (!is_bent(parts[i]).bent) rep.precondition_failure = "member " + std::to_string(i) + " is not bent";
    for (std::size_t j = i + 1; j < parts.size() && rep.precondition_failure.empty(); ++j)
      if (!is_bent(parts[i] ^ parts[j]).bent)
        rep.precondition_failure = "sum of members " + std::to_string(i) + " and " + std::to_string(j) + " is not bent";
  }
  rep.is_bent_set = rep.precondition_failure.empty();
  if (!rep.is_bent_set) return rep;

  rep.holds = true;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const BooleanFunction pair[2] = {parts[i], parts[j]};
      const auto f = from_components(pair);
      for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = a + 1; b < 4; ++b) {
          WeightSet x(4, {a, b});
          auto report = srg_check(f, x, x.complement(), convention);
          rep.holds = rep.holds && report.certified;
          rep.cases.push_back(CorollaryCase{i, j, x, std::move(report)});
        }
    }
  return rep;
}

Gbf construct_gbent_q4(const BooleanFunction& a1, const BooleanFunction& h) {
  if (a1.n() != h.n()) fail(ErrorCode::DimensionMismatch, "a1 and h must have the same n");
  if (!is_bent(a1).bent) fail(ErrorCode::InvalidArgument, "a1 is not bent");
  if (!is_bent(h).bent) fail(ErrorCode::InvalidArgument, "h is not bent");
  const BooleanFunction parts[2] = {h ^ a1, a1};
  auto f = from_components(parts);
  if (!is_gbent(f).gbent) fail(ErrorCode::Internal, "constructed function is not gbent");
  return f;
}

BooleanFunction maiorana_mcfarland(int m, std::span<const Vertex> pi, std::span<const std::uint8_t> t) {
  const auto f = generalized_maiorana_mcfarland(m, 1, pi, t);
  return BooleanFunction(f.n(), f.table());
}

Gbf generalized_maiorana_mcfarland(int m, int k, std::span<const Vertex> pi, std::span<const std::uint8_t> t) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "m must be at least 1");
  check_dimensions(2 * m, k);
  const std::size_t half = std::size_t{1} << m;
  if (pi.size() != half || t.size() != half)
    fail(ErrorCode::DimensionMismatch, "pi and t must have 2^m entries");
  std::vector<bool> hit(half, false);
  for (auto p : pi) {
    if (p >= half || hit[p]) fail(ErrorCode::InvalidArgument, "pi is not a permutation of V_m");
    hit[p] = true;
  }
  const unsigned q = 1u << k;
  std::vector<std::uint8_t> table(half * half);
  for (Vertex x = 0; x < half; ++x)
    for (Vertex y = 0; y < half; ++y) {
      if (t[y] >= q) fail(ErrorCode::InvalidArgument, "t takes a value outside Z_q");
      table[(x << m) | y] = static_cast<std::uint8_t>(((q / 2) * static_cast<unsigned>(dot_parity(x, pi[y])) + t[y]) & (q - 1));
    }
  return Gbf(2 * m, k, std::move(table));
}

namespace {

std::vector<Vertex> random_permutation(std::size_t size, std::mt19937_64& rng) {
  std::vector<Vertex> p(size);
  for (Vertex i = 0; i < size; ++i) p[i] = i;
  for (std::size_t i = size; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return p;
}

std::vector<std::uint8_t> random_values(std::size_t size, int bits, std::mt19937_64& rng) {
  std::vector<std::uint8_t> v(size);
  for (auto& x : v) x = static_cast<std::uint8_t>(rng() >> (64 - bits));
  return v;
}

}  // namespace

std::vector<Gbf> gbent_fixtures(int n, int k, std::size_t count, std::uint64_t seed) {
  check_dimensions(n, k);
  std::vector<Gbf> out;
  if (n % 2 != 0 || count == 0) return out;
  const int m = n / 2;
  const std::size_t half = std::size_t{1} << m;
  std::set<std::vector<std::uint8_t>> seen;
  auto keep = [&](Gbf f) {
    if (out.size() < count && seen.insert(f.table()).second) {
      if (!is_gbent(f).gbent) fail(ErrorCode::Internal, "fixture is not gbent: " + table_string(f));
      out.push_back(std::move(f));
    }
  };

  if (n == 4 && k == 2) {
    // x1 + 2 (x1 x2 ^ x3 x4)
    const auto x1 = BooleanFunction::variable(4, 1);
    const auto a1 = (x1 & BooleanFunction::variable(4, 2)) ^ (BooleanFunction::variable(4, 3) & BooleanFunction::variable(4, 4));
    keep(construct_gbent_q4(a1, a1 ^ x1));
  }

  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; out.size() < count && attempt < 32 * count; ++attempt) {
    if (k == 2 && attempt % 2 == 1) {
      const auto p1 = random_permutation(half, rng);
      const auto t1 = random_values(half, 1, rng);
      const auto p2 = random_permutation(half, rng);
      const auto t2 = random_values(half, 1, rng);
      keep(construct_gbent_q4(maiorana_mcfarland(m, p1, t1), maiorana_mcfarland(m, p2, t2)));
    } else {
      const auto p = random_permutation(half, rng);
      const auto t = random_values(half, k, rng);
      keep(generalized_maiorana_mcfarland(m, k, p, t));
    }
  }
  return out;
}

ComplementTheoremReport complement_theorem_check(const Gbf& f, const WeightSet& x, const WeightSet& y,
                                                 Convention convention) {
  ComplementTheoremReport rep;
  rep.original = srg_check(f, x, y, convention);
  const auto rx = x.reflect();
  rep.reflect_fixes_x = rx == x;
  const bool reflect_ok = rep.reflect_fixes_x || rx == x.complement();
  rep.applicable = rep.original.certified && reflect_ok && y.reflect() == y;
  if (!rep.applicable) return rep;
  const auto fbar = complement_function(f);
  rep.literal = srg_check(fbar, rx, y, convention);
  rep.fixed_bisection = srg_check(fbar, x, y, convention);
  rep.literal_holds = rep.literal.certified && rep.literal.e == rep.original.e && rep.literal.d == rep.original.d;
  if (rep.reflect_fixes_x)
    rep.fixed_bisection_holds = rep.fixed_bisection.certified && rep.fixed_bisection.e == rep.original.e &&
                                rep.fixed_bisection.d == rep.original.d;
  else
    rep.fixed_bisection_holds = rep.fixed_bisection.certified && rep.fixed_bisection.e == rep.original.d &&
                                rep.fixed_bisection.d == rep.original.e;
  return rep;
}

BernasconiCodenottiCheck bernasconi_codenotti_check(const BooleanFunction& g) {
  BernasconiCodenottiCheck out;
  out.bent = is_bent(g).bent;
  out.via_complement = g[0] == 1;
  const auto h = out.via_complement ? ~g : g;
  const auto rep = classical_srg_check(h);
  out.degenerate = rep.degenerate;
  out.srg_e_equals_d = rep.certified && rep.e && rep.d && *rep.e == *rep.d;
  out.holds = out.degenerate ? !out.bent : out.bent == out.srg_e_equals_d;
  return out;
}

// ---------------------------------------------------------------------------

std::uint64_t audit_budget_from_env() {
  if (const char* env = std::getenv("GBF_AUDIT_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    fail(ErrorCode::InvalidArgument, "GBF_AUDIT_BUDGET must be a positive integer");
  }
  return kDefaultAuditBudget;
}

std::optional<std::uint64_t> exhaustive_size(int n, int k) {
  const std::uint64_t bits = static_cast<std::uint64_t>(k) << n;
  if (n >= 32 || bits > 63) return std::nullopt;
  return std::uint64_t{1} << bits;
}

namespace {

Gbf function_at_index(std::uint64_t index, int n, int k) {
  const std::size_t size = std::size_t{1} << n;
  const unsigned mask = (1u << k) - 1;
  std::vector<std::uint8_t> t(size);
  for (std::size_t x = 0; x < size; ++x) t[x] = static_cast<std::uint8_t>((index >> (k * (size - 1 - x))) & mask);
  return Gbf(n, k, std::move(t));
}

std::string conv_tag(Convention c) { return std::string("[") + to_string(c) + "]"; }

// The weight sets examined by the counting identity and complement checks.
struct SpotSets {
  std::vector<WeightSet> counting_x;
  std::vector<WeightSet> complement_x;
  std::vector<WeightSet> complement_y;
};

SpotSets spot_sets(int k) {
  const unsigned q = 1u << k;
  SpotSets s;
  std::vector<WeightSet> family;
  auto add_unique = [](std::vector<WeightSet>& v, const WeightSet& w) {
    if (std::find(v.begin(), v.end(), w) == v.end()) v.push_back(w);
  };
  if (q <= 4) {
    for (unsigned m = 0; m < (1u << q); ++m) {
      WeightSet w(q);
      for (unsigned v = 0; v < q; ++v)
        if (m >> v & 1u) w.insert(v);
      family.push_back(w);
    }
  } else {
    for (const auto& c : weight_class_masks(k)) {
      const auto wc = weight_classes(c, k);
      add_unique(family, wc.x0);
      add_unique(family, wc.x1);
    }
    WeightSet low(q), high(q);
    for (unsigned v = 0; v < q / 2; ++v) {
      low.insert(v);
      high.insert(q / 2 + v);
    }
    add_unique(family, low);
    add_unique(family, high);
    for (unsigned v = 0; v < q; ++v) {
      add_unique(family, WeightSet(q, {v}));
      add_unique(family, WeightSet(q, {v}).complement());
    }
  }
  s.counting_x = family;
  for (const auto& x : family) {
    const auto r = x.reflect();
    if (x.size() == q / 2 && (r == x || r == x.complement())) add_unique(s.complement_x, x);
  }
  // Y with q - 1 - Y = Y: every union of reflection pairs when there are at
  // most four pairs, else Z_q and the single pairs.
  const unsigned pairs = q / 2;
  if (pairs <= 4) {
    for (unsigned m = 0; m < (1u << pairs); ++m) {
      WeightSet y(q);
      for (unsigned j = 0; j < pairs; ++j)
        if (m >> j & 1u) {
          y.insert(j);
          y.insert(q - 1 - j);
        }
      s.complement_y.push_back(y);
    }
  } else {
    s.complement_y.push_back(WeightSet::all(q));
    for (unsigned j = 0; j < pairs; ++j) s.complement_y.push_back(WeightSet(q, {j, q - 1 - j}));
  }
  return s;
}

class Tallies {
 public:
  std::size_t add(std::string name, std::string statement, bool binding) {
    ClaimTally c;
    c.name = std::move(name);
    c.statement = std::move(statement);
    c.binding = binding;
    claims_.push_back(std::move(c));
    return claims_.size() - 1;
  }

  // One evaluation: premise held or not, and whether the conclusion held.
  void record(std::size_t id, bool premise, bool conclusion, const Gbf& f, const std::function<std::string()>& detail,
              bool permitted = false) {
    auto& c = claims_[id];
    ++c.checked;
    if (!premise) return;
    ++c.premise;
    if (conclusion) {
      ++c.holds;
      return;
    }
    ++c.violations;
    if (permitted) ++c.permitted;
    c.exceptions.push_back(AuditException{f.table(), detail(), permitted});
    if (!c.binding && c.exceptions.size() > 2 * cap_) trim(c);
  }

  void merge(Tallies&& other) {
    for (std::size_t i = 0; i < claims_.size(); ++i) {
      auto& a = claims_[i];
      auto& b = other.claims_[i];
      a.checked += b.checked;
      a.premise += b.premise;
      a.holds += b.holds;
      a.violations += b.violations;
      a.permitted += b.permitted;
      a.truncated = a.truncated || b.truncated;
      std::move(b.exceptions.begin(), b.exceptions.end(), std::back_inserter(a.exceptions));
      if (!a.binding && a.exceptions.size() > 2 * cap_) trim(a);
    }
  }

  std::vector<ClaimTally> finish() {
    for (auto& c : claims_) {
      std::stable_sort(c.exceptions.begin(), c.exceptions.end(),
                       [](const AuditException& x, const AuditException& y) { return x.table < y.table; });
      if (!c.binding && c.exceptions.size() > cap_) {
        c.exceptions.resize(cap_);
        c.truncated = true;
      }
      if (!c.binding && c.violations > c.exceptions.size()) c.truncated = true;
    }
    return std::move(claims_);
  }

  void set_cap(std::size_t cap) { cap_ = cap; }

 private:
  void trim(ClaimTally& c) {
    std::stable_sort(c.exceptions.begin(), c.exceptions.end(),
                     [](const AuditException& x, const AuditException& y) { return x.table < y.table; });
    c.exceptions.resize(cap_);
    c.truncated = true;
  }

  std::vector<ClaimTally> claims_;
  std::size_t cap_ = 100;
};

struct ClaimIds {
  std::size_t regular = 0, reversal = 0, strength = 0, butson = 0, bc = 0, decomposition = 0, fc_bent = 0, counting = 0,
              complement_literal = 0, complement_fixed = 0;
  bool has_bc = false, has_q4 = false, has_necessary = false, has_counting = false;
  std::vector<std::size_t> gb4_forward, gb4_converse, necessary_a, necessary_b;
};

struct AuditContext {
  AuditOptions options;
  SpotSets sets;
  ClaimIds ids;
};

void build_claims(Tallies& t, AuditContext& ctx) {
  auto& ids = ctx.ids;
  const auto& o = ctx.options;
  const bool even = o.n % 2 == 0;
  ids.regular = t.add("weighted-regular", "every Cayley graph is weighted regular", true);
  ids.reversal = t.add("complement-reversal", "complement parameters satisfy rbar[q-1-j] = r[j]", true);
  ids.strength = t.add("strength-constant", "vertex strength is the same at every vertex", true);
  ids.butson = t.add("gbent<=>butson", "f gbent iff its multiplicative adjacency matrix is Butson-Hadamard", true);
  if (o.k == 1) {
    ids.has_bc = true;
    ids.bc = t.add("bent<=>classical-srg-e=d",
                   "nondegenerate g (tested through its complement when g(0)=1) is bent iff its Cayley graph is srg with e=d",
                   true);
  }
  if (o.k == 2 && even) {
    ids.has_q4 = true;
    ids.decomposition = t.add("gbent<=>decomposition", "f gbent iff a1 and a0^a1 are bent", true);
    for (auto c : o.conventions) {
      const bool binding = c == Convention::AllVertices;
      ids.gb4_forward.push_back(t.add("gbent=>gb4" + conv_tag(c), "gbent implies both GB4 constancy conditions", binding));
      ids.gb4_converse.push_back(t.add("gb4=>gbent" + conv_tag(c),
                                       "GB4 constancy conditions imply gbent, except for the degenerate class where a1 "
                                       "or a0^a1 has constant autocorrelation without being bent",
                                       binding));
    }
  }
  if (o.k >= 2 && even) {
    ids.has_necessary = true;
    ids.fc_bent = t.add("gbent=>fc-bent", "gbent implies f_c bent for every c", true);
    for (auto c : o.conventions) {
      const bool binding = c == Convention::AllVertices;
      ids.necessary_a.push_back(
          t.add("gbent=>necessary-constancy" + conv_tag(c), "gbent implies |N_{X_c^1}| constant for every c", binding));
      ids.necessary_b.push_back(t.add("gbent=>necessary-srg" + conv_tag(c),
                                      "gbent implies (X_c^0;X_c^1)-srg with e=d for every c", binding));
    }
  }
  if (std::find(o.conventions.begin(), o.conventions.end(), Convention::ExcludeEndpoints) != o.conventions.end()) {
    ids.has_counting = true;
    ids.counting = t.add("counting-identity", "certified (X;X) reports satisfy r_X(r_X-e_X-1) = d_X(v-r_X-1)", true);
  }
  ids.complement_literal = t.add("complement-transport-literal",
                                 "(X;Y)-srg f gives a (q-1-X;Y)-srg complement with the same (e,d)", true);
  ids.complement_fixed = t.add("complement-transport-fixed-bisection",
                               "relative to X, the complement keeps (e,d) when q-1-X=X and swaps them when q-1-X=Xbar",
                               true);
}

std::string mask_text(const std::vector<std::uint8_t>& c) {
  std::string s;
  for (auto b : c) s += static_cast<char>('0' + b);
  return s.empty() ? std::string("()") : s;
}

std::string opt_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "none"; }

bool evaluate_function(const Gbf& f, const AuditContext& ctx, Tallies& t, FunctionRecord* record) {
  const auto& o = ctx.options;
  const auto& ids = ctx.ids;
  const auto wr = weighted_regularity(f);
  if (f.n() <= 10) {
    const auto violation = weighted_regularity_violation(adjacency_matrix(f, WeightMode::Additive));
    t.record(ids.regular, true, !violation, f, [&] { return "vertex " + std::to_string(*violation) + " differs"; });
  }
  const auto fbar = complement_function(f);
  t.record(ids.reversal, true, complement_regularity_reversed(wr, weighted_regularity(fbar)), f,
           [] { return std::string("reversal fails"); });
  {
    const auto s0 = strength(f, 0);
    Vertex bad = 0;
    for (Vertex a = 1; a < f.size() && f.n() <= 8; ++a)
      if (strength(f, a) != s0) {
        bad = a;
        break;
      }
    t.record(ids.strength, true, bad == 0, f, [&] { return "strength differs at vertex " + std::to_string(bad); });
  }

  const auto gv = is_gbent(f);
  const auto bv = butson_check(f);
  t.record(ids.butson, true, gv.gbent == bv.butson, f, [&] {
    return std::string("gbent=") + (gv.gbent ? "true" : "false") + " butson=" + (bv.butson ? "true" : "false");
  });
  if (record) {
    record->table = f.table();
    record->gbent = gv.gbent;
    record->butson = bv.butson;
  }

  if (ids.has_bc) {
    const BooleanFunction g(f.n(), f.table());
    const auto bc = bernasconi_codenotti_check(g);
    t.record(ids.bc, true, bc.holds, f, [&] {
      return std::string("bent=") + (bc.bent ? "true" : "false") + " srg_e=d=" + (bc.srg_e_equals_d ? "true" : "false") +
             (bc.degenerate ? " degenerate" : "");
    });
  }

  if (ids.has_q4) {
    const bool dec = decomposition_criterion_q4(f);
    t.record(ids.decomposition, true, dec == gv.gbent, f, [&] {
      return std::string("gbent=") + (gv.gbent ? "true" : "false") + " decomposition=" + (dec ? "true" : "false");
    });
    if (record) record->decomposition = dec;
    for (std::size_t i = 0; i < o.conventions.size(); ++i) {
      const auto rep = gb4_check(f, o.conventions[i]);
      auto detail = [&] {
        if (!rep.cond_i.constant) return "condition (i) fails: " + witness_text(*rep.cond_i.witness);
        if (!rep.cond_ii.constant) return "condition (ii) fails: " + witness_text(*rep.cond_ii.witness);
        return std::string("both conditions hold but f is not gbent");
      };
      t.record(ids.gb4_forward[i], gv.gbent, rep.passes(), f, detail);
      const bool converse_violation = rep.passes() && !gv.gbent;
      t.record(ids.gb4_converse[i], rep.passes(), gv.gbent, f, detail,
               converse_violation && is_degenerate_gb4_exception(f));
      if (record) {
        if (o.conventions[i] == Convention::AllVertices) record->gb4_all_vertices = rep.passes();
        else record->gb4_exclude_endpoints = rep.passes();
      }
    }
  }

  if (ids.has_necessary) {
    for (std::size_t i = 0; i < o.conventions.size(); ++i) {
      const auto rep = necessary_condition_check(f, o.conventions[i]);
      if (i == 0) {
        t.record(ids.fc_bent, gv.gbent, rep.all_fc_bent, f, [&] {
          for (const auto& e : rep.entries)
            if (!e.fc_bent.bent) return "f_c not bent for c=" + mask_text(e.classes.c);
          return std::string();
        });
        if (record) {
          record->all_fc_bent = rep.all_fc_bent;
          record->necessary = rep.reading_a_holds;
        }
      }
      auto first_failure = [&](bool reading_a) {
        for (const auto& e : rep.entries) {
          const auto c = mask_text(e.classes.c);
          if (reading_a && !e.reading_a.constant) return "c=" + c + ": " + witness_text(*e.reading_a.witness);
          if (!reading_a && !e.reading_b_holds)
            return "c=" + c + ": " +
                   (e.reading_b.witness ? witness_text(*e.reading_b.witness)
                                        : "e=" + opt_text(e.reading_b.e) + " d=" + opt_text(e.reading_b.d));
        }
        return std::string();
      };
      t.record(ids.necessary_a[i], gv.gbent, rep.reading_a_holds, f, [&] { return first_failure(true); });
      t.record(ids.necessary_b[i], gv.gbent, rep.reading_b_holds, f, [&] { return first_failure(false); });
    }
  }

  if (ids.has_counting) {
    for (const auto& x : ctx.sets.counting_x) {
      const auto rep = srg_check(f, x, x, Convention::ExcludeEndpoints);
      if (!rep.certified) continue;
      t.record(ids.counting, true, counting_identity_check(rep, wr), f, [&] {
        return "X=" + x.to_string() + " r_X=" + std::to_string(wr.r_of(x)) + " e=" + opt_text(rep.e) +
               " d=" + opt_text(rep.d);
      });
    }
  }

  for (auto conv : o.conventions)
    for (const auto& x : ctx.sets.complement_x)
      for (const auto& y : ctx.sets.complement_y) {
        const auto rep = complement_theorem_check(f, x, y, conv);
        if (!rep.applicable) continue;
        auto detail = [&](const SrgReport& got) {
          return "X=" + x.to_string() + " Y=" + y.to_string() + conv_tag(conv) + " original (e,d)=(" +
                 opt_text(rep.original.e) + "," + opt_text(rep.original.d) + ") complement certified=" +
                 (got.certified ? "true" : "false") + " (e,d)=(" + opt_text(got.e) + "," + opt_text(got.d) + ")";
        };
        t.record(ids.complement_literal, true, rep.literal_holds, f, [&] { return detail(rep.literal); });
        t.record(ids.complement_fixed, true, rep.fixed_bisection_holds, f, [&] { return detail(rep.fixed_bisection); });
      }
  return gv.gbent;
}

}  // namespace

AuditReport audit(const AuditOptions& options) {
  check_dimensions(options.n, options.k);
  if (options.conventions.empty()) fail(ErrorCode::InvalidArgument, "audit needs at least one convention");
  AuditContext ctx{options, spot_sets(options.k), {}};
  if (ctx.options.budget == 0) ctx.options.budget = audit_budget_from_env();
  const auto& o = ctx.options;

  std::vector<Gbf> fixtures;
  std::uint64_t generated = 0;
  std::vector<Gbf> randoms;
  std::uint64_t exhaustive_total = 0;
  switch (o.scope) {
    case AuditScope::Exhaustive: {
      const auto size = exhaustive_size(o.n, o.k);
      if (!size || *size > o.budget)
        fail(ErrorCode::LimitExceeded, "exhaustive audit of q^(2^n) functions exceeds the budget of " +
                                           std::to_string(o.budget) + " (set GBF_AUDIT_BUDGET or --budget to raise it)");
      exhaustive_total = *size;
      break;
    }
    case AuditScope::Random: {
      if (o.count == 0) fail(ErrorCode::InvalidArgument, "random audit needs a positive count");
      std::mt19937_64 rng(o.seed);
      randoms.reserve(o.count);
      for (std::uint64_t i = 0; i < o.count; ++i)
        randoms.emplace_back(o.n, o.k, random_values(std::size_t{1} << o.n, o.k, rng));
      generated = o.count;
      fixtures = gbent_fixtures(o.n, o.k, o.fixture_count, o.seed);
      break;
    }
    case AuditScope::Fixtures:
      fixtures = gbent_fixtures(o.n, o.k, o.fixture_count, o.seed);
      break;
  }

  const std::uint64_t total = exhaustive_total + generated + fixtures.size();
  auto function_at = [&](std::uint64_t i) -> Gbf {
    if (i < exhaustive_total) return function_at_index(i, o.n, o.k);
    if (i < exhaustive_total + generated) return randoms[i - exhaustive_total];
    return fixtures[i - exhaustive_total - generated];
  };

  Tallies prototype;
  prototype.set_cap(o.max_informational_exceptions);
  build_claims(prototype, ctx);

  AuditReport report;
  report.options = o;
  report.total = total;
  report.fixtures = fixtures.size();
  if (o.per_function) report.records.resize(total);

  unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total)));
  std::vector<Tallies> partial(threads, prototype);
  std::vector<std::uint64_t> gbent_counts(threads, 0);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      const std::uint64_t begin = total * w / threads, end = total * (w + 1) / threads;
      for (std::uint64_t i = begin; i < end; ++i) {
        const auto f = function_at(i);
        FunctionRecord* rec = o.per_function ? &report.records[i] : nullptr;
        if (evaluate_function(f, ctx, partial[w], rec)) ++gbent_counts[w];
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Tallies merged = std::move(partial[0]);
  for (unsigned w = 1; w < threads; ++w) merged.merge(std::move(partial[w]));
  report.claims = merged.finish();
  for (const auto& c : report.claims)
    if (c.binding) report.forbidden += c.violations - c.permitted;
  for (auto g : gbent_counts) report.gbent += g;
  return report;
}

SearchResult search_gbent(const SearchOptions& options) {
  check_dimensions(options.n, options.k);
  SearchResult out;
  const std::uint64_t budget = options.budget ? options.budget : audit_budget_from_env();
  switch (options.mode) {
    case SearchMode::Exhaustive: {
      const auto size = exhaustive_size(options.n, options.k);
      if (!size || *size > budget)
        fail(ErrorCode::LimitExceeded, "exhaustive search of q^(2^n) functions exceeds the budget of " +
                                           std::to_string(budget) + " (set GBF_AUDIT_BUDGET or --budget to raise it)");
      for (std::uint64_t i = 0; i < *size; ++i) {
        auto f = function_at_index(i, options.n, options.k);
        if (is_gbent(f).gbent) out.found.push_back(std::move(f));
      }
      out.examined = *size;
      break;
    }
    case SearchMode::Random: {
      if (options.count == 0) fail(ErrorCode::InvalidArgument, "random search needs a positive count");
      std::mt19937_64 rng(options.seed);
      for (std::uint64_t i = 0; i < options.count; ++i) {
        Gbf f(options.n, options.k, random_values(std::size_t{1} << options.n, options.k, rng));
        if (is_gbent(f).gbent) out.found.push_back(std::move(f));
      }
      out.examined = options.count;
      break;
    }
    case SearchMode::Construct:
      out.found = gbent_fixtures(options.n, options.k, options.fixture_count, options.seed);
      out.examined = out.found.size();
      break;
  }
  return out;
}

}  // namespace gbf
