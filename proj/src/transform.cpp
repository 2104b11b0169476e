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

#include "gbf/transform.hpp"

namespace gbf {
namespace {

void require_compatible(const Gbf& f, const Gbf& g) {
  if (f.n() != g.n() || f.k() != g.k())
    fail(ErrorCode::DimensionMismatch, "functions must share n and k (got n=" + std::to_string(f.n()) +
                                           ",k=" + std::to_string(f.k()) + " and n=" + std::to_string(g.n()) +
                                           ",k=" + std::to_string(g.k()) + ")");
}

void require_vertex(Vertex z, int n) {
  if (z >= (Vertex{1} << n)) fail(ErrorCode::InvalidArgument, "vertex index " + std::to_string(z) + " outside V_" + std::to_string(n));
}

}  // namespace

Spectrum::Spectrum(int n, int k, std::vector<std::int64_t> coefficient_major)
    : n_(n), k_(k), data_(std::move(coefficient_major)) {
  check_dimensions(n, k);
  if (data_.size() != size() * basis()) fail(ErrorCode::DimensionMismatch, "spectrum storage has the wrong length");
}

Spectrum::Spectrum(int n, int k, const std::vector<CyclotomicInteger>& values) : n_(n), k_(k) {
  check_dimensions(n, k);
  if (values.size() != size())
    fail(ErrorCode::DimensionMismatch, "spectrum needs " + std::to_string(size()) + " values, got " + std::to_string(values.size()));
  data_.assign(size() * basis(), 0);
  for (std::size_t u = 0; u < size(); ++u) {
    if (values[u].k() != k) fail(ErrorCode::DimensionMismatch, "spectrum value from a different cyclotomic ring");
    for (std::size_t j = 0; j < basis(); ++j) data_[j * size() + u] = values[u][j];
  }
}

CyclotomicInteger Spectrum::value(Vertex u) const {
  std::vector<std::int64_t> c(basis());
  for (std::size_t j = 0; j < basis(); ++j) c[j] = data_[j * size() + u];
  return CyclotomicInteger(k_, std::move(c));
}

std::vector<CyclotomicInteger> Spectrum::values() const {
  std::vector<CyclotomicInteger> out;
  out.reserve(size());
  for (Vertex u = 0; u < size(); ++u) out.push_back(value(u));
  return out;
}

CyclotomicInteger Spectrum::parseval_sum() const {
  CyclotomicInteger sum(k_);
  for (Vertex u = 0; u < size(); ++u) sum += norm_squared(value(u));
  return sum;
}

// ---------------------------------------------------------------------------

Spectrum gwht_naive(const Gbf& f) {
  if (f.n() > kNaiveMaxN)
    fail(ErrorCode::LimitExceeded, "naive transform is limited to n <= " + std::to_string(kNaiveMaxN));
  const std::size_t size = f.size();
  const unsigned half = f.q() / 2;
  std::vector<CyclotomicInteger> values;
  values.reserve(size);
  for (Vertex u = 0; u < size; ++u) {
    CyclotomicInteger h(f.k());
    for (Vertex x = 0; x < size; ++x) h.add_root(f[x] + (dot_parity(u, x) ? half : 0u));
    values.push_back(std::move(h));
  }
  return Spectrum(f.n(), f.k(), values);
}

void fwht_inplace(std::span<std::int64_t> values) {
  const std::size_t size = values.size();
  for (std::size_t len = 1; len < size; len <<= 1)
    for (std::size_t block = 0; block < size; block += 2 * len)
      for (std::size_t i = block; i < block + len; ++i) {
        const auto a = values[i];
        const auto b = values[i + len];
        values[i] = a + b;
        values[i + len] = a - b;
      }
}

Spectrum gwht_fast(const Gbf& f) {
  const std::size_t size = f.size();
  const std::size_t half = f.q() / 2;
  if (static_cast<std::uint64_t>(size) * half > kFastMaxEntries)
    fail(ErrorCode::LimitExceeded, "spectrum for n=" + std::to_string(f.n()) + ", k=" + std::to_string(f.k()) +
                                       " exceeds the in-memory cap of " + std::to_string(kFastMaxEntries) + " coefficients");
  // zeta^f(x) is +e_j when f(x) = j and -e_j when f(x) = j + q/2; each basis
  // coordinate is then an ordinary +-1/0 vector transformed independently.
  // Magnitudes stay below 2^n <= 2^24, so the int64 butterflies cannot overflow.
  std::vector<std::int64_t> data(size * half, 0);
  for (Vertex x = 0; x < size; ++x) {
    const unsigned v = f[x];
    if (v < half)
      data[v * size + x] = 1;
    else
      data[(v - half) * size + x] = -1;
  }
  for (std::size_t j = 0; j < half; ++j) fwht_inplace(std::span(data).subspan(j * size, size));
  return Spectrum(f.n(), f.k(), std::move(data));
}

std::vector<CyclotomicInteger> gwht_inverse(const Spectrum& s) {
  const std::size_t size = s.size();
  auto data = s.raw();
  for (std::size_t j = 0; j < s.basis(); ++j) fwht_inplace(std::span(data).subspan(j * size, size));
  std::vector<CyclotomicInteger> roots;
  roots.reserve(size);
  for (Vertex x = 0; x < size; ++x) {
    std::vector<std::int64_t> c(s.basis());
    for (std::size_t j = 0; j < s.basis(); ++j) c[j] = data[j * size + x];
    auto r = CyclotomicInteger(s.k(), std::move(c)).divided_by(static_cast<std::int64_t>(size));
    if (!r.as_root())
      fail(ErrorCode::Arithmetic, "inverse transform entry " + std::to_string(x) + " = " + r.to_string() +
                                      " is not a root of unity; the spectrum does not come from a function");
    roots.push_back(std::move(r));
  }
  return roots;
}

Gbf decode_roots(const std::vector<CyclotomicInteger>& roots, int n, int k) {
  if (roots.size() != (std::size_t{1} << n)) fail(ErrorCode::DimensionMismatch, "root vector has the wrong length");
  std::vector<std::uint8_t> table(roots.size());
  for (std::size_t x = 0; x < roots.size(); ++x) {
    if (roots[x].k() != k) fail(ErrorCode::DimensionMismatch, "root from a different cyclotomic ring");
    const auto a = roots[x].as_root();
    if (!a) fail(ErrorCode::Arithmetic, "entry " + std::to_string(x) + " is not a root of unity");
    table[x] = static_cast<std::uint8_t>(*a);
  }
  return Gbf(n, k, std::move(table));
}

std::vector<std::int64_t> wht(const BooleanFunction& g) {
  std::vector<std::int64_t> w(g.size());
  for (Vertex x = 0; x < w.size(); ++x) w[x] = g[x] ? -1 : 1;
  fwht_inplace(w);
  return w;
}

CyclotomicInteger crosscorrelation(const Gbf& f, const Gbf& g, Vertex z) {
  require_compatible(f, g);
  require_vertex(z, f.n());
  const unsigned q = f.q();
  CyclotomicInteger c(f.k());
  for (Vertex x = 0; x < f.size(); ++x) c.add_root((f[x] + q - g[x ^ z]) & (q - 1));
  return c;
}

CyclotomicInteger autocorrelation(const Gbf& f, Vertex z) { return crosscorrelation(f, f, z); }

CyclotomicInteger crosscorrelation_via_spectrum(const Spectrum& hf, const Spectrum& hg, Vertex z) {
  if (hf.n() != hg.n() || hf.k() != hg.k()) fail(ErrorCode::DimensionMismatch, "spectra must share n and k");
  require_vertex(z, hf.n());
  CyclotomicInteger sum(hf.k());
  for (Vertex x = 0; x < hf.size(); ++x) {
    auto term = hf.value(x) * conjugate(hg.value(x));
    if (dot_parity(z, x))
      sum -= term;
    else
      sum += term;
  }
  return sum.divided_by(static_cast<std::int64_t>(hf.size()));
}

CyclotomicInteger crosscorrelation_via_spectrum(const Gbf& f, const Gbf& g, Vertex z) {
  require_compatible(f, g);
  return crosscorrelation_via_spectrum(gwht_fast(f), gwht_fast(g), z);
}

CyclotomicInteger correlation_transform(const Gbf& f, const Gbf& g, Vertex x) {
  require_compatible(f, g);
  require_vertex(x, f.n());
  CyclotomicInteger sum(f.k());
  for (Vertex u = 0; u < f.size(); ++u) {
    const auto c = crosscorrelation(f, g, u);
    if (dot_parity(u, x))
      sum -= c;
    else
      sum += c;
  }
  return sum;
}

GbentVerdict is_gbent(const Spectrum& s) {
  const auto target = static_cast<std::int64_t>(s.size());
  for (Vertex u = 0; u < s.size(); ++u) {
    auto ns = norm_squared(s.value(u));
    const auto as_int = ns.is_integer();
    if (!as_int || *as_int != target) return GbentVerdict{false, u, std::move(ns)};
  }
  return GbentVerdict{true, std::nullopt, std::nullopt};
}

GbentVerdict is_gbent(const Gbf& f) { return is_gbent(gwht_fast(f)); }

BentVerdict is_bent(const BooleanFunction& g) {
  const auto w = wht(g);
  if (g.n() % 2 != 0) return BentVerdict{false, Vertex{0}, w[0]};
  const auto target = static_cast<std::int64_t>(g.size());
  for (Vertex u = 0; u < w.size(); ++u)
    if (w[u] * w[u] != target) return BentVerdict{false, u, w[u]};
  return BentVerdict{true, std::nullopt, 0};
}

}  // namespace gbf
