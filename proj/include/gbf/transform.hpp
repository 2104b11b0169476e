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
#include <vector>

#include "gbf/core.hpp"
#include "gbf/cyclotomic.hpp"

namespace gbf {

// The 2^n generalized Walsh-Hadamard coefficients
//   H_f(u) = sum_x zeta^f(x) (-1)^(u.x)
// held exactly. Storage is coefficient-major: coefficient j of H(u) lives at
// j * 2^n + u, which lets the fast transform run one integer butterfly per
// basis coefficient.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(int n, int k, std::vector<std::int64_t> coefficient_major);
  Spectrum(int n, int k, const std::vector<CyclotomicInteger>& values);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return std::size_t{1} << n_; }
  std::size_t basis() const noexcept { return std::size_t{1} << (k_ - 1); }

  CyclotomicInteger value(Vertex u) const;
  std::vector<CyclotomicInteger> values() const;
  const std::vector<std::int64_t>& raw() const noexcept { return data_; }

  // Sum of |H(u)|^2 over u; equals 2^(2n) for any spectrum of a function.
  CyclotomicInteger parseval_sum() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  int n_ = 0;
  int k_ = 1;
  std::vector<std::int64_t> data_;
};

// Direct O(4^n) evaluation; restricted to n <= kNaiveMaxN.
inline constexpr int kNaiveMaxN = 14;
Spectrum gwht_naive(const Gbf& f);

// Butterfly evaluation, O(k n 2^n). Rejects inputs whose spectrum would need
// more than kFastMaxEntries coefficients.
inline constexpr std::uint64_t kFastMaxEntries = std::uint64_t{1} << 27;
Spectrum gwht_fast(const Gbf& f);

// Inverse transform: returns the root vector (zeta^f(x))_x. Throws
// ErrorCode::Arithmetic when the spectrum does not come from a function.
std::vector<CyclotomicInteger> gwht_inverse(const Spectrum& s);
// Maps a root vector back to the truth table.
Gbf decode_roots(const std::vector<CyclotomicInteger>& roots, int n, int k);

// Classical transform W_g(u) = sum_x (-1)^(g(x) + u.x).
std::vector<std::int64_t> wht(const BooleanFunction& g);
// In-place integer butterfly used by both transforms.
void fwht_inplace(std::span<std::int64_t> values);

CyclotomicInteger crosscorrelation(const Gbf& f, const Gbf& g, Vertex z);
CyclotomicInteger autocorrelation(const Gbf& f, Vertex z);

// C_{f,g}(z) = 2^-n sum_x H_f(x) conj(H_g(x)) (-1)^(z.x). The division must
// be exact; a remainder raises ErrorCode::Arithmetic.
CyclotomicInteger crosscorrelation_via_spectrum(const Gbf& f, const Gbf& g, Vertex z);
CyclotomicInteger crosscorrelation_via_spectrum(const Spectrum& hf, const Spectrum& hg, Vertex z);

// sum_u C_{f,g}(u) (-1)^(u.x); equals H_f(x) conj(H_g(x)) with no 2^-n factor.
CyclotomicInteger correlation_transform(const Gbf& f, const Gbf& g, Vertex x);

struct GbentVerdict {
  bool gbent = false;
  std::optional<Vertex> witness;               // first u with |H(u)|^2 != 2^n
  std::optional<CyclotomicInteger> witness_norm;
};

GbentVerdict is_gbent(const Gbf& f);
GbentVerdict is_gbent(const Spectrum& s);

struct BentVerdict {
  bool bent = false;
  std::optional<Vertex> witness;
  std::int64_t witness_value = 0;  // W_g(witness)
};

BentVerdict is_bent(const BooleanFunction& g);

}  // namespace gbf
