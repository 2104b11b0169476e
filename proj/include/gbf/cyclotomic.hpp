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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbf/error.hpp"

namespace gbf {

// An element of Z[zeta_q], q = 2^k, written in the power basis
// {1, zeta, ..., zeta^(q/2 - 1)} with zeta^(q/2) = -1. The basis is free over
// Z (the 2^k-th cyclotomic polynomial is x^(q/2) + 1), so coefficient
// equality is ring equality. For k = 1 the single coefficient is a plain
// integer and zeta = -1.
//
// Coefficients are 64-bit; any overflow raises ErrorCode::Arithmetic.
class CyclotomicInteger {
 public:
  using Coeff = std::int64_t;

  CyclotomicInteger() = default;
  explicit CyclotomicInteger(int k, Coeff integer = 0);
  CyclotomicInteger(int k, std::vector<Coeff> coeffs);

  static CyclotomicInteger root(unsigned a, int k);

  int k() const noexcept { return k_; }
  unsigned q() const noexcept { return 1u << k_; }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  Coeff operator[](std::size_t j) const noexcept { return coeffs_[j]; }

  bool is_zero() const noexcept;
  std::optional<Coeff> is_integer() const noexcept;

  CyclotomicInteger& operator+=(const CyclotomicInteger& other);
  CyclotomicInteger& operator-=(const CyclotomicInteger& other);
  CyclotomicInteger& operator*=(const CyclotomicInteger& other);
  CyclotomicInteger& operator*=(Coeff scalar);
  // Adds zeta^a (times sign) without materializing the root.
  void add_root(unsigned a, Coeff times = 1);

  CyclotomicInteger operator-() const;
  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend CyclotomicInteger operator*(CyclotomicInteger a, Coeff s) { return a *= s; }

  // Exact division by an integer; throws ErrorCode::Arithmetic unless every
  // coefficient is divisible.
  CyclotomicInteger divided_by(Coeff divisor) const;

  friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&) = default;

  // If this equals zeta^a for some a, returns a.
  std::optional<unsigned> as_root() const noexcept;

  std::complex<double> to_complex() const;
  // "a0 + a1*z + a2*z^2 ...", zero terms omitted.
  std::string to_string() const;

 private:
  int k_ = 1;
  std::vector<Coeff> coeffs_{0};
};

CyclotomicInteger conjugate(const CyclotomicInteger& x);
CyclotomicInteger norm_squared(const CyclotomicInteger& x);

inline CyclotomicInteger root_of_unity(unsigned a, int k) { return CyclotomicInteger::root(a, k); }

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Arithmetic, "cyclotomic coefficient overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Arithmetic, "cyclotomic coefficient overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Arithmetic, "cyclotomic coefficient overflow in multiplication");
  return r;
}

}  // namespace checked

}  // namespace gbf
