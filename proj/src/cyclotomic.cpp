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

#include "gbf/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gbf {
namespace {

std::size_t basis_size(int k) {
  if (k < 1 || k > 16) fail(ErrorCode::InvalidArgument, "cyclotomic order 2^k requires 1 <= k <= 16, got k=" + std::to_string(k));
  return std::size_t{1} << (k - 1);
}

void require_same_k(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.k() != b.k())
    fail(ErrorCode::DimensionMismatch,
         "cyclotomic operands from different rings (k=" + std::to_string(a.k()) + " vs k=" + std::to_string(b.k()) + ")");
}

}  // namespace

CyclotomicInteger::CyclotomicInteger(int k, Coeff integer) : k_(k), coeffs_(basis_size(k), 0) { coeffs_[0] = integer; }

CyclotomicInteger::CyclotomicInteger(int k, std::vector<Coeff> coeffs) : k_(k), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_size(k))
    fail(ErrorCode::DimensionMismatch, "power-basis coefficient vector for k=" + std::to_string(k) + " must have " +
                                           std::to_string(basis_size(k)) + " entries");
}

CyclotomicInteger CyclotomicInteger::root(unsigned a, int k) {
  CyclotomicInteger r(k);
  if (a >= r.q()) fail(ErrorCode::InvalidArgument, "root exponent " + std::to_string(a) + " is not in Z_" + std::to_string(r.q()));
  r.coeffs_[0] = 0;
  r.add_root(a);
  return r;
}

bool CyclotomicInteger::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

std::optional<CyclotomicInteger::Coeff> CyclotomicInteger::is_integer() const noexcept {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return std::nullopt;
  return coeffs_[0];
}

void CyclotomicInteger::add_root(unsigned a, Coeff times) {
  const unsigned half = static_cast<unsigned>(coeffs_.size());
  a &= q() - 1;
  if (a < half)
    coeffs_[a] = checked::add(coeffs_[a], times);
  else
    coeffs_[a - half] = checked::sub(coeffs_[a - half], times);
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
  require_same_k(*this, other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked::add(coeffs_[j], other.coeffs_[j]);
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& other) {
  require_same_k(*this, other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked::sub(coeffs_[j], other.coeffs_[j]);
  return *this;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  require_same_k(a, b);
  const std::size_t half = a.coeffs_.size();
  CyclotomicInteger out(a.k_);
  for (std::size_t i = 0; i < half; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < half; ++j) {
      if (b.coeffs_[j] == 0) continue;
      const auto term = checked::mul(a.coeffs_[i], b.coeffs_[j]);
      const std::size_t d = i + j;
      // zeta^(q/2) = -1 folds the upper half back with a sign flip.
      if (d < half)
        out.coeffs_[d] = checked::add(out.coeffs_[d], term);
      else
        out.coeffs_[d - half] = checked::sub(out.coeffs_[d - half], term);
    }
  }
  return out;
}

CyclotomicInteger& CyclotomicInteger::operator*=(const CyclotomicInteger& other) { return *this = *this * other; }

CyclotomicInteger& CyclotomicInteger::operator*=(Coeff scalar) {
  for (auto& c : coeffs_) c = checked::mul(c, scalar);
  return *this;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  CyclotomicInteger out = *this;
  for (auto& c : out.coeffs_) c = checked::sub(0, c);
  return out;
}

CyclotomicInteger CyclotomicInteger::divided_by(Coeff divisor) const {
  if (divisor == 0) fail(ErrorCode::Arithmetic, "division of a cyclotomic integer by zero");
  CyclotomicInteger out = *this;
  for (auto& c : out.coeffs_) {
    if (c % divisor != 0)
      fail(ErrorCode::Arithmetic, to_string() + " is not divisible by " + std::to_string(divisor) + " in Z[zeta]");
    c /= divisor;
  }
  return out;
}

std::optional<unsigned> CyclotomicInteger::as_root() const noexcept {
  std::optional<unsigned> found;
  const unsigned half = static_cast<unsigned>(coeffs_.size());
  for (unsigned j = 0; j < half; ++j) {
    const Coeff c = coeffs_[j];
    if (c == 0) continue;
    if (found || (c != 1 && c != -1)) return std::nullopt;
    found = c == 1 ? j : j + half;
  }
  return found;
}

std::complex<double> CyclotomicInteger::to_complex() const {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(q());
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) sum += static_cast<double>(coeffs_[j]) * std::polar(1.0, step * static_cast<double>(j));
  return sum;
}

std::string CyclotomicInteger::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Coeff c = coeffs_[j];
    if (c == 0) continue;
    const Coeff magnitude = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    if (j == 0) {
      out << magnitude;
    } else {
      if (magnitude != 1) out << magnitude << '*';
      out << 'z';
      if (j > 1) out << '^' << j;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

CyclotomicInteger conjugate(const CyclotomicInteger& x) {
  // zeta^j -> zeta^(q - j) = -zeta^(q/2 - j) for 0 < j < q/2.
  const std::size_t half = x.coeffs().size();
  std::vector<CyclotomicInteger::Coeff> c(half, 0);
  c[0] = x[0];
  for (std::size_t j = 1; j < half; ++j) c[half - j] = checked::sub(0, x[j]);
  return CyclotomicInteger(x.k(), std::move(c));
}

CyclotomicInteger norm_squared(const CyclotomicInteger& x) { return x * conjugate(x); }

}  // namespace gbf
