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

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <vector>

#include "gbf/graph.hpp"

namespace gbf {

EigenVerification eigen_verify(const Gbf& f, double tolerance) {
  if (f.n() > kEigenExactMaxN)
    fail(ErrorCode::LimitExceeded, "eigenvalue verification is limited to n <= " + std::to_string(kEigenExactMaxN));
  EigenVerification out;
  const auto spectrum = gwht_fast(f);
  const std::size_t size = f.size();
  const unsigned q = f.q();
  const unsigned half = q / 2;

  // (A x_u)(i) = sum_j zeta^f(i ^ j) (-1)^(u.j) must equal (-1)^(u.i) H(u).
  out.exact = true;
  for (Vertex u = 0; u < size && out.exact; ++u) {
    const auto h = spectrum.value(u);
    const auto minus_h = -h;
    for (Vertex i = 0; i < size; ++i) {
      CyclotomicInteger row(f.k());
      for (Vertex j = 0; j < size; ++j) row.add_root((f[i ^ j] + (dot_parity(u, j) ? half : 0u)) & (q - 1));
      if (row != (dot_parity(u, i) ? minus_h : h)) {
        out.exact = false;
        out.failing_character = u;
        break;
      }
    }
  }

  if (f.n() <= kNumericEigenMaxN) {
    out.numeric_checked = true;
    const auto dim = static_cast<Eigen::Index>(size);
    Eigen::MatrixXcd a(dim, dim);
    std::vector<std::complex<double>> roots(q);
    for (unsigned t = 0; t < q; ++t) roots[t] = CyclotomicInteger::root(t, f.k()).to_complex();
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = roots[f[static_cast<Vertex>(i ^ j)]];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
    if (solver.info() != Eigen::Success) {
      out.numeric_match = false;
      out.max_deviation = INFINITY;
      return out;
    }
    std::vector<std::complex<double>> numeric(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
    std::vector<bool> used(size, false);
    double worst = 0.0;
    for (Vertex u = 0; u < size; ++u) {
      const auto target = spectrum.value(u).to_complex();
      std::size_t best = size;
      double best_dist = INFINITY;
      for (std::size_t m = 0; m < size; ++m) {
        if (used[m]) continue;
        const double dist = std::abs(numeric[m] - target);
        if (dist < best_dist) {
          best_dist = dist;
          best = m;
        }
      }
      used[best] = true;
      worst = std::max(worst, best_dist);
    }
    out.max_deviation = worst;
    out.numeric_match = worst <= tolerance;
  }
  return out;
}

}  // namespace gbf
