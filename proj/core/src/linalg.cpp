// Copyright 2026 The RDE Authors.
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

#include "rde/linalg.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace rde {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> mat_vec(const Matrix& m, std::span<const double> v) {
  assert(m.cols() == v.size());
  std::vector<double> out(m.rows(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double acc = 0.0;
    const auto row = m.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

double orthogonality_error(const Matrix& m) {
  const std::size_t n = m.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += m(k, i) * m(k, j);
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::fabs(dot - target));
    }
  }
  return worst;
}

namespace {

// One modified Gram-Schmidt sweep over the rows of m.
void orthonormalize_rows(Matrix& m) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += m(i, k) * m(j, k);
      for (std::size_t k = 0; k < n; ++k) m(i, k) -= dot * m(j, k);
    }
    double norm = 0.0;
    for (std::size_t k = 0; k < n; ++k) norm += m(i, k) * m(i, k);
    norm = std::sqrt(norm);
    if (norm < 1e-12) {
      throw std::runtime_error("degenerate random matrix during rotation build");
    }
    for (std::size_t k = 0; k < n; ++k) m(i, k) /= norm;
  }
}

}  // namespace

Matrix make_rotation(std::size_t d, RngStream& rng) {
  Matrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m(r, c) = rng.normal(0.0, 1.0);
  }
  // Two sweeps push the residual well below the 1e-10 contract.
  orthonormalize_rows(m);
  orthonormalize_rows(m);
  return m;
}

}  // namespace rde
