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

#ifndef RDE_LINALG_HPP
#define RDE_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "rde/rng.hpp"

namespace rde {

/// Dense row-major matrix. Just enough linear algebra for the benchmark
/// transforms; not a general-purpose type.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  const std::vector<double>& data() const { return data_; }

  static Matrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

std::vector<double> mat_vec(const Matrix& m, std::span<const double> v);

/// max_ij |(AᵀA - I)_ij|, the orthogonality residual.
double orthogonality_error(const Matrix& m);

/// Random orthogonal d x d matrix: a square matrix of standard normal draws
/// orthonormalized by (twice-applied) modified Gram-Schmidt.
Matrix make_rotation(std::size_t d, RngStream& rng);

}  // namespace rde

#endif  // RDE_LINALG_HPP
