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

#ifndef RDE_PROBLEMS_HPP
#define RDE_PROBLEMS_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rde/linalg.hpp"
#include "rde/rng.hpp"

namespace rde {

/// Per-dimension box bounds.
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  static Bounds uniform(std::size_t dim, double lo, double hi);
  std::size_t dim() const { return lower.size(); }
  /// Throws ConfigError unless every dimension satisfies lower < upper.
  void validate() const;
};

/// Shift + rotation applied before a base function: z = M (x - o).
struct Transform {
  std::vector<double> shift;
  Matrix rotation;
};

/// A bound-constrained minimization problem. The base callable is evaluated
/// on z = M (x - o) when a transform is attached, on x itself otherwise.
/// Every catalog function attains its known optimum value f_opt at the point
/// reported by optimum().
class ObjectiveFunction {
 public:
  using BaseFn = std::function<double(std::span<const double>)>;

  ObjectiveFunction(std::string name, std::size_t dim, Bounds bounds,
                    double f_opt, BaseFn base);

  /// Throws std::invalid_argument on dimension mismatch.
  double evaluate(std::span<const double> x) const;

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const Bounds& bounds() const { return bounds_; }
  double f_opt() const { return f_opt_; }

  bool has_transform() const { return transform_.has_value(); }
  const Transform& transform() const { return *transform_; }
  void set_transform(Transform t);

  /// Location of the known global optimum (the shift point when transformed).
  const std::vector<double>& optimum() const { return optimum_; }
  void set_optimum(std::vector<double> x) { optimum_ = std::move(x); }

 private:
  std::string name_;
  std::size_t dim_;
  Bounds bounds_;
  double f_opt_;
  BaseFn base_;
  std::optional<Transform> transform_;
  std::vector<double> optimum_;
};

// Base functions, each with minimum 0 at z = 0. The classic multimodal ones
// carry the usual internal input scaling so that a [-100, 100] search box
// maps onto their natural domain.
namespace functions {
double sphere(std::span<const double> z);
double elliptic(std::span<const double> z);
double zakharov(std::span<const double> z);
double rastrigin(std::span<const double> z);
double ackley(std::span<const double> z);
double griewank(std::span<const double> z);
double schwefel(std::span<const double> z);
double rosenbrock(std::span<const double> z);
double levy(std::span<const double> z);
}  // namespace functions

/// Names accepted by make_function, in catalog order.
const std::vector<std::string>& function_catalog();

/// Builds an untransformed catalog function on [-100, 100]^dim.
/// "hybrid" and "composition" draw their internal structure from rng; the
/// plain bases ignore it. Throws ConfigError for unknown names.
ObjectiveFunction make_function(std::string_view name, std::size_t dim,
                                RngStream& rng);

/// Attaches a random shift (uniform within 80% of the box) and a random
/// rotation. "composition" instances already carry internal shifts and are
/// returned unchanged.
ObjectiveFunction with_random_transform(ObjectiveFunction fn, RngStream& rng);

/// Plain-text transform files (row-major decimal text): round-trips exactly.
void save_transform(const Transform& t, std::ostream& os);
Transform load_transform(std::istream& is);
void save_transform_file(const Transform& t, const std::string& path);
Transform load_transform_file(const std::string& path);

}  // namespace rde

#endif  // RDE_PROBLEMS_HPP
