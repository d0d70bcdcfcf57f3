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

#include "rde/problems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rde/errors.hpp"

namespace rde {

Bounds Bounds::uniform(std::size_t dim, double lo, double hi) {
  Bounds b;
  b.lower.assign(dim, lo);
  b.upper.assign(dim, hi);
  return b;
}

void Bounds::validate() const {
  if (lower.size() != upper.size()) {
    throw ConfigError("bounds dimension mismatch");
  }
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!(lower[j] < upper[j]) || !std::isfinite(lower[j]) ||
        !std::isfinite(upper[j])) {
      throw ConfigError("invalid bounds: lower must be finite and < upper");
    }
  }
}

ObjectiveFunction::ObjectiveFunction(std::string name, std::size_t dim,
                                     Bounds bounds, double f_opt, BaseFn base)
    : name_(std::move(name)),
      dim_(dim),
      bounds_(std::move(bounds)),
      f_opt_(f_opt),
      base_(std::move(base)),
      optimum_(dim, 0.0) {
  bounds_.validate();
  if (bounds_.dim() != dim_) throw ConfigError("bounds do not match dimension");
}

void ObjectiveFunction::set_transform(Transform t) {
  if (t.shift.size() != dim_ || t.rotation.rows() != dim_ ||
      t.rotation.cols() != dim_) {
    throw ConfigError("transform does not match problem dimension");
  }
  optimum_ = t.shift;
  transform_ = std::move(t);
}

double ObjectiveFunction::evaluate(std::span<const double> x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("evaluate: point has wrong dimension");
  }
  if (!transform_) return base_(x);
  std::vector<double> shifted(dim_);
  for (std::size_t j = 0; j < dim_; ++j) shifted[j] = x[j] - transform_->shift[j];
  const std::vector<double> z = mat_vec(transform_->rotation, shifted);
  return base_(z);
}

namespace functions {

double sphere(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) s += v * v;
  return s;
}

double elliptic(std::span<const double> z) {
  const std::size_t d = z.size();
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double expo = (d > 1) ? static_cast<double>(i) / (d - 1) : 0.0;
    s += std::pow(1e6, expo) * z[i] * z[i];
  }
  return s;
}

double zakharov(std::span<const double> z) {
  double s1 = 0.0;
  double s2 = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    s1 += z[i] * z[i];
    s2 += 0.5 * static_cast<double>(i + 1) * z[i];
  }
  return s1 + s2 * s2 + s2 * s2 * s2 * s2;
}

double rastrigin(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) {
    const double y = 0.0512 * v;  // map [-100,100] onto [-5.12, 5.12]
    s += y * y - 10.0 * std::cos(2.0 * std::numbers::pi * y) + 10.0;
  }
  return s;
}

double ackley(std::span<const double> z) {
  const double d = static_cast<double>(z.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : z) {
    sq += v * v;
    cs += std::cos(2.0 * std::numbers::pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 +
         std::numbers::e;
}

double griewank(std::span<const double> z) {
  double s = 0.0;
  double p = 1.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double y = 6.0 * z[i];  // map [-100,100] onto [-600, 600]
    s += y * y / 4000.0;
    p *= std::cos(y / std::sqrt(static_cast<double>(i + 1)));
  }
  return s + 1.0 - p;
}

namespace {

// Modified Schwefel per-dimension term with out-of-range penalty branches.
double schwefel_g(double y, double d) {
  if (std::fabs(y) <= 500.0) return y * std::sin(std::sqrt(std::fabs(y)));
  if (y > 500.0) {
    const double u = 500.0 - std::fmod(y, 500.0);
    return u * std::sin(std::sqrt(std::fabs(u))) -
           (y - 500.0) * (y - 500.0) / (10000.0 * d);
  }
  const double u = std::fmod(std::fabs(y), 500.0) - 500.0;
  return u * std::sin(std::sqrt(std::fabs(u))) -
         (y + 500.0) * (y + 500.0) / (10000.0 * d);
}

}  // namespace

double schwefel(std::span<const double> z) {
  // Location of the per-dimension maximum of y*sin(sqrt(|y|)) on [-500, 500];
  // anchoring the additive constant at g(peak) puts the minimum exactly at 0.
  constexpr double kPeak = 420.9687462275036;
  static const double kPeakValue = kPeak * std::sin(std::sqrt(kPeak));
  const double d = static_cast<double>(z.size());
  double s = 0.0;
  for (double v : z) {
    const double y = 5.0 * v + kPeak;  // map [-100,100] onto [-500, 500]
    s += kPeakValue - schwefel_g(y, d);
  }
  return s;
}

double rosenbrock(std::span<const double> z) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    const double a = 0.02048 * z[i] + 1.0;  // optimum shifted to z = 0
    const double b = 0.02048 * z[i + 1] + 1.0;
    s += 100.0 * (a * a - b) * (a * a - b) + (a - 1.0) * (a - 1.0);
  }
  return s;
}

double levy(std::span<const double> z) {
  const std::size_t d = z.size();
  auto w = [&](std::size_t i) { return 1.0 + 0.0512 * z[i] / 4.0; };
  const double w0 = w(0);
  double s = std::sin(std::numbers::pi * w0) * std::sin(std::numbers::pi * w0);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const double wi = w(i);
    const double sw = std::sin(std::numbers::pi * wi + 1.0);
    s += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * sw * sw);
  }
  const double wd = w(d - 1);
  const double sd = std::sin(2.0 * std::numbers::pi * wd);
  s += (wd - 1.0) * (wd - 1.0) * (1.0 + sd * sd);
  return s;
}

}  // namespace functions

namespace {

using PlainFn = double (*)(std::span<const double>);

struct CatalogEntry {
  const char* name;
  PlainFn fn;
};

constexpr CatalogEntry kPlainCatalog[] = {
    {"sphere", functions::sphere},       {"elliptic", functions::elliptic},
    {"zakharov", functions::zakharov},   {"rastrigin", functions::rastrigin},
    {"ackley", functions::ackley},       {"griewank", functions::griewank},
    {"schwefel", functions::schwefel},   {"rosenbrock", functions::rosenbrock},
    {"levy", functions::levy},
};

constexpr double kDefaultLo = -100.0;
constexpr double kDefaultHi = 100.0;

ObjectiveFunction make_hybrid(std::size_t dim, RngStream& rng) {
  if (dim < 3) throw ConfigError("hybrid requires dimension >= 3");

  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  rng.shuffle(perm);

  // Three distinct block functions drawn from the plain catalog.
  std::vector<std::size_t> pool(std::size(kPlainCatalog));
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  rng.shuffle(pool);
  const PlainFn f1 = kPlainCatalog[pool[0]].fn;
  const PlainFn f2 = kPlainCatalog[pool[1]].fn;
  const PlainFn f3 = kPlainCatalog[pool[2]].fn;

  const auto n1 = static_cast<std::size_t>(std::ceil(0.3 * dim));
  const auto n2 = static_cast<std::size_t>(std::ceil(0.3 * dim));
  const std::size_t n3 = dim - n1 - n2;

  auto base = [perm, f1, f2, f3, n1, n2, n3](std::span<const double> z) {
    std::vector<double> y(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) y[j] = z[perm[j]];
    std::span<const double> ys(y);
    return f1(ys.subspan(0, n1)) + f2(ys.subspan(n1, n2)) +
           f3(ys.subspan(n1 + n2, n3));
  };
  return {"hybrid", dim, Bounds::uniform(dim, kDefaultLo, kDefaultHi), 0.0,
          std::move(base)};
}

ObjectiveFunction make_composition(std::size_t dim, RngStream& rng) {
  struct Component {
    PlainFn fn;
    double sigma;
    double lambda;
    double bias;
    std::vector<double> shift;
    Matrix rotation;
  };
  const PlainFn fns[3] = {functions::rastrigin, functions::elliptic,
                          functions::schwefel};
  const double sigmas[3] = {10.0, 20.0, 30.0};
  const double lambdas[3] = {1.0, 1e-6, 1.0};
  const double biases[3] = {0.0, 100.0, 200.0};

  std::vector<Component> comps;
  comps.reserve(3);
  for (int c = 0; c < 3; ++c) {
    Component comp{fns[c], sigmas[c], lambdas[c], biases[c], {}, {}};
    comp.shift.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      comp.shift[j] = rng.uniform(0.8 * kDefaultLo, 0.8 * kDefaultHi);
    }
    comp.rotation = make_rotation(dim, rng);
    comps.push_back(std::move(comp));
  }
  std::vector<double> global_optimum = comps[0].shift;

  auto base = [comps = std::move(comps), dim](std::span<const double> x) {
    double weights[3];
    double values[3];
    for (std::size_t c = 0; c < 3; ++c) {
      const Component& comp = comps[c];
      std::vector<double> diff(dim);
      double dist2 = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        diff[j] = x[j] - comp.shift[j];
        dist2 += diff[j] * diff[j];
      }
      const std::vector<double> z = mat_vec(comp.rotation, diff);
      values[c] = comp.lambda * comp.fn(z) + comp.bias;
      if (dist2 == 0.0) return values[c];
      weights[c] = (1.0 / std::sqrt(dist2)) *
                   std::exp(-dist2 / (2.0 * static_cast<double>(dim) *
                                      comp.sigma * comp.sigma));
    }
    const double total = weights[0] + weights[1] + weights[2];
    if (total <= 0.0) {
      // All weights underflowed; fall back to the nearest component.
      return *std::min_element(values, values + 3);
    }
    double f = 0.0;
    for (int c = 0; c < 3; ++c) f += weights[c] / total * values[c];
    return f;
  };

  ObjectiveFunction fn{"composition", dim,
                       Bounds::uniform(dim, kDefaultLo, kDefaultHi), 0.0,
                       std::move(base)};
  fn.set_optimum(std::move(global_optimum));
  return fn;
}

}  // namespace

const std::vector<std::string>& function_catalog() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kPlainCatalog) v.emplace_back(e.name);
    v.emplace_back("hybrid");
    v.emplace_back("composition");
    return v;
  }();
  return names;
}

ObjectiveFunction make_function(std::string_view name, std::size_t dim,
                                RngStream& rng) {
  if (dim == 0) throw ConfigError("dimension must be positive");
  for (const auto& e : kPlainCatalog) {
    if (name == e.name) {
      return {e.name, dim, Bounds::uniform(dim, kDefaultLo, kDefaultHi), 0.0,
              e.fn};
    }
  }
  if (name == "hybrid") return make_hybrid(dim, rng);
  if (name == "composition") return make_composition(dim, rng);
  throw ConfigError("unknown benchmark function: " + std::string(name));
}

ObjectiveFunction with_random_transform(ObjectiveFunction fn, RngStream& rng) {
  if (fn.name() == "composition") return fn;  // internally shifted already
  const std::size_t d = fn.dim();
  Transform t;
  t.shift.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    t.shift[j] = rng.uniform(0.8 * fn.bounds().lower[j],
                             0.8 * fn.bounds().upper[j]);
  }
  t.rotation = make_rotation(d, rng);
  fn.set_transform(std::move(t));
  return fn;
}

void save_transform(const Transform& t, std::ostream& os) {
  const std::size_t d = t.shift.size();
  os << d << '\n';
  os << std::setprecision(17);
  for (std::size_t j = 0; j < d; ++j) os << (j ? " " : "") << t.shift[j];
  os << '\n';
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      os << (c ? " " : "") << t.rotation(r, c);
    }
    os << '\n';
  }
}

Transform load_transform(std::istream& is) {
  std::size_t d = 0;
  if (!(is >> d) || d == 0) throw ConfigError("transform file: bad dimension");
  Transform t;
  t.shift.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (!(is >> t.shift[j])) throw ConfigError("transform file: bad shift");
  }
  t.rotation = Matrix(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (!(is >> t.rotation(r, c))) {
        throw ConfigError("transform file: bad rotation matrix");
      }
    }
  }
  return t;
}

void save_transform_file(const Transform& t, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open transform file for writing: " + path);
  save_transform(t, os);
}

Transform load_transform_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open transform file: " + path);
  return load_transform(is);
}

}  // namespace rde
