////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  Copyright 2026 The richter developers                                     //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace richter {

/// A point of R^d. Coordinates are finite.
struct Point {
  std::vector<double> coords;

  std::size_t dimension() const noexcept { return coords.size(); }
  friend bool operator==(const Point&, const Point&) = default;
};

/// Real-valued function of a point, evaluated on coordinate spans.
using ScalarFunction = std::function<double(std::span<const double>)>;

/// Weighted atoms in R^d with nonnegative weights.
///
/// Coordinates are stored row-major, one row per atom. Construction validates
/// shapes and finiteness; `canonical()` additionally drops atoms whose weight
/// is zero or below `kZeroWeightRatio` times the largest weight. A measure of
/// zero mass can be represented, but every downstream operation rejects it.
class DiscreteMeasure {
 public:
  static constexpr double kZeroWeightRatio = 1e-15;

  DiscreteMeasure() = default;
  DiscreteMeasure(std::size_t dimension, std::vector<double> coords, std::vector<double> weights);

  /// Same atoms with zero and dust weights removed; relative order preserved.
  static DiscreteMeasure canonical(std::size_t dimension, std::vector<double> coords,
                                   std::vector<double> weights);
  DiscreteMeasure canonicalized() const;

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return weights_.size(); }
  bool empty() const noexcept { return weights_.empty(); }

  std::span<const double> atom(std::size_t j) const {
    return {coords_.data() + j * dimension_, dimension_};
  }
  Point point(std::size_t j) const;
  double weight(std::size_t j) const { return weights_[j]; }

  const std::vector<double>& coords() const noexcept { return coords_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// Compensated sum of the weights.
  double mass() const;

  /// Same atoms, weights multiplied by `factor` (> 0).
  DiscreteMeasure scaled(double factor) const;

  /// Per-axis [lo, hi] bounding box, flattened as lo0, hi0, lo1, hi1, ...
  std::vector<double> bounding_box() const;

  /// Throws ErrorKind::Domain when the mass is not strictly positive.
  void require_positive_mass(const char* operation) const;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  std::size_t dimension_ = 1;
  std::vector<double> coords_;
  std::vector<double> weights_;
};

/// Sum of w_j f(x_j) with Neumaier compensation. Throws on a non-finite value
/// of f, naming the atom.
double integrate(const DiscreteMeasure& measure, const ScalarFunction& f);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double value) noexcept {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value))
      carry_ += (sum_ - t) + value;
    else
      carry_ += (value - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// FNV-1a over the little-endian bytes of dimension, coordinates and weights.
std::uint64_t content_hash(const DiscreteMeasure& measure);

}  // namespace richter
