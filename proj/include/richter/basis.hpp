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

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "richter/measure.hpp"

namespace richter {

using MultiIndex = std::vector<unsigned>;

/// Total-degree multi-indices of degree <= n in d variables, graded
/// lexicographic: by degree, then descending exponent of x1, x2, ...
/// For d = 2, n = 2: (0,0) (1,0) (0,1) (2,0) (1,1) (0,2).
std::vector<MultiIndex> graded_lex_exponents(unsigned degree, std::size_t dimension);

/// C(n + d, d) by the multiplicative formula. Throws on size_t overflow.
std::size_t basis_dimension(unsigned degree, std::size_t dimension);

/// Per-axis affine map x -> (2x - (lo + hi)) / (hi - lo) onto [-1, 1].
/// An axis with lo == hi maps through x - lo.
class AxisScaling {
 public:
  /// Identity on every axis.
  static AxisScaling identity(std::size_t dimension);
  /// Box flattened as lo0, hi0, lo1, hi1, ...; requires lo <= hi.
  static AxisScaling from_box(std::span<const double> box);

  std::size_t dimension() const noexcept { return shift_.size(); }
  bool is_identity() const noexcept { return identity_; }
  double apply(std::size_t axis, double x) const { return (x - shift_[axis]) * factor_[axis]; }
  const std::vector<double>& box() const noexcept { return box_; }

 private:
  std::vector<double> shift_;
  std::vector<double> factor_;
  std::vector<double> box_;
  bool identity_ = true;
};

/// Ordered spanning set of a finite-dimensional function space.
class FunctionBasis {
 public:
  enum class Kind { Monomial, Custom };

  /// Monomials of total degree <= `degree`, evaluated in scaled coordinates.
  static FunctionBasis monomials(unsigned degree, AxisScaling scaling);
  /// Monomials in raw coordinates. Intended for oracle comparisons.
  static FunctionBasis unscaled_monomials(unsigned degree, std::size_t dimension);
  static FunctionBasis custom(std::size_t dimension, std::vector<ScalarFunction> functions);

  /// This basis with the constant function prepended as element 0. Returns a
  /// copy unchanged if element 0 already is the constant.
  FunctionBasis with_constant() const;

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept;
  std::size_t dimension() const noexcept { return dimension_; }
  /// True when element 0 is the constant function 1.
  bool leads_with_constant() const noexcept;

  std::optional<unsigned> degree() const noexcept { return degree_; }
  const std::vector<MultiIndex>& exponents() const noexcept { return exponents_; }
  const AxisScaling& scaling() const noexcept { return scaling_; }

  double evaluate(std::size_t element, std::span<const double> x) const;
  /// Writes all `size()` element values at x into `out`.
  void evaluate_all(std::span<const double> x, std::span<double> out) const;

 private:
  FunctionBasis() = default;

  Kind kind_ = Kind::Custom;
  std::size_t dimension_ = 0;
  bool constant_prefix_ = false;
  std::optional<unsigned> degree_;
  std::vector<MultiIndex> exponents_;
  AxisScaling scaling_;
  std::vector<ScalarFunction> functions_;
};

/// Integrals of each basis element against one measure.
struct MomentVector {
  std::vector<double> values;
  std::shared_ptr<const FunctionBasis> basis;
};

/// m x N matrix whose (i, j) entry is basis element i at atom j. Throws on a
/// dimension mismatch or a non-finite entry, naming element and atom.
Eigen::MatrixXd eval_matrix(const FunctionBasis& basis, const DiscreteMeasure& measure);
Eigen::MatrixXd eval_matrix(const FunctionBasis& basis, std::span<const Point> points);

/// Compensated per-element integrals.
MomentVector moments(const DiscreteMeasure& measure, std::shared_ptr<const FunctionBasis> basis);
std::vector<double> moment_values(const DiscreteMeasure& measure, const FunctionBasis& basis);

}  // namespace richter
