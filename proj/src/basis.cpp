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

#include "richter/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <string>

#include "richter/error.hpp"

namespace richter {

namespace {

// All multi-indices of exactly `degree` in `dimension` variables, descending
// in the first exponent, then the second, and so on.
void append_degree(std::size_t dimension, unsigned degree, MultiIndex& current, std::size_t axis,
                   std::vector<MultiIndex>& out) {
  if (axis + 1 == dimension) {
    current[axis] = degree;
    out.push_back(current);
    return;
  }
  for (unsigned e = degree + 1; e-- > 0;) {
    current[axis] = e;
    append_degree(dimension, degree - e, current, axis + 1, out);
  }
}

}  // namespace

std::vector<MultiIndex> graded_lex_exponents(unsigned degree, std::size_t dimension) {
  if (dimension == 0) fail(ErrorKind::InvalidArgument, "dimension must be at least 1");
  std::vector<MultiIndex> out;
  out.reserve(basis_dimension(degree, dimension));
  MultiIndex current(dimension, 0);
  for (unsigned k = 0; k <= degree; ++k) append_degree(dimension, k, current, 0, out);
  return out;
}

std::size_t basis_dimension(unsigned degree, std::size_t dimension) {
  if (dimension == 0) fail(ErrorKind::InvalidArgument, "dimension must be at least 1");
  // C(n + d, k) built up for k = 1..min(n, d); each partial product is itself
  // a binomial coefficient, so the division is exact.
  const std::size_t n = degree;
  const std::size_t k = std::min<std::size_t>(n, dimension);
  const std::size_t top = n + dimension;
  if (top < n) fail(ErrorKind::InvalidArgument, "basis dimension overflows size_t");
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t factor = top - k + i;
    // result * factor / i, reduced by gcd first so the product only overflows
    // when the true value does.
    const std::size_t g = std::gcd(result, i);
    const std::size_t r = result / g;
    const std::size_t f = factor / (i / g);
    if (r != 0 && f > std::numeric_limits<std::size_t>::max() / r)
      fail(ErrorKind::InvalidArgument, "basis dimension C(" + std::to_string(top) + ", " +
                                           std::to_string(dimension) + ") overflows size_t");
    result = r * f;
  }
  return result;
}

AxisScaling AxisScaling::identity(std::size_t dimension) {
  AxisScaling s;
  s.shift_.assign(dimension, 0.0);
  s.factor_.assign(dimension, 1.0);
  s.identity_ = true;
  return s;
}

AxisScaling AxisScaling::from_box(std::span<const double> box) {
  if (box.empty() || box.size() % 2 != 0)
    fail(ErrorKind::InvalidArgument, "scaling box needs lo,hi per axis");
  AxisScaling s;
  s.identity_ = false;
  s.box_.assign(box.begin(), box.end());
  for (std::size_t a = 0; a < box.size() / 2; ++a) {
    const double lo = box[2 * a], hi = box[2 * a + 1];
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
      fail(ErrorKind::InvalidArgument, "scaling box axis " + std::to_string(a + 1) + " is invalid");
    if (lo == hi) {
      s.shift_.push_back(lo);
      s.factor_.push_back(1.0);
    } else {
      s.shift_.push_back(0.5 * (lo + hi));
      s.factor_.push_back(2.0 / (hi - lo));
    }
  }
  return s;
}

FunctionBasis FunctionBasis::monomials(unsigned degree, AxisScaling scaling) {
  FunctionBasis b;
  b.kind_ = Kind::Monomial;
  b.dimension_ = scaling.dimension();
  b.degree_ = degree;
  b.exponents_ = graded_lex_exponents(degree, b.dimension_);
  b.scaling_ = std::move(scaling);
  return b;
}

FunctionBasis FunctionBasis::unscaled_monomials(unsigned degree, std::size_t dimension) {
  return monomials(degree, AxisScaling::identity(dimension));
}

FunctionBasis FunctionBasis::custom(std::size_t dimension, std::vector<ScalarFunction> functions) {
  if (dimension == 0) fail(ErrorKind::InvalidArgument, "basis dimension must be at least 1");
  if (functions.empty()) fail(ErrorKind::InvalidArgument, "custom basis needs at least one function");
  for (std::size_t i = 0; i < functions.size(); ++i)
    if (!functions[i]) fail(ErrorKind::InvalidArgument, "basis function " + std::to_string(i) + " is empty");
  FunctionBasis b;
  b.kind_ = Kind::Custom;
  b.dimension_ = dimension;
  b.scaling_ = AxisScaling::identity(dimension);
  b.functions_ = std::move(functions);
  return b;
}

FunctionBasis FunctionBasis::with_constant() const {
  FunctionBasis b = *this;
  if (!leads_with_constant()) b.constant_prefix_ = true;
  return b;
}

std::size_t FunctionBasis::size() const noexcept {
  const std::size_t core = kind_ == Kind::Monomial ? exponents_.size() : functions_.size();
  return core + (constant_prefix_ ? 1 : 0);
}

bool FunctionBasis::leads_with_constant() const noexcept {
  return constant_prefix_ || kind_ == Kind::Monomial;
}

double FunctionBasis::evaluate(std::size_t element, std::span<const double> x) const {
  if (constant_prefix_) {
    if (element == 0) return 1.0;
    --element;
  }
  if (kind_ == Kind::Custom) return functions_[element](x);
  const MultiIndex& alpha = exponents_[element];
  double v = 1.0;
  for (std::size_t a = 0; a < dimension_; ++a) {
    const double t = scaling_.apply(a, x[a]);
    double p = 1.0;
    for (unsigned e = 0; e < alpha[a]; ++e) p *= t;
    v *= p;
  }
  return v;
}

void FunctionBasis::evaluate_all(std::span<const double> x, std::span<double> out) const {
  std::size_t offset = 0;
  if (constant_prefix_) out[offset++] = 1.0;
  if (kind_ == Kind::Custom) {
    for (const auto& f : functions_) out[offset++] = f(x);
    return;
  }
  // Power table per axis, then one product per multi-index.
  const unsigned n = *degree_;
  thread_local std::vector<double> powers;
  powers.assign(dimension_ * (n + 1), 1.0);
  for (std::size_t a = 0; a < dimension_; ++a) {
    const double t = scaling_.apply(a, x[a]);
    for (unsigned e = 1; e <= n; ++e) powers[a * (n + 1) + e] = powers[a * (n + 1) + e - 1] * t;
  }
  for (const MultiIndex& alpha : exponents_) {
    double v = 1.0;
    for (std::size_t a = 0; a < dimension_; ++a) v *= powers[a * (n + 1) + alpha[a]];
    out[offset++] = v;
  }
}

namespace {

void check_finite_column(const Eigen::MatrixXd& m, Eigen::Index j) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (!std::isfinite(m(i, j)))
      fail(ErrorKind::Domain, "basis element " + std::to_string(i) +
                                  " is not finite at point " + std::to_string(j));
}

}  // namespace

Eigen::MatrixXd eval_matrix(const FunctionBasis& basis, const DiscreteMeasure& measure) {
  if (measure.dimension() != basis.dimension())
    fail(ErrorKind::InvalidArgument, "measure dimension " + std::to_string(measure.dimension()) +
                                         " does not match basis dimension " +
                                         std::to_string(basis.dimension()));
  Eigen::MatrixXd out(basis.size(), measure.size());
  for (std::size_t j = 0; j < measure.size(); ++j) {
    basis.evaluate_all(measure.atom(j), {out.col(j).data(), basis.size()});
    check_finite_column(out, j);
  }
  return out;
}

Eigen::MatrixXd eval_matrix(const FunctionBasis& basis, std::span<const Point> points) {
  Eigen::MatrixXd out(basis.size(), points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].dimension() != basis.dimension())
      fail(ErrorKind::InvalidArgument, "point " + std::to_string(j) + " has dimension " +
                                           std::to_string(points[j].dimension()) +
                                           ", basis expects " + std::to_string(basis.dimension()));
    basis.evaluate_all(points[j].coords, {out.col(j).data(), basis.size()});
    check_finite_column(out, j);
  }
  return out;
}

std::vector<double> moment_values(const DiscreteMeasure& measure, const FunctionBasis& basis) {
  const Eigen::MatrixXd values = eval_matrix(basis, measure);
  std::vector<CompensatedSum> sums(basis.size());
  for (std::size_t j = 0; j < measure.size(); ++j)
    for (std::size_t i = 0; i < basis.size(); ++i) sums[i].add(measure.weight(j) * values(i, j));
  std::vector<double> out(basis.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sums[i].value();
  return out;
}

MomentVector moments(const DiscreteMeasure& measure, std::shared_ptr<const FunctionBasis> basis) {
  if (!basis) fail(ErrorKind::InvalidArgument, "moments: null basis");
  MomentVector mv;
  mv.values = moment_values(measure, *basis);
  mv.basis = std::move(basis);
  return mv;
}

}  // namespace richter
