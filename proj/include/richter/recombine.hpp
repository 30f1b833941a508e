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
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "richter/basis.hpp"
#include "richter/measure.hpp"

namespace richter {

inline constexpr double kDefaultTolerance = 1e-9;

struct ReductionReport {
  std::size_t initial_support = 0;
  std::size_t final_support = 0;
  std::size_t iterations = 0;
  double max_relative_moment_residual = 0.0;
  /// Numerical rank of the full evaluation matrix.
  std::size_t rank_used = 0;
  /// Rows of the evaluation matrix actually matched (basis size after the
  /// optional constant was adjoined). The support bound enforced is this value.
  std::size_t basis_dim = 0;
};

struct ReduceOptions {
  double tol = kDefaultTolerance;
  /// Prepend the constant function unless the basis already leads with it.
  bool adjoin_constant = true;
};

struct ReductionResult {
  DiscreteMeasure measure;
  ReductionReport report;
};

/// Replaces `measure` by a sub-measure with at most basis-size atoms, all with
/// positive weight, whose integrals of every basis element agree with those of
/// `measure` to `tol * (1 + |moment|)`.
///
/// Atoms are eliminated one null vector at a time. A working set of at most
/// rank + 1 atoms is maintained; while it is rank deficient a null vector of
/// its evaluation block is found by column-pivoted Householder QR and the
/// weights are moved along it until one (or several, on ties) reaches zero.
/// New atoms join the set in input order. Output atoms keep input order and
/// their coordinates are copied verbatim.
ReductionResult reduce(const DiscreteMeasure& measure, const FunctionBasis& basis,
                       const ReduceOptions& options = {});

struct EliminationResult {
  std::vector<double> weights;
  /// Indices (into the active columns) that were set to zero.
  std::vector<std::size_t> zeroed;
  std::size_t rank = 0;
};

/// One Caratheodory step on the active columns. `weights` must be positive
/// and `active` must have more columns than its numerical rank. The rank
/// threshold defaults to max(m, N') * eps * |R_00|. The null vector z is
/// signed so that its largest-magnitude entry (first on ties) is positive,
/// then w - alpha z is returned with alpha = min_{z_j > 0} w_j / z_j. Every
/// index whose ratio is within one ulp of alpha is set to exactly zero and
/// no returned weight is negative.
EliminationResult elimination_step(std::span<const double> weights, const Eigen::MatrixXd& active,
                                   double rank_threshold = -1.0);

/// Numerical rank of `matrix` under an absolute pivot threshold (default:
/// max(rows, cols) * eps * |R_00|).
std::size_t numerical_rank(const Eigen::MatrixXd& matrix, double threshold = -1.0);

/// Max over rows i of |(A w)_i - target_i| / (1 + |target_i|), with A w
/// accumulated with compensation.
double max_relative_residual(const Eigen::MatrixXd& matrix, std::span<const double> weights,
                             std::span<const double> target);

}  // namespace richter
