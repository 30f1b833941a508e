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

#include "richter/recombine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "richter/error.hpp"

namespace richter {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct NullProbe {
  std::size_t rank = 0;
  double max_pivot = 0.0;
  double threshold = 0.0;
  Eigen::VectorXd null_vector;  // set only when rank < cols
};

// Column-pivoted QR of A^T. Trailing columns of Q are orthogonal to the
// numerical row space of A, so the last one is a null vector of A whenever
// the rank is below the column count.
NullProbe probe(const Eigen::MatrixXd& active, double threshold) {
  const Eigen::Index m = active.rows();
  const Eigen::Index n = active.cols();
  NullProbe out;
  if (n == 0) return out;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(active.transpose());
  out.max_pivot = qr.maxPivot();
  out.threshold = threshold >= 0.0
                      ? threshold
                      : static_cast<double>(std::max(m, n)) * kEps * out.max_pivot;
  const Eigen::MatrixXd& r = qr.matrixQR();
  const Eigen::Index diag = std::min(m, n);
  for (Eigen::Index i = 0; i < diag; ++i)
    if (std::abs(r(i, i)) > out.threshold) ++out.rank;
  if (static_cast<Eigen::Index>(out.rank) < n) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e(n - 1) = 1.0;
    out.null_vector = qr.householderQ() * e;
  }
  return out;
}

EliminationResult eliminate_along(std::span<const double> weights, const Eigen::MatrixXd& active,
                                  const NullProbe& p) {
  const std::size_t n = weights.size();
  Eigen::VectorXd z = p.null_vector;

  const double residual = (active * z).cwiseAbs().maxCoeff();
  const double allowed = 16.0 * std::sqrt(static_cast<double>(active.rows())) *
                         std::max(p.threshold, kEps * p.max_pivot);
  if (!(residual <= allowed))
    fail(ErrorKind::Numerical, "elimination: null vector residual " + std::to_string(residual) +
                                   " exceeds rank tolerance " + std::to_string(allowed));

  std::size_t lead = 0;
  for (std::size_t j = 1; j < n; ++j)
    if (std::abs(z(j)) > std::abs(z(lead))) lead = j;
  if (z(lead) < 0.0) z = -z;

  double alpha = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j)
    if (z(j) > 0.0) alpha = std::min(alpha, weights[j] / z(j));
  const double tie = std::nextafter(alpha, std::numeric_limits<double>::infinity());

  EliminationResult out;
  out.rank = p.rank;
  out.weights.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double w = 0.0;
    if (!(z(j) > 0.0 && weights[j] / z(j) <= tie)) w = weights[j] - alpha * z(j);
    if (w <= 0.0) {
      w = 0.0;
      out.zeroed.push_back(j);
    }
    out.weights[j] = w;
  }
  return out;
}

double relative_gap(double value, double target) { return std::abs(value - target) / (1.0 + std::abs(target)); }

}  // namespace

std::size_t numerical_rank(const Eigen::MatrixXd& matrix, double threshold) {
  return probe(matrix, threshold).rank;
}

EliminationResult elimination_step(std::span<const double> weights, const Eigen::MatrixXd& active,
                                   double rank_threshold) {
  if (static_cast<Eigen::Index>(weights.size()) != active.cols())
    fail(ErrorKind::InvalidArgument, "elimination: " + std::to_string(weights.size()) +
                                         " weights for " + std::to_string(active.cols()) + " columns");
  for (std::size_t j = 0; j < weights.size(); ++j)
    if (!(weights[j] > 0.0))
      fail(ErrorKind::InvalidArgument, "elimination: weight " + std::to_string(j) + " is not positive");
  const NullProbe p = probe(active, rank_threshold);
  if (p.rank >= weights.size())
    fail(ErrorKind::Numerical, "elimination: active matrix has full column rank " +
                                   std::to_string(p.rank) + "; no null vector");
  return eliminate_along(weights, active, p);
}

double max_relative_residual(const Eigen::MatrixXd& matrix, std::span<const double> weights,
                             std::span<const double> target) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    CompensatedSum sum;
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) sum.add(matrix(i, j) * weights[j]);
    worst = std::max(worst, relative_gap(sum.value(), target[i]));
  }
  return worst;
}

ReductionResult reduce(const DiscreteMeasure& measure, const FunctionBasis& basis,
                       const ReduceOptions& options) {
  measure.require_positive_mass("reduce");
  if (!(options.tol > 0.0)) fail(ErrorKind::InvalidArgument, "reduce: tolerance must be positive");
  if (basis.size() == 0) fail(ErrorKind::InvalidArgument, "reduce: empty basis");

  const FunctionBasis effective = options.adjoin_constant ? basis.with_constant() : basis;
  const Eigen::MatrixXd full = eval_matrix(effective, measure);
  const std::size_t m = effective.size();
  const std::size_t n = measure.size();

  std::vector<double> target(m);
  for (std::size_t i = 0; i < m; ++i) {
    CompensatedSum sum;
    for (std::size_t j = 0; j < n; ++j) sum.add(full(i, j) * measure.weight(j));
    target[i] = sum.value();
  }

  const NullProbe global = probe(full, -1.0);
  const double threshold = global.threshold;
  const std::size_t rank = global.rank;

  ReductionReport report;
  report.initial_support = n;
  report.rank_used = rank;
  report.basis_dim = m;

  if (n <= std::max<std::size_t>(rank, 1)) {
    report.final_support = n;
    report.max_relative_moment_residual =
        max_relative_residual(full, measure.weights(), target);
    return {measure, report};
  }

  std::vector<double> w = measure.weights();
  // suffix_max[k]: largest weight among atoms not yet admitted when next == k.
  std::vector<double> suffix_max(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;) suffix_max[k] = std::max(suffix_max[k + 1], w[k]);

  std::vector<std::size_t> window;
  window.reserve(m + 2);
  std::size_t next = 0;
  const std::size_t fill_to = std::max<std::size_t>(rank, 1) + 1;

  Eigen::MatrixXd block;
  std::vector<double> block_weights;
  while (true) {
    if (window.size() < fill_to && next < n) {
      window.push_back(next++);
      continue;
    }
    block.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(window.size()));
    block_weights.resize(window.size());
    for (std::size_t k = 0; k < window.size(); ++k) {
      block.col(k) = full.col(window[k]);
      block_weights[k] = w[window[k]];
    }
    const NullProbe p = probe(block, threshold);
    if (p.rank < window.size()) {
      EliminationResult step;
      try {
        step = eliminate_along(block_weights, block, p);
      } catch (const Error& e) {
        fail(ErrorKind::Numerical, "reduce: iteration " + std::to_string(report.iterations + 1) +
                                       ": " + e.what());
      }
      ++report.iterations;
      double local_max = suffix_max[next];
      for (double v : step.weights) local_max = std::max(local_max, v);
      const double cutoff = DiscreteMeasure::kZeroWeightRatio * local_max;
      std::vector<std::size_t> kept;
      kept.reserve(window.size());
      for (std::size_t k = 0; k < window.size(); ++k) {
        const double v = step.weights[k];
        if (v > 0.0 && v >= cutoff) {
          w[window[k]] = v;
          kept.push_back(window[k]);
        } else {
          w[window[k]] = 0.0;
        }
      }
      window.swap(kept);
      continue;
    }
    if (next < n) {
      window.push_back(next++);
      continue;
    }
    break;
  }

  std::sort(window.begin(), window.end());
  const std::size_t k = window.size();
  Eigen::MatrixXd support(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
  std::vector<double> weights(k);
  for (std::size_t j = 0; j < k; ++j) {
    support.col(j) = full.col(window[j]);
    weights[j] = w[window[j]];
  }
  double residual = max_relative_residual(support, weights, target);

  // Re-solve the weights on the final support; accepted only if it keeps every
  // weight positive and lowers the residual.
  if (k > 0) {
    const Eigen::Map<const Eigen::VectorXd> rhs(target.data(), static_cast<Eigen::Index>(m));
    const Eigen::VectorXd refined = support.colPivHouseholderQr().solve(rhs);
    if ((refined.array() > 0.0).all()) {
      std::vector<double> candidate(refined.data(), refined.data() + k);
      const double refined_residual = max_relative_residual(support, candidate, target);
      if (refined_residual < residual) {
        weights = std::move(candidate);
        residual = refined_residual;
      }
    }
  }

  if (!(residual <= options.tol))
    fail(ErrorKind::Numerical, "reduce: relative moment residual " + std::to_string(residual) +
                                   " exceeds tolerance " + std::to_string(options.tol) + " after " +
                                   std::to_string(report.iterations) + " iterations");

  const std::size_t d = measure.dimension();
  std::vector<double> coords;
  coords.reserve(k * d);
  for (std::size_t j : window) {
    auto x = measure.atom(j);
    coords.insert(coords.end(), x.begin(), x.end());
  }
  report.final_support = k;
  report.max_relative_moment_residual = residual;
  return {DiscreteMeasure(d, std::move(coords), std::move(weights)), report};
}

}  // namespace richter
