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

#include "richter/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "richter/error.hpp"
#include "richter/sampler.hpp"

namespace richter {

DiscreteMeasure CubatureRule::as_measure() const {
  std::vector<double> coords;
  coords.reserve(nodes.size() * dimension);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (nodes[j].dimension() != dimension)
      fail(ErrorKind::InvalidArgument, "rule node " + std::to_string(j) + " has wrong dimension");
    coords.insert(coords.end(), nodes[j].coords.begin(), nodes[j].coords.end());
  }
  return DiscreteMeasure(dimension, std::move(coords), weights);
}

AxisScaling reference_scaling(const DiscreteMeasure& cloud) {
  return AxisScaling::from_box(cloud.bounding_box());
}

CubatureRule compress_to_cubature(const DiscreteMeasure& cloud, unsigned degree, double tol,
                                  RuleSource source) {
  cloud.require_positive_mass("compress_to_cubature");
  const FunctionBasis basis = FunctionBasis::monomials(degree, reference_scaling(cloud));
  ReduceOptions options;
  options.tol = tol;
  const ReductionResult reduced = reduce(cloud, basis, options);

  const std::size_t bound = basis_dimension(degree, cloud.dimension());
  if (reduced.measure.size() > bound)
    fail(ErrorKind::Numerical, "compress_to_cubature: " + std::to_string(reduced.measure.size()) +
                                   " nodes exceed the bound " + std::to_string(bound));

  CubatureRule rule;
  rule.dimension = cloud.dimension();
  rule.degree = degree;
  for (std::size_t j = 0; j < reduced.measure.size(); ++j) rule.nodes.push_back(reduced.measure.point(j));
  rule.weights = reduced.measure.weights();
  rule.moment_residual = reduced.report.max_relative_moment_residual;
  rule.source = std::move(source);
  rule.source.content_hash = content_hash(cloud);
  rule.source.atoms = cloud.size();
  rule.source.mass = cloud.mass();
  rule.source.box = basis.scaling().box();
  return rule;
}

ExactnessReport verify_exactness(const CubatureRule& rule, const DiscreteMeasure& reference,
                                 unsigned degree, std::size_t trials, std::uint64_t seed) {
  if (rule.dimension != reference.dimension())
    fail(ErrorKind::InvalidArgument, "verify_exactness: rule dimension " +
                                         std::to_string(rule.dimension) +
                                         " does not match reference dimension " +
                                         std::to_string(reference.dimension()));
  if (trials == 0) fail(ErrorKind::InvalidArgument, "verify_exactness: trials must be at least 1");
  reference.require_positive_mass("verify_exactness");

  const FunctionBasis basis = FunctionBasis::monomials(degree, reference_scaling(reference));
  const std::vector<double> ref = moment_values(reference, basis);
  const std::vector<double> got = moment_values(rule.as_measure(), basis);

  ExactnessReport report;
  report.trials = trials;
  report.seed = seed;
  report.degree = degree;
  report.basis_errors.resize(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    report.basis_errors[i] = std::abs(got[i] - ref[i]) / (1.0 + std::abs(ref[i]));
    report.basis_max_rel_err = std::max(report.basis_max_rel_err, report.basis_errors[i]);
  }

  // Both integrals of p = sum c_i g_i are linear in the moments.
  UniformStream stream(seed);
  std::vector<double> coeffs(ref.size());
  for (std::size_t t = 0; t < trials; ++t) {
    for (double& c : coeffs) c = stream.next(-1.0, 1.0);
    CompensatedSum on_rule, on_ref;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      on_rule.add(coeffs[i] * got[i]);
      on_ref.add(coeffs[i] * ref[i]);
    }
    const double err = std::abs(on_rule.value() - on_ref.value()) / (1.0 + std::abs(on_ref.value()));
    report.sampled_max_rel_err = std::max(report.sampled_max_rel_err, err);
  }
  return report;
}

}  // namespace richter
