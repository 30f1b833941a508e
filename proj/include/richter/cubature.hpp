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
#include <cstdint>
#include <string>
#include <vector>

#include "richter/measure.hpp"
#include "richter/recombine.hpp"

namespace richter {

/// Where a rule's reference cloud came from.
struct RuleSource {
  /// "sampler", "file" or "measure".
  std::string kind = "measure";
  /// Free-form detail: sampler description or file path.
  std::string detail;
  std::uint64_t content_hash = 0;
  std::size_t atoms = 0;
  double mass = 0.0;
  /// Scaling box used for the monomial basis.
  std::vector<double> box;
};

struct CubatureRule {
  std::size_t dimension = 1;
  unsigned degree = 0;
  std::vector<Point> nodes;
  std::vector<double> weights;
  double moment_residual = 0.0;
  RuleSource source;

  DiscreteMeasure as_measure() const;
};

/// Scaling used for both compression and verification: the reference cloud's
/// bounding box.
AxisScaling reference_scaling(const DiscreteMeasure& cloud);

/// Positive-weight rule on at most C(n + d, d) atoms of `cloud` matching all
/// its moments of total degree <= `degree` to `tol`.
CubatureRule compress_to_cubature(const DiscreteMeasure& cloud, unsigned degree,
                                  double tol = kDefaultTolerance, RuleSource source = {});

struct ExactnessReport {
  /// Max over graded-lex monomials of |rule - reference| / (1 + |reference|).
  double basis_max_rel_err = 0.0;
  /// Same quantity maximised over random polynomials.
  double sampled_max_rel_err = 0.0;
  std::vector<double> basis_errors;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  unsigned degree = 0;
};

/// Compares `rule` against `reference` on every scaled monomial of degree <=
/// `degree` and on `trials` random polynomials whose coefficients in that
/// basis are uniform on [-1, 1], drawn from UniformStream(seed) in trial
/// order.
ExactnessReport verify_exactness(const CubatureRule& rule, const DiscreteMeasure& reference,
                                 unsigned degree, std::size_t trials, std::uint64_t seed);

}  // namespace richter
