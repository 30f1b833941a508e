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

#include "richter/measure.hpp"
#include "richter/recombine.hpp"

namespace richter {

/// Weights (lambda, 1 - lambda) on two atoms whose f-values average to the
/// mass-normalized integral of f.
struct MvtCertificate {
  double lambda = 1.0;
  Point x0;
  Point x1;
  double f_x0 = 0.0;
  double f_x1 = 0.0;
  /// Integral of f divided by the mass.
  double mean = 0.0;
  /// |lambda f(x0) + (1 - lambda) f(x1) - mean|
  double residual = 0.0;
  /// Reduction left a single atom; then x1 == x0 and lambda == 1.
  bool degenerate = false;
};

/// Reduces `measure` against {1, f}. x0 carries the larger weight (ties go to
/// the lexicographically smaller atom) and lambda = a / (a + b). Throws
/// ErrorKind::Domain on zero mass and ErrorKind::Numerical if the residual
/// exceeds tol * (1 + |mean|).
MvtCertificate two_point_mvt(const DiscreteMeasure& measure, const ScalarFunction& f,
                             double tol = kDefaultTolerance);

struct OnePointWitness {
  double x = 0.0;
  double f_value = 0.0;
  double mean = 0.0;
  /// |f(x) - mean|
  double residual = 0.0;
  /// Acceptance threshold the residual was checked against.
  double tol_f = 0.0;
};

struct OnePointOptions {
  std::size_t grid = 1000;
  /// <= 0 selects 1e-10 * (hi - lo).
  double tol_x = -1.0;
};

/// Finds x in [lo, hi] with f(x) equal to the density-weighted mean of f.
///
/// The mean is taken over the midpoint grid; g = f - mean is scanned on the
/// same grid for an exact zero or a sign change between neighbours, and each
/// bracketing cell is bisected down to tol_x. A candidate is accepted when
/// |g(x)| <= tol_f, where tol_f = 4 * slope * tol_x + 64 eps (1 + |mean|) and
/// slope is the secant slope of g over the bracketing cell. A jump
/// discontinuity bisects to a point where |g| stays at the jump size and is
/// rejected. Throws ErrorKind::Domain when no cell yields a witness.
OnePointWitness one_point_mvt_1d(const ScalarFunction& f, double lo, double hi,
                                 const ScalarFunction& density, const OnePointOptions& options = {});

}  // namespace richter
