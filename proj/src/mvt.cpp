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

#include "richter/mvt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "richter/error.hpp"
#include "richter/sampler.hpp"

namespace richter {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double finite_value(const ScalarFunction& f, std::span<const double> x, const char* what) {
  const double v = f(x);
  if (!std::isfinite(v)) fail(ErrorKind::Domain, std::string(what) + " is not finite at a sample point");
  return v;
}

}  // namespace

MvtCertificate two_point_mvt(const DiscreteMeasure& measure, const ScalarFunction& f, double tol) {
  measure.require_positive_mass("two_point_mvt");
  if (!f) fail(ErrorKind::InvalidArgument, "two_point_mvt: empty function");
  const double mass = measure.mass();
  const double mean = integrate(measure, f) / mass;

  const FunctionBasis basis = FunctionBasis::custom(measure.dimension(), {f}).with_constant();
  ReduceOptions options;
  options.tol = tol;
  const ReductionResult reduced = reduce(measure, basis, options);
  const DiscreteMeasure& nu = reduced.measure;

  MvtCertificate c;
  c.mean = mean;
  if (nu.size() == 1) {
    c.degenerate = true;
    c.lambda = 1.0;
    c.x0 = nu.point(0);
    c.x1 = c.x0;
    c.f_x0 = f(nu.atom(0));
    c.f_x1 = c.f_x0;
  } else {
    // reduce() returns at most rank({1, f}) <= 2 atoms.
    std::size_t first = 0, second = 1;
    const double a0 = nu.weight(0), a1 = nu.weight(1);
    const bool swap = a1 > a0 || (a1 == a0 && std::lexicographical_compare(
                                                   nu.atom(1).begin(), nu.atom(1).end(),
                                                   nu.atom(0).begin(), nu.atom(0).end()));
    if (swap) std::swap(first, second);
    const double a = nu.weight(first), b = nu.weight(second);
    double lambda = a / (a + b);
    if (lambda > 1.0 && lambda <= 1.0 + kEps) lambda = 1.0;
    if (lambda < 0.0 && lambda >= -kEps) lambda = 0.0;
    c.lambda = lambda;
    c.x0 = nu.point(first);
    c.x1 = nu.point(second);
    c.f_x0 = f(nu.atom(first));
    c.f_x1 = f(nu.atom(second));
  }
  c.residual = std::abs(c.lambda * c.f_x0 + (1.0 - c.lambda) * c.f_x1 - mean);
  if (!(c.residual <= tol * (1.0 + std::abs(mean))))
    fail(ErrorKind::Numerical, "two_point_mvt: certificate residual " + std::to_string(c.residual) +
                                   " exceeds tolerance");
  return c;
}

OnePointWitness one_point_mvt_1d(const ScalarFunction& f, double lo, double hi,
                                 const ScalarFunction& density, const OnePointOptions& options) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    fail(ErrorKind::InvalidArgument, "one_point_mvt_1d: interval needs lo < hi");
  if (options.grid == 0) fail(ErrorKind::InvalidArgument, "one_point_mvt_1d: grid must be at least 1");
  const double tol_x = options.tol_x > 0.0 ? options.tol_x : 1e-10 * (hi - lo);

  // Mean over the midpoint grid. The scan below walks the same midpoints, and
  // zero-density cells are kept in the scan so the bracketing stays contiguous.
  const SamplerSpec spec = SamplerSpec::grid({options.grid}, {lo, hi});
  const DiscreteMeasure mu = discretize(density, spec);
  const double mean = integrate(mu, f) / mu.mass();

  const std::size_t n = options.grid;
  auto midpoint = [&](std::size_t i) {
    return lo + (hi - lo) * ((static_cast<double>(i) + 0.5) / static_cast<double>(n));
  };
  auto g = [&](double x) { return finite_value(f, {&x, 1}, "function") - mean; };
  const double floor_f = 64.0 * kEps * (1.0 + std::abs(mean));

  std::vector<double> xs(n), gs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = midpoint(i);
    gs[i] = g(xs[i]);
  }

  auto witness = [&](double x, double gx, double tol_f) {
    OnePointWitness w;
    w.x = x;
    w.f_value = gx + mean;
    w.mean = mean;
    w.residual = std::abs(gx);
    w.tol_f = tol_f;
    return w;
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(gs[i]) <= floor_f) return witness(xs[i], gs[i], floor_f);
    if (i + 1 == n || std::signbit(gs[i]) == std::signbit(gs[i + 1])) continue;

    double a = xs[i], b = xs[i + 1];
    double ga = gs[i];
    const double slope = std::abs(gs[i + 1] - gs[i]) / (b - a);
    const double tol_f = 4.0 * slope * tol_x + floor_f;
    double x = 0.5 * (a + b);
    double gx = g(x);
    while (b - a > tol_x && gx != 0.0) {
      if (std::signbit(gx) == std::signbit(ga)) {
        a = x;
        ga = gx;
      } else {
        b = x;
      }
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      x = mid;
      gx = g(x);
    }
    if (std::abs(gx) <= tol_f) return witness(x, gx, tol_f);
  }
  fail(ErrorKind::Domain,
       "one_point_mvt_1d: no point with f(x) = mean " + std::to_string(mean) + " found on " +
           std::to_string(n) +
           " grid cells; f appears discontinuous or the domain disconnected at this resolution");
}

}  // namespace richter
