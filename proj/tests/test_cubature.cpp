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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "richter/cubature.hpp"
#include "richter/error.hpp"
#include "richter/sampler.hpp"

using namespace richter;

namespace {

// Worst raw-coordinate moment discrepancy over all exponents of degree <= n,
// by direct summation on both measures.
double worst_raw_moment_error(const DiscreteMeasure& rule, const DiscreteMeasure& ref, unsigned n) {
  double worst = 0.0;
  for (const auto& alpha : oracle::exponents_up_to(n, ref.dimension()))
    worst = std::max(worst, oracle::relative(oracle::raw_moment(rule, alpha), oracle::raw_moment(ref, alpha)));
  return worst;
}

}  // namespace

TEST_SUITE("cubature") {
  TEST_CASE("degree zero keeps one node with the total mass") {
    const auto cloud = discretize(SamplerSpec::monte_carlo(300, 1, {0, 1, 0, 2}));
    const auto rule = compress_to_cubature(cloud, 0);
    REQUIRE(rule.nodes.size() == 1);
    CHECK(std::abs(rule.weights[0] - cloud.mass()) <= 1e-14);
  }

  TEST_CASE("32x32 grid, degree 2") {
    const auto grid = discretize(SamplerSpec::grid({32, 32}, {0, 1, 0, 1}));
    const auto rule = compress_to_cubature(grid, 2);
    CHECK(rule.nodes.size() <= 6);
    CHECK(worst_raw_moment_error(rule.as_measure(), grid, 2) <= 1e-12);
    for (double w : rule.weights) CHECK(w > 0.0);
    CHECK(rule.source.atoms == 1024);
    CHECK(rule.source.content_hash == content_hash(grid));
  }

  TEST_CASE("monte carlo N=2000 seed 42, degree 3") {
    const auto cloud = discretize(SamplerSpec::monte_carlo(2000, 42, {0, 1, 0, 1}));
    const auto rule = compress_to_cubature(cloud, 3);
    CHECK(rule.nodes.size() <= 10);
    CHECK(worst_raw_moment_error(rule.as_measure(), cloud, 3) <= 1e-9);
  }

  TEST_CASE("identity compression verifies exactly") {
    const auto cloud = discretize(SamplerSpec::monte_carlo(40, 3, {0, 1}));
    CubatureRule rule;
    rule.dimension = 1;
    rule.degree = 3;
    for (std::size_t j = 0; j < cloud.size(); ++j) rule.nodes.push_back(cloud.point(j));
    rule.weights = cloud.weights();
    const auto report = verify_exactness(rule, cloud, 3, 50, 1);
    CHECK(report.basis_max_rel_err <= 1e-15);
    CHECK(report.sampled_max_rel_err <= 1e-15);
  }

  TEST_CASE("degree 2 rule passes random polynomial checks and fails degree 3") {
    const auto grid = discretize(SamplerSpec::grid({32, 32}, {0, 1, 0, 1}));
    const auto rule = compress_to_cubature(grid, 2);
    const auto report = verify_exactness(rule, grid, 2, 100, 2024);
    CHECK(report.sampled_max_rel_err <= 1e-10);
    CHECK(report.basis_max_rel_err <= 1e-10);
    CHECK(report.trials == 100);
    CHECK(report.basis_errors.size() == 6);

    // x^3 on [0,1]^2 by direct summation.
    const double cubic = oracle::relative(oracle::raw_moment(rule.as_measure(), {3, 0}), oracle::raw_moment(grid, {3, 0}));
    CHECK(cubic > 1e-3);
    CHECK(verify_exactness(rule, grid, 3, 100, 2024).basis_max_rel_err > 1e-3);
  }

  TEST_CASE("property: node bound, positivity, exactness transfer, determinism") {
    UniformStream rng(31);
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t d = 1 + trial % 3;
      const unsigned n = 1 + trial % 4;
      std::vector<double> box;
      for (std::size_t a = 0; a < d; ++a) {
        const double lo = rng.next(-3, 1);
        box.push_back(lo);
        box.push_back(lo + rng.next(0.5, 4));
      }
      auto density = [](std::span<const double> x) { return std::exp(-0.1 * x[0] * x[0]); };
      const auto cloud = discretize(density, SamplerSpec::monte_carlo(600, 100 + trial, box));
      const auto rule = compress_to_cubature(cloud, n);
      CHECK(rule.nodes.size() <= basis_dimension(n, d));
      for (double w : rule.weights) CHECK(w > 0.0);
      const auto report = verify_exactness(rule, cloud, n, 50, trial);
      const double floor = std::max(rule.moment_residual, std::numeric_limits<double>::epsilon());
      CHECK(report.sampled_max_rel_err <= 10.0 * floor * static_cast<double>(report.basis_errors.size()));
      CHECK(report.basis_max_rel_err <= 1e-9);
      const auto again = compress_to_cubature(cloud, n);
      CHECK(again.nodes == rule.nodes);
      CHECK(again.weights == rule.weights);
    }
  }

  TEST_CASE("errors") {
    const auto a = discretize(SamplerSpec::grid({5}, {0, 1}));
    const auto b = discretize(SamplerSpec::grid({5, 5}, {0, 1, 0, 1}));
    const auto rule = compress_to_cubature(a, 1);
    CHECK_THROWS_AS(verify_exactness(rule, b, 1, 10, 0), Error);
    CHECK_THROWS_AS(verify_exactness(rule, a, 1, 0, 0), Error);
    CHECK_THROWS_AS(compress_to_cubature(DiscreteMeasure::canonical(1, {0.0}, {0.0}), 1), Error);
  }
}
