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

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "richter/error.hpp"
#include "richter/recombine.hpp"
#include "richter/sampler.hpp"

using namespace richter;
using oracle::Fraction;

namespace {

double half_step(std::span<const double> x) { return x[0] <= 0.5 ? 1.0 : 2.0; }

bool is_input_atom(const DiscreteMeasure& in, std::span<const double> x) {
  for (std::size_t j = 0; j < in.size(); ++j)
    if (std::equal(x.begin(), x.end(), in.atom(j).begin())) return true;
  return false;
}

}  // namespace

TEST_SUITE("elimination_step") {
  TEST_CASE("duplicate atoms merge") {
    Eigen::MatrixXd a(1, 2);
    a << 1.0, 1.0;
    const std::vector<double> w = {0.5, 0.5};
    const auto r = elimination_step(w, a);
    CHECK(r.weights == std::vector<double>{0.0, 1.0});
    CHECK(r.zeroed == std::vector<std::size_t>{0});
    CHECK(r.rank == 1);
  }

  TEST_CASE("three collinear evaluations match exact rational arithmetic") {
    // Rows {1, x} at x = 0, 1, 2. The null space is spanned by the cross
    // product of the two rows, computed exactly.
    const Fraction row0[3] = {1, 1, 1};
    const Fraction row1[3] = {0, 1, 2};
    Fraction z[3] = {row0[1] * row1[2] - row0[2] * row1[1], row0[2] * row1[0] - row0[0] * row1[2],
                     row0[0] * row1[1] - row0[1] * row1[0]};
    // Sign convention: largest magnitude entry (first on ties) positive.
    auto mag = [](Fraction f) { return f.num < 0 ? Fraction(-f.num, f.den) : f; };
    std::size_t lead = 0;
    for (std::size_t j = 1; j < 3; ++j)
      if (mag(z[lead]) < mag(z[j])) lead = j;
    if (z[lead].num < 0)
      for (auto& v : z) v = Fraction(0) - v;

    const std::vector<std::array<Fraction, 3>> cases = {
        {Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)},
        {Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)},
        {Fraction(1, 10), Fraction(7, 10), Fraction(1, 5)},
        {Fraction(3, 8), Fraction(1, 16), Fraction(9, 16)},
    };
    Eigen::MatrixXd a(2, 3);
    a << 1, 1, 1, 0, 1, 2;
    for (const auto& w : cases) {
      bool first = true;
      Fraction alpha;
      for (std::size_t j = 0; j < 3; ++j)
        if (z[j].num > 0 && (first || w[j] / z[j] < alpha)) {
          alpha = w[j] / z[j];
          first = false;
        }
      std::array<Fraction, 3> expected;
      for (std::size_t j = 0; j < 3; ++j) expected[j] = w[j] - alpha * z[j];
      // The rational update preserves both moments exactly.
      for (const auto* row : {row0, row1}) {
        Fraction before, after;
        for (std::size_t j = 0; j < 3; ++j) {
          before = before + row[j] * w[j];
          after = after + row[j] * expected[j];
        }
        CHECK(before == after);
      }

      const std::vector<double> wd = {w[0].value(), w[1].value(), w[2].value()};
      const auto r = elimination_step(wd, a);
      std::size_t zeros = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(r.weights[j] >= 0.0);
        CHECK(std::abs(r.weights[j] - expected[j].value()) <= 4e-16);
        if (expected[j].num == 0) CHECK(r.weights[j] == 0.0);
        zeros += r.weights[j] == 0.0;
      }
      CHECK(zeros >= 1);
    }
  }

  TEST_CASE("ties zero every minimizing index") {
    // Null vector (1, 1, -1/2): the two positive entries have equal ratios.
    Eigen::MatrixXd a(2, 3);
    a << 1, 1, 4, 1, -1, 0;
    const std::vector<double> w = {0.5, 0.5, 1.0};
    const auto r = elimination_step(w, a);
    CHECK(r.weights[0] == 0.0);
    CHECK(r.weights[1] == 0.0);
    CHECK(r.weights[2] == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(r.zeroed.size() == 2);
  }

  TEST_CASE("preserves the matrix-vector product") {
    UniformStream rng(5);
    for (int t = 0; t < 20; ++t) {
      const Eigen::Index m = 1 + t % 6;
      Eigen::MatrixXd a(m, m + 1);
      for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = rng.next(-1, 1);
      std::vector<double> w(m + 1);
      for (double& v : w) v = rng.next(0.1, 1.0);
      const auto r = elimination_step(w, a);
      const Eigen::VectorXd before = a * Eigen::Map<const Eigen::VectorXd>(w.data(), m + 1);
      const Eigen::VectorXd after = a * Eigen::Map<const Eigen::VectorXd>(r.weights.data(), m + 1);
      const double bound = static_cast<double>(m) * std::numeric_limits<double>::epsilon() *
                           a.lpNorm<Eigen::Infinity>() * 8.0;
      CHECK((before - after).lpNorm<Eigen::Infinity>() <= bound);
      CHECK(std::count(r.weights.begin(), r.weights.end(), 0.0) >= 1);
      CHECK(std::all_of(r.weights.begin(), r.weights.end(), [](double v) { return v >= 0.0; }));
    }
  }

  TEST_CASE("errors") {
    Eigen::MatrixXd full(2, 2);
    full << 1, 0, 0, 1;
    CHECK_THROWS_AS(elimination_step(std::vector<double>{1.0, 1.0}, full), Error);
    Eigen::MatrixXd a(1, 2);
    a << 1, 1;
    CHECK_THROWS_AS(elimination_step(std::vector<double>{1.0, 0.0}, a), Error);
    CHECK_THROWS_AS(elimination_step(std::vector<double>{1.0}, a), Error);
  }
}

TEST_SUITE("reduce") {
  TEST_CASE("single atom is returned unchanged") {
    const DiscreteMeasure m(2, {0.3, 0.4}, {2.5});
    const auto r = reduce(m, FunctionBasis::unscaled_monomials(3, 2));
    CHECK(r.measure == m);
    CHECK(r.report.iterations == 0);
    CHECK(r.report.final_support == 1);
  }

  TEST_CASE("step function example keeps one atom per piece with weight one half") {
    const auto grid = discretize(SamplerSpec::grid({1000}, {0.0, 1.0}));
    const auto r = reduce(grid, FunctionBasis::custom(1, {half_step}).with_constant());
    REQUIRE(r.measure.size() == 2);
    const double x0 = r.measure.atom(0)[0], x1 = r.measure.atom(1)[0];
    CHECK(x0 <= 0.5);
    CHECK(x1 > 0.5);
    CHECK(std::abs(r.measure.weight(0) - 0.5) <= 1e-10);
    CHECK(std::abs(r.measure.weight(1) - 0.5) <= 1e-10);
  }

  TEST_CASE("quadratic moments of a 100-point grid survive on three atoms") {
    const auto grid = discretize(SamplerSpec::grid({100}, {0.0, 1.0}));
    const auto r = reduce(grid, FunctionBasis::unscaled_monomials(2, 1));
    CHECK(r.measure.size() <= 3);
    for (unsigned k = 0; k <= 2; ++k) {
      const long double want = oracle::raw_moment(grid, {k});
      const long double got = oracle::raw_moment(r.measure, {k});
      CHECK(std::fabs(got - want) <= 1e-12L * std::fabs(want));
    }
  }

  TEST_CASE("zero mass and bad tolerance are rejected") {
    const auto empty = DiscreteMeasure::canonical(1, {0.0}, {0.0});
    try {
      reduce(empty, FunctionBasis::unscaled_monomials(1, 1));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Domain);
    }
    CHECK_THROWS_AS(reduce(DiscreteMeasure(1, {0.0}, {1.0}), FunctionBasis::unscaled_monomials(1, 1), {0.0, true}),
                    Error);
  }

  TEST_CASE("adjoining the constant can be turned off") {
    auto x = [](std::span<const double> p) { return p[0]; };
    const auto grid = discretize(SamplerSpec::grid({50}, {0.0, 1.0}));
    ReduceOptions off;
    off.adjoin_constant = false;
    const auto r = reduce(grid, FunctionBasis::custom(1, {x}), off);
    CHECK(r.report.basis_dim == 1);
    CHECK(r.measure.size() == 1);
    const auto with = reduce(grid, FunctionBasis::custom(1, {x}));
    CHECK(with.report.basis_dim == 2);
    CHECK(with.measure.size() == 2);
  }

  TEST_CASE("property: support bound, mass, progress, provenance, positivity, idempotence") {
    UniformStream rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t d = 1 + trial % 3;
      const unsigned n = trial % 4;
      const std::size_t count = 20 + static_cast<std::size_t>(rng.next() * 300);
      std::vector<double> coords(count * d), weights(count);
      for (double& c : coords) c = rng.next(-1.0, 2.0);
      for (double& w : weights) w = rng.next(1e-3, 1.0);
      // Duplicated atoms exercise rank deficiency.
      if (trial % 5 == 0)
        for (std::size_t j = 1; j < count; j += 2) std::copy_n(&coords[(j - 1) * d], d, &coords[j * d]);
      const DiscreteMeasure mu(d, coords, weights);
      const auto basis = FunctionBasis::monomials(n, AxisScaling::from_box(mu.bounding_box()));
      const ReduceOptions options;
      const auto r = reduce(mu, basis, options);
      const auto& nu = r.measure;

      CHECK(nu.size() <= basis.size());
      CHECK(r.report.final_support == nu.size());
      CHECK(r.report.final_support <= std::min(r.report.initial_support, r.report.rank_used));
      CHECK(r.report.rank_used <= r.report.basis_dim);
      CHECK(r.report.iterations <= count - r.report.rank_used);
      CHECK(r.report.max_relative_moment_residual <= options.tol);
      CHECK(std::abs(nu.mass() - mu.mass()) <= options.tol * (1.0 + mu.mass()));
      for (std::size_t j = 0; j < nu.size(); ++j) {
        CHECK(nu.weight(j) > 0.0);
        CHECK(is_input_atom(mu, nu.atom(j)));
      }
      const auto again = reduce(nu, basis, options);
      CHECK(again.measure == nu);
      CHECK(again.report.iterations == 0);
    }
  }

  TEST_CASE("determinism") {
    const auto cloud = discretize(SamplerSpec::monte_carlo(800, 9, {0, 1, 0, 1}));
    const auto basis = FunctionBasis::monomials(3, AxisScaling::from_box(cloud.bounding_box()));
    CHECK(reduce(cloud, basis).measure == reduce(cloud, basis).measure);
  }
}
