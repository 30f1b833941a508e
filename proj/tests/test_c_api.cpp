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
#include <cstring>
#include <string>
#include <vector>

#include "richter/richter.h"

namespace {

double square(const double* x, std::size_t, void* user) {
  ++*static_cast<int*>(user);
  return x[0] * x[0];
}

}  // namespace

TEST_SUITE("c_api") {
  TEST_CASE("status names and version") {
    CHECK(std::string(rch_status_name(RCH_OK)) == "ok");
    CHECK(std::strlen(rch_version()) > 0);
  }

  TEST_CASE("measure lifecycle") {
    const double coords[] = {0.0, 1.0, 1.0, 0.0};
    const double weights[] = {0.25, 0.75};
    rch_measure* m = nullptr;
    REQUIRE(rch_measure_create(2, 2, coords, weights, &m) == RCH_OK);
    CHECK(rch_measure_size(m) == 2);
    CHECK(rch_measure_dimension(m) == 2);
    CHECK(rch_measure_mass(m) == 1.0);
    double x[2], w;
    REQUIRE(rch_measure_atom(m, 0, x, &w) == RCH_OK);
    CHECK(rch_measure_atom(m, 5, x, &w) == RCH_ERR_INVALID_ARGUMENT);
    CHECK(std::string(rch_last_error()).size() > 0);

    char* json = nullptr;
    REQUIRE(rch_measure_to_json(m, &json) == RCH_OK);
    CHECK(std::string(json).front() == '{');
    rch_string_free(json);
    rch_measure_free(m);
    rch_measure_free(nullptr);
  }

  TEST_CASE("invalid input maps to status codes") {
    const double coords[] = {0.0};
    const double bad[] = {-1.0};
    rch_measure* m = nullptr;
    CHECK(rch_measure_create(1, 1, coords, bad, &m) == RCH_ERR_INVALID_ARGUMENT);
    CHECK(m == nullptr);
    CHECK(rch_measure_create(1, 1, nullptr, bad, &m) == RCH_ERR_INVALID_ARGUMENT);
    CHECK(rch_measure_load("/nonexistent/richter.csv", &m) == RCH_ERR_IO);
    rch_function* f = nullptr;
    CHECK(rch_function_parse("1 +", 1, &f) == RCH_ERR_PARSE);
    CHECK(std::string(rch_last_error()).find("offset 3") != std::string::npos);
  }

  TEST_CASE("callbacks, integration and reduction") {
    int calls = 0;
    rch_function* f = nullptr;
    REQUIRE(rch_function_from_callback(1, square, &calls, &f) == RCH_OK);
    const std::size_t cells[] = {100};
    const double box[] = {0.0, 1.0};
    rch_measure* grid = nullptr;
    REQUIRE(rch_measure_grid(nullptr, 1, cells, box, &grid) == RCH_OK);
    double integral = 0.0;
    REQUIRE(rch_measure_integrate(grid, f, &integral) == RCH_OK);
    CHECK(calls == 100);
    CHECK(std::abs(integral - (1.0 / 3.0 - 1.0 / 120000.0)) <= 1e-15);

    const rch_function* fns[] = {f};
    rch_measure* reduced = nullptr;
    rch_reduction_report report;
    REQUIRE(rch_reduce(grid, fns, 1, 1e-9, 1, &reduced, &report) == RCH_OK);
    CHECK(report.basis_dim == 2);
    CHECK(report.final_support == rch_measure_size(reduced));
    CHECK(rch_measure_size(reduced) <= 2);
    CHECK(std::abs(rch_measure_mass(reduced) - 1.0) <= 1e-12);

    std::size_t k = 0;
    REQUIRE(rch_basis_dimension(2, 1, &k) == RCH_OK);
    std::vector<double> mom(k);
    REQUIRE(rch_moments(grid, 2, 0, mom.data(), mom.size()) == RCH_OK);
    CHECK(std::abs(mom[2] - integral) <= 1e-15);
    CHECK(rch_moments(grid, 2, 0, mom.data(), 1) == RCH_ERR_INVALID_ARGUMENT);

    rch_measure_free(reduced);
    rch_measure_free(grid);
    rch_function_free(f);
  }

  TEST_CASE("mean value certificates") {
    rch_function* f = nullptr;
    REQUIRE(rch_function_parse("step(0.5, 1, 2)", 1, &f) == RCH_OK);
    const std::size_t cells[] = {1000};
    const double box[] = {0.0, 1.0};
    rch_measure* grid = nullptr;
    REQUIRE(rch_measure_grid(nullptr, 1, cells, box, &grid) == RCH_OK);
    rch_certificate* c = nullptr;
    REQUIRE(rch_two_point_mvt(grid, f, 1e-9, &c) == RCH_OK);
    CHECK(std::abs(rch_certificate_lambda(c) - 0.5) <= 1e-10);
    CHECK(std::abs(rch_certificate_mean(c) - 1.5) <= 1e-12);
    CHECK(rch_certificate_degenerate(c) == 0);
    double x, fx;
    REQUIRE(rch_certificate_point(c, 1, &x, &fx) == RCH_OK);
    CHECK(rch_certificate_point(c, 2, &x, &fx) == RCH_ERR_INVALID_ARGUMENT);
    rch_certificate_free(c);

    rch_witness w;
    CHECK(rch_one_point_mvt_1d(f, 0.0, 1.0, nullptr, 1000, 0.0, &w) == RCH_ERR_DOMAIN);
    rch_function* id = nullptr;
    REQUIRE(rch_function_parse("x", 1, &id) == RCH_OK);
    REQUIRE(rch_one_point_mvt_1d(id, 0.0, 1.0, nullptr, 1000, 0.0, &w) == RCH_OK);
    CHECK(std::abs(w.x - 0.5) <= 1e-8);

    rch_function_free(id);
    rch_function_free(f);
    rch_measure_free(grid);
  }

  TEST_CASE("cubature") {
    const std::size_t cells[] = {32, 32};
    const double box[] = {0.0, 1.0, 0.0, 1.0};
    rch_measure* grid = nullptr;
    REQUIRE(rch_measure_grid(nullptr, 2, cells, box, &grid) == RCH_OK);
    rch_rule* rule = nullptr;
    REQUIRE(rch_compress(grid, 2, 1e-9, "sampler", "grid 32x32", &rule) == RCH_OK);
    CHECK(rch_rule_size(rule) <= 6);
    CHECK(rch_rule_dimension(rule) == 2);
    CHECK(rch_rule_degree(rule) == 2);
    rch_exactness e;
    char* json = nullptr;
    REQUIRE(rch_verify_exactness(rule, grid, 2, 100, 7, &e, &json) == RCH_OK);
    CHECK(e.sampled_max_rel_err <= 1e-9);
    CHECK(e.trials == 100);
    CHECK(std::string(json).find("sampled_max_rel_err") != std::string::npos);
    rch_string_free(json);
    rch_rule_free(rule);
    rch_measure_free(grid);
  }
}
