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

#include "richter/richter.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "richter/cubature.hpp"
#include "richter/error.hpp"
#include "richter/expression.hpp"
#include "richter/io.hpp"
#include "richter/mvt.hpp"
#include "richter/recombine.hpp"
#include "richter/sampler.hpp"

struct rch_measure {
  richter::DiscreteMeasure value;
};
struct rch_function {
  richter::ScalarFunction value;
  std::size_t dimension;
};
struct rch_rule {
  richter::CubatureRule value;
};
struct rch_certificate {
  richter::MvtCertificate value;
};

namespace {

thread_local std::string g_last_error;

rch_status to_status(richter::ErrorKind kind) {
  switch (kind) {
    case richter::ErrorKind::InvalidArgument: return RCH_ERR_INVALID_ARGUMENT;
    case richter::ErrorKind::Domain: return RCH_ERR_DOMAIN;
    case richter::ErrorKind::Numerical: return RCH_ERR_NUMERICAL;
    case richter::ErrorKind::Parse: return RCH_ERR_PARSE;
    case richter::ErrorKind::Io: return RCH_ERR_IO;
  }
  return RCH_ERR_INTERNAL;
}

template <typename F>
rch_status guarded(F&& body) {
  try {
    body();
    return RCH_OK;
  } catch (const richter::Error& e) {
    g_last_error = e.what();
    return to_status(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RCH_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RCH_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RCH_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (!p) richter::fail(richter::ErrorKind::InvalidArgument, std::string(name) + " is NULL");
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

richter::ScalarFunction density_or_one(const rch_function* density, std::size_t dimension) {
  if (!density) return [](std::span<const double>) { return 1.0; };
  if (density->dimension != dimension)
    richter::fail(richter::ErrorKind::InvalidArgument, "density dimension does not match the box");
  return density->value;
}

}  // namespace

extern "C" {

const char* rch_last_error(void) { return g_last_error.c_str(); }

const char* rch_status_name(rch_status status) {
  switch (status) {
    case RCH_OK: return "ok";
    case RCH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RCH_ERR_DOMAIN: return "domain error";
    case RCH_ERR_NUMERICAL: return "numerical failure";
    case RCH_ERR_PARSE: return "parse error";
    case RCH_ERR_IO: return "i/o error";
    case RCH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rch_version(void) { return "0.1.0"; }

void rch_string_free(char* s) { delete[] s; }

rch_status rch_measure_create(size_t dimension, size_t count, const double* coords,
                              const double* weights, rch_measure** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) {
      require(coords, "coords");
      require(weights, "weights");
    }
    std::vector<double> c(coords, coords + count * dimension);
    std::vector<double> w(weights, weights + count);
    *out = new rch_measure{richter::DiscreteMeasure::canonical(dimension, std::move(c), std::move(w))};
  });
}

rch_status rch_measure_load(const char* path, rch_measure** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new rch_measure{richter::io::parse_cloud(path)};
  });
}

rch_status rch_measure_save(const rch_measure* m, const char* path) {
  return guarded([&] {
    require(m, "measure");
    require(path, "path");
    const std::string p(path);
    const bool json = p.size() >= 5 && p.compare(p.size() - 5, 5, ".json") == 0;
    richter::io::write_file(p, json ? richter::io::measure_to_json(m->value)
                                    : richter::io::measure_to_csv(m->value));
  });
}

rch_status rch_measure_to_json(const rch_measure* m, char** out) {
  return guarded([&] {
    require(m, "measure");
    require(out, "out");
    *out = duplicate(richter::io::measure_to_json(m->value));
  });
}

rch_status rch_measure_grid(const rch_function* density, size_t dimension,
                            const size_t* cells_per_axis, const double* box, rch_measure** out) {
  return guarded([&] {
    require(cells_per_axis, "cells_per_axis");
    require(box, "box");
    require(out, "out");
    auto spec = richter::SamplerSpec::grid({cells_per_axis, cells_per_axis + dimension},
                                           {box, box + 2 * dimension});
    *out = new rch_measure{richter::discretize(density_or_one(density, dimension), spec)};
  });
}

rch_status rch_measure_monte_carlo(const rch_function* density, size_t dimension, size_t count,
                                   uint64_t seed, const double* box, rch_measure** out) {
  return guarded([&] {
    require(box, "box");
    require(out, "out");
    auto spec = richter::SamplerSpec::monte_carlo(count, seed, {box, box + 2 * dimension});
    *out = new rch_measure{richter::discretize(density_or_one(density, dimension), spec)};
  });
}

void rch_measure_free(rch_measure* m) { delete m; }

size_t rch_measure_size(const rch_measure* m) { return m ? m->value.size() : 0; }
size_t rch_measure_dimension(const rch_measure* m) { return m ? m->value.dimension() : 0; }
double rch_measure_mass(const rch_measure* m) { return m ? m->value.mass() : 0.0; }
uint64_t rch_measure_hash(const rch_measure* m) { return m ? richter::content_hash(m->value) : 0; }

rch_status rch_measure_atom(const rch_measure* m, size_t index, double* coords_out,
                            double* weight_out) {
  return guarded([&] {
    require(m, "measure");
    if (index >= m->value.size())
      richter::fail(richter::ErrorKind::InvalidArgument, "atom index " + std::to_string(index) + " out of range");
    if (coords_out) {
      auto x = m->value.atom(index);
      std::copy(x.begin(), x.end(), coords_out);
    }
    if (weight_out) *weight_out = m->value.weight(index);
  });
}

rch_status rch_measure_integrate(const rch_measure* m, const rch_function* f, double* out) {
  return guarded([&] {
    require(m, "measure");
    require(f, "function");
    require(out, "out");
    if (f->dimension != m->value.dimension())
      richter::fail(richter::ErrorKind::InvalidArgument, "function and measure dimensions differ");
    *out = richter::integrate(m->value, f->value);
  });
}

rch_status rch_function_parse(const char* expression, size_t dimension, rch_function** out) {
  return guarded([&] {
    require(expression, "expression");
    require(out, "out");
    *out = new rch_function{richter::parse_expression(expression, dimension), dimension};
  });
}

rch_status rch_function_from_callback(size_t dimension, rch_callback fn, void* user,
                                      rch_function** out) {
  return guarded([&] {
    require(reinterpret_cast<const void*>(fn), "callback");
    require(out, "out");
    if (dimension == 0) richter::fail(richter::ErrorKind::InvalidArgument, "dimension must be at least 1");
    *out = new rch_function{
        [fn, user](std::span<const double> x) { return fn(x.data(), x.size(), user); }, dimension};
  });
}

rch_status rch_function_eval(const rch_function* f, const double* x, double* out) {
  return guarded([&] {
    require(f, "function");
    require(x, "x");
    require(out, "out");
    *out = f->value({x, f->dimension});
  });
}

size_t rch_function_dimension(const rch_function* f) { return f ? f->dimension : 0; }
void rch_function_free(rch_function* f) { delete f; }

rch_status rch_basis_dimension(unsigned degree, size_t dimension, size_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = richter::basis_dimension(degree, dimension);
  });
}

rch_status rch_moments(const rch_measure* m, unsigned degree, int scaled, double* out, size_t out_len) {
  return guarded([&] {
    require(m, "measure");
    require(out, "out");
    const auto basis = scaled ? richter::FunctionBasis::monomials(degree, richter::reference_scaling(m->value))
                              : richter::FunctionBasis::unscaled_monomials(degree, m->value.dimension());
    if (out_len < basis.size())
      richter::fail(richter::ErrorKind::InvalidArgument, "output buffer holds " + std::to_string(out_len) +
                                                             " values, need " + std::to_string(basis.size()));
    const auto values = richter::moment_values(m->value, basis);
    std::copy(values.begin(), values.end(), out);
  });
}

rch_status rch_reduce(const rch_measure* m, const rch_function* const* functions,
                      size_t function_count, double tol, int adjoin_constant, rch_measure** out,
                      rch_reduction_report* report) {
  return guarded([&] {
    require(m, "measure");
    require(out, "out");
    if (function_count > 0) require(functions, "functions");
    std::vector<richter::ScalarFunction> fs;
    for (size_t i = 0; i < function_count; ++i) {
      require(functions[i], "function");
      if (functions[i]->dimension != m->value.dimension())
        richter::fail(richter::ErrorKind::InvalidArgument,
                      "function " + std::to_string(i) + " dimension differs from the measure");
      fs.push_back(functions[i]->value);
    }
    richter::ReduceOptions options;
    options.tol = tol;
    options.adjoin_constant = adjoin_constant != 0;
    auto basis = fs.empty()
                     ? richter::FunctionBasis::unscaled_monomials(0, m->value.dimension())
                     : richter::FunctionBasis::custom(m->value.dimension(), std::move(fs));
    auto result = richter::reduce(m->value, basis, options);
    if (report) {
      report->initial_support = result.report.initial_support;
      report->final_support = result.report.final_support;
      report->iterations = result.report.iterations;
      report->rank_used = result.report.rank_used;
      report->basis_dim = result.report.basis_dim;
      report->max_relative_moment_residual = result.report.max_relative_moment_residual;
    }
    *out = new rch_measure{std::move(result.measure)};
  });
}

rch_status rch_two_point_mvt(const rch_measure* m, const rch_function* f, double tol,
                             rch_certificate** out) {
  return guarded([&] {
    require(m, "measure");
    require(f, "function");
    require(out, "out");
    if (f->dimension != m->value.dimension())
      richter::fail(richter::ErrorKind::InvalidArgument, "function and measure dimensions differ");
    *out = new rch_certificate{richter::two_point_mvt(m->value, f->value, tol)};
  });
}

double rch_certificate_lambda(const rch_certificate* c) { return c ? c->value.lambda : 0.0; }
double rch_certificate_mean(const rch_certificate* c) { return c ? c->value.mean : 0.0; }
double rch_certificate_residual(const rch_certificate* c) { return c ? c->value.residual : 0.0; }
int rch_certificate_degenerate(const rch_certificate* c) { return c && c->value.degenerate ? 1 : 0; }

rch_status rch_certificate_point(const rch_certificate* c, int which, double* coords_out,
                                 double* f_value_out) {
  return guarded([&] {
    require(c, "certificate");
    if (which != 0 && which != 1)
      richter::fail(richter::ErrorKind::InvalidArgument, "which must be 0 or 1");
    const auto& p = which == 0 ? c->value.x0 : c->value.x1;
    if (coords_out) std::copy(p.coords.begin(), p.coords.end(), coords_out);
    if (f_value_out) *f_value_out = which == 0 ? c->value.f_x0 : c->value.f_x1;
  });
}

rch_status rch_certificate_to_json(const rch_certificate* c, char** out) {
  return guarded([&] {
    require(c, "certificate");
    require(out, "out");
    *out = duplicate(richter::io::certificate_to_json(c->value));
  });
}

void rch_certificate_free(rch_certificate* c) { delete c; }

rch_status rch_one_point_mvt_1d(const rch_function* f, double lo, double hi,
                                const rch_function* density, size_t grid, double tol_x,
                                rch_witness* out) {
  return guarded([&] {
    require(f, "function");
    require(out, "out");
    if (f->dimension != 1)
      richter::fail(richter::ErrorKind::InvalidArgument, "one-point witness needs a 1-d function");
    richter::OnePointOptions options;
    options.grid = grid;
    options.tol_x = tol_x;
    const auto w = richter::one_point_mvt_1d(f->value, lo, hi, density_or_one(density, 1), options);
    *out = rch_witness{w.x, w.f_value, w.mean, w.residual, w.tol_f};
  });
}

rch_status rch_witness_to_json(const rch_witness* w, char** out) {
  return guarded([&] {
    require(w, "witness");
    require(out, "out");
    *out = duplicate(richter::io::witness_to_json({w->x, w->f_value, w->mean, w->residual, w->tol_f}));
  });
}

rch_status rch_compress(const rch_measure* cloud, unsigned degree, double tol, const char* source_kind,
                        const char* source_detail, rch_rule** out) {
  return guarded([&] {
    require(cloud, "cloud");
    require(out, "out");
    richter::RuleSource source;
    if (source_kind) source.kind = source_kind;
    if (source_detail) source.detail = source_detail;
    *out = new rch_rule{richter::compress_to_cubature(cloud->value, degree, tol, std::move(source))};
  });
}

rch_status rch_rule_load(const char* path, rch_rule** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new rch_rule{richter::io::load_rule(path)};
  });
}

rch_status rch_rule_to_json(const rch_rule* r, char** out) {
  return guarded([&] {
    require(r, "rule");
    require(out, "out");
    *out = duplicate(richter::io::rule_to_json(r->value));
  });
}

size_t rch_rule_size(const rch_rule* r) { return r ? r->value.nodes.size() : 0; }
size_t rch_rule_dimension(const rch_rule* r) { return r ? r->value.dimension : 0; }
unsigned rch_rule_degree(const rch_rule* r) { return r ? r->value.degree : 0; }
double rch_rule_moment_residual(const rch_rule* r) { return r ? r->value.moment_residual : 0.0; }

rch_status rch_rule_node(const rch_rule* r, size_t index, double* coords_out, double* weight_out) {
  return guarded([&] {
    require(r, "rule");
    if (index >= r->value.nodes.size())
      richter::fail(richter::ErrorKind::InvalidArgument, "node index " + std::to_string(index) + " out of range");
    if (coords_out) std::copy(r->value.nodes[index].coords.begin(), r->value.nodes[index].coords.end(), coords_out);
    if (weight_out) *weight_out = r->value.weights[index];
  });
}

void rch_rule_free(rch_rule* r) { delete r; }

rch_status rch_verify_exactness(const rch_rule* r, const rch_measure* reference, unsigned degree,
                                size_t trials, uint64_t seed, rch_exactness* out, char** json_out) {
  return guarded([&] {
    require(r, "rule");
    require(reference, "reference");
    const auto report = richter::verify_exactness(r->value, reference->value, degree, trials, seed);
    if (out) *out = rch_exactness{report.basis_max_rel_err, report.sampled_max_rel_err, report.trials,
                                  report.seed, report.degree};
    if (json_out) *json_out = duplicate(richter::io::exactness_to_json(report));
  });
}

rch_status rch_write_text(const char* path, const char* contents) {
  return guarded([&] {
    require(path, "path");
    require(contents, "contents");
    richter::io::write_file(path, contents);
  });
}

}  // extern "C"
