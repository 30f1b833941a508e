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

// Command-line front end. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success, 1 domain or numerical failure (zero mass, no
// witness, residual above tolerance), 2 usage, parse, or I/O failure,
// 3 internal error.

#include <cinttypes>
#include <cstdio>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "richter/richter.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// Carries an exit code out of a command body.
struct Failure {
  int code;
  std::string message;
};

int exit_code(rch_status s) {
  switch (s) {
    case RCH_OK: return 0;
    case RCH_ERR_DOMAIN:
    case RCH_ERR_NUMERICAL: return kExitDomain;
    case RCH_ERR_INVALID_ARGUMENT:
    case RCH_ERR_PARSE:
    case RCH_ERR_IO: return kExitUsage;
    case RCH_ERR_INTERNAL: break;
  }
  return kExitInternal;
}

void check(rch_status s, const std::string& context) {
  if (s != RCH_OK) throw Failure{exit_code(s), context + ": " + rch_last_error()};
}

[[noreturn]] void usage(const std::string& message) { throw Failure{kExitUsage, message}; }

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Measure = std::unique_ptr<rch_measure, Deleter<rch_measure, rch_measure_free>>;
using Function = std::unique_ptr<rch_function, Deleter<rch_function, rch_function_free>>;
using Rule = std::unique_ptr<rch_rule, Deleter<rch_rule, rch_rule_free>>;
using Certificate = std::unique_ptr<rch_certificate, Deleter<rch_certificate, rch_certificate_free>>;

std::string take(char* s) {
  std::string out(s ? s : "");
  rch_string_free(s);
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_point(const std::vector<double>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + fmt(x[i]);
  return s + ")";
}

std::vector<double> parse_reals(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      usage(std::string(flag) + ": '" + item + "' is not a number");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t x = text.find('x', start);
    const std::string item = text.substr(start, x == std::string::npos ? std::string::npos : x - start);
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size() || item.empty() || item[0] == '-') throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      usage("--grid: '" + text + "' is not of the form N or NxM[x...]");
    }
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return out;
}

struct InputFlags {
  std::string input;
  std::string grid;
  std::string box;
  std::optional<std::size_t> mc;
  std::uint64_t seed = 0;
  std::string density;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("--input", in.input, "point cloud file (CSV or JSON)");
  cmd->add_option("--grid", in.grid, "midpoint grid cells per axis, e.g. 1000 or 32x32");
  cmd->add_option("--mc", in.mc, "monte carlo sample count");
  cmd->add_option("--seed", in.seed, "monte carlo seed");
  cmd->add_option("--box", in.box, "lo,hi per axis, e.g. 0,1,0,1");
  cmd->add_option("--density", in.density, "density expression for sampled inputs (default 1)");
}

Function parse_function(const std::string& expr, std::size_t dimension, const char* flag) {
  rch_function* f = nullptr;
  check(rch_function_parse(expr.c_str(), dimension, &f), flag);
  return Function(f);
}

struct Loaded {
  Measure measure;
  std::string kind;
  std::string detail;
};

Loaded load_input(const InputFlags& in) {
  const int sources = (!in.input.empty()) + (!in.grid.empty()) + (in.mc.has_value());
  if (sources != 1) usage("exactly one of --input, --grid, --mc is required");
  if (!in.input.empty()) {
    if (!in.box.empty() || !in.density.empty()) usage("--box and --density apply only to --grid/--mc");
    rch_measure* m = nullptr;
    check(rch_measure_load(in.input.c_str(), &m), "--input");
    return {Measure(m), "file", in.input};
  }
  if (in.box.empty()) usage("--box is required with --grid/--mc");
  const auto box = parse_reals(in.box, "--box");
  if (box.size() % 2 != 0) usage("--box needs lo,hi pairs");
  const std::size_t d = box.size() / 2;
  Function density;
  if (!in.density.empty()) density = parse_function(in.density, d, "--density");
  rch_measure* m = nullptr;
  std::string detail;
  if (!in.grid.empty()) {
    auto cells = parse_grid(in.grid);
    if (cells.size() == 1 && d > 1) cells.assign(d, cells[0]);
    if (cells.size() != d) usage("--grid has " + std::to_string(cells.size()) + " axes, --box has " + std::to_string(d));
    check(rch_measure_grid(density.get(), d, cells.data(), box.data(), &m), "--grid");
    detail = "grid " + in.grid + " box " + in.box;
  } else {
    check(rch_measure_monte_carlo(density.get(), d, *in.mc, in.seed, box.data(), &m), "--mc");
    detail = "mc " + std::to_string(*in.mc) + " seed " + std::to_string(in.seed) + " box " + in.box;
  }
  if (!in.density.empty()) detail += " density " + in.density;
  return {Measure(m), "sampler", detail};
}

void emit(const std::string& json, const std::string& out) {
  if (out.empty()) {
    std::fputs(json.c_str(), stdout);
  } else {
    check(rch_write_text(out.c_str(), json.c_str()), "--out");
    std::printf("wrote %s\n", out.c_str());
  }
}

std::vector<double> certificate_point(const rch_certificate* c, int which, std::size_t d, double* f) {
  std::vector<double> x(d);
  check(rch_certificate_point(c, which, x.data(), f), "certificate");
  return x;
}

void print_certificate(const rch_certificate* c, std::size_t d) {
  double f0 = 0, f1 = 0;
  const auto x0 = certificate_point(c, 0, d, &f0);
  const auto x1 = certificate_point(c, 1, d, &f1);
  std::printf("mean      = %s\n", fmt(rch_certificate_mean(c)).c_str());
  std::printf("lambda    = %s\n", fmt(rch_certificate_lambda(c)).c_str());
  std::printf("x0        = %s  f(x0) = %s\n", fmt_point(x0).c_str(), fmt(f0).c_str());
  std::printf("x1        = %s  f(x1) = %s\n", fmt_point(x1).c_str(), fmt(f1).c_str());
  std::printf("residual  = %s%s\n", fmt(rch_certificate_residual(c)).c_str(),
              rch_certificate_degenerate(c) ? "  (degenerate: one atom)" : "");
}

int run_compress(const InputFlags& in, unsigned degree, double tol, const std::string& out) {
  Loaded src = load_input(in);
  rch_rule* r = nullptr;
  check(rch_compress(src.measure.get(), degree, tol, src.kind.c_str(), src.detail.c_str(), &r), "compress");
  Rule rule(r);
  std::size_t bound = 0;
  check(rch_basis_dimension(degree, rch_measure_dimension(src.measure.get()), &bound), "compress");
  std::printf("compressed %zu atoms to %zu nodes (bound %zu), degree %u, moment residual %s\n",
              rch_measure_size(src.measure.get()), rch_rule_size(rule.get()), bound, degree,
              fmt(rch_rule_moment_residual(rule.get())).c_str());
  char* json = nullptr;
  check(rch_rule_to_json(rule.get(), &json), "compress");
  emit(take(json), out);
  return 0;
}

int run_moments(const InputFlags& in, unsigned degree, bool unscaled, const std::string& out) {
  Loaded src = load_input(in);
  const std::size_t d = rch_measure_dimension(src.measure.get());
  std::size_t m = 0;
  check(rch_basis_dimension(degree, d, &m), "moments");
  std::vector<double> values(m);
  check(rch_moments(src.measure.get(), degree, unscaled ? 0 : 1, values.data(), values.size()), "moments");
  std::printf("%zu moments of degree <= %u over %zu atoms (mass %s)\n", m, degree,
              rch_measure_size(src.measure.get()), fmt(rch_measure_mass(src.measure.get())).c_str());
  nlohmann::ordered_json j;
  j["dimension"] = d;
  j["degree"] = degree;
  j["scaled"] = !unscaled;
  j["values"] = values;
  emit(j.dump(2) + "\n", out);
  return 0;
}

int run_mvt(const InputFlags& in, const std::string& function, double tol, const std::string& out) {
  if (function.empty()) usage("--function is required");
  Loaded src = load_input(in);
  const std::size_t d = rch_measure_dimension(src.measure.get());
  Function f = parse_function(function, d, "--function");
  rch_certificate* c = nullptr;
  check(rch_two_point_mvt(src.measure.get(), f.get(), tol, &c), "mvt");
  Certificate cert(c);
  print_certificate(cert.get(), d);
  char* json = nullptr;
  check(rch_certificate_to_json(cert.get(), &json), "mvt");
  emit(take(json), out);
  return 0;
}

int run_mvt1d(const std::string& function, const std::string& box_text, const std::string& grid_text,
              const std::string& density_text, double tol_x, const std::string& out) {
  if (function.empty()) usage("--function is required");
  const auto box = box_text.empty() ? std::vector<double>{0.0, 1.0} : parse_reals(box_text, "--box");
  if (box.size() != 2) usage("--box for mvt1d is lo,hi");
  std::size_t grid = 1000;
  if (!grid_text.empty()) {
    const auto cells = parse_grid(grid_text);
    if (cells.size() != 1) usage("--grid for mvt1d is a single count");
    grid = cells[0];
  }
  Function f = parse_function(function, 1, "--function");
  Function density;
  if (!density_text.empty()) density = parse_function(density_text, 1, "--density");
  rch_witness w{};
  const rch_status s = rch_one_point_mvt_1d(f.get(), box[0], box[1], density.get(), grid, tol_x, &w);
  if (s == RCH_ERR_DOMAIN)
    throw Failure{kExitDomain, std::string("mvt1d: no one-point witness exists at this resolution: ") +
                                   rch_last_error()};
  check(s, "mvt1d");
  std::printf("x* = %s  f(x*) = %s  mean = %s  residual = %s\n", fmt(w.x).c_str(), fmt(w.f_value).c_str(),
              fmt(w.mean).c_str(), fmt(w.residual).c_str());
  char* json = nullptr;
  check(rch_witness_to_json(&w, &json), "mvt1d");
  emit(take(json), out);
  return 0;
}

int run_verify(const InputFlags& in, const std::string& rule_path, std::optional<unsigned> degree,
               std::size_t trials, std::uint64_t seed, double tol, const std::string& out) {
  if (rule_path.empty()) usage("--rule is required");
  Loaded src = load_input(in);
  rch_rule* r = nullptr;
  check(rch_rule_load(rule_path.c_str(), &r), "--rule");
  Rule rule(r);
  const unsigned n = degree.value_or(rch_rule_degree(rule.get()));
  rch_exactness report{};
  char* json = nullptr;
  check(rch_verify_exactness(rule.get(), src.measure.get(), n, trials, seed, &report, &json), "verify");
  const std::string text = take(json);
  const bool exact = report.basis_max_rel_err <= tol && report.sampled_max_rel_err <= tol;
  std::printf("degree %u: basis max rel err %s, sampled max rel err %s over %zu trials: %s\n", n,
              fmt(report.basis_max_rel_err).c_str(), fmt(report.sampled_max_rel_err).c_str(), report.trials,
              exact ? "exact within tolerance" : "NOT exact within tolerance");
  emit(text, out);
  return 0;
}

int run_demo(const std::string& out) {
  // Lebesgue measure on [0, 1] at 1000 midpoints; f = 1 on [0, 1/2], 2 on (1/2, 1].
  const std::size_t cells = 1000;
  const double box[] = {0.0, 1.0};
  rch_measure* m = nullptr;
  check(rch_measure_grid(nullptr, 1, &cells, box, &m), "demo");
  Measure mu(m);
  Function f = parse_function("step(0.5, 1, 2)", 1, "demo");

  std::printf("f = step(0.5, 1, 2) on [0,1], Lebesgue measure, %zu midpoints\n", cells);
  rch_witness w{};
  const rch_status s = rch_one_point_mvt_1d(f.get(), 0.0, 1.0, nullptr, cells, -1.0, &w);
  if (s == RCH_ERR_DOMAIN)
    std::printf("one-point witness: none (the mean is not a value of f)\n");
  else
    check(s, "demo");

  rch_certificate* c = nullptr;
  check(rch_two_point_mvt(mu.get(), f.get(), 1e-9, &c), "demo");
  Certificate cert(c);
  std::printf("two-point certificate:\n");
  print_certificate(cert.get(), 1);
  char* json = nullptr;
  check(rch_certificate_to_json(cert.get(), &json), "demo");
  emit(take(json), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atomic reduction of measures, two-point mean-value certificates, cubature compression"};
  app.require_subcommand(1);

  InputFlags in;
  unsigned degree = 2;
  double tol = 1e-9;
  std::string out, function, rule_path;
  std::size_t trials = 100;
  std::uint64_t verify_seed = 0;
  double tol_x = -1.0;
  bool unscaled = false;
  std::optional<unsigned> verify_degree;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "write JSON here instead of standard output");
  };

  auto* compress = app.add_subcommand("compress", "compress a cloud to a positive cubature rule");
  add_input_flags(compress, in);
  compress->add_option("--degree", degree, "total degree to match")->check(CLI::NonNegativeNumber);
  compress->add_option("--tol", tol, "relative moment tolerance")->check(CLI::PositiveNumber);
  common(compress);

  auto* moments = app.add_subcommand("moments", "graded-lex monomial moments");
  add_input_flags(moments, in);
  moments->add_option("--degree", degree, "total degree")->check(CLI::NonNegativeNumber);
  moments->add_flag("--unscaled", unscaled, "raw coordinates instead of the [-1,1] box map");
  common(moments);

  auto* mvt = app.add_subcommand("mvt", "two-point mean-value certificate");
  add_input_flags(mvt, in);
  mvt->add_option("--function", function, "integrand expression");
  mvt->add_option("--tol", tol, "relative tolerance")->check(CLI::PositiveNumber);
  common(mvt);

  auto* mvt1d = app.add_subcommand("mvt1d", "one-point mean-value witness for continuous 1-d f");
  mvt1d->add_option("--function", function, "integrand expression in x");
  mvt1d->add_option("--box", in.box, "lo,hi (default 0,1)");
  mvt1d->add_option("--grid", in.grid, "midpoint count (default 1000)");
  mvt1d->add_option("--density", in.density, "density expression (default 1)");
  mvt1d->add_option("--tol-x", tol_x, "bisection width (default 1e-10 (hi-lo))");
  common(mvt1d);

  auto* verify = app.add_subcommand("verify", "check a rule's polynomial exactness against a cloud");
  add_input_flags(verify, in);
  verify->add_option("--rule", rule_path, "cubature JSON");
  verify->add_option("--degree", verify_degree, "degree to test (default: the rule's)");
  verify->add_option("--trials", trials, "random polynomials")->check(CLI::PositiveNumber);
  verify->add_option("--poly-seed", verify_seed, "seed for the random polynomials");
  verify->add_option("--tol", tol, "tolerance for the pass/fail line")->check(CLI::PositiveNumber);
  common(verify);

  auto* demo = app.add_subcommand("demo-paper-example", "step-function example: mean 3/2 from two points");
  common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compress) return run_compress(in, degree, tol, out);
    if (*moments) return run_moments(in, degree, unscaled, out);
    if (*mvt) return run_mvt(in, function, tol, out);
    if (*mvt1d) return run_mvt1d(function, in.box, in.grid, in.density, tol_x, out);
    if (*verify) return run_verify(in, rule_path, verify_degree, trials, verify_seed, tol, out);
    if (*demo) return run_demo(out);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
  return kExitUsage;
}
