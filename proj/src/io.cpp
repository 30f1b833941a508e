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

#include "richter/io.hpp"

#include <cctype>
#include <cerrno>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "richter/error.hpp"

namespace richter::io {

using Json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(sep, start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string where(std::size_t row, std::size_t line) {
  return "row " + std::to_string(row) + " (line " + std::to_string(line) + ")";
}

double parse_real(std::string_view field, const std::string& context) {
  double v = 0.0;
  const char* begin = field.data();
  const char* end = field.data() + field.size();
  if (!field.empty() && field.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (field.empty() || ec != std::errc() || ptr != end)
    fail(ErrorKind::Parse, context + ": '" + std::string(field) + "' is not a real number");
  return v;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

Json point_array(const std::vector<Point>& points) {
  Json arr = Json::array();
  for (const auto& p : points) arr.push_back(p.coords);
  return arr;
}

template <typename T>
T field(const Json& j, const char* key, const char* what) {
  if (!j.contains(key)) fail(ErrorKind::Parse, std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string(what) + ": field \"" + key + "\": " + e.what());
  }
}

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "': " + std::strerror(errno));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorKind::Io, "error reading '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing: " + std::strerror(errno));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) fail(ErrorKind::Io, "error writing '" + path + "'");
}

DiscreteMeasure parse_csv(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line) {
    while (pos < text.size()) {
      const std::size_t nl = text.find('\n', pos);
      line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? text.size() : nl + 1;
      ++line_no;
      if (!trim(line).empty()) return true;
    }
    return false;
  };

  std::string_view line;
  if (!next_line(line)) fail(ErrorKind::Parse, "csv: empty input");
  const auto header = split(trim(line), ',');
  bool has_weight = header.back() == "w";
  const std::size_t d = header.size() - (has_weight ? 1 : 0);
  if (d == 0) fail(ErrorKind::Parse, "csv header (line " + std::to_string(line_no) + "): no coordinate columns");
  for (std::size_t a = 0; a < d; ++a)
    if (header[a] != "x" + std::to_string(a + 1))
      fail(ErrorKind::Parse, "csv header (line " + std::to_string(line_no) + "): column " +
                                 std::to_string(a + 1) + " is '" + std::string(header[a]) +
                                 "', expected 'x" + std::to_string(a + 1) + "'");

  std::vector<double> coords, weights;
  std::size_t row = 0;
  while (next_line(line)) {
    ++row;
    const auto fields = split(trim(line), ',');
    if (fields.size() != header.size())
      fail(ErrorKind::Parse, "csv " + where(row, line_no) + ": " + std::to_string(fields.size()) +
                                 " fields, header has " + std::to_string(header.size()));
    for (std::size_t a = 0; a < d; ++a) {
      const double v = parse_real(fields[a], "csv " + where(row, line_no) + " x" + std::to_string(a + 1));
      if (!std::isfinite(v))
        fail(ErrorKind::Parse, "csv " + where(row, line_no) + ": coordinate x" + std::to_string(a + 1) +
                                   " is not finite");
      coords.push_back(v);
    }
    if (has_weight) {
      const double w = parse_real(fields[d], "csv " + where(row, line_no) + " w");
      if (!std::isfinite(w))
        fail(ErrorKind::Parse, "csv " + where(row, line_no) + ": weight is not finite");
      if (w < 0.0)
        fail(ErrorKind::Parse, "csv " + where(row, line_no) + ": negative weight " + format_real(w));
      weights.push_back(w);
    }
  }
  if (row == 0) fail(ErrorKind::Parse, "csv: no data rows");
  if (!has_weight) weights.assign(row, 1.0 / static_cast<double>(row));
  return DiscreteMeasure::canonical(d, std::move(coords), std::move(weights));
}

DiscreteMeasure parse_measure_json(std::string_view text) {
  const Json j = parse_json(text, "measure json");
  if (!j.is_object()) fail(ErrorKind::Parse, "measure json: top level must be an object");
  const auto d = field<std::size_t>(j, "dimension", "measure json");
  if (d == 0) fail(ErrorKind::Parse, "measure json: dimension must be at least 1");
  const auto atoms = field<std::vector<std::vector<double>>>(j, "atoms", "measure json");
  const auto weights = field<std::vector<double>>(j, "weights", "measure json");
  if (atoms.size() != weights.size())
    fail(ErrorKind::Parse, "measure json: " + std::to_string(atoms.size()) + " atoms but " +
                               std::to_string(weights.size()) + " weights");
  std::vector<double> coords;
  coords.reserve(atoms.size() * d);
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (atoms[k].size() != d)
      fail(ErrorKind::Parse, "measure json: atom " + std::to_string(k) + " has " +
                                 std::to_string(atoms[k].size()) + " coordinates, expected " +
                                 std::to_string(d));
    coords.insert(coords.end(), atoms[k].begin(), atoms[k].end());
  }
  for (std::size_t k = 0; k < weights.size(); ++k)
    if (weights[k] < 0.0)
      fail(ErrorKind::Parse, "measure json: atom " + std::to_string(k) + " has negative weight " +
                                 format_real(weights[k]));
  try {
    return DiscreteMeasure::canonical(d, std::move(coords), weights);
  } catch (const Error& e) {
    fail(ErrorKind::Parse, std::string("measure json: ") + e.what());
  }
}

DiscreteMeasure parse_cloud_text(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return parse_measure_json(text);
  return parse_csv(text);
}

DiscreteMeasure parse_cloud(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_cloud_text(text);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Parse) throw;
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

std::string measure_to_csv(const DiscreteMeasure& measure) {
  std::string out;
  for (std::size_t a = 0; a < measure.dimension(); ++a) out += "x" + std::to_string(a + 1) + ",";
  out += "w\n";
  for (std::size_t j = 0; j < measure.size(); ++j) {
    for (double c : measure.atom(j)) out += format_real(c) + ",";
    out += format_real(measure.weight(j)) + "\n";
  }
  return out;
}

std::string measure_to_json(const DiscreteMeasure& measure) {
  Json j;
  j["dimension"] = measure.dimension();
  Json atoms = Json::array();
  for (std::size_t k = 0; k < measure.size(); ++k) {
    auto x = measure.atom(k);
    atoms.push_back(std::vector<double>(x.begin(), x.end()));
  }
  j["atoms"] = std::move(atoms);
  j["weights"] = measure.weights();
  return j.dump(2) + "\n";
}

std::string rule_to_json(const CubatureRule& rule) {
  Json j;
  j["dimension"] = rule.dimension;
  j["degree"] = rule.degree;
  j["nodes"] = point_array(rule.nodes);
  j["weights"] = rule.weights;
  j["moment_residual"] = rule.moment_residual;
  Json source;
  source["kind"] = rule.source.kind;
  source["detail"] = rule.source.detail;
  source["content_hash"] = hex64(rule.source.content_hash);
  source["atoms"] = rule.source.atoms;
  source["mass"] = rule.source.mass;
  source["box"] = rule.source.box;
  j["source"] = std::move(source);
  return j.dump(2) + "\n";
}

CubatureRule parse_rule_json(std::string_view text) {
  const Json j = parse_json(text, "cubature json");
  if (!j.is_object()) fail(ErrorKind::Parse, "cubature json: top level must be an object");
  CubatureRule rule;
  rule.dimension = field<std::size_t>(j, "dimension", "cubature json");
  rule.degree = field<unsigned>(j, "degree", "cubature json");
  for (auto& c : field<std::vector<std::vector<double>>>(j, "nodes", "cubature json"))
    rule.nodes.push_back(Point{std::move(c)});
  rule.weights = field<std::vector<double>>(j, "weights", "cubature json");
  rule.moment_residual = field<double>(j, "moment_residual", "cubature json");
  if (rule.nodes.size() != rule.weights.size())
    fail(ErrorKind::Parse, "cubature json: node and weight counts differ");
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    if (rule.nodes[k].dimension() != rule.dimension)
      fail(ErrorKind::Parse, "cubature json: node " + std::to_string(k) + " has wrong dimension");
    if (!(rule.weights[k] > 0.0))
      fail(ErrorKind::Parse, "cubature json: node " + std::to_string(k) + " has nonpositive weight");
  }
  if (j.contains("source") && j["source"].is_object()) {
    const Json& s = j["source"];
    rule.source.kind = s.value("kind", std::string("measure"));
    rule.source.detail = s.value("detail", std::string());
    const std::string hash = s.value("content_hash", std::string("0"));
    rule.source.content_hash = std::strtoull(hash.c_str(), nullptr, 16);
    rule.source.atoms = s.value("atoms", std::size_t{0});
    rule.source.mass = s.value("mass", 0.0);
    rule.source.box = s.value("box", std::vector<double>{});
  }
  return rule;
}

CubatureRule load_rule(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_rule_json(text);
  } catch (const Error& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

std::string certificate_to_json(const MvtCertificate& c) {
  Json j;
  j["lambda"] = c.lambda;
  j["x0"] = c.x0.coords;
  j["x1"] = c.x1.coords;
  j["mean"] = c.mean;
  j["residual"] = c.residual;
  j["degenerate"] = c.degenerate;
  j["f_x0"] = c.f_x0;
  j["f_x1"] = c.f_x1;
  return j.dump(2) + "\n";
}

std::string witness_to_json(const OnePointWitness& w) {
  Json j;
  j["x"] = std::vector<double>{w.x};
  j["f_value"] = w.f_value;
  j["mean"] = w.mean;
  j["residual"] = w.residual;
  j["tol_f"] = w.tol_f;
  return j.dump(2) + "\n";
}

std::string exactness_to_json(const ExactnessReport& r) {
  Json j;
  j["basis_max_rel_err"] = r.basis_max_rel_err;
  j["sampled_max_rel_err"] = r.sampled_max_rel_err;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["degree"] = r.degree;
  j["basis_errors"] = r.basis_errors;
  return j.dump(2) + "\n";
}

}  // namespace richter::io
