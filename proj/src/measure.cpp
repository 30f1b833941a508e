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

#include "richter/measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "richter/error.hpp"

namespace richter {

namespace {

void validate(std::size_t dimension, const std::vector<double>& coords,
              const std::vector<double>& weights) {
  if (dimension == 0) fail(ErrorKind::InvalidArgument, "measure dimension must be at least 1");
  if (coords.size() != weights.size() * dimension)
    fail(ErrorKind::InvalidArgument,
         "measure has " + std::to_string(weights.size()) + " weights but " +
             std::to_string(coords.size()) + " coordinates for dimension " +
             std::to_string(dimension));
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!std::isfinite(coords[k]))
      fail(ErrorKind::InvalidArgument, "atom " + std::to_string(k / dimension) +
                                           " has a non-finite coordinate on axis " +
                                           std::to_string(k % dimension + 1));
  for (std::size_t j = 0; j < weights.size(); ++j)
    if (!std::isfinite(weights[j]) || weights[j] < 0.0)
      fail(ErrorKind::InvalidArgument,
           "atom " + std::to_string(j) + " has invalid weight " + std::to_string(weights[j]));
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::size_t dimension, std::vector<double> coords,
                                 std::vector<double> weights)
    : dimension_(dimension), coords_(std::move(coords)), weights_(std::move(weights)) {
  validate(dimension_, coords_, weights_);
}

DiscreteMeasure DiscreteMeasure::canonical(std::size_t dimension, std::vector<double> coords,
                                           std::vector<double> weights) {
  validate(dimension, coords, weights);
  const double max_weight =
      weights.empty() ? 0.0 : *std::max_element(weights.begin(), weights.end());
  const double cutoff = kZeroWeightRatio * max_weight;
  std::size_t kept = 0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] == 0.0 || weights[j] < cutoff) continue;
    if (kept != j) {
      weights[kept] = weights[j];
      std::copy_n(coords.begin() + j * dimension, dimension, coords.begin() + kept * dimension);
    }
    ++kept;
  }
  weights.resize(kept);
  coords.resize(kept * dimension);
  DiscreteMeasure m;
  m.dimension_ = dimension;
  m.coords_ = std::move(coords);
  m.weights_ = std::move(weights);
  return m;
}

DiscreteMeasure DiscreteMeasure::canonicalized() const { return canonical(dimension_, coords_, weights_); }

Point DiscreteMeasure::point(std::size_t j) const {
  auto a = atom(j);
  return Point{{a.begin(), a.end()}};
}

double DiscreteMeasure::mass() const {
  CompensatedSum sum;
  for (double w : weights_) sum.add(w);
  return sum.value();
}

DiscreteMeasure DiscreteMeasure::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    fail(ErrorKind::InvalidArgument, "scale factor must be positive and finite");
  std::vector<double> w = weights_;
  for (double& v : w) v *= factor;
  return DiscreteMeasure(dimension_, coords_, std::move(w));
}

std::vector<double> DiscreteMeasure::bounding_box() const {
  std::vector<double> box(2 * dimension_, 0.0);
  if (empty()) return box;
  for (std::size_t a = 0; a < dimension_; ++a) {
    box[2 * a] = std::numeric_limits<double>::infinity();
    box[2 * a + 1] = -std::numeric_limits<double>::infinity();
  }
  for (std::size_t j = 0; j < size(); ++j) {
    auto x = atom(j);
    for (std::size_t a = 0; a < dimension_; ++a) {
      box[2 * a] = std::min(box[2 * a], x[a]);
      box[2 * a + 1] = std::max(box[2 * a + 1], x[a]);
    }
  }
  return box;
}

void DiscreteMeasure::require_positive_mass(const char* operation) const {
  if (empty() || !(mass() > 0.0))
    fail(ErrorKind::Domain, std::string(operation) + ": measure has zero mass");
}

double integrate(const DiscreteMeasure& measure, const ScalarFunction& f) {
  CompensatedSum sum;
  for (std::size_t j = 0; j < measure.size(); ++j) {
    const double v = f(measure.atom(j));
    if (!std::isfinite(v))
      fail(ErrorKind::Domain, "integrand is not finite at atom " + std::to_string(j));
    sum.add(measure.weight(j) * v);
  }
  return sum.value();
}

namespace {

struct Fnv1a {
  std::uint64_t state = 0xcbf29ce484222325ULL;

  void bytes(const unsigned char* p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      state ^= p[i];
      state *= 0x100000001b3ULL;
    }
  }
  void word(std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    bytes(b, 8);
  }
  void real(double v) { word(std::bit_cast<std::uint64_t>(v)); }
};

}  // namespace

std::uint64_t content_hash(const DiscreteMeasure& measure) {
  Fnv1a h;
  h.word(measure.dimension());
  h.word(measure.size());
  for (double c : measure.coords()) h.real(c);
  for (double w : measure.weights()) h.real(w);
  return h.state;
}

}  // namespace richter
