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

#include "richter/sampler.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "richter/error.hpp"

namespace richter {

SamplerSpec SamplerSpec::grid(std::vector<std::size_t> cells_per_axis, std::vector<double> box) {
  SamplerSpec s;
  s.kind = Kind::UniformGrid;
  s.counts = std::move(cells_per_axis);
  s.box = std::move(box);
  s.validate();
  return s;
}

SamplerSpec SamplerSpec::monte_carlo(std::size_t count, std::uint64_t seed, std::vector<double> box) {
  SamplerSpec s;
  s.kind = Kind::MonteCarlo;
  s.counts = {count};
  s.seed = seed;
  s.box = std::move(box);
  s.validate();
  return s;
}

std::size_t SamplerSpec::total_count() const {
  std::size_t n = 1;
  for (std::size_t c : counts) {
    if (c != 0 && n > std::numeric_limits<std::size_t>::max() / c)
      fail(ErrorKind::InvalidArgument, "sample count overflows");
    n *= c;
  }
  return n;
}

double SamplerSpec::volume() const {
  double v = 1.0;
  for (std::size_t a = 0; a < dimension(); ++a) v *= box[2 * a + 1] - box[2 * a];
  return v;
}

void SamplerSpec::validate() const {
  if (box.empty() || box.size() % 2 != 0)
    fail(ErrorKind::InvalidArgument, "sampler box needs lo,hi per axis");
  for (std::size_t a = 0; a < dimension(); ++a)
    if (!std::isfinite(box[2 * a]) || !std::isfinite(box[2 * a + 1]) || !(box[2 * a] < box[2 * a + 1]))
      fail(ErrorKind::InvalidArgument, "sampler box axis " + std::to_string(a + 1) + " needs lo < hi");
  if (kind == Kind::UniformGrid) {
    if (counts.size() != dimension())
      fail(ErrorKind::InvalidArgument, "grid has " + std::to_string(counts.size()) +
                                           " axis counts for a box of dimension " +
                                           std::to_string(dimension()));
  } else if (counts.size() != 1) {
    fail(ErrorKind::InvalidArgument, "monte carlo sampler takes a single count");
  }
  for (std::size_t c : counts)
    if (c == 0) fail(ErrorKind::InvalidArgument, "sample count must be at least 1");
}

namespace {

double checked_density(const ScalarFunction& density, std::span<const double> x, std::size_t index) {
  const double v = density(x);
  if (!std::isfinite(v))
    fail(ErrorKind::Domain, "density is not finite at sample " + std::to_string(index));
  if (v < 0.0)
    fail(ErrorKind::Domain, "density is negative at sample " + std::to_string(index));
  return v;
}

}  // namespace

DiscreteMeasure discretize(const ScalarFunction& density, const SamplerSpec& sampler) {
  sampler.validate();
  const std::size_t d = sampler.dimension();
  const std::size_t n = sampler.total_count();
  std::vector<double> coords(n * d);
  std::vector<double> weights(n);

  if (sampler.kind == SamplerSpec::Kind::UniformGrid) {
    const double cell_volume = sampler.volume() / static_cast<double>(n);
    std::vector<std::size_t> index(d, 0);
    for (std::size_t j = 0; j < n; ++j) {
      double* x = coords.data() + j * d;
      for (std::size_t a = 0; a < d; ++a) {
        const double lo = sampler.box[2 * a], hi = sampler.box[2 * a + 1];
        const double cells = static_cast<double>(sampler.counts[a]);
        x[a] = lo + (hi - lo) * ((static_cast<double>(index[a]) + 0.5) / cells);
      }
      weights[j] = checked_density(density, {x, d}, j) * cell_volume;
      // Odometer increment, last axis fastest.
      for (std::size_t a = d; a-- > 0;) {
        if (++index[a] < sampler.counts[a]) break;
        index[a] = 0;
      }
    }
  } else {
    const double atom_volume = sampler.volume() / static_cast<double>(n);
    UniformStream stream(sampler.seed);
    for (std::size_t j = 0; j < n; ++j) {
      double* x = coords.data() + j * d;
      for (std::size_t a = 0; a < d; ++a) x[a] = stream.next(sampler.box[2 * a], sampler.box[2 * a + 1]);
      weights[j] = checked_density(density, {x, d}, j) * atom_volume;
    }
  }

  DiscreteMeasure m = DiscreteMeasure::canonical(d, std::move(coords), std::move(weights));
  if (m.empty()) fail(ErrorKind::Domain, "density vanishes at every sample; the measure has no mass");
  return m;
}

DiscreteMeasure discretize(const SamplerSpec& sampler) {
  return discretize([](std::span<const double>) { return 1.0; }, sampler);
}

}  // namespace richter
