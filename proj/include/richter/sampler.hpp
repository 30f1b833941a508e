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
#include <cstdint>
#include <random>
#include <vector>

#include "richter/measure.hpp"

namespace richter {

/// Portable uniform stream: std::mt19937_64 (whose output sequence is fixed by
/// the C++ standard) with the top 53 bits mapped to [0, 1). Library
/// distributions are avoided because their algorithms are implementation
/// defined.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 engine_;
};

struct SamplerSpec {
  enum class Kind { UniformGrid, MonteCarlo };

  Kind kind = Kind::UniformGrid;
  /// Uniform grid: cells per axis. Monte carlo: a single entry, the sample count.
  std::vector<std::size_t> counts;
  std::uint64_t seed = 0;
  /// lo0, hi0, lo1, hi1, ...
  std::vector<double> box;

  static SamplerSpec grid(std::vector<std::size_t> cells_per_axis, std::vector<double> box);
  static SamplerSpec monte_carlo(std::size_t count, std::uint64_t seed, std::vector<double> box);

  std::size_t dimension() const noexcept { return box.size() / 2; }
  std::size_t total_count() const;
  double volume() const;
  /// Throws ErrorKind::InvalidArgument on an empty count, a lo >= hi axis,
  /// or a count/box dimension mismatch.
  void validate() const;
};

/// Weighted point cloud for `density` under `sampler`. Grid atoms sit at cell
/// midpoints (first axis slowest) with weight density * cell volume; monte
/// carlo atoms are drawn coordinate by coordinate with weight
/// density * volume / N. Zero-density atoms are dropped.
DiscreteMeasure discretize(const ScalarFunction& density, const SamplerSpec& sampler);

/// Lebesgue measure, i.e. density 1.
DiscreteMeasure discretize(const SamplerSpec& sampler);

}  // namespace richter
