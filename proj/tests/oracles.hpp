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

// Reference computations for the tests. Nothing here calls into the library's
// numerical paths: sums are plain long-double loops, rationals are exact.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "richter/measure.hpp"

namespace oracle {

/// Direct long-double summation of w_j * prod_a x_{j,a}^{alpha_a}.
inline long double raw_moment(const richter::DiscreteMeasure& m, const std::vector<unsigned>& alpha) {
  long double sum = 0.0L;
  for (std::size_t j = 0; j < m.size(); ++j) {
    long double v = m.weight(j);
    auto x = m.atom(j);
    for (std::size_t a = 0; a < alpha.size(); ++a)
      for (unsigned e = 0; e < alpha[a]; ++e) v *= x[a];
    sum += v;
  }
  return sum;
}

/// All exponent vectors of total degree <= n in d variables, any order.
inline std::vector<std::vector<unsigned>> exponents_up_to(unsigned n, std::size_t d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(d, 0);
  while (true) {
    unsigned total = 0;
    for (unsigned e : cur) total += e;
    if (total <= n) out.push_back(cur);
    std::size_t a = 0;
    while (a < d) {
      if (++cur[a] <= n) break;
      cur[a] = 0;
      ++a;
    }
    if (a == d) break;
  }
  return out;
}

inline double relative(long double got, long double want) {
  return static_cast<double>(std::fabs(got - want) / (1.0L + std::fabs(want)));
}

/// n! as an unsigned 64-bit integer (n <= 20).
inline std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Fraction operator+(Fraction a, Fraction b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Fraction operator-(Fraction a, Fraction b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Fraction operator*(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }
  friend Fraction operator/(Fraction a, Fraction b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator==(Fraction a, Fraction b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(Fraction a, Fraction b) { return a.num * b.den < b.num * a.den; }
};

}  // namespace oracle
