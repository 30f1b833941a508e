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
#include <string_view>

#include "richter/measure.hpp"

namespace richter {

/// Compiles a small arithmetic expression over x1..xd into a callable.
///
/// Grammar: numbers, variables `x1`..`xd` (`x` is an alias of `x1`), `pi`,
/// binary + - * / ^ (right-associative power), unary minus, parentheses, and
/// the functions abs sqrt exp log sin cos tan min max pow and
///
///   step(a, lo, hi)      lo when x1 <= a, hi otherwise
///   step(t, a, lo, hi)   lo when t <= a, hi otherwise
///
/// so `step(0.5, 1, 2)` is 1 on [0, 1/2] and 2 on (1/2, 1]. Throws
/// ErrorKind::Parse with the byte offset of the offending token.
ScalarFunction parse_expression(std::string_view source, std::size_t dimension);

}  // namespace richter
