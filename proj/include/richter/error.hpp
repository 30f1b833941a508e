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

#include <stdexcept>
#include <string>

namespace richter {

/// Failure categories. The C API and the CLI map these onto status and exit
/// codes, so the numbering is part of the public contract.
enum class ErrorKind {
  InvalidArgument = 1,  // precondition violated by the caller
  Domain = 2,           // mathematically meaningful failure (zero mass, no witness)
  Numerical = 3,        // rank misestimate, residual above tolerance
  Parse = 4,            // malformed file, expression, or flag value
  Io = 5,               // unreadable or unwritable file
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace richter
