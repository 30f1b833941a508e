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

#include <string>
#include <string_view>

#include "richter/cubature.hpp"
#include "richter/measure.hpp"
#include "richter/mvt.hpp"

namespace richter::io {

/// Reads a point cloud. Content starting with '{' is the JSON measure format,
/// anything else is CSV with header `x1,...,xd[,w]`. The result is canonical.
/// Errors cite the data row (1-based) and the file line.
DiscreteMeasure parse_cloud(const std::string& path);
DiscreteMeasure parse_cloud_text(std::string_view text);
DiscreteMeasure parse_csv(std::string_view text);
DiscreteMeasure parse_measure_json(std::string_view text);

/// CSV with a w column, reals printed as %.17g, LF line endings.
std::string measure_to_csv(const DiscreteMeasure& measure);
std::string measure_to_json(const DiscreteMeasure& measure);

std::string rule_to_json(const CubatureRule& rule);
CubatureRule parse_rule_json(std::string_view text);
CubatureRule load_rule(const std::string& path);

std::string certificate_to_json(const MvtCertificate& certificate);
std::string witness_to_json(const OnePointWitness& witness);
std::string exactness_to_json(const ExactnessReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace richter::io
