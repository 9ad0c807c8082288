/**
 *
 *  Copyright 2026 The cambi Authors
 *
 *     Licensed under the Apache License, Version 2.0 (the "License");
 *     you may not use this file except in compliance with the License.
 *     You may obtain a copy of the License at
 *
 *         http://www.apache.org/licenses/LICENSE-2.0
 *
 *     Unless required by applicable law or agreed to in writing, software
 *     distributed under the License is distributed on an "AS IS" BASIS,
 *     WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *     See the License for the specific language governing permissions and
 *     limitations under the License.
 *
 */

#pragma once

#include <string>

#include "cambi/pooling.hpp"

namespace cambi {

inline constexpr const char* kVersion = "1.0.0";

/// Canonical JSON report. Scores are printed with six decimals and no
/// wall-clock fields, so equal inputs give byte-identical output.
std::string to_json(const VideoReport& report, const std::string& input,
                    const std::string& source_descriptor);

/// `index,time_sec,score` header plus one line per scored frame.
std::string to_csv(const VideoReport& report);

}  // namespace cambi
