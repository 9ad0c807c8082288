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

#include "cambi/config.hpp"

#include <cmath>
#include <string>

#include "cambi/errors.hpp"

namespace cambi {

void validate(const CambiConfig& c) {
  if (c.canvas_width < 1 || c.canvas_height < 1) {
    throw ConfigError("canvas dimensions must be positive");
  }
  if (c.window < 3 || c.window % 2 == 0) {
    throw ConfigError("window must be odd and >= 3, got " + std::to_string(c.window));
  }
  if (c.tau_g < 0) throw ConfigError("tau_g must be non-negative");
  if (c.max_k < 1) throw ConfigError("max_k must be >= 1");
  if (c.num_scales < 1 || c.num_scales > kMaxScales) {
    throw ConfigError("num_scales must be in [1," + std::to_string(kMaxScales) + "], got " +
                      std::to_string(c.num_scales));
  }
  if (!(c.top_percent > 0.0 && c.top_percent <= 1.0)) {
    throw ConfigError("top_percent must be in (0,1]");
  }
  if (!(c.t_sec > 0.0) || !std::isfinite(c.t_sec)) throw ConfigError("t_sec must be > 0");
}

}  // namespace cambi
