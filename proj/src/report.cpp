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

#include "cambi/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace cambi {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

std::string to_json(const VideoReport& report, const std::string& input,
                    const std::string& source_descriptor) {
  const CambiConfig& c = report.config_echo;
  std::ostringstream o;
  o << "{\n";
  o << "  \"version\": " << quoted(kVersion) << ",\n";
  o << "  \"input\": " << quoted(input) << ",\n";
  o << "  \"source\": " << quoted(source_descriptor) << ",\n";
  o << "  \"config\": {\n"
    << "    \"canvas_width\": " << c.canvas_width << ",\n"
    << "    \"canvas_height\": " << c.canvas_height << ",\n"
    << "    \"window\": " << c.window << ",\n"
    << "    \"tau_g\": " << c.tau_g << ",\n"
    << "    \"max_k\": " << c.max_k << ",\n"
    << "    \"num_scales\": " << c.num_scales << ",\n"
    << "    \"top_percent\": " << fixed6(c.top_percent) << ",\n"
    << "    \"t_sec\": " << fixed6(c.t_sec) << "\n"
    << "  },\n";
  o << "  \"video_score\": " << fixed6(report.video_score) << ",\n";
  o << "  \"banding_flag\": " << (report.banding_flag ? "true" : "false") << ",\n";
  o << "  \"frames\": [";
  for (std::size_t i = 0; i < report.frame_scores.size(); ++i) {
    const FrameScore& f = report.frame_scores[i];
    o << (i ? ",\n" : "\n") << "    {\"index\": " << f.frame_index
      << ", \"time_sec\": " << fixed6(f.time_sec) << ", \"score\": " << fixed6(f.score) << "}";
  }
  o << (report.frame_scores.empty() ? "]\n" : "\n  ]\n");
  o << "}\n";
  return o.str();
}

std::string to_csv(const VideoReport& report) {
  std::ostringstream o;
  o << "index,time_sec,score\n";
  for (const auto& f : report.frame_scores) {
    o << f.frame_index << ',' << fixed6(f.time_sec) << ',' << fixed6(f.score) << '\n';
  }
  return o.str();
}

}  // namespace cambi
