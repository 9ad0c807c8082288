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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "cambi/config.hpp"
#include "cambi/frame_io.hpp"
#include "cambi/synthgen.hpp"

namespace cambi {

enum class Subcommand { score, maps, gen };

struct RawGeometry {
  int width = 0;
  int height = 0;
  PixelFormat pixel_format = PixelFormat::yuv420;
  std::string fps = "30";
};

struct RunOptions {
  Subcommand subcommand = Subcommand::score;
  std::filesystem::path input;
  std::optional<RawGeometry> raw;  // required iff the input is not Y4M
  CambiConfig config;
  std::filesystem::path json_path;
  std::filesystem::path csv_path;
  std::filesystem::path maps_dir;
  std::filesystem::path output;  // gen
  bool color_maps = false;
  int threads = 0;  // 0: CAMBI_THREADS or hardware concurrency
  int verbosity = 0;
  SyntheticSpec synthetic;
};

// Each returns the process exit status. Data goes to files or `out`,
// diagnostics to `err` as one line.
int run_score(const RunOptions& options, std::ostream& out, std::ostream& err);
int run_maps(const RunOptions& options, std::ostream& out, std::ostream& err);
int run_gen(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Full command line entry point (CLI11 parsing + dispatch).
int cli_main(int argc, char** argv);

}  // namespace cambi
