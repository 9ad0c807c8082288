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

#include "cambi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "cambi/banding.hpp"
#include "cambi/errors.hpp"
#include "cambi/pipeline.hpp"
#include "cambi/pooling.hpp"
#include "cambi/preprocess.hpp"
#include "cambi/report.hpp"

namespace cambi {

namespace fs = std::filesystem;

namespace {

// Tracks files created by a run so a failed run leaves nothing behind.
class OutputSet {
 public:
  ~OutputSet() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& p : created_) fs::remove(p, ec);
  }

  void add(const fs::path& p) { created_.push_back(p); }
  void commit() { committed_ = true; }

  void write_text(const fs::path& path, const std::string& text) {
    add(path);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << text;
    out.flush();
    if (!out) throw IoError("write failed for '" + path.string() + "'");
  }

 private:
  std::vector<fs::path> created_;
  bool committed_ = false;
};

bool is_y4m(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input '" + path.string() + "'");
  char magic[9] = {};
  in.read(magic, sizeof magic);
  return in.gcount() == 9 && std::string_view(magic, 9) == "YUV4MPEG2";
}

std::unique_ptr<FrameSource> open_input(const RunOptions& options) {
  if (options.input.empty()) throw IoError("no input given");
  if (!fs::exists(options.input)) {
    throw IoError("input '" + options.input.string() + "' does not exist");
  }
  const bool y4m = is_y4m(options.input);
  if (y4m && options.raw) throw ConfigError("raw geometry flags are not allowed for Y4M input");
  if (!y4m && !options.raw) {
    throw ConfigError("input is not Y4M; raw input needs --width, --height and --pixfmt");
  }
  if (y4m) return open_y4m_source(options.input);
  const RawGeometry& g = *options.raw;
  const int depth = g.pixel_format == PixelFormat::yuv420p10le ? 10 : 8;
  return open_raw_source(options.input, g.width, g.height, depth, g.pixel_format,
                         parse_frame_rate(g.fps));
}

void write_reports(const RunOptions& options, const VideoReport& report,
                   const FrameSource& source, OutputSet& outputs, std::ostream& out) {
  const std::string json = to_json(report, options.input.string(), source.descriptor());
  if (options.json_path.empty()) {
    out << json;
  } else {
    outputs.write_text(options.json_path, json);
  }
  if (!options.csv_path.empty()) outputs.write_text(options.csv_path, to_csv(report));
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    body();
    return 0;
  } catch (const std::exception& e) {
    err << "cambi: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int run_score(const RunOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    OutputSet outputs;
    validate(options.config);
    const int threads = resolve_threads(options.threads);
    auto source = open_input(options);
    std::vector<FrameScore> scores;
    for (const auto& sel :
         select_frames(source->frame_count(), source->frame_rate(), options.config.t_sec)) {
      scores.push_back(score_frame(source->read(sel.index), options.config, sel.index,
                                   sel.time_sec, threads));
      if (options.verbosity > 0) {
        err << "frame " << sel.index << " score " << scores.back().score << '\n';
      }
    }
    write_reports(options, video_score(scores, options.config), *source, outputs, out);
    outputs.commit();
  });
}

int run_maps(const RunOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    OutputSet outputs;
    const CambiConfig& config = options.config;
    validate(config);
    if (options.maps_dir.empty()) throw ConfigError("maps needs --maps-dir");
    const int threads = resolve_threads(options.threads);
    auto source = open_input(options);
    const auto selected =
        select_frames(source->frame_count(), source->frame_rate(), config.t_sec);
    fs::create_directories(options.maps_dir);

    std::vector<FrameScore> scores;
    for (const auto& sel : selected) {
      const LumaFrame frame = source->read(sel.index);
      validate(frame);
      BandingMapSet set = compute_map_set(preprocess(frame, config), config, threads);
      set.frame_index = sel.index;
      set.time_sec = sel.time_sec;

      const std::string stem = "f" + std::to_string(sel.index);
      for (const ConfidenceMap& m : set.maps) {
        const fs::path p = options.maps_dir / (stem + "_k" + std::to_string(m.k) + "_s" +
                                               std::to_string(m.scale_index) + ".pgm");
        outputs.add(p);
        write_pgm(m.values, p);
      }
      FieldPlane combined = per_pixel_combined(set, config);
      scores.push_back({sel.index, sel.time_sec, pool_top_percent(combined, config.top_percent)});
      const double peak = combined.maxCoeff();
      if (peak > 0.0) combined /= peak;
      const fs::path p = options.maps_dir / (stem + "_combined.pgm");
      outputs.add(p);
      write_pgm(combined, p);
      if (options.color_maps) {
        const fs::path pc = options.maps_dir / (stem + "_combined.ppm");
        outputs.add(pc);
        write_ppm(combined, pc);
      }
      if (options.verbosity > 0) err << "frame " << sel.index << " maps written\n";
    }
    if (!options.json_path.empty() || !options.csv_path.empty()) {
      write_reports(options, video_score(scores, config), *source, outputs, out);
    }
    outputs.commit();
  });
}

int run_gen(const RunOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    OutputSet outputs;
    if (options.output.empty()) throw ConfigError("gen needs --output");
    const VideoStream stream = generate(options.synthetic);
    outputs.add(options.output);
    write_y4m(stream, options.output);
    outputs.commit();
    out << options.output.string() << '\n';
  });
}

namespace {

struct CliState {
  RunOptions options;
  std::string canvas = "3840x2160";
  std::string fps = "30";
  std::string pixfmt;
  int raw_width = 0;
  int raw_height = 0;
  std::string spec_file;
  std::string pattern = "flat";
  std::string dither = "none";
};

void add_metric_options(CLI::App& cmd, CliState& s) {
  RunOptions& o = s.options;
  CambiConfig& c = o.config;
  cmd.add_option("-i,--input", o.input, "Input Y4M or raw planar file")->required();
  cmd.add_option("--width", s.raw_width, "Raw input width");
  cmd.add_option("--height", s.raw_height, "Raw input height");
  cmd.add_option("--pixfmt", s.pixfmt, "Raw pixel format: yuv420, yuv420p10le, gray");
  cmd.add_option("--fps", s.fps, "Raw input frame rate (30, 30000/1001, 23.976)");
  cmd.add_option("--canvas", s.canvas, "Canvas size WxH")->capture_default_str();
  cmd.add_option("--window", c.window, "Window size (odd)")->capture_default_str();
  cmd.add_option("--tau-g", c.tau_g, "Gradient threshold (10-bit units)")->capture_default_str();
  cmd.add_option("--max-k", c.max_k, "Largest contrast step")->capture_default_str();
  cmd.add_option("--scales", c.num_scales, "Number of scales")->capture_default_str();
  cmd.add_option("--top-percent", c.top_percent, "Pooled pixel fraction")->capture_default_str();
  cmd.add_option("--t-sec", c.t_sec, "Seconds between scored frames")->capture_default_str();
  cmd.add_option("--json", o.json_path, "JSON report path (default: stdout)");
  cmd.add_option("--csv", o.csv_path, "Per-frame CSV path");
  cmd.add_option("--threads", o.threads, "Worker threads (default: CAMBI_THREADS or all cores)");
  cmd.add_flag("-v,--verbose", o.verbosity, "Per-frame progress on stderr");
}

void finish_metric_options(CliState& s) {
  RunOptions& o = s.options;
  int w = 0, h = 0;
  char sep = 0;
  std::istringstream in(s.canvas);
  if (!(in >> w >> sep >> h) || (sep != 'x' && sep != 'X') || !in.eof() || w < 1 || h < 1) {
    throw ConfigError("malformed --canvas '" + s.canvas + "', expected WxH");
  }
  o.config.canvas_width = w;
  o.config.canvas_height = h;
  if (s.raw_width > 0 || s.raw_height > 0 || !s.pixfmt.empty()) {
    if (s.raw_width <= 0 || s.raw_height <= 0 || s.pixfmt.empty()) {
      throw ConfigError("raw input needs all of --width, --height and --pixfmt");
    }
    o.raw = RawGeometry{s.raw_width, s.raw_height, parse_pixel_format(s.pixfmt), s.fps};
  }
}

void finish_gen_options(CliState& s) {
  SyntheticSpec& spec = s.options.synthetic;
  SyntheticSpec flags = spec;
  flags.pattern = parse_pattern(s.pattern);
  flags.dither = parse_dither(s.dither);
  flags.frame_rate = parse_frame_rate(s.fps);
  if (!s.spec_file.empty()) {
    std::ifstream in(s.spec_file);
    if (!in) throw IoError("cannot open spec file '" + s.spec_file + "'");
    std::stringstream text;
    text << in.rdbuf();
    flags = parse_synthetic_spec(text.str(), flags);
  }
  spec = flags;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Contrast-aware multiscale banding index for video"};
  app.require_subcommand(1);
  CliState s;

  auto* score = app.add_subcommand("score", "Score banding visibility of a video");
  add_metric_options(*score, s);
  auto* maps = app.add_subcommand("maps", "Export per-frame confidence maps as PGM");
  add_metric_options(*maps, s);
  maps->add_option("--maps-dir", s.options.maps_dir, "Output directory")->required();
  maps->add_flag("--color", s.options.color_maps, "Also write a false-color PPM of the combined map");

  auto* gen = app.add_subcommand("gen", "Generate a synthetic banding stimulus (8-bit Y4M)");
  SyntheticSpec& spec = s.options.synthetic;
  gen->add_option("-o,--output", s.options.output, "Output Y4M path")->required();
  gen->add_option("--config", s.spec_file, "key=value spec file, applied over the flags");
  gen->add_option("--width", spec.width, "Width")->capture_default_str();
  gen->add_option("--height", spec.height, "Height")->capture_default_str();
  gen->add_option("--frames", spec.frames, "Frame count")->capture_default_str();
  gen->add_option("--pattern", s.pattern, "h_ramp, v_ramp, flat, white_noise")
      ->capture_default_str();
  gen->add_option("--start", spec.start_value, "Start intensity (10-bit)")->capture_default_str();
  gen->add_option("--end", spec.end_value, "End intensity (10-bit)")->capture_default_str();
  gen->add_option("--quant-step", spec.quant_step, "Quantization step (10-bit, 0 = none)")
      ->capture_default_str();
  gen->add_option("--dither", s.dither, "none or bayer4")->capture_default_str();
  gen->add_option("--seed", spec.seed, "Noise seed")->capture_default_str();
  gen->add_option("--fps", s.fps, "Frame rate")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (score->parsed() || maps->parsed()) finish_metric_options(s);
    if (gen->parsed()) finish_gen_options(s);
  } catch (const std::exception& e) {
    std::cerr << "cambi: error: " << e.what() << '\n';
    return 1;
  }

  if (score->parsed()) {
    s.options.subcommand = Subcommand::score;
    return run_score(s.options, std::cout, std::cerr);
  }
  if (maps->parsed()) {
    s.options.subcommand = Subcommand::maps;
    return run_maps(s.options, std::cout, std::cerr);
  }
  s.options.subcommand = Subcommand::gen;
  return run_gen(s.options, std::cout, std::cerr);
}

}  // namespace cambi
