// Copyright 2026 The fieldrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <csignal>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fieldrover/app/commands.hpp"
#include "fieldrover/app/config.hpp"
#include "fieldrover/errors.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

void on_signal(int) { g_interrupted = true; }

// Flags shared by run and serve. Optionals stay empty unless given, so a
// config file only loses to flags the user actually typed.
struct RunFlags {
  std::string world, mission, out, config;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint16_t> telemetry_port, rtk_port;
  std::optional<bool> rtk;
  std::optional<double> gps_sigma, battery_v, max_time, rate, conf_thr, iou_thr;
  bool realtime = false;

  void attach(CLI::App* cmd, bool mission_required) {
    cmd->add_option("--world", world, "World JSON file")->required();
    auto* m = cmd->add_option("--mission", mission, "Mission JSON file");
    if (mission_required) m->required();
    cmd->add_option("--seed", seed, "Run seed");
    cmd->add_option("--out", out, "Output directory");
    cmd->add_option("--config", config, "JSON config file (flags take precedence)");
    cmd->add_option("--telemetry-port", telemetry_port, "TCP port for NDJSON telemetry and commands");
    cmd->add_option("--rtk-port", rtk_port, "TCP port for the RTK correction stream");
    cmd->add_flag("--rtk,!--no-rtk", rtk, "Enable RTK corrections (default on)");
    cmd->add_option("--gps-sigma", gps_sigma, "Horizontal RMS error of the uncorrected GPS, meters");
    cmd->add_option("--battery-v", battery_v, "Battery voltage at start");
    cmd->add_option("--max-time", max_time, "Simulated time limit, seconds");
    cmd->add_option("--rate", rate, "Telemetry frame rate, Hz");
    cmd->add_option("--conf-thr", conf_thr, "Confidence threshold");
    cmd->add_option("--iou-thr", iou_thr, "IoU threshold");
    cmd->add_flag("--realtime", realtime, "Pace the simulation against the wall clock");
  }

  fieldrover::app::RunSettings resolve() const {
    fieldrover::app::RunSettings s;
    if (!config.empty()) fieldrover::app::apply_config_file(s, config);
    s.world = world;
    s.mission = mission;
    if (!out.empty()) s.out = out;
    if (seed) s.seed = *seed;
    if (telemetry_port) s.telemetry_port = *telemetry_port;
    if (rtk_port) s.rtk_port = *rtk_port;
    if (rtk) s.rtk = *rtk;
    if (gps_sigma) s.gps_sigma_m = *gps_sigma;
    if (battery_v) s.battery_v = *battery_v;
    if (max_time) s.max_time_s = *max_time;
    if (rate) s.telemetry_rate_hz = *rate;
    if (conf_thr) s.eval.confidence_threshold = *conf_thr;
    if (iou_thr) s.eval.iou_threshold = *iou_thr;
    s.realtime = s.realtime || realtime;
    return s;
  }
};

std::optional<fieldrover::yieldkit::TileGrid> parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) return std::nullopt;
  try {
    return fieldrover::yieldkit::TileGrid{std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  namespace app = fieldrover::app;
  CLI::App cli{"fieldrover: agricultural rover mission simulator and yield-evaluation toolkit"};
  cli.require_subcommand(1);
  cli.set_version_flag("--version", "fieldrover 0.3.0");

  RunFlags run_flags;
  auto* run = cli.add_subcommand("run", "Fly a mission headless and write its artifacts");
  run_flags.attach(run, true);

  RunFlags serve_flags;
  auto* serve = cli.add_subcommand("serve", "Run a live simulator behind the telemetry port");
  serve_flags.attach(serve, false);

  app::EvalSettings eval_settings;
  std::string eval_out, eval_geotags;
  auto* eval = cli.add_subcommand("eval", "Score predictions against ground truth");
  eval->add_option("--gt", eval_settings.gt_dir, "Directory of ground-truth label files")->required();
  eval->add_option("--pred", eval_settings.pred_dir, "Directory of prediction label files")->required();
  eval->add_option("--out", eval_out, "Directory for eval_report.json (stdout otherwise)");
  eval->add_option("--geotags", eval_geotags, "Geotag CSV; writes a yield map");
  eval->add_option("--conf-thr", eval_settings.eval.confidence_threshold, "Confidence threshold")
      ->capture_default_str();
  eval->add_option("--iou-thr", eval_settings.eval.iou_threshold, "IoU threshold")->capture_default_str();

  app::PrepSettings prep_settings;
  std::string grid_text = "3x2";
  std::vector<double> ratios;
  auto* prep = cli.add_subcommand("prep", "Build a training dataset from annotated images");
  prep->add_option("--manifest", prep_settings.manifest, "Input dataset manifest")->required();
  prep->add_option("--out", prep_settings.out, "Output dataset directory")->required();
  prep->add_flag("--tile", prep_settings.tile, "Split every image into six tiles");
  prep->add_flag("--negatives", prep_settings.negatives, "Crop the largest box-free area of every image");
  prep->add_flag("--augment", prep_settings.augment, "Add photometric copies");
  prep->add_flag("--split", prep_settings.split, "Stratified train/val/test split");
  prep->add_option("--grid", grid_text, "Tile grid COLSxROWS")->capture_default_str();
  prep->add_option("--copies", prep_settings.augment_copies, "Augmented copies per image")->capture_default_str();
  prep->add_option("--ratios", ratios, "Train, val and test ratios")->expected(3);
  prep->add_option("--seed", prep_settings.seed, "Seed for augmentation and splitting");

  std::string replay_log, replay_out;
  auto* replay = cli.add_subcommand("replay", "Recompute the mission summary from a telemetry log");
  replay->add_option("log", replay_log, "telemetry.ndjson")->required();
  replay->add_option("--out", replay_out, "Directory for summary.json (stdout otherwise)");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return app::kExitUsage;
  }

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  try {
    if (*run) return app::cmd_run(run_flags.resolve(), std::cout, std::cerr, &g_interrupted);
    if (*serve) {
      auto s = serve_flags.resolve();
      if (!serve_flags.max_time) s.max_time_s = std::numeric_limits<double>::infinity();
      if (!s.telemetry_port) s.telemetry_port = 5760;
      return app::cmd_serve(s, std::cout, std::cerr, &g_interrupted);
    }
    if (*eval) {
      if (!eval_out.empty()) eval_settings.out = eval_out;
      if (!eval_geotags.empty()) eval_settings.geotags = eval_geotags;
      return app::cmd_eval(eval_settings, std::cout, std::cerr);
    }
    if (*prep) {
      const auto grid = parse_grid(grid_text);
      if (!grid) {
        std::cerr << "error: --grid expects COLSxROWS\n";
        return app::kExitUsage;
      }
      prep_settings.grid = *grid;
      if (!ratios.empty()) prep_settings.ratios = {ratios[0], ratios[1], ratios[2]};
      if (!(prep_settings.tile || prep_settings.negatives || prep_settings.augment || prep_settings.split)) {
        std::cerr << "error: choose at least one of --tile, --negatives, --augment, --split\n";
        return app::kExitUsage;
      }
      return app::cmd_prep(prep_settings, std::cout, std::cerr);
    }
    if (*replay) {
      std::optional<std::filesystem::path> out;
      if (!replay_out.empty()) out = replay_out;
      return app::cmd_replay(replay_log, out, std::cout, std::cerr);
    }
  } catch (const fieldrover::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return app::kExitUsage;
  }
  return app::kExitUsage;
}
