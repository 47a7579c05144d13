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

#include <cmath>
#include <fstream>
#include <ostream>

#include "fieldrover/app/commands.hpp"
#include "fieldrover/app/service.hpp"
#include "fieldrover/errors.hpp"
#include "fieldrover/mission/geotag.hpp"
#include "fieldrover/telemetry/log.hpp"
#include "fieldrover/telemetry/server.hpp"
#include "fieldrover/world/world_io.hpp"

namespace fieldrover::app {

namespace fs = std::filesystem;

namespace {

constexpr Vec2 kDefaultHome{1.0, 1.0};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
  if (!f) throw Error("failed writing " + path.string());
}

world::RoverState home_state(const mission::MissionPlan* plan) {
  world::RoverState s;
  if (plan && plan->home) {
    s.x = plan->home->position.x;
    s.y = plan->home->position.y;
    s.heading = deg_to_rad(plan->home->heading_deg);
    return s;
  }
  s.x = kDefaultHome.x;
  s.y = kDefaultHome.y;
  if (plan && !plan->waypoints.empty()) {
    const Vec2 d = plan->waypoints.front().position - kDefaultHome;
    s.heading = std::atan2(d.y, d.x);
  }
  return s;
}

// Loads inputs; returns kExitOk or an exit code after reporting on `err`.
int load_inputs(const RunSettings& s, bool mission_required, world::FieldMap& map,
                std::optional<mission::MissionPlan>& plan, std::ostream& err) {
  if (s.world.empty() || !fs::exists(s.world)) {
    err << "error: world file '" << s.world.string() << "' not found\n";
    return kExitUsage;
  }
  if (mission_required && (s.mission.empty() || !fs::exists(s.mission))) {
    err << "error: mission file '" << s.mission.string() << "' not found\n";
    return kExitUsage;
  }
  if (!s.mission.empty() && !fs::exists(s.mission)) {
    err << "error: mission file '" << s.mission.string() << "' not found\n";
    return kExitUsage;
  }
  try {
    map = world::load_field_map(s.world);
    if (!s.mission.empty()) plan = mission::load_mission(s.mission, map.origin_geo);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& i : items) out += (out.empty() ? "" : ", ") + i;
  return out;
}

}  // namespace

int cmd_run(const RunSettings& settings, std::ostream& out, std::ostream& err, const std::atomic<bool>* interrupt) {
  world::FieldMap map;
  std::optional<mission::MissionPlan> plan;
  if (int rc = load_inputs(settings, true, map, plan, err); rc != kExitOk) return rc;

  try {
    mission::MissionExecutive exec(map, effective_mission_config(settings), home_state(&*plan));
    for (const auto& d : settings.dynamic_obstacles) exec.add_dynamic_obstacle(d);
    try {
      exec.upload(*plan);
    } catch (const InvalidParameter& e) {
      err << "mission rejected: " << e.what() << '\n';
      return kExitDomain;
    }
    const auto report = exec.run_prearm();
    if (!report.armable()) {
      err << "pre-arm failed: " << join(report.failures()) << '\n';
      return kExitDomain;
    }

    fs::create_directories(settings.out);
    const fs::path log_path = settings.out / "telemetry.ndjson";
    fs::remove(log_path);
    telemetry::TelemetryRecorder recorder(log_path);

    std::optional<telemetry::LineServer> server;
    std::optional<telemetry::LineServer> rtk_server;
    if (settings.telemetry_port) server.emplace(*settings.telemetry_port);
    if (settings.rtk_port && settings.rtk) rtk_server.emplace(*settings.rtk_port);

    exec.arm();
    exec.start();

    ServiceOptions opts;
    opts.frame_rate_hz = settings.telemetry_rate_hz;
    opts.max_time_s = settings.max_time_s;
    opts.realtime = settings.realtime;
    SimulationService service(exec, opts);
    service.set_recorder(&recorder);
    if (server) service.set_server(&*server);
    if (rtk_server) service.set_rtk_server(&*rtk_server);
    const auto summary = service.run(interrupt);

    write_text(settings.out / "geotags.csv",
               mission::export_geotags(exec.geotags(), mission::GeotagFormat::Csv, map.origin_geo));
    write_text(settings.out / "geotags.geojson",
               mission::export_geotags(exec.geotags(), mission::GeotagFormat::GeoJson, map.origin_geo));
    write_text(settings.out / "summary.json", telemetry::summary_to_json(summary).dump(2) + "\n");

    out << "final state " << summary.final_state << ", waypoints " << summary.waypoints_hit << "/"
        << plan->waypoints.size() << ", captures " << summary.captures << ", distance "
        << summary.distance_traveled_m << " m\n";
    if (exec.state() != mission::MissionState::MissionComplete) {
      err << "mission did not complete (final state " << summary.final_state << ")\n";
      return kExitDomain;
    }
    return kExitOk;
  } catch (const ArmRefused& e) {
    err << "pre-arm failed: " << join(e.failures()) << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int cmd_serve(const RunSettings& settings, std::ostream& out, std::ostream& err, const std::atomic<bool>* interrupt) {
  world::FieldMap map;
  std::optional<mission::MissionPlan> plan;
  if (int rc = load_inputs(settings, false, map, plan, err); rc != kExitOk) return rc;
  if (!settings.telemetry_port) {
    err << "error: serve needs --telemetry-port\n";
    return kExitUsage;
  }
  try {
    mission::MissionExecutive exec(map, effective_mission_config(settings), home_state(plan ? &*plan : nullptr));
    for (const auto& d : settings.dynamic_obstacles) exec.add_dynamic_obstacle(d);
    if (plan) exec.upload(*plan);

    std::optional<telemetry::TelemetryRecorder> recorder;
    if (!settings.out.empty()) {
      fs::create_directories(settings.out);
      recorder.emplace(settings.out / "telemetry.ndjson");
    }
    telemetry::LineServer server(*settings.telemetry_port);
    std::optional<telemetry::LineServer> rtk_server;
    if (settings.rtk && settings.rtk_port) rtk_server.emplace(*settings.rtk_port);
    out << "telemetry on 127.0.0.1:" << server.port();
    if (rtk_server) out << ", corrections on 127.0.0.1:" << rtk_server->port();
    out << std::endl;

    ServiceOptions opts;
    opts.frame_rate_hz = settings.telemetry_rate_hz;
    opts.max_time_s = settings.max_time_s;
    opts.realtime = true;
    opts.stop_when_settled = false;
    SimulationService service(exec, opts);
    if (recorder) service.set_recorder(&*recorder);
    service.set_server(&server);
    if (rtk_server) service.set_rtk_server(&*rtk_server);
    const auto summary = service.run(interrupt);
    out << telemetry::summary_to_json(summary).dump() << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int cmd_replay(const fs::path& log, const std::optional<fs::path>& out_dir, std::ostream& out, std::ostream& err) {
  if (!fs::exists(log)) {
    err << "error: log '" << log.string() << "' not found\n";
    return kExitUsage;
  }
  try {
    const auto summary = telemetry::summarize(telemetry::read_log(log));
    const std::string text = telemetry::summary_to_json(summary).dump(2) + "\n";
    if (out_dir) {
      fs::create_directories(*out_dir);
      write_text(*out_dir / "summary.json", text);
    } else {
      out << text;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace fieldrover::app
