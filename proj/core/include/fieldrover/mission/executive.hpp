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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fieldrover/mission/geotag.hpp"
#include "fieldrover/mission/plan.hpp"
#include "fieldrover/mission/prearm.hpp"
#include "fieldrover/mission/state_machine.hpp"
#include "fieldrover/nav/bendy_ruler.hpp"
#include "fieldrover/nav/path_tracker.hpp"
#include "fieldrover/nav/steering.hpp"
#include "fieldrover/random.hpp"
#include "fieldrover/sensors/gps.hpp"
#include "fieldrover/sensors/lidar.hpp"
#include "fieldrover/world/field_map.hpp"
#include "fieldrover/world/occupancy_grid.hpp"

namespace fieldrover::mission {

/// Obstacle unknown to the static world file. It exists from `appear_t` on
/// and drifts with `velocity` (zero for pop-up obstacles).
struct DynamicObstacle {
  world::CircleObstacle shape;
  Vec2 velocity{};
  double appear_t = 0.0;

  std::optional<world::Obstacle> at(double t) const;
};

struct MissionConfig {
  world::RoverParams rover;
  sensors::LidarConfig lidar;
  sensors::GpsConfig gps;
  sensors::RtkConfig rtk;
  nav::BendyRulerConfig bendy;
  nav::SteeringGains steering;
  PrearmThresholds prearm;
  HealthInputs health;

  std::uint64_t seed = 0;
  double dt = 0.05;
  bool gps_enabled = true;
  bool rtk_enabled = true;
  Vec2 base_station{0.0, 0.0};
  double gps_epoch_s = 1.0;  // bias update and correction cadence

  double grid_cell_m = 0.5;
  double inflation_extra_m = 0.1;  // on top of max(rover radius, avoidance margin)
  double path_advance_radius_m = 1.5;
  double replan_off_path_cells = 2.0;

  double failsafe_timeout_s = 2.0;
  double override_timeout_s = 0.5;
  double battery_drain_v_per_s = 0.0;
};

enum class EventKind {
  StateChanged,
  WaypointReached,
  Capture,
  Failsafe,
  Replanned,
  PathBlocked,
  Collision,
  MissionUploaded,
};

std::string_view to_string(EventKind kind);

struct MissionEvent {
  EventKind kind = EventKind::StateChanged;
  double t = 0.0;
  std::string detail;
  int waypoint_index = -1;
  std::optional<GeotagRecord> geotag;  // set for Capture

  friend bool operator==(const MissionEvent&, const MissionEvent&) = default;
};

nlohmann::json event_to_json(const MissionEvent& e);
MissionEvent event_from_json(const nlohmann::json& doc);

/// Everything an avoidance decision depended on during one control tick.
struct NavTrace {
  double t = 0.0;
  world::RoverState estimated;  // truth heading, GPS position
  Vec2 target;
  sensors::LidarScan scan;
  nav::BendyRulerConfig cfg;
  nav::AvoidanceDecision decision;
};

/// Read-only view of the executive after a tick.
struct Snapshot {
  double t = 0.0;
  MissionState state = MissionState::Disarmed;
  world::RoverState truth;
  sensors::GpsFix fix;
  LedState led = LedState::RedBooting;
  int next_waypoint = 0;
  double distance_to_waypoint = 0.0;
  double odometer_m = 0.0;
  double min_clearance_m = 0.0;
  int collisions = 0;
  int captures = 0;
};

/// Single owner of the rover's mutable state. Commands are plain method calls
/// and take effect at the next tick boundary.
class MissionExecutive {
 public:
  MissionExecutive(world::FieldMap map, MissionConfig cfg, world::RoverState start);

  MissionState state() const { return state_; }
  double time() const { return t_; }
  const MissionConfig& config() const { return cfg_; }
  const world::FieldMap& map() const { return map_; }
  const world::OccupancyGrid& planning_grid() const { return grid_; }
  const std::optional<MissionPlan>& plan() const { return plan_; }
  const std::vector<GeotagRecord>& geotags() const { return geotags_; }
  /// Most recent base-station correction, when RTK is enabled.
  const std::optional<sensors::RtkCorrection>& latest_correction() const { return latest_correction_; }
  Snapshot snapshot() const;

  PreArmReport run_prearm() const;

  /// DISARMED -> ARMED when the pre-arm report is clean, ArmRefused
  /// otherwise. Already armed is a no-op.
  void arm();
  /// MISSION_RUNNING -> HOLD; ARMED, HOLD, MISSION_COMPLETE -> DISARMED.
  void disarm();
  /// Rejected (InvalidTransition) while MISSION_RUNNING; InvalidParameter
  /// when a waypoint is invalid or unreachable on the planning grid.
  void upload(MissionPlan plan);
  /// ARMED (or HOLD) -> MISSION_RUNNING; needs an uploaded plan.
  void start();
  void hold();
  /// Throttle and steer in [-1, 1]; expires after override_timeout_s.
  void manual_override(double throttle, double steer);

  void set_rc_link(bool up) { rc_link_up_ = up; }
  void set_battery_v(double v) { truth_.battery_v = v; }
  void add_dynamic_obstacle(const DynamicObstacle& o) { dynamic_.push_back(o); }
  void set_nav_observer(std::function<void(const NavTrace&)> fn) { nav_observer_ = std::move(fn); }

  /// One control cycle: sensors, failsafes, waypoint logic, avoidance,
  /// steering, kinematics. Returns the events raised during the tick.
  std::vector<MissionEvent> tick();

  /// Events raised since the previous drain (including command-time events).
  std::vector<MissionEvent> drain_events();

  /// Static plus currently active dynamic obstacles.
  std::vector<world::Obstacle> obstacles_at(double t) const;

 private:
  void transition(MissionState to, std::vector<MissionEvent>& out, std::string why = {});
  void emit(MissionEvent e, std::vector<MissionEvent>& out);
  void update_gps();
  bool plan_leg(std::vector<MissionEvent>& out);
  std::optional<world::Cell> nearest_free(world::Cell c) const;

  world::FieldMap map_;
  MissionConfig cfg_;
  world::OccupancyGrid grid_;
  std::vector<DynamicObstacle> dynamic_;

  double t_ = 0.0;
  std::int64_t ticks_ = 0;
  MissionState state_ = MissionState::Disarmed;
  world::RoverState truth_;
  sensors::GpsFix fix_;
  LedState led_ = LedState::RedBooting;

  std::optional<MissionPlan> plan_;
  std::size_t wp_index_ = 0;
  nav::PathTracker tracker_;
  bool leg_planned_ = false;

  sensors::GpsReceiver gps_;
  sensors::RtkCorrector rtk_;
  std::optional<sensors::RtkCorrection> latest_correction_;
  double next_epoch_t_ = 0.0;
  SeedStream gps_seeds_;
  SeedStream bias_seeds_;
  SeedStream lidar_seeds_;

  bool rc_link_up_ = true;
  double last_rc_t_ = 0.0;
  struct Override {
    double throttle, steer, t;
  };
  std::optional<Override> override_;

  double odometer_ = 0.0;
  double min_clearance_;
  int collisions_ = 0;
  bool in_collision_ = false;
  int image_counter_ = 0;
  std::vector<GeotagRecord> geotags_;
  std::vector<MissionEvent> pending_;
  std::function<void(const NavTrace&)> nav_observer_;
};

}  // namespace fieldrover::mission
