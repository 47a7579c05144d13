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

#include "fieldrover/mission/executive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fieldrover/errors.hpp"
#include "fieldrover/nav/dijkstra.hpp"
#include "json_util.hpp"

namespace fieldrover::mission {

using nlohmann::json;

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::StateChanged: return "STATE_CHANGED";
    case EventKind::WaypointReached: return "WAYPOINT_REACHED";
    case EventKind::Capture: return "CAPTURE";
    case EventKind::Failsafe: return "FAILSAFE";
    case EventKind::Replanned: return "REPLANNED";
    case EventKind::PathBlocked: return "PATH_BLOCKED";
    case EventKind::Collision: return "COLLISION";
    case EventKind::MissionUploaded: return "MISSION_UPLOADED";
  }
  return "STATE_CHANGED";
}

namespace {

EventKind event_kind_from_string(std::string_view s) {
  for (EventKind k : {EventKind::StateChanged, EventKind::WaypointReached, EventKind::Capture,
                      EventKind::Failsafe, EventKind::Replanned, EventKind::PathBlocked,
                      EventKind::Collision, EventKind::MissionUploaded}) {
    if (to_string(k) == s) return k;
  }
  throw ParseError("unknown event kind '" + std::string(s) + "'");
}

}  // namespace

json event_to_json(const MissionEvent& e) {
  json j{{"kind", to_string(e.kind)}, {"t", e.t}, {"detail", e.detail}, {"waypoint_index", e.waypoint_index}};
  if (e.geotag) j["geotag"] = geotag_feature(*e.geotag, std::nullopt);
  return j;
}

MissionEvent event_from_json(const json& doc) {
  detail::require_object(doc, "event");
  MissionEvent e;
  e.kind = event_kind_from_string(detail::get_string(doc, "kind", "event"));
  e.t = detail::get_number(doc, "t", "event");
  e.detail = doc.value("detail", "");
  e.waypoint_index = doc.value("waypoint_index", -1);
  if (auto it = doc.find("geotag"); it != doc.end()) e.geotag = geotag_from_feature(*it);
  return e;
}

std::optional<world::Obstacle> DynamicObstacle::at(double t) const {
  if (t < appear_t) return std::nullopt;
  const double age = t - appear_t;
  return world::CircleObstacle{shape.cx + velocity.x * age, shape.cy + velocity.y * age, shape.radius};
}

MissionExecutive::MissionExecutive(world::FieldMap map, MissionConfig cfg, world::RoverState start)
    : map_(std::move(map)),
      cfg_(cfg),
      truth_(start),
      gps_(cfg.gps),
      rtk_(cfg.rtk, cfg.gps),
      gps_seeds_(cfg.seed, "gps"),
      bias_seeds_(cfg.seed, "gps_bias"),
      lidar_seeds_(cfg.seed, "lidar"),
      min_clearance_(std::numeric_limits<double>::infinity()) {
  map_.validate();
  cfg_.bendy.validate();
  if (!(cfg_.dt > 0.0)) throw InvalidParameter("dt must be positive");
  const double inflate = std::max(cfg_.rover.radius_m, cfg_.bendy.margin_m) + cfg_.inflation_extra_m;
  grid_ = world::rasterize(map_, cfg_.grid_cell_m, inflate);
  world::mark_boundary(grid_, map_, inflate);

  truth_.heading = wrap_angle(truth_.heading);
  truth_.speed = 0.0;
  truth_.battery_v = cfg_.health.battery_v;
  truth_.vibration = cfg_.health.vibration;
  // Start the shared bias from its stationary distribution.
  gps_.advance_bias(std::numeric_limits<double>::infinity(), bias_seeds_.next());
  update_gps();
}

std::vector<world::Obstacle> MissionExecutive::obstacles_at(double t) const {
  std::vector<world::Obstacle> all = map_.obstacles;
  for (const auto& d : dynamic_) {
    if (auto o = d.at(t)) all.push_back(*o);
  }
  return all;
}

void MissionExecutive::update_gps() {
  if (t_ >= next_epoch_t_ - 1e-9) {
    gps_.advance_bias(cfg_.gps_epoch_s, bias_seeds_.next());
    if (cfg_.rtk_enabled) {
      latest_correction_ =
          sensors::base_station_correction(cfg_.base_station, cfg_.base_station + gps_.bias(), t_);
    }
    next_epoch_t_ += cfg_.gps_epoch_s;
  }
  const std::uint64_t seed = gps_seeds_.next();
  if (!cfg_.gps_enabled) {
    fix_ = {};
    return;
  }
  const sensors::FixType regime =
      cfg_.rtk_enabled ? rtk_.observe(latest_correction_, t_) : sensors::FixType::Gps3d;
  const sensors::GpsFix raw = gps_.measure(truth_, regime, seed);
  fix_ = cfg_.rtk_enabled ? rtk_.apply(raw, latest_correction_, t_) : raw;
}

PreArmReport MissionExecutive::run_prearm() const {
  HealthInputs h = cfg_.health;
  h.gps_fix = fix_.fix_type;
  h.battery_v = truth_.battery_v;
  h.rc_signal_ok = h.rc_signal_ok && rc_link_up_;
  return mission::run_prearm(h, cfg_.prearm);
}

void MissionExecutive::emit(MissionEvent e, std::vector<MissionEvent>& out) {
  out.push_back(e);
  pending_.push_back(std::move(e));
}

void MissionExecutive::transition(MissionState to, std::vector<MissionEvent>& out, std::string why) {
  const MissionState from = state_;
  state_ = checked_transition(from, to);
  std::string detail = std::string(mission::to_string(from)) + "->" + std::string(mission::to_string(to));
  if (!why.empty()) detail += " (" + why + ")";
  emit({EventKind::StateChanged, t_, std::move(detail), static_cast<int>(wp_index_), std::nullopt}, out);
}

void MissionExecutive::arm() {
  if (state_ != MissionState::Disarmed) return;
  const PreArmReport report = run_prearm();
  if (!report.armable()) throw ArmRefused(report.failures());
  std::vector<MissionEvent> sink;
  transition(MissionState::Armed, sink, "pre-arm passed");
}

void MissionExecutive::disarm() {
  std::vector<MissionEvent> sink;
  switch (state_) {
    case MissionState::MissionRunning:
      transition(MissionState::Hold, sink, "manual disarm");
      break;
    case MissionState::Armed:
    case MissionState::Hold:
    case MissionState::MissionComplete:
      transition(MissionState::Disarmed, sink);
      override_.reset();
      break;
    case MissionState::Disarmed:
      break;
  }
}

void MissionExecutive::upload(MissionPlan plan) {
  if (state_ == MissionState::MissionRunning) {
    throw InvalidTransition("mission upload rejected while MISSION_RUNNING");
  }
  plan.validate(cfg_.rover);
  for (std::size_t i = 0; i < plan.waypoints.size(); ++i) {
    const Vec2 p = plan.waypoints[i].position;
    if (!map_.contains(p) || !grid_.free(grid_.cell_at(p))) {
      throw InvalidParameter("waypoint " + std::to_string(i) + " is not in free space");
    }
  }
  plan_ = std::move(plan);
  wp_index_ = 0;
  leg_planned_ = false;
  std::vector<MissionEvent> sink;
  emit({EventKind::MissionUploaded, t_, std::to_string(plan_->waypoints.size()) + " waypoints", 0,
        std::nullopt},
       sink);
}

void MissionExecutive::start() {
  if (!plan_) throw InvalidTransition("no mission uploaded");
  if (state_ == MissionState::MissionRunning) return;
  std::vector<MissionEvent> sink;
  transition(MissionState::MissionRunning, sink, state_ == MissionState::Hold ? "resume" : "start");
  leg_planned_ = false;
  last_rc_t_ = t_;
}

void MissionExecutive::hold() {
  if (state_ == MissionState::Hold) return;
  std::vector<MissionEvent> sink;
  transition(MissionState::Hold, sink, "operator");
}

void MissionExecutive::manual_override(double throttle, double steer) {
  if (!std::isfinite(throttle) || !std::isfinite(steer) || std::abs(throttle) > 1.0 || std::abs(steer) > 1.0) {
    throw InvalidParameter("manual override values must lie in [-1, 1]");
  }
  override_ = Override{throttle, steer, t_};
}

std::optional<world::Cell> MissionExecutive::nearest_free(world::Cell c) const {
  if (grid_.free(c)) return c;
  const int max_r = std::max(grid_.cols(), grid_.rows());
  for (int r = 1; r <= max_r; ++r) {
    std::optional<world::Cell> best;
    long best_d2 = 0;
    for (int dr = -r; dr <= r; ++dr) {
      for (int dc = -r; dc <= r; ++dc) {
        if (std::max(std::abs(dr), std::abs(dc)) != r) continue;
        const world::Cell n{c.col + dc, c.row + dr};
        if (!grid_.free(n)) continue;
        const long d2 = static_cast<long>(dc) * dc + static_cast<long>(dr) * dr;
        if (!best || d2 < best_d2) {
          best = n;
          best_d2 = d2;
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

bool MissionExecutive::plan_leg(std::vector<MissionEvent>& out) {
  const Vec2 from = *fix_.position;
  const Vec2 goal = plan_->waypoints[wp_index_].position;
  const auto s = nearest_free(grid_.cell_at(from));
  const auto g = nearest_free(grid_.cell_at(goal));
  try {
    if (!s || !g) throw NoPath("no free cell near rover or waypoint");
    const nav::GridPath path = nav::dijkstra_plan(grid_, *s, *g);
    tracker_ = nav::PathTracker::from_grid_path(path, grid_, from, goal, cfg_.path_advance_radius_m);
    leg_planned_ = true;
    return true;
  } catch (const Error& e) {
    emit({EventKind::PathBlocked, t_, e.what(), static_cast<int>(wp_index_), std::nullopt}, out);
    return false;
  }
}

std::vector<MissionEvent> MissionExecutive::tick() {
  std::vector<MissionEvent> out;
  // Rounded to the microsecond so long runs print clean timestamps.
  t_ = std::round(static_cast<double>(++ticks_) * cfg_.dt * 1e6) / 1e6;
  truth_.battery_v -= cfg_.battery_drain_v_per_s * cfg_.dt;
  if (rc_link_up_) last_rc_t_ = t_;
  update_gps();
  const std::uint64_t lidar_seed = lidar_seeds_.next();
  const std::vector<world::Obstacle> obstacles = obstacles_at(t_);

  bool captured = false;
  double throttle = 0.0;
  double steer = 0.0;
  const bool override_live = override_ && t_ - override_->t <= cfg_.override_timeout_s + 1e-9;
  if (!override_live) override_.reset();

  if (state_ == MissionState::MissionRunning) {
    if (t_ - last_rc_t_ > cfg_.failsafe_timeout_s) {
      emit({EventKind::Failsafe, t_, "rc_loss", static_cast<int>(wp_index_), std::nullopt}, out);
      transition(MissionState::Hold, out, "rc_loss");
    } else if (truth_.battery_v < cfg_.prearm.min_battery_v()) {
      emit({EventKind::Failsafe, t_, "battery_low", static_cast<int>(wp_index_), std::nullopt}, out);
      transition(MissionState::Hold, out, "battery_low");
    } else if (!fix_.has_position()) {
      emit({EventKind::Failsafe, t_, "gps_lost", static_cast<int>(wp_index_), std::nullopt}, out);
      transition(MissionState::Hold, out, "gps_lost");
    }
  }

  if (state_ == MissionState::MissionRunning) {
    const Vec2 here = *fix_.position;
    while (state_ == MissionState::MissionRunning && wp_index_ < plan_->waypoints.size()) {
      const Waypoint& wp = plan_->waypoints[wp_index_];
      if (distance(here, wp.position) > wp.acceptance_radius) break;
      emit({EventKind::WaypointReached, t_, "", static_cast<int>(wp_index_), std::nullopt}, out);
      if (wp.trigger_camera) {
        GeotagRecord rec{capture_image_id(++image_counter_), t_, fix_, static_cast<int>(wp_index_)};
        geotags_.push_back(rec);
        emit({EventKind::Capture, t_, rec.image_id, static_cast<int>(wp_index_), rec}, out);
        captured = true;
      }
      ++wp_index_;
      leg_planned_ = false;
      if (wp_index_ == plan_->waypoints.size()) transition(MissionState::MissionComplete, out);
    }

    if (state_ == MissionState::MissionRunning && !leg_planned_ && !plan_leg(out)) {
      transition(MissionState::Hold, out, "no path");
    }

    if (state_ == MissionState::MissionRunning) {
      if (override_live) {
        throttle = override_->throttle;
        steer = override_->steer * cfg_.rover.max_steer;
      } else {
        world::RoverState est = truth_;
        est.x = here.x;
        est.y = here.y;
        if (tracker_.off_path_distance(here) > cfg_.replan_off_path_cells * grid_.cell_size()) {
          if (plan_leg(out)) {
            emit({EventKind::Replanned, t_, "off path", static_cast<int>(wp_index_), std::nullopt}, out);
          }
        }
        const Vec2 target = tracker_.target(here);
        const sensors::LidarScan scan = sensors::scan(truth_, obstacles, cfg_.lidar, lidar_seed, t_);
        const nav::AvoidanceDecision decision = nav::bendyruler_step(est, target, scan, cfg_.bendy);
        if (nav_observer_) nav_observer_(NavTrace{t_, est, target, scan, cfg_.bendy, decision});
        const double speed = decision.clear ? plan_->waypoints[wp_index_].speed : 0.0;
        const nav::SteerCommand cmd =
            nav::steer_to_bearing(est, decision.chosen_bearing, speed, cfg_.rover, cfg_.steering);
        throttle = cmd.throttle;
        steer = cmd.steer;
      }
    }
  } else if (state_ == MissionState::Armed && override_live) {
    throttle = override_->throttle;
    steer = override_->steer * cfg_.rover.max_steer;
  }

  const bool may_move = state_ == MissionState::MissionRunning || state_ == MissionState::Armed;
  if (!may_move) throttle = 0.0;

  const Vec2 before = truth_.position();
  truth_ = world::step_kinematics(truth_, throttle, steer, cfg_.dt, cfg_.rover);
  odometer_ += distance(before, truth_.position());

  const double c = world::clearance(truth_.position(), cfg_.rover.radius_m, obstacles);
  min_clearance_ = std::min(min_clearance_, c);
  world::FieldMap live = map_;
  live.obstacles = obstacles;
  const bool hit = world::collision_check(truth_, live, cfg_.rover.radius_m);
  if (hit && !in_collision_) {
    ++collisions_;
    emit({EventKind::Collision, t_, "", static_cast<int>(wp_index_), std::nullopt}, out);
  }
  in_collision_ = hit;

  led_ = captured ? LedState::GreenCapturing
                  : (state_ == MissionState::Disarmed ? LedState::RedBooting : LedState::YellowReady);
  return out;
}

std::vector<MissionEvent> MissionExecutive::drain_events() {
  std::vector<MissionEvent> out;
  out.swap(pending_);
  return out;
}

Snapshot MissionExecutive::snapshot() const {
  Snapshot s;
  s.t = t_;
  s.state = state_;
  s.truth = truth_;
  s.fix = fix_;
  s.led = led_;
  s.next_waypoint = static_cast<int>(wp_index_);
  if (plan_ && wp_index_ < plan_->waypoints.size() && fix_.has_position()) {
    s.distance_to_waypoint = distance(*fix_.position, plan_->waypoints[wp_index_].position);
  }
  s.odometer_m = odometer_;
  s.min_clearance_m = min_clearance_;
  s.collisions = collisions_;
  s.captures = image_counter_;
  return s;
}

}  // namespace fieldrover::mission
