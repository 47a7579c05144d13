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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fieldrover/errors.hpp"
#include "fieldrover/mission/executive.hpp"
#include "fieldrover/mission/geotag.hpp"
#include "fieldrover/mission/plan.hpp"
#include "fieldrover/mission/prearm.hpp"
#include "fieldrover/mission/state_machine.hpp"
#include "fieldrover/world/world_io.hpp"
#include "flight.hpp"
#include "generators.hpp"
#include "test_util.hpp"

namespace fr = fieldrover;
namespace fm = fieldrover::mission;
namespace fw = fieldrover::world;
using fm::MissionState;

TEST(Prearm, HealthyInputsArm) {
  const auto report = fm::run_prearm({});
  EXPECT_TRUE(report.armable());
  EXPECT_TRUE(report.failures().empty());
  EXPECT_EQ(report.checks.size(), 14u);
}

TEST(Prearm, ReportsEveryFailureAtOnce) {
  fm::HealthInputs h;
  h.battery_v = 27.9;
  h.gps_fix = fr::sensors::FixType::None;
  h.throttle_input = 0.3;
  const auto report = fm::run_prearm(h);
  EXPECT_FALSE(report.armable());
  const auto f = report.failures();
  EXPECT_EQ(f, (std::vector<std::string>{"gps_status", "throttle_neutral", "battery_v_ok"}));
}

TEST(Prearm, BatteryThresholdIsPerCell) {
  fm::HealthInputs h;
  h.battery_v = 28.0;  // 8 cells at 3.5 V
  EXPECT_TRUE(fm::run_prearm(h).armable());
  h.battery_v = std::nextafter(28.0, 0.0);
  EXPECT_FALSE(fm::run_prearm(h).armable());
}

TEST(StateMachine, ExhaustiveTransitionTable) {
  const std::set<std::pair<MissionState, MissionState>> allowed{
      {MissionState::Disarmed, MissionState::Armed},
      {MissionState::Armed, MissionState::MissionRunning},
      {MissionState::Armed, MissionState::Hold},
      {MissionState::Armed, MissionState::Disarmed},
      {MissionState::MissionRunning, MissionState::Hold},
      {MissionState::MissionRunning, MissionState::MissionComplete},
      {MissionState::Hold, MissionState::MissionRunning},
      {MissionState::Hold, MissionState::Disarmed},
      {MissionState::MissionComplete, MissionState::Disarmed},
  };
  for (auto from : fm::kAllStates)
    for (auto to : fm::kAllStates) {
      const bool want = allowed.count({from, to}) > 0;
      EXPECT_EQ(fm::transition_allowed(from, to), want) << fm::to_string(from) << "->" << fm::to_string(to);
      if (want) {
        EXPECT_EQ(fm::checked_transition(from, to), to);
      } else {
        EXPECT_THROW(fm::checked_transition(from, to), fr::InvalidTransition);
      }
    }
}

TEST(StateMachine, Names) {
  for (auto s : fm::kAllStates) EXPECT_EQ(fm::mission_state_from_string(fm::to_string(s)), s);
  EXPECT_EQ(fm::to_string(MissionState::MissionRunning), "MISSION_RUNNING");
  for (auto l : {fm::LedState::RedBooting, fm::LedState::YellowReady, fm::LedState::GreenCapturing})
    EXPECT_EQ(fm::led_state_from_string(fm::to_string(l)), l);
  EXPECT_THROW(fm::mission_state_from_string("LOITER"), fr::ParseError);
}

TEST(Plan, JsonRoundTripAndDefaults) {
  const auto plan = fm::load_mission(testutil::fixture("two_waypoints.mission.json"));
  ASSERT_EQ(plan.waypoints.size(), 2u);
  EXPECT_EQ(plan.waypoints[0].position, (fr::Vec2{20, 4}));
  ASSERT_TRUE(plan.home);
  EXPECT_EQ(fm::mission_from_json(fm::mission_to_json(plan)), plan);

  const auto d = fm::mission_from_json(nlohmann::json::parse(R"({"waypoints": [{"x": 1, "y": 2}]})"));
  EXPECT_DOUBLE_EQ(d.waypoints[0].speed, 1.5);
  EXPECT_DOUBLE_EQ(d.waypoints[0].acceptance_radius, 2.0);
  EXPECT_FALSE(d.waypoints[0].trigger_camera);
}

TEST(Plan, GeoFrameProjectsThroughAnchor) {
  const fw::GeoPoint anchor{36.9741, -120.0607};
  const auto g = fw::local_to_geo(anchor, {10, 5});
  nlohmann::json doc{{"frame", "geo"}, {"waypoints", {{{"lat", g.lat_deg}, {"lon", g.lon_deg}}}}};
  const auto plan = fm::mission_from_json(doc, anchor);
  EXPECT_NEAR(plan.waypoints[0].position.x, 10, 1e-6);
  EXPECT_NEAR(plan.waypoints[0].position.y, 5, 1e-6);
  EXPECT_THROW(fm::mission_from_json(doc), fr::ParseError);
}

TEST(Plan, ValidationAndSchemaErrors) {
  fm::MissionPlan p;
  EXPECT_THROW(p.validate(), fr::InvalidParameter);
  p.waypoints.push_back({{1, 1}, 9.0, 2.0, false});
  EXPECT_THROW(p.validate(), fr::InvalidParameter);
  p.waypoints[0].speed = 1.0;
  p.waypoints[0].acceptance_radius = 0.0;
  EXPECT_THROW(p.validate(), fr::InvalidParameter);
  EXPECT_THROW(fm::mission_from_json(nlohmann::json::parse(R"({"waypoints": [{"x": 1}]})")), fr::ParseError);
  EXPECT_THROW(fm::mission_from_json(nlohmann::json::parse(R"({"waypoints": [], "extra": 1})")), fr::ParseError);
}

TEST(Geotag, RoundTripBothFormats) {
  std::mt19937_64 rng(6);
  const fw::GeoPoint anchor{36.9741, -120.0607};
  for (int i = 0; i < 60; ++i) {
    const auto recs = testutil::random_geotags(rng);
    for (auto fmt : {fm::GeotagFormat::Csv, fm::GeotagFormat::GeoJson}) {
      EXPECT_EQ(fm::parse_geotags(fm::export_geotags(recs, fmt), fmt), recs);
      EXPECT_EQ(fm::parse_geotags(fm::export_geotags(recs, fmt, anchor), fmt), recs);
    }
  }
}

TEST(Geotag, CsvLayout) {
  fm::GeotagRecord r{"img_0001", 12.5, {fr::Vec2{1.25, -3}, fr::sensors::FixType::RtkFixed, 0.02}, 2};
  const auto csv = fm::export_geotags({r}, fm::GeotagFormat::Csv);
  EXPECT_EQ(csv, "image_id,t,x,y,fix_type,waypoint_index,sigma_m\nimg_0001,12.5,1.25,-3,RTK_FIXED,2,0.02\n");
  EXPECT_EQ(fm::capture_image_id(7), "img_0007");
}

TEST(Geotag, RejectsBadRecordsAndDocuments) {
  fm::GeotagRecord none{"a", 0, {}, 0};
  EXPECT_THROW(fm::export_geotags({none}, fm::GeotagFormat::Csv), fr::RecordRejected);
  fm::GeotagRecord comma{"a,b", 0, {fr::Vec2{0, 0}, fr::sensors::FixType::Gps3d, 2.5}, 0};
  EXPECT_THROW(fm::export_geotags({comma}, fm::GeotagFormat::GeoJson), fr::RecordRejected);
  EXPECT_THROW(fm::parse_geotags("nonsense\n", fm::GeotagFormat::Csv), fr::ParseError);
  EXPECT_THROW(fm::parse_geotags("image_id,t,x,y,fix_type,waypoint_index,sigma_m\na,1,2\n", fm::GeotagFormat::Csv),
               fr::ParseError);
  EXPECT_THROW(fm::parse_geotags("{\"type\": 3}", fm::GeotagFormat::GeoJson), fr::ParseError);
}

class ExecutiveTest : public ::testing::Test {
 protected:
  fw::FieldMap map = fw::load_field_map(testutil::fixture("orchard.world.json"));
  fm::MissionPlan plan = fm::load_mission(testutil::fixture("two_waypoints.mission.json"));
  fm::MissionConfig cfg = [] {
    fm::MissionConfig c;
    c.seed = 7;
    return c;
  }();
};

TEST_F(ExecutiveTest, FliesFixtureMissionToCompletion) {
  const auto f = testutil::fly(map, plan, cfg, 300);
  EXPECT_EQ(f.final_state, MissionState::MissionComplete);
  EXPECT_EQ(f.collisions, 0);
  EXPECT_GT(f.min_clearance, 0.0);
  ASSERT_EQ(f.geotags.size(), 2u);
  for (std::size_t i = 0; i < f.geotags.size(); ++i) {
    EXPECT_EQ(f.geotags[i].waypoint_index, static_cast<int>(i));
    EXPECT_LE(fr::distance(*f.geotags[i].fix.position, plan.waypoints[i].position),
              plan.waypoints[i].acceptance_radius);
  }
}

TEST_F(ExecutiveTest, CapturesPairWithGeotagsAndGreenTicks) {
  const auto f = testutil::fly(map, fm::load_mission(testutil::fixture("survey.mission.json")), cfg, 600);
  ASSERT_EQ(f.final_state, MissionState::MissionComplete);
  std::size_t captures = 0;
  for (std::size_t k = 0; k < f.tick_events.size(); ++k) {
    bool captured = false;
    for (const auto& e : f.tick_events[k]) {
      if (e.kind != fm::EventKind::Capture) continue;
      ASSERT_LT(captures, f.geotags.size());
      ASSERT_TRUE(e.geotag);
      EXPECT_EQ(*e.geotag, f.geotags[captures]);
      ++captures;
      captured = true;
    }
    EXPECT_EQ(f.leds[k] == fm::LedState::GreenCapturing, captured) << "tick " << k;
  }
  EXPECT_EQ(captures, f.geotags.size());
  EXPECT_EQ(captures, 4u);
}

TEST_F(ExecutiveTest, CommandsFollowTheStateGraph) {
  fm::MissionExecutive exec(map, cfg, testutil::start_pose(plan));
  EXPECT_EQ(exec.state(), MissionState::Disarmed);
  EXPECT_EQ(exec.snapshot().led, fm::LedState::RedBooting);
  EXPECT_THROW(exec.start(), fr::InvalidTransition);  // no plan
  exec.upload(plan);
  EXPECT_THROW(exec.start(), fr::InvalidTransition);  // not armed
  exec.arm();
  EXPECT_EQ(exec.state(), MissionState::Armed);
  exec.start();
  EXPECT_THROW(exec.upload(plan), fr::InvalidTransition);
  exec.tick();
  exec.hold();
  EXPECT_EQ(exec.state(), MissionState::Hold);
  exec.start();
  EXPECT_EQ(exec.state(), MissionState::MissionRunning);
  exec.disarm();
  EXPECT_EQ(exec.state(), MissionState::Hold);
  exec.disarm();
  EXPECT_EQ(exec.state(), MissionState::Disarmed);
  const auto events = exec.drain_events();
  std::vector<std::string> transitions;
  for (const auto& e : events)
    if (e.kind == fm::EventKind::StateChanged) transitions.push_back(e.detail.substr(0, e.detail.find(' ')));
  EXPECT_EQ(transitions, (std::vector<std::string>{"DISARMED->ARMED", "ARMED->MISSION_RUNNING",
                                                   "MISSION_RUNNING->HOLD", "HOLD->MISSION_RUNNING",
                                                   "MISSION_RUNNING->HOLD", "HOLD->DISARMED"}));
}

TEST_F(ExecutiveTest, LowBatteryRefusesArm) {
  cfg.health.battery_v = 25.0;
  fm::MissionExecutive exec(map, cfg, testutil::start_pose(plan));
  try {
    exec.arm();
    FAIL() << "armed with a flat battery";
  } catch (const fr::ArmRefused& e) {
    EXPECT_EQ(e.failures(), (std::vector<std::string>{"battery_v_ok"}));
  }
  EXPECT_EQ(exec.state(), MissionState::Disarmed);
}

TEST_F(ExecutiveTest, WaypointInsideObstacleIsRejected) {
  fm::MissionExecutive exec(map, cfg, testutil::start_pose(plan));
  fm::MissionPlan bad;
  bad.waypoints.push_back({{13, 10}, 1.0, 1.0, false});
  EXPECT_THROW(exec.upload(bad), fr::InvalidParameter);
  EXPECT_FALSE(exec.plan());
}

TEST_F(ExecutiveTest, RcLossTriggersHoldFailsafe) {
  fm::MissionExecutive exec(map, cfg, testutil::start_pose(plan));
  exec.upload(plan);
  exec.arm();
  exec.start();
  exec.set_rc_link(false);
  std::vector<fm::MissionEvent> all;
  for (int i = 0; i < 100 && exec.state() == MissionState::MissionRunning; ++i) {
    auto ev = exec.tick();
    all.insert(all.end(), ev.begin(), ev.end());
  }
  EXPECT_EQ(exec.state(), MissionState::Hold);
  EXPECT_NEAR(exec.time(), 2.05, 1e-9);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(all.front().kind, fm::EventKind::Failsafe);
  EXPECT_EQ(all.front().detail, "rc_loss");
}

TEST_F(ExecutiveTest, GpsLossTriggersHold) {
  cfg.gps_enabled = false;
  fm::MissionExecutive exec(map, cfg, testutil::start_pose(plan));
  EXPECT_THROW(exec.arm(), fr::ArmRefused);
}

TEST_F(ExecutiveTest, ManualOverrideExpires) {
  fm::MissionExecutive exec(map, cfg, testutil::start_pose(plan));
  exec.arm();
  EXPECT_THROW(exec.manual_override(1.5, 0), fr::InvalidParameter);
  exec.manual_override(0.2, 0.0);
  exec.tick();
  EXPECT_GT(exec.snapshot().truth.speed, 0.0);
  for (int i = 0; i < 20; ++i) exec.tick();
  EXPECT_EQ(exec.snapshot().truth.speed, 0.0);
}

TEST_F(ExecutiveTest, PopUpObstacleIsAvoided) {
  // Sits on the straight first leg; the planner does not know about it.
  const fm::DynamicObstacle pop{fw::CircleObstacle{9.0, 3.4, 0.6}, {}, 0.0};
  const auto f = testutil::fly(map, plan, cfg, 300, {}, {pop});
  EXPECT_EQ(f.final_state, MissionState::MissionComplete);
  EXPECT_EQ(f.collisions, 0);
  EXPECT_GT(f.min_clearance, 0.0);
}

TEST_F(ExecutiveTest, RtkRegimeSettlesToFixed) {
  fm::MissionExecutive exec(map, cfg, testutil::start_pose(plan));
  EXPECT_EQ(exec.snapshot().fix.fix_type, fr::sensors::FixType::RtkFloat);
  for (int i = 0; i < 120; ++i) exec.tick();
  EXPECT_EQ(exec.snapshot().fix.fix_type, fr::sensors::FixType::RtkFixed);

  cfg.rtk_enabled = false;
  fm::MissionExecutive plain(map, cfg, testutil::start_pose(plan));
  for (int i = 0; i < 120; ++i) plain.tick();
  EXPECT_EQ(plain.snapshot().fix.fix_type, fr::sensors::FixType::Gps3d);
}

TEST(Events, JsonRoundTrip) {
  fm::MissionEvent e{fm::EventKind::Capture, 3.5, "img_0001", 1,
                     fm::GeotagRecord{"img_0001", 3.5, {fr::Vec2{1, 2}, fr::sensors::FixType::RtkFixed, 0.02}, 1}};
  EXPECT_EQ(fm::event_from_json(fm::event_to_json(e)), e);
  EXPECT_THROW(fm::event_from_json(nlohmann::json{{"kind", "PARTY"}, {"t", 0}}), fr::ParseError);
}
