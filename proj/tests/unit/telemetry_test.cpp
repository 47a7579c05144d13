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

#include <atomic>
#include <chrono>
#include <thread>

#include "fieldrover/app/service.hpp"
#include "fieldrover/errors.hpp"
#include "fieldrover/mission/executive.hpp"
#include "fieldrover/mission/plan.hpp"
#include "fieldrover/telemetry/command.hpp"
#include "fieldrover/telemetry/frame.hpp"
#include "fieldrover/telemetry/log.hpp"
#include "fieldrover/telemetry/server.hpp"
#include "fieldrover/world/world_io.hpp"
#include "flight.hpp"
#include "line_client.hpp"
#include "test_util.hpp"

namespace fr = fieldrover;
namespace fm = fieldrover::mission;
namespace ft = fieldrover::telemetry;
namespace fw = fieldrover::world;
using nlohmann::json;
using namespace std::chrono_literals;

namespace {

struct Rig {
  fw::FieldMap map = fw::load_field_map(testutil::fixture("orchard.world.json"));
  fm::MissionPlan plan = fm::load_mission(testutil::fixture("two_waypoints.mission.json"));
  fm::MissionConfig cfg = [] {
    fm::MissionConfig c;
    c.seed = 3;
    return c;
  }();
  fm::MissionExecutive exec{map, cfg, testutil::start_pose(plan)};
};

template <typename Pred>
bool wait_for(Pred p, std::chrono::milliseconds limit = 3000ms) {
  const auto end = std::chrono::steady_clock::now() + limit;
  while (std::chrono::steady_clock::now() < end) {
    if (p()) return true;
    std::this_thread::sleep_for(5ms);
  }
  return p();
}

}  // namespace

TEST(Frame, JsonRoundTripPreservesEverything) {
  Rig rig;
  rig.exec.upload(rig.plan);
  rig.exec.arm();
  rig.exec.start();
  for (int i = 0; i < 40; ++i) rig.exec.tick();
  auto f = ft::make_frame(rig.exec.snapshot(), rig.exec.drain_events(), rig.map.origin_geo);
  EXPECT_FALSE(f.events.empty());
  ASSERT_TRUE(f.geo);
  EXPECT_EQ(ft::frame_from_json(json::parse(ft::frame_to_json(f).dump())), f);
  const auto j = ft::frame_to_json(f);
  EXPECT_EQ(j.at("type"), "frame");
  EXPECT_EQ(j.at("mode"), "MISSION_RUNNING");
  for (const char* key : {"t", "armed", "x", "y", "lat", "lon", "heading", "ground_speed", "altitude",
                          "distance_to_waypoint", "battery_v", "fix_type", "led_state"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Command, ParsesAndNacks) {
  auto ok = ft::parse_command_line(R"({"seq": 4, "kind": "ARM"})", std::nullopt);
  ASSERT_TRUE(ok.command);
  EXPECT_EQ(ok.command->kind, ft::CommandKind::Arm);
  EXPECT_EQ(ok.command->seq, 4);

  auto bad = ft::parse_command_line("{not json", std::nullopt);
  EXPECT_FALSE(bad.command);
  EXPECT_FALSE(bad.nack.accepted);
  EXPECT_FALSE(bad.nack.seq);

  EXPECT_EQ(ft::parse_command_line(R"({"kind": "ARM"})", std::nullopt).nack.reason, "missing seq");
  EXPECT_EQ(ft::parse_command_line(R"({"seq": 3, "kind": "ARM"})", 3).nack.seq, 3);
  EXPECT_FALSE(ft::parse_command_line(R"({"seq": 3, "kind": "ARM"})", 3).command);
  EXPECT_EQ(ft::parse_command_line(R"({"seq": 5, "kind": "FLY"})", 3).nack.reason, "unknown kind");
  EXPECT_FALSE(ft::parse_command_line(R"({"seq": 5, "kind": "ARM", "payload": 1})", 3).command);
  EXPECT_FALSE(ft::parse_command_line("[1,2]", std::nullopt).command);
}

TEST(Command, AckJsonRoundTrip) {
  const ft::Ack a{7, false, "pre-arm failed", "battery_v_ok"};
  EXPECT_EQ(ft::ack_from_json(ft::ack_to_json(a)), a);
  const ft::Ack b{std::nullopt, false, "malformed json", ""};
  EXPECT_TRUE(ft::ack_to_json(b).at("seq").is_null());
  EXPECT_EQ(ft::ack_from_json(ft::ack_to_json(b)), b);
}

TEST(Command, ApplyDrivesExecutive) {
  Rig rig;
  auto ack = ft::apply_command(rig.exec, {1, ft::CommandKind::UploadMission, {{"mission", fm::mission_to_json(rig.plan)}}});
  EXPECT_TRUE(ack.accepted) << ack.reason << ack.detail;
  EXPECT_TRUE(ft::apply_command(rig.exec, {2, ft::CommandKind::Arm, json::object()}).accepted);
  EXPECT_TRUE(ft::apply_command(rig.exec, {3, ft::CommandKind::StartMission, json::object()}).accepted);
  EXPECT_EQ(rig.exec.state(), fm::MissionState::MissionRunning);
  ack = ft::apply_command(rig.exec, {4, ft::CommandKind::UploadMission, {{"mission", fm::mission_to_json(rig.plan)}}});
  EXPECT_FALSE(ack.accepted);
  EXPECT_EQ(ack.seq, 4);
  EXPECT_TRUE(ft::apply_command(rig.exec, {5, ft::CommandKind::SetMode, {{"mode", "HOLD"}}}).accepted);
  EXPECT_EQ(rig.exec.state(), fm::MissionState::Hold);
  EXPECT_FALSE(ft::apply_command(rig.exec, {6, ft::CommandKind::SetMode, {{"mode", 3}}}).accepted);
  EXPECT_FALSE(ft::apply_command(rig.exec, {7, ft::CommandKind::ManualOverride, {{"throttle", 2}, {"steer", 0}}}).accepted);
  EXPECT_FALSE(ft::apply_command(rig.exec, {8, ft::CommandKind::UploadMission, {{"mission", {{"waypoints", 5}}}}}).accepted);
}

TEST(Command, ArmRefusalListsFailures) {
  Rig rig;
  rig.exec.set_battery_v(20.0);
  const auto ack = ft::apply_command(rig.exec, {1, ft::CommandKind::Arm, json::object()});
  EXPECT_FALSE(ack.accepted);
  EXPECT_EQ(ack.reason, "pre-arm failed");
  EXPECT_EQ(ack.detail, "battery_v_ok");
}

TEST(Log, RecorderReplayMatchesLiveSummary) {
  testutil::TempDir dir("log");
  Rig rig;
  rig.exec.upload(rig.plan);
  rig.exec.arm();
  rig.exec.start();
  std::vector<ft::TelemetryFrame> seen;
  ft::MissionSummary live;
  {
    ft::TelemetryRecorder rec(dir / "t.ndjson");
    fr::app::SimulationService svc(rig.exec, {});
    svc.set_recorder(&rec);
    svc.set_frame_sink([&](const ft::TelemetryFrame& f) { seen.push_back(f); });
    live = svc.run();
    EXPECT_EQ(rec.lines_written(), seen.size());
  }
  EXPECT_EQ(live.final_state, "MISSION_COMPLETE");
  EXPECT_EQ(live.waypoints_hit, 2);
  EXPECT_EQ(live.captures, 2);
  ASSERT_TRUE(live.completion_time_s);
  const auto frames = ft::read_log(dir / "t.ndjson");
  EXPECT_EQ(frames, seen);
  EXPECT_EQ(ft::summarize(frames), live);
  // Frames are 10 Hz in simulated time.
  for (std::size_t i = 1; i + 1 < frames.size(); ++i) EXPECT_NEAR(frames[i].t - frames[i - 1].t, 0.1, 1e-9);
}

TEST(Log, BadLinesReportLocation) {
  testutil::TempDir dir("badlog");
  testutil::spit(dir / "x.ndjson", "{\"type\":\"frame\"}\n");
  try {
    ft::read_log(dir / "x.ndjson");
    FAIL();
  } catch (const fr::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("x.ndjson:1"), std::string::npos);
  }
  EXPECT_THROW(ft::read_log(dir / "missing.ndjson"), fr::ParseError);
}

TEST(Server, PortInUseThrows) {
  ft::LineServer a(0);
  EXPECT_NE(a.port(), 0);
  EXPECT_THROW(ft::LineServer b(a.port()), fr::Error);
}

TEST(Server, LinesInAndOut) {
  ft::LineServer s(0);
  testutil::LineClient c(s.port());
  ASSERT_TRUE(wait_for([&] { return s.client_count() == 1; }));
  c.send_raw("one\r\n\ntwo\npartial");
  std::vector<ft::LineServer::Incoming> got;
  ASSERT_TRUE(wait_for([&] {
    for (auto& l : s.take_lines()) got.push_back(l);
    return got.size() >= 2;
  }));
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0].line, "one");
  EXPECT_EQ(got[1].line, "two");
  s.send(got[0].client, "hello");
  s.broadcast("all");
  EXPECT_EQ(c.read_line(), "hello");
  EXPECT_EQ(c.read_line(), "all");
}

TEST(Server, HeartbeatIsTenHertz) {
  Rig rig;
  ft::LineServer server(0);
  fr::app::ServiceOptions opts;
  opts.realtime = true;
  opts.stop_when_settled = false;
  opts.max_time_s = 3.0;
  fr::app::SimulationService svc(rig.exec, opts);
  svc.set_server(&server);
  testutil::LineClient client(server.port());
  ASSERT_TRUE(wait_for([&] { return server.client_count() == 1; }));
  std::thread runner([&] { svc.run(); });
  ASSERT_TRUE(client.read_line());  // first frame starts the window
  const auto start = std::chrono::steady_clock::now();
  int frames = 0;
  while (std::chrono::steady_clock::now() - start < 2s) {
    auto line = client.read_line(500ms);
    if (line && json::parse(*line).at("type") == "frame") ++frames;
  }
  runner.join();
  // 10 +- 1 Hz over a two second window.
  EXPECT_GE(frames, 18);
  EXPECT_LE(frames, 22);
}

TEST(Server, AcksArriveInOrderAndMalformedIsNacked) {
  Rig rig;
  ft::LineServer server(0);
  fr::app::ServiceOptions opts;
  opts.stop_when_settled = false;
  opts.realtime = true;
  opts.max_time_s = 2.0;
  fr::app::SimulationService svc(rig.exec, opts);
  svc.set_server(&server);
  testutil::LineClient client(server.port());
  ASSERT_TRUE(wait_for([&] { return server.client_count() == 1; }));
  std::thread runner([&] { svc.run(); });
  const json upload{{"seq", 1}, {"kind", "UPLOAD_MISSION"}, {"payload", {{"mission", fm::mission_to_json(rig.plan)}}}};
  client.send_raw(upload.dump() + "\n" + R"({"seq": 2, "kind": "ARM"})" + "\n" + "garbage\n" +
                  R"({"seq": 2, "kind": "DISARM"})" + "\n" + R"({"seq": 3, "kind": "START_MISSION"})" + "\n");
  std::vector<json> acks;
  while (acks.size() < 5) {
    auto line = client.read_line();
    ASSERT_TRUE(line);
    auto j = json::parse(*line);
    if (j.at("type") == "ack") acks.push_back(j);
  }
  runner.join();
  EXPECT_EQ(acks[0].at("seq"), 1);
  EXPECT_TRUE(acks[0].at("accepted").get<bool>());
  EXPECT_EQ(acks[1].at("seq"), 2);
  EXPECT_TRUE(acks[1].at("accepted").get<bool>());
  EXPECT_TRUE(acks[2].at("seq").is_null());
  EXPECT_FALSE(acks[2].at("accepted").get<bool>());
  EXPECT_EQ(acks[3].at("seq"), 2);
  EXPECT_FALSE(acks[3].at("accepted").get<bool>());
  EXPECT_EQ(acks[4].at("seq"), 3);
  EXPECT_TRUE(acks[4].at("accepted").get<bool>());
}

TEST(Server, TwoClientsSeeIdenticalFrames) {
  Rig rig;
  rig.exec.upload(rig.plan);
  rig.exec.arm();
  rig.exec.start();
  ft::LineServer server(0);
  fr::app::ServiceOptions opts;
  opts.max_time_s = 8.0;
  fr::app::SimulationService svc(rig.exec, opts);
  svc.set_server(&server);
  testutil::LineClient a(server.port()), b(server.port());
  ASSERT_TRUE(wait_for([&] { return server.client_count() == 2; }));
  svc.run();
  const std::size_t n = svc.frames_emitted();
  ASSERT_EQ(n, 80u);
  for (std::size_t i = 0; i < n; ++i) {
    const auto la = a.read_line();
    const auto lb = b.read_line();
    ASSERT_TRUE(la && lb) << i;
    EXPECT_EQ(*la, *lb);
  }
}

TEST(Server, RtkCorrectionsStreamOncePerEpoch) {
  Rig rig;
  ft::LineServer rtk(0);
  fr::app::ServiceOptions opts;
  opts.max_time_s = 3.0;
  opts.stop_when_settled = false;
  fr::app::SimulationService svc(rig.exec, opts);
  svc.set_rtk_server(&rtk);
  testutil::LineClient c(rtk.port());
  ASSERT_TRUE(wait_for([&] { return rtk.client_count() == 1; }));
  svc.run();
  std::vector<double> ts;
  while (auto line = c.read_line(300ms)) ts.push_back(fr::sensors::correction_from_json(json::parse(*line)).t);
  EXPECT_EQ(ts, (std::vector<double>{0.0, 1.0, 2.0, 3.0}));
}
