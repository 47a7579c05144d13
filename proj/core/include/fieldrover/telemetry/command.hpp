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
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fieldrover/mission/executive.hpp"

namespace fieldrover::telemetry {

enum class CommandKind { Arm, Disarm, SetMode, UploadMission, ManualOverride, StartMission };

std::string_view to_string(CommandKind kind);

/// {"seq": N, "kind": "ARM", "payload": {...}}. Payloads:
///   SET_MODE        {"mode": "HOLD" | "RESUME"}
///   UPLOAD_MISSION  {"mission": <mission document>}
///   MANUAL_OVERRIDE {"throttle": t, "steer": s}, both in [-1, 1]
struct Command {
  std::int64_t seq = 0;
  CommandKind kind = CommandKind::Arm;
  nlohmann::json payload = nlohmann::json::object();
};

struct Ack {
  std::optional<std::int64_t> seq;  // empty when the line had no readable seq
  bool accepted = false;
  std::string reason;
  std::string detail;

  friend bool operator==(const Ack&, const Ack&) = default;
};

/// {"type":"ack","seq":N|null,"accepted":bool[,"reason":..][,"detail":..]}
nlohmann::json ack_to_json(const Ack& ack);
Ack ack_from_json(const nlohmann::json& doc);

/// Either a command or the NACK to send back for a bad line.
struct ParsedLine {
  std::optional<Command> command;
  Ack nack;
};

/// Parses one NDJSON command line. Malformed JSON, missing seq, unknown kinds
/// and non-increasing seq (relative to `last_seq`) produce a NACK.
ParsedLine parse_command_line(std::string_view line, std::optional<std::int64_t> last_seq);

/// Applies a command to the executive at a tick boundary and builds the ACK.
Ack apply_command(mission::MissionExecutive& exec, const Command& cmd);

}  // namespace fieldrover::telemetry
