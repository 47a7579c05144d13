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

#include "fieldrover/telemetry/command.hpp"

#include <string>

#include "fieldrover/errors.hpp"
#include "fieldrover/mission/plan.hpp"

namespace fieldrover::telemetry {

using nlohmann::json;

std::string_view to_string(CommandKind kind) {
  switch (kind) {
    case CommandKind::Arm: return "ARM";
    case CommandKind::Disarm: return "DISARM";
    case CommandKind::SetMode: return "SET_MODE";
    case CommandKind::UploadMission: return "UPLOAD_MISSION";
    case CommandKind::ManualOverride: return "MANUAL_OVERRIDE";
    case CommandKind::StartMission: return "START_MISSION";
  }
  return "ARM";
}

namespace {

std::optional<CommandKind> kind_from_string(std::string_view s) {
  for (CommandKind k : {CommandKind::Arm, CommandKind::Disarm, CommandKind::SetMode,
                        CommandKind::UploadMission, CommandKind::ManualOverride,
                        CommandKind::StartMission}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

Ack nack(std::optional<std::int64_t> seq, std::string reason, std::string detail = {}) {
  return {seq, false, std::move(reason), std::move(detail)};
}

}  // namespace

json ack_to_json(const Ack& ack) {
  json j{{"type", "ack"}, {"seq", ack.seq ? json(*ack.seq) : json(nullptr)}, {"accepted", ack.accepted}};
  if (!ack.reason.empty()) j["reason"] = ack.reason;
  if (!ack.detail.empty()) j["detail"] = ack.detail;
  return j;
}

Ack ack_from_json(const json& doc) {
  if (!doc.is_object() || doc.value("type", "") != "ack") throw ParseError("not an ack");
  Ack a;
  if (!doc.at("seq").is_null()) a.seq = doc.at("seq").get<std::int64_t>();
  a.accepted = doc.at("accepted").get<bool>();
  a.reason = doc.value("reason", "");
  a.detail = doc.value("detail", "");
  return a;
}

ParsedLine parse_command_line(std::string_view line, std::optional<std::int64_t> last_seq) {
  ParsedLine out;
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    out.nack = nack(std::nullopt, "malformed json", e.what());
    return out;
  }
  if (!doc.is_object()) {
    out.nack = nack(std::nullopt, "malformed command", "expected an object");
    return out;
  }
  auto seq_it = doc.find("seq");
  if (seq_it == doc.end() || !seq_it->is_number_integer()) {
    out.nack = nack(std::nullopt, "missing seq");
    return out;
  }
  const std::int64_t seq = seq_it->get<std::int64_t>();
  if (last_seq && seq <= *last_seq) {
    out.nack = nack(seq, "seq not increasing");
    return out;
  }
  auto kind_it = doc.find("kind");
  if (kind_it == doc.end() || !kind_it->is_string()) {
    out.nack = nack(seq, "missing kind");
    return out;
  }
  const auto kind = kind_from_string(kind_it->get<std::string>());
  if (!kind) {
    out.nack = nack(seq, "unknown kind", kind_it->get<std::string>());
    return out;
  }
  Command cmd{seq, *kind, json::object()};
  if (auto p = doc.find("payload"); p != doc.end()) {
    if (!p->is_object()) {
      out.nack = nack(seq, "malformed command", "payload must be an object");
      return out;
    }
    cmd.payload = *p;
  }
  out.command = std::move(cmd);
  return out;
}

Ack apply_command(mission::MissionExecutive& exec, const Command& cmd) {
  Ack ack{cmd.seq, true, {}, {}};
  try {
    switch (cmd.kind) {
      case CommandKind::Arm:
        exec.arm();
        break;
      case CommandKind::Disarm:
        exec.disarm();
        break;
      case CommandKind::StartMission:
        exec.start();
        break;
      case CommandKind::SetMode: {
        auto m = cmd.payload.find("mode");
        const std::string mode = m != cmd.payload.end() && m->is_string() ? m->get<std::string>() : "";
        if (mode == "HOLD") {
          exec.hold();
        } else if (mode == "RESUME" || mode == "AUTO") {
          exec.start();
        } else {
          return nack(cmd.seq, "invalid mode", mode);
        }
        break;
      }
      case CommandKind::UploadMission: {
        if (exec.state() == mission::MissionState::MissionRunning) {
          return nack(cmd.seq, "rejected while MISSION_RUNNING");
        }
        mission::MissionPlan plan;
        try {
          if (!cmd.payload.contains("mission")) throw ParseError("payload.mission missing");
          plan = mission::mission_from_json(cmd.payload.at("mission"), exec.map().origin_geo);
          exec.upload(plan);
        } catch (const InvalidTransition&) {
          throw;
        } catch (const Error& e) {
          return nack(cmd.seq, "invalid mission", e.what());
        } catch (const nlohmann::json::exception& e) {
          return nack(cmd.seq, "invalid mission", e.what());
        }
        break;
      }
      case CommandKind::ManualOverride: {
        const auto& p = cmd.payload;
        if (!p.contains("throttle") || !p.contains("steer") || !p.at("throttle").is_number() ||
            !p.at("steer").is_number()) {
          return nack(cmd.seq, "invalid override", "throttle and steer required");
        }
        exec.manual_override(p.at("throttle").get<double>(), p.at("steer").get<double>());
        break;
      }
    }
  } catch (const ArmRefused& e) {
    std::string list;
    for (const auto& f : e.failures()) list += (list.empty() ? "" : ",") + f;
    return nack(cmd.seq, "pre-arm failed", list);
  } catch (const Error& e) {
    return nack(cmd.seq, "rejected", e.what());
  }
  return ack;
}

}  // namespace fieldrover::telemetry
