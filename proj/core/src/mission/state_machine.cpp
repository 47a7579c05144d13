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

#include "fieldrover/mission/state_machine.hpp"

#include <string>

#include "fieldrover/errors.hpp"

namespace fieldrover::mission {

std::string_view to_string(MissionState s) {
  switch (s) {
    case MissionState::Disarmed: return "DISARMED";
    case MissionState::Armed: return "ARMED";
    case MissionState::MissionRunning: return "MISSION_RUNNING";
    case MissionState::Hold: return "HOLD";
    case MissionState::MissionComplete: return "MISSION_COMPLETE";
  }
  return "DISARMED";
}

MissionState mission_state_from_string(std::string_view text) {
  for (MissionState s : kAllStates) {
    if (to_string(s) == text) return s;
  }
  throw ParseError("unknown mission state '" + std::string(text) + "'");
}

bool transition_allowed(MissionState from, MissionState to) {
  using S = MissionState;
  switch (from) {
    case S::Disarmed: return to == S::Armed;
    case S::Armed: return to == S::MissionRunning || to == S::Hold || to == S::Disarmed;
    case S::MissionRunning: return to == S::Hold || to == S::MissionComplete;
    case S::Hold: return to == S::MissionRunning || to == S::Disarmed;
    case S::MissionComplete: return to == S::Disarmed;
  }
  return false;
}

MissionState checked_transition(MissionState from, MissionState to) {
  if (!transition_allowed(from, to)) {
    throw InvalidTransition(std::string(to_string(from)) + " -> " + std::string(to_string(to)));
  }
  return to;
}

std::string_view to_string(LedState s) {
  switch (s) {
    case LedState::RedBooting: return "RED_BOOTING";
    case LedState::YellowReady: return "YELLOW_READY";
    case LedState::GreenCapturing: return "GREEN_CAPTURING";
  }
  return "RED_BOOTING";
}

LedState led_state_from_string(std::string_view text) {
  for (LedState s : {LedState::RedBooting, LedState::YellowReady, LedState::GreenCapturing}) {
    if (to_string(s) == text) return s;
  }
  throw ParseError("unknown led state '" + std::string(text) + "'");
}

}  // namespace fieldrover::mission
