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

#include <array>
#include <string_view>

namespace fieldrover::mission {

enum class MissionState { Disarmed, Armed, MissionRunning, Hold, MissionComplete };

inline constexpr std::array<MissionState, 5> kAllStates = {
    MissionState::Disarmed, MissionState::Armed, MissionState::MissionRunning, MissionState::Hold,
    MissionState::MissionComplete};

std::string_view to_string(MissionState s);
MissionState mission_state_from_string(std::string_view text);

/// Edges of the mission graph:
///   DISARMED -> ARMED -> MISSION_RUNNING <-> HOLD, ARMED -> HOLD,
///   MISSION_RUNNING -> MISSION_COMPLETE -> DISARMED,
///   ARMED -> DISARMED and HOLD -> DISARMED (operator disarm).
bool transition_allowed(MissionState from, MissionState to);

/// Returns `to` or throws InvalidTransition.
MissionState checked_transition(MissionState from, MissionState to);

enum class LedState { RedBooting, YellowReady, GreenCapturing };

std::string_view to_string(LedState s);
LedState led_state_from_string(std::string_view text);

}  // namespace fieldrover::mission
