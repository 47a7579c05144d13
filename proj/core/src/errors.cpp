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

#include "fieldrover/errors.hpp"

namespace fieldrover {

namespace {

std::string join_failures(const std::vector<std::string>& failures) {
  std::string msg = "arming refused:";
  for (const auto& f : failures) msg += " " + f;
  return msg;
}

}  // namespace

ArmRefused::ArmRefused(std::vector<std::string> failures)
    : Error(join_failures(failures)), failures_(std::move(failures)) {}

}  // namespace fieldrover
