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

// Small helpers for strict schema checks on nlohmann::json documents.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fieldrover/errors.hpp"

namespace fieldrover::detail {

inline void require_object(const nlohmann::json& doc, std::string_view what) {
  if (!doc.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
}

inline void reject_unknown_keys(const nlohmann::json& doc, std::string_view what,
                                std::initializer_list<std::string_view> allowed) {
  for (const auto& item : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw ParseError(std::string(what) + ": unknown field '" + item.key() + "'");
    }
  }
}

inline double get_number(const nlohmann::json& doc, const char* key, std::string_view what) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string(what) + ": missing field '" + key + "'");
  if (!it->is_number()) throw ParseError(std::string(what) + ": field '" + key + "' must be a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + ": field '" + key + "' is not finite");
  return v;
}

inline double get_number_or(const nlohmann::json& doc, const char* key, double fallback,
                            std::string_view what) {
  return doc.contains(key) ? get_number(doc, key, what) : fallback;
}

inline std::string get_string(const nlohmann::json& doc, const char* key, std::string_view what) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_string()) {
    throw ParseError(std::string(what) + ": field '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

inline bool get_bool_or(const nlohmann::json& doc, const char* key, bool fallback,
                        std::string_view what) {
  auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  if (!it->is_boolean()) throw ParseError(std::string(what) + ": field '" + key + "' must be a boolean");
  return it->get<bool>();
}

}  // namespace fieldrover::detail
