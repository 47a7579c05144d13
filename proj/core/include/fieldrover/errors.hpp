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

#include <stdexcept>
#include <string>
#include <vector>

namespace fieldrover {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A document (world, mission, annotation, command) failed schema validation.
class ParseError : public Error {
 public:
  using Error::Error;
};

class NoFix : public Error {
 public:
  using Error::Error;
};

class InvalidEndpoint : public Error {
 public:
  using Error::Error;
};

class NoPath : public Error {
 public:
  using Error::Error;
};

class InvalidTransition : public Error {
 public:
  using Error::Error;
};

class RecordRejected : public Error {
 public:
  using Error::Error;
};

class EmptyResult : public Error {
 public:
  using Error::Error;
};

/// Metric is mathematically undefined for the given input (e.g. 0/0).
class Undefined : public Error {
 public:
  using Error::Error;
};

class ArmRefused : public Error {
 public:
  explicit ArmRefused(std::vector<std::string> failures);

  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  std::vector<std::string> failures_;
};

}  // namespace fieldrover
