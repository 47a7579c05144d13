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

#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace fieldrover::telemetry {

/// Newline-delimited text service over TCP. One I/O thread accepts clients,
/// splits their input into lines, and flushes queued output; every other
/// call is safe from any thread. Clients may come and go at any time.
class LineServer {
 public:
  using ClientId = std::uint64_t;

  struct Incoming {
    ClientId client;
    std::string line;
  };

  /// Binds and starts listening; port 0 picks an ephemeral port. Throws
  /// fieldrover::Error if the port cannot be bound.
  explicit LineServer(std::uint16_t port, const std::string& bind_address = "127.0.0.1");
  ~LineServer();

  LineServer(const LineServer&) = delete;
  LineServer& operator=(const LineServer&) = delete;

  std::uint16_t port() const noexcept { return port_; }
  std::size_t client_count() const;

  /// Queues `line` plus a newline for every connected client.
  void broadcast(std::string_view line);
  void send(ClientId client, std::string_view line);

  /// Complete input lines received since the last call, in arrival order.
  std::vector<Incoming> take_lines();

  void stop();

 private:
  struct Client {
    int fd = -1;
    std::string in;
    std::string out;
  };

  void run();
  void wake();
  void close_client_locked(ClientId id);

  int listen_fd_ = -1;
  int wake_fds_[2] = {-1, -1};
  std::uint16_t port_ = 0;
  std::atomic<bool> stopping_{false};
  mutable std::mutex mu_;
  std::map<ClientId, Client> clients_;
  std::deque<Incoming> inbox_;
  ClientId next_id_ = 1;
  std::thread io_;
};

}  // namespace fieldrover::telemetry
