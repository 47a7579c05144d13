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

#include "fieldrover/telemetry/server.hpp"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "fieldrover/errors.hpp"

namespace fieldrover::telemetry {

namespace {

constexpr std::size_t kMaxLine = 1 << 20;
constexpr std::size_t kMaxBacklog = 8 << 20;  // per-client unsent bytes before we drop it

void set_nonblocking(int fd) {
  const int flags = fcntl(fd, F_GETFL, 0);
  fcntl(fd, F_SETFL, flags | O_NONBLOCK);
}

}  // namespace

LineServer::LineServer(std::uint16_t port, const std::string& bind_address) {
  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw Error(std::string("socket: ") + std::strerror(errno));
  const int one = 1;
  setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));

  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (inet_pton(AF_INET, bind_address.c_str(), &addr.sin_addr) != 1) {
    ::close(listen_fd_);
    throw Error("invalid bind address " + bind_address);
  }
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0 ||
      ::listen(listen_fd_, 16) != 0) {
    const std::string why = std::strerror(errno);
    ::close(listen_fd_);
    throw Error("cannot listen on " + bind_address + ":" + std::to_string(port) + ": " + why);
  }
  socklen_t len = sizeof(addr);
  getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
  set_nonblocking(listen_fd_);

  if (::pipe(wake_fds_) != 0) {
    ::close(listen_fd_);
    throw Error("pipe failed");
  }
  set_nonblocking(wake_fds_[0]);
  set_nonblocking(wake_fds_[1]);
  io_ = std::thread([this] { run(); });
}

LineServer::~LineServer() { stop(); }

void LineServer::stop() {
  if (stopping_.exchange(true)) return;
  wake();
  if (io_.joinable()) io_.join();
  std::lock_guard lock(mu_);
  for (auto& [id, c] : clients_) ::close(c.fd);
  clients_.clear();
  ::close(listen_fd_);
  ::close(wake_fds_[0]);
  ::close(wake_fds_[1]);
}

std::size_t LineServer::client_count() const {
  std::lock_guard lock(mu_);
  return clients_.size();
}

void LineServer::wake() {
  const char b = 1;
  [[maybe_unused]] auto n = ::write(wake_fds_[1], &b, 1);
}

void LineServer::broadcast(std::string_view line) {
  {
    std::lock_guard lock(mu_);
    for (auto& [id, c] : clients_) {
      c.out.append(line);
      c.out.push_back('\n');
    }
  }
  wake();
}

void LineServer::send(ClientId client, std::string_view line) {
  {
    std::lock_guard lock(mu_);
    auto it = clients_.find(client);
    if (it == clients_.end()) return;
    it->second.out.append(line);
    it->second.out.push_back('\n');
  }
  wake();
}

std::vector<LineServer::Incoming> LineServer::take_lines() {
  std::lock_guard lock(mu_);
  std::vector<Incoming> out(std::make_move_iterator(inbox_.begin()), std::make_move_iterator(inbox_.end()));
  inbox_.clear();
  return out;
}

void LineServer::close_client_locked(ClientId id) {
  auto it = clients_.find(id);
  if (it == clients_.end()) return;
  ::close(it->second.fd);
  clients_.erase(it);
}

void LineServer::run() {
  std::vector<pollfd> fds;
  std::vector<ClientId> ids;
  char buf[8192];
  while (!stopping_) {
    fds.clear();
    ids.clear();
    fds.push_back({listen_fd_, POLLIN, 0});
    fds.push_back({wake_fds_[0], POLLIN, 0});
    {
      std::lock_guard lock(mu_);
      for (auto& [id, c] : clients_) {
        short ev = POLLIN;
        if (!c.out.empty()) ev |= POLLOUT;
        fds.push_back({c.fd, ev, 0});
        ids.push_back(id);
      }
    }
    if (::poll(fds.data(), fds.size(), 200) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (fds[1].revents & POLLIN) {
      while (::read(wake_fds_[0], buf, sizeof(buf)) > 0) {
      }
    }
    if (fds[0].revents & POLLIN) {
      while (true) {
        const int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd < 0) break;
        set_nonblocking(fd);
        const int one = 1;
        setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
        std::lock_guard lock(mu_);
        clients_.emplace(next_id_++, Client{fd, {}, {}});
      }
    }

    std::lock_guard lock(mu_);
    for (std::size_t i = 2; i < fds.size(); ++i) {
      const ClientId id = ids[i - 2];
      auto it = clients_.find(id);
      if (it == clients_.end()) continue;
      Client& c = it->second;
      bool drop = (fds[i].revents & (POLLERR | POLLNVAL)) != 0;
      if (!drop && (fds[i].revents & (POLLIN | POLLHUP))) {
        while (true) {
          const ssize_t n = ::recv(c.fd, buf, sizeof(buf), 0);
          if (n > 0) {
            c.in.append(buf, static_cast<std::size_t>(n));
            continue;
          }
          if (n == 0 || (errno != EAGAIN && errno != EWOULDBLOCK)) drop = true;
          break;
        }
        std::size_t pos;
        while ((pos = c.in.find('\n')) != std::string::npos) {
          std::string line = c.in.substr(0, pos);
          if (!line.empty() && line.back() == '\r') line.pop_back();
          c.in.erase(0, pos + 1);
          if (!line.empty()) inbox_.push_back({id, std::move(line)});
        }
        if (c.in.size() > kMaxLine) drop = true;
      }
      if (!drop && !c.out.empty()) {
        const ssize_t n = ::send(c.fd, c.out.data(), c.out.size(), MSG_NOSIGNAL);
        if (n > 0) {
          c.out.erase(0, static_cast<std::size_t>(n));
        } else if (n < 0 && errno != EAGAIN && errno != EWOULDBLOCK) {
          drop = true;
        }
        if (c.out.size() > kMaxBacklog) drop = true;
      }
      if (drop) close_client_locked(id);
    }
  }
}

}  // namespace fieldrover::telemetry
