// Copyright 2026 The Tailors Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tailors/stream_server.h"

#include <boost/asio/ip/tcp.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include <condition_variable>
#include <list>
#include <mutex>
#include <thread>

#include "tailors/error.h"

namespace tailors {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

struct FrameServer::Impl {
  std::string header_line;
  std::vector<std::string> payloads;
  double fps;

  asio::io_context ioc;
  tcp::acceptor acceptor{ioc};
  std::thread io_thread;
  std::thread clock_thread;

  mutable std::mutex mu;
  std::condition_variable cv;
  bool playing = false;
  bool finished = false;
  bool aborted = false;
  bool draining = false;
  // Number of frames released by the playback clock so far.
  std::size_t released = 0;
  std::size_t handshakes = 0;
  std::list<std::thread> sessions;

  void Accept() {
    acceptor.async_accept([this](beast::error_code ec, tcp::socket socket) {
      if (ec) return;  // acceptor closed
      {
        std::lock_guard<std::mutex> lock(mu);
        if (aborted || draining) return;
        sessions.emplace_back(&Impl::Session, this, std::move(socket));
      }
      Accept();
    });
  }

  void Session(tcp::socket socket) {
    try {
      websocket::stream<tcp::socket> ws(std::move(socket));
      ws.accept();
      ws.text(true);
      ws.write(asio::buffer(header_line));
      std::size_t next;
      {
        std::lock_guard<std::mutex> lock(mu);
        ++handshakes;
        next = playing && released > 0 ? released - 1 : 0;
      }
      cv.notify_all();
      for (;;) {
        std::size_t upto;
        {
          std::unique_lock<std::mutex> lock(mu);
          cv.wait(lock, [&] { return aborted || released > next || finished; });
          if (aborted) break;
          upto = released;
          if (next >= upto && finished) break;
        }
        for (; next < upto; ++next) ws.write(asio::buffer(payloads[next]));
      }
      beast::error_code ec;
      ws.close(websocket::close_code::normal, ec);
    } catch (const std::exception&) {
      // Client went away; nothing to report.
    }
  }

  void Clock() {
    const auto start = std::chrono::steady_clock::now();
    const auto period = std::chrono::duration<double>(1.0 / fps);
    for (std::size_t k = 0; k <= payloads.size(); ++k) {
      const auto due = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   period * static_cast<double>(k));
      std::unique_lock<std::mutex> lock(mu);
      if (cv.wait_until(lock, due, [&] { return aborted; })) return;
      if (k < payloads.size()) {
        released = k + 1;
      } else {
        finished = true;
      }
      lock.unlock();
      cv.notify_all();
    }
  }

  void StopAccepting() {
    asio::post(ioc, [this] {
      beast::error_code ec;
      acceptor.close(ec);
    });
    if (io_thread.joinable()) io_thread.join();
  }

  void JoinSessions() {
    std::list<std::thread> done;
    {
      std::lock_guard<std::mutex> lock(mu);
      done.swap(sessions);
    }
    for (std::thread& t : done) t.join();
  }
};

FrameServer::FrameServer(StreamHeader header, std::vector<VisualFrame> frames)
    : impl_(std::make_unique<Impl>()) {
  impl_->header_line = HeaderLine(header);
  impl_->fps = header.fps;
  impl_->payloads.reserve(frames.size());
  for (const VisualFrame& f : frames) impl_->payloads.push_back(FrameLine(f));
}

FrameServer::~FrameServer() { Stop(); }

void FrameServer::Listen(std::uint16_t port, const std::string& address) {
  Impl& s = *impl_;
  beast::error_code ec;
  const tcp::endpoint endpoint(asio::ip::make_address(address, ec), port);
  if (ec) throw Error(ErrorKind::kOutOfRange, "bad listen address " + address);
  s.acceptor.open(endpoint.protocol(), ec);
  if (!ec) s.acceptor.set_option(asio::socket_base::reuse_address(true), ec);
  if (!ec) s.acceptor.bind(endpoint, ec);
  if (!ec) s.acceptor.listen(asio::socket_base::max_listen_connections, ec);
  if (ec) {
    throw Error(ErrorKind::kPortInUse,
                "cannot listen on port " + std::to_string(port) + ": " + ec.message());
  }
  s.Accept();
  s.io_thread = std::thread([&s] { s.ioc.run(); });
}

std::uint16_t FrameServer::port() const { return impl_->acceptor.local_endpoint().port(); }

void FrameServer::Play() {
  Impl& s = *impl_;
  {
    std::lock_guard<std::mutex> lock(s.mu);
    if (s.playing) return;
    s.playing = true;
  }
  s.clock_thread = std::thread(&Impl::Clock, &s);
}

bool FrameServer::WaitForClients(std::size_t count, std::chrono::milliseconds timeout) {
  std::unique_lock<std::mutex> lock(impl_->mu);
  return impl_->cv.wait_for(lock, timeout, [&] { return impl_->handshakes >= count; });
}

void FrameServer::Wait() {
  Impl& s = *impl_;
  Play();
  if (s.clock_thread.joinable()) s.clock_thread.join();
  {
    std::lock_guard<std::mutex> lock(s.mu);
    s.draining = true;
  }
  s.StopAccepting();
  s.JoinSessions();
}

void FrameServer::Stop() {
  Impl& s = *impl_;
  {
    std::lock_guard<std::mutex> lock(s.mu);
    s.aborted = true;
  }
  s.cv.notify_all();
  s.StopAccepting();
  if (s.clock_thread.joinable()) s.clock_thread.join();
  s.JoinSessions();
}

std::size_t FrameServer::client_count() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->handshakes;
}

void ServeStream(const FrameStream& stream, std::uint16_t port) {
  FrameServer server(stream.header, stream.frames);
  server.Listen(port);
  server.Play();
  server.Wait();
}

}  // namespace tailors
