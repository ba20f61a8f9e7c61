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

// Live broadcast of a frame stream over WebSocket.
//
// Each client receives the header line as its first text message, then one
// message per frame, paced in real time at header.fps by a single playback
// clock. A client that connects before playback starts receives every frame
// from t = 0; one that connects mid-playback joins at the current live frame.
// When playback ends each client is sent the remaining frames and a normal
// close.

#ifndef TAILORS_STREAM_SERVER_H_
#define TAILORS_STREAM_SERVER_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tailors/frame_stream.h"

namespace tailors {

class FrameServer {
 public:
  FrameServer(StreamHeader header, std::vector<VisualFrame> frames);
  ~FrameServer();
  FrameServer(const FrameServer&) = delete;
  FrameServer& operator=(const FrameServer&) = delete;

  // Binds and starts accepting clients. Port 0 picks an ephemeral port.
  // Throws Error{kPortInUse}.
  void Listen(std::uint16_t port, const std::string& address = "0.0.0.0");
  std::uint16_t port() const;

  // Starts the playback clock. Idempotent.
  void Play();

  // True once at least `count` clients completed the handshake.
  bool WaitForClients(std::size_t count, std::chrono::milliseconds timeout);

  // Blocks until playback ends and every client has been drained, then stops
  // accepting.
  void Wait();

  // Aborts playback and disconnects every client.
  void Stop();

  std::size_t client_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Convenience wrapper: listen on `port`, play immediately and block until the
// stream has been fully delivered.
void ServeStream(const FrameStream& stream, std::uint16_t port);

}  // namespace tailors

#endif  // TAILORS_STREAM_SERVER_H_
