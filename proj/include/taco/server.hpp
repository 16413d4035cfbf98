#pragma once

// HTTP JSON front end over an Engine.

#include <memory>
#include <string>

#include "taco/engine.hpp"

namespace taco::server {

/// Maps a turn request body to a TurnInput. Throws ParseError.
TurnInput parse_turn_body(const std::string& body);

class HttpService {
 public:
  explicit HttpService(engine::Engine& engine);
  ~HttpService();

  /// Binds and serves until stop(); returns false when the port cannot be bound.
  bool listen(const std::string& host, int port);
  /// Binds an ephemeral port and returns it (-1 on failure); serve with listen_after_bind().
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace taco::server
