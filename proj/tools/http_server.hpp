#pragma once

// HTTP transport for cogregion::Api.

#include <memory>
#include <string>

#include "cogregion/api.hpp"

namespace cogregion {

class HttpServer {
 public:
  explicit HttpServer(const Api& api);
  ~HttpServer();

  /// Binds without serving yet. Port 0 picks a free port; returns the bound
  /// port. Throws PortInUse when the address is taken.
  int bind(const std::string& host, int port);

  /// Serves until stop() is called. Requests in flight, including region
  /// store writes, complete before this returns.
  void serve();

  /// Safe to call from another thread.
  void stop();

  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cogregion
