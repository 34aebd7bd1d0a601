#include "http_server.hpp"

#include <httplib.h>

namespace cogregion {

struct HttpServer::Impl {
  const Api& api;
  httplib::Server server;

  explicit Impl(const Api& a) : api(a) {
    // httplib would also set SO_REUSEPORT, which lets a second server bind
    // the same port silently.
    server.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
    auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
      ApiRequest request{req.method, req.path, {}, req.body};
      for (const auto& [key, value] : req.params) request.params.emplace(key, value);
      const ApiResponse response = api.handle(request);
      res.status = response.status;
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_content(response.body.dump(), "application/json");
    };
    const std::string route = R"(/api/.*)";
    server.Get(route, dispatch);
    server.Post(route, dispatch);
    server.Delete(route, dispatch);
    server.Options(route, [](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.status = 204;
    });
    server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
      if (!res.body.empty()) return;
      const nlohmann::json body = {{"code", "NotFound"},
                                   {"message", req.method + " " + req.path + " is not an endpoint"}};
      res.set_content(body.dump(), "application/json");
    });
  }
};

HttpServer::HttpServer(const Api& api) : impl_(std::make_unique<Impl>(api)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port < 0 || port > 65535) {
    throw Error(ErrorCode::ValidationError, "port must be in [1, 65535]");
  }
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                              : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    throw Error(ErrorCode::PortInUse, "cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void HttpServer::serve() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

}  // namespace cogregion
