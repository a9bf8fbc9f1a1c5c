#include <stdexcept>

#include <httplib.h>

#include "coinslide/service.hpp"

namespace coinslide::service {

struct Server::Impl {
  ServerOptions options;
  httplib::Server http;
};

Server::Server(ServerOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  auto route = [](const httplib::Request& req, httplib::Response& res) {
    const Response out = handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  const char* pattern = R"(/api/.*)";
  impl_->http.Get(pattern, route);
  impl_->http.Post(pattern, route);
  impl_->http.Put(pattern, route);
  impl_->http.Patch(pattern, route);
  impl_->http.Delete(pattern, route);
}

Server::~Server() = default;

int Server::bind() {
  auto& opts = impl_->options;
  if (!opts.static_dir.empty() && !impl_->http.set_mount_point("/", opts.static_dir)) {
    throw std::runtime_error("static directory not found: " + opts.static_dir);
  }
  if (opts.port == 0) {
    const int port = impl_->http.bind_to_any_port(opts.host);
    if (port < 0) throw std::runtime_error("could not bind " + opts.host);
    opts.port = port;
  } else if (!impl_->http.bind_to_port(opts.host, opts.port)) {
    throw std::runtime_error("could not bind " + opts.host + ":" + std::to_string(opts.port));
  }
  return opts.port;
}

void Server::run() { impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

}  // namespace coinslide::service
