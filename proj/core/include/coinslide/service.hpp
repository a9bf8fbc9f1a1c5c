#pragma once

// JSON-over-HTTP facade for analysis, move application and engine replies.
//
//   GET  /api/health       -> {"status":"ok","version":...}
//   POST /api/analyze      {position, variant?}       -> values, outcome, winning moves
//   POST /api/apply        {position, move, variant?} -> {position}
//   POST /api/engine-move  {position, variant?}       -> {move, position, rationale}
//
// position: {"left":[coins], "right":[coins]}, each 0-2 distinct squares.
// Squares count from that strap's own edge, so the physically mirrored
// right strap uses the same numbers as the engine.
// move: {"strap":"left"|"right", "kind":"slide"|"push"|"remove",
//        "coin":"left"|"right"|"lone", "to":n} for slides, "depth":n for pushes.
// "left" coin is the one nearer the strap's edge.
//
// Errors carry {"error":{"code":..., "message":...}} with status
//   400 malformed-json | malformed-position | duplicate-coin | too-many-coins
//       | malformed-move | unknown-variant
//   404 not-found, 405 method-not-allowed
//   409 game-over
//   422 no-such-coin | target-not-lower | target-occupied-or-jump
//       | push-depth-out-of-range | wrong-variant

#include <memory>
#include <string>
#include <string_view>

namespace coinslide::service {

struct Response {
  int status = 200;
  std::string body;  // JSON
};

// Pure routing: the response depends only on the arguments.
Response handle(std::string_view method, std::string_view path, std::string_view body);

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string static_dir;  // optional web assets mounted at "/"
};

class Server {
 public:
  explicit Server(ServerOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Returns the bound port. Throws std::runtime_error when binding fails or
  // the static directory does not exist.
  int bind();
  // Serves until stop() is called from another thread.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace coinslide::service
