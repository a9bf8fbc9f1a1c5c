#include "coinslide/service.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include <json.hpp>

#include "coinslide/errors.hpp"
#include "coinslide/grundy.hpp"
#include "coinslide/sumgame.hpp"
#include "coinslide/version.hpp"

namespace coinslide::service {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Request-level failure mapped straight onto an HTTP error.
struct ApiError {
  int status;
  std::string code;
  std::string message;
};

Response error_response(const ApiError& e) {
  ordered_json body;
  body["error"] = {{"code", e.code}, {"message", e.message}};
  return {e.status, body.dump()};
}

Response ok(const ordered_json& body) { return {200, body.dump()}; }

ApiError bad_request(std::string code, std::string message) {
  return {400, std::move(code), std::move(message)};
}

Square read_square(const json& v, const char* what, const char* code) {
  if (!v.is_number_integer()) throw bad_request(code, std::string(what) + " must be an integer");
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > std::numeric_limits<Square>::max()) {
      throw bad_request(code, std::string(what) + " out of range");
    }
    return static_cast<Square>(u);
  }
  if (v.get<std::int64_t>() < 0) {
    throw bad_request(code, std::string(what) + " must be nonnegative");
  }
  return static_cast<Square>(v.get<std::int64_t>());
}

StrapState read_strap(const json& coins, const char* side) {
  if (!coins.is_array()) {
    throw bad_request("malformed-position", std::string(side) + " must be an array of squares");
  }
  if (coins.size() > 2) {
    throw bad_request("too-many-coins", std::string(side) + " holds more than two coins");
  }
  std::vector<Square> squares;
  for (const json& c : coins) squares.push_back(read_square(c, "coin", "malformed-position"));
  std::sort(squares.begin(), squares.end());
  if (squares.size() == 2 && squares[0] == squares[1]) {
    throw bad_request("duplicate-coin", std::string(side) + " has two coins on one square");
  }
  switch (squares.size()) {
    case 0:
      return StrapState::empty();
    case 1:
      return StrapState::one(squares[0]);
    default:
      return StrapState::two(squares[0], squares[1]);
  }
}

SumState read_position(const json& request) {
  if (!request.contains("position") || !request["position"].is_object()) {
    throw bad_request("malformed-position", "request needs a position object");
  }
  const json& p = request["position"];
  if (!p.contains("left") || !p.contains("right")) {
    throw bad_request("malformed-position", "position needs left and right coin lists");
  }
  return {read_strap(p["left"], "left"), read_strap(p["right"], "right")};
}

RuleVariant read_variant(const json& request) {
  if (!request.contains("variant")) return RuleVariant::PushOnlyRemoval;
  const json& v = request["variant"];
  if (!v.is_string()) throw bad_request("unknown-variant", "variant must be \"A\" or \"B\"");
  try {
    return parse_variant(v.get<std::string>());
  } catch (const ParseError& e) {
    throw bad_request("unknown-variant", e.what());
  }
}

std::string read_word(const json& move, const char* key) {
  if (!move.contains(key) || !move[key].is_string()) {
    throw bad_request("malformed-move", std::string("move needs string field '") + key + "'");
  }
  return move[key].get<std::string>();
}

Square read_number(const json& move, const char* key) {
  if (!move.contains(key)) {
    throw bad_request("malformed-move", std::string("move needs field '") + key + "'");
  }
  return read_square(move[key], key, "malformed-move");
}

SumMove read_move(const json& request) {
  if (!request.contains("move") || !request["move"].is_object()) {
    throw bad_request("malformed-move", "request needs a move object");
  }
  const json& m = request["move"];
  const std::string strap = read_word(m, "strap");
  Side side;
  if (strap == "left") {
    side = Side::Left;
  } else if (strap == "right") {
    side = Side::Right;
  } else {
    throw bad_request("malformed-move", "strap must be \"left\" or \"right\"");
  }

  const std::string kind = read_word(m, "kind");
  if (kind == "push") return {side, StrapMove::push(read_number(m, "depth"))};
  if (kind == "remove") return {side, StrapMove::remove_left_coin()};
  if (kind == "slide") {
    const std::string coin = read_word(m, "coin");
    const Square to = read_number(m, "to");
    if (coin == "left") return {side, StrapMove::slide_left_coin(to)};
    if (coin == "right") return {side, StrapMove::slide_right_coin(to)};
    if (coin == "lone") return {side, StrapMove::slide_lone_coin(to)};
    throw bad_request("malformed-move", "coin must be \"left\", \"right\" or \"lone\"");
  }
  throw bad_request("malformed-move", "kind must be \"slide\", \"push\" or \"remove\"");
}

ordered_json strap_json(const StrapState& s) {
  ordered_json coins = ordered_json::array();
  if (s.has_one()) coins.push_back(s.lone());
  if (s.has_two()) {
    coins.push_back(s.left());
    coins.push_back(s.right());
  }
  return coins;
}

ordered_json position_json(const SumState& s) {
  ordered_json p;
  p["left"] = strap_json(s.left);
  p["right"] = strap_json(s.right);
  return p;
}

ordered_json move_json(const SumMove& m) {
  ordered_json j;
  j["strap"] = m.side == Side::Left ? "left" : "right";
  using K = StrapMove::Kind;
  switch (m.move.kind()) {
    case K::SlideLeftCoin:
    case K::SlideRightCoin:
    case K::SlideLoneCoin:
      j["kind"] = "slide";
      j["coin"] = m.move.kind() == K::SlideLeftCoin    ? "left"
                  : m.move.kind() == K::SlideRightCoin ? "right"
                                                       : "lone";
      j["to"] = m.move.to();
      break;
    case K::Push:
      j["kind"] = "push";
      j["depth"] = m.move.depth();
      break;
    case K::RemoveLeftCoin:
      j["kind"] = "remove";
      break;
  }
  return j;
}

json parse_body(std::string_view body) {
  json request = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (request.is_discarded() || !request.is_object()) {
    throw bad_request("malformed-json", "request body must be a JSON object");
  }
  return request;
}

Response analyze(const json& request) {
  const SumState position = read_position(request);
  const RuleVariant variant = read_variant(request);
  const Grundy left = grundy_closed_form(position.left, variant);
  const Grundy right = grundy_closed_form(position.right, variant);

  ordered_json moves = ordered_json::array();
  for (const SumTransition& t : winning_moves(position, variant)) {
    ordered_json entry = move_json(t.move);
    entry["position"] = position_json(t.result);
    moves.push_back(std::move(entry));
  }

  ordered_json out;
  out["grundyLeft"] = left;
  out["grundyRight"] = right;
  out["nimSum"] = nim_sum(left, right);
  out["outcome"] = nim_sum(left, right) == 0 ? "P" : "N";
  out["winningMoves"] = std::move(moves);
  return ok(out);
}

Response apply_move(const json& request) {
  const SumState position = read_position(request);
  const SumMove move = read_move(request);
  const RuleVariant variant = read_variant(request);
  try {
    ordered_json out;
    out["position"] = position_json(apply(position, move, variant));
    return ok(out);
  } catch (const IllegalMove& e) {
    throw ApiError{422, e.code(), e.what()};
  }
}

Response engine_reply(const json& request) {
  const SumState position = read_position(request);
  const RuleVariant variant = read_variant(request);
  const auto choice = engine_move(position, variant);
  if (!choice) throw ApiError{409, "game-over", "no legal move remains"};

  ordered_json out;
  out["move"] = move_json(choice->move);
  out["position"] = position_json(choice->result);
  out["rationale"] = {{"nimSumBefore", sum_grundy(position, variant)},
                      {"nimSumAfter", sum_grundy(choice->result, variant)}};
  return ok(out);
}

Response health() {
  ordered_json out;
  out["status"] = "ok";
  out["version"] = kVersion;
  return ok(out);
}

}  // namespace

Response handle(std::string_view method, std::string_view path, std::string_view body) {
  struct Route {
    std::string_view path;
    std::string_view method;
  };
  static constexpr Route routes[] = {
      {"/api/health", "GET"},
      {"/api/analyze", "POST"},
      {"/api/apply", "POST"},
      {"/api/engine-move", "POST"},
  };
  try {
    const auto route = std::find_if(std::begin(routes), std::end(routes),
                                    [&](const Route& r) { return r.path == path; });
    if (route == std::end(routes)) {
      throw ApiError{404, "not-found", "no such endpoint: " + std::string(path)};
    }
    if (route->method != method) {
      throw ApiError{405, "method-not-allowed",
                     std::string(path) + " expects " + std::string(route->method)};
    }
    if (path == "/api/health") return health();

    const json request = parse_body(body);
    if (path == "/api/analyze") return analyze(request);
    if (path == "/api/apply") return apply_move(request);
    return engine_reply(request);
  } catch (const ApiError& e) {
    return error_response(e);
  } catch (const Error& e) {
    return error_response({400, e.code(), e.what()});
  }
}

}  // namespace coinslide::service
