#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>
#include <json.hpp>

#include "coinslide/service.hpp"
#include "coinslide/version.hpp"

namespace coinslide::service {
namespace {

using nlohmann::json;

json post(const std::string& path, const json& body, int expected_status) {
  const Response r = handle("POST", path, body.dump());
  EXPECT_EQ(r.status, expected_status) << r.body;
  return json::parse(r.body);
}

json position(std::vector<int> left, std::vector<int> right) {
  return {{"left", left}, {"right", right}};
}

TEST(Analyze, NPositionWithSingleWinningMove) {
  const json out = post("/api/analyze", {{"position", position({0, 1}, {1, 2})}}, 200);
  EXPECT_EQ(out["grundyLeft"], 1);
  EXPECT_EQ(out["grundyRight"], 3);
  EXPECT_EQ(out["nimSum"], 2);
  EXPECT_EQ(out["outcome"], "N");
  ASSERT_EQ(out["winningMoves"].size(), 1u);
  const json& m = out["winningMoves"][0];
  EXPECT_EQ(m["strap"], "right");
  EXPECT_EQ(m["kind"], "push");
  EXPECT_EQ(m["depth"], 1);
  EXPECT_EQ(m["position"], position({0, 1}, {0, 1}));
}

TEST(Analyze, TerminalPosition) {
  const json out = post("/api/analyze", {{"position", position({}, {})}}, 200);
  EXPECT_EQ(out["nimSum"], 0);
  EXPECT_EQ(out["outcome"], "P");
  EXPECT_TRUE(out["winningMoves"].empty());
}

TEST(Analyze, UnsortedCoinsAreCanonicalized) {
  const json out = post("/api/analyze", {{"position", position({1, 0}, {2, 1})}}, 200);
  EXPECT_EQ(out["nimSum"], 2);
}

TEST(Analyze, VariantBChangesLoneCoinValue) {
  const json a = post("/api/analyze", {{"position", position({5}, {})}}, 200);
  const json b = post("/api/analyze", {{"position", position({5}, {})}, {"variant", "B"}}, 200);
  EXPECT_EQ(a["grundyLeft"], 5);
  EXPECT_EQ(b["grundyLeft"], 0);
}

TEST(Analyze, BadRequests) {
  auto code = [](const json& body) {
    const Response r = handle("POST", "/api/analyze", body.dump());
    EXPECT_EQ(r.status, 400);
    return json::parse(r.body)["error"]["code"].get<std::string>();
  };
  EXPECT_EQ(code({{"position", position({2, 2}, {})}}), "duplicate-coin");
  EXPECT_EQ(code({{"position", position({1, 2, 3}, {})}}), "too-many-coins");
  EXPECT_EQ(code({{"position", position({-1}, {})}}), "malformed-position");
  EXPECT_EQ(code({{"position", {{"left", json::array()}}}}), "malformed-position");
  EXPECT_EQ(code({{"position", {{"left", "0,1"}, {"right", json::array()}}}}),
            "malformed-position");
  EXPECT_EQ(code({{"position", position({}, {})}, {"variant", "C"}}), "unknown-variant");
  EXPECT_EQ(code(json::array()), "malformed-json");

  const Response garbage = handle("POST", "/api/analyze", "{not json");
  EXPECT_EQ(garbage.status, 400);
  EXPECT_EQ(json::parse(garbage.body)["error"]["code"], "malformed-json");
}

TEST(Apply, Slide) {
  const json out = post("/api/apply",
                        {{"position", position({1, 3}, {})},
                         {"move", {{"strap", "left"}, {"kind", "slide"}, {"coin", "right"}, {"to", 2}}}},
                        200);
  EXPECT_EQ(out["position"], position({1, 2}, {}));
}

TEST(Apply, PushOffTheEdge) {
  const json out = post(
      "/api/apply",
      {{"position", position({2, 4}, {})}, {"move", {{"strap", "left"}, {"kind", "push"}, {"depth", 3}}}},
      200);
  EXPECT_EQ(out["position"], position({0}, {}));
}

TEST(Apply, IllegalMoveIs422WithReason) {
  const json out = post("/api/apply",
                        {{"position", position({1, 3}, {})},
                         {"move", {{"strap", "left"}, {"kind", "slide"}, {"coin", "right"}, {"to", 1}}}},
                        422);
  EXPECT_EQ(out["error"]["code"], "target-occupied-or-jump");

  const json removal = post(
      "/api/apply",
      {{"position", position({1, 3}, {})}, {"move", {{"strap", "left"}, {"kind", "remove"}}}}, 422);
  EXPECT_EQ(removal["error"]["code"], "wrong-variant");

  const json allowed = post("/api/apply",
                            {{"position", position({1, 3}, {})},
                             {"move", {{"strap", "left"}, {"kind", "remove"}}},
                             {"variant", "B"}},
                            200);
  EXPECT_EQ(allowed["position"], position({3}, {}));
}

TEST(Apply, MalformedMoveIs400) {
  for (const json& move : {json{{"strap", "middle"}, {"kind", "push"}, {"depth", 1}},
                           json{{"strap", "left"}, {"kind", "jump"}},
                           json{{"strap", "left"}, {"kind", "push"}},
                           json{{"strap", "left"}, {"kind", "slide"}, {"coin", "left"}},
                           json{{"strap", "left"}, {"kind", "slide"}, {"coin", "up"}, {"to", 0}}}) {
    const json out = post("/api/apply", {{"position", position({1, 3}, {})}, {"move", move}}, 400);
    EXPECT_EQ(out["error"]["code"], "malformed-move") << move.dump();
  }
}

TEST(EngineMove, WinsFromNPosition) {
  const json out = post("/api/engine-move", {{"position", position({0, 1}, {1, 2})}}, 200);
  EXPECT_EQ(out["move"], (json{{"strap", "right"}, {"kind", "push"}, {"depth", 1}}));
  EXPECT_EQ(out["position"], position({0, 1}, {0, 1}));
  EXPECT_EQ(out["rationale"]["nimSumBefore"], 2);
  EXPECT_EQ(out["rationale"]["nimSumAfter"], 0);
}

TEST(EngineMove, GameOverIs409) {
  const json out = post("/api/engine-move", {{"position", position({}, {})}}, 409);
  EXPECT_EQ(out["error"]["code"], "game-over");
}

TEST(EngineMove, FromPPositionStillMoves) {
  const json out = post("/api/engine-move", {{"position", position({0, 2}, {0, 2})}}, 200);
  EXPECT_EQ(out["rationale"]["nimSumBefore"], 0);
  EXPECT_NE(out["rationale"]["nimSumAfter"], 0);
}

TEST(Routing, HealthNotFoundAndMethod) {
  const Response h = handle("GET", "/api/health", "");
  EXPECT_EQ(h.status, 200);
  EXPECT_EQ(json::parse(h.body), (json{{"status", "ok"}, {"version", kVersion}}));
  EXPECT_EQ(handle("GET", "/api/nope", "").status, 404);
  EXPECT_EQ(handle("POST", "/api/health", "").status, 405);
  EXPECT_EQ(handle("GET", "/api/analyze", "").status, 405);
}

// Any winning move handed out, once applied, leaves the opponent at "P".
TEST(Consistency, ApplyingWinningMoveGivesPPosition) {
  for (const json& pos : {position({0, 1}, {1, 2}), position({3, 9}, {0, 4}),
                          position({5}, {2, 7}), position({0, 1}, {})}) {
    const json analysis = post("/api/analyze", {{"position", pos}}, 200);
    for (json move : analysis["winningMoves"]) {
      move.erase("position");
      const json next = post("/api/apply", {{"position", pos}, {"move", move}}, 200);
      const json again = post("/api/analyze", {{"position", next["position"]}}, 200);
      EXPECT_EQ(again["outcome"], "P") << pos.dump() << " " << move.dump();
    }
  }
}

TEST(Statelessness, IdenticalRequestsIdenticalResponses) {
  const std::string body = json{{"position", position({4, 10}, {2, 5})}}.dump();
  const Response a = handle("POST", "/api/analyze", body);
  handle("POST", "/api/engine-move", body);
  const Response b = handle("POST", "/api/analyze", body);
  EXPECT_EQ(a.body, b.body);
}

TEST(HttpServer, ServesOverLoopback) {
  Server server({.host = "127.0.0.1", .port = 0, .static_dir = ""});
  const int port = server.bind();
  ASSERT_GT(port, 0);
  std::thread worker([&] { server.run(); });

  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/api/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(json::parse(health->body)["status"], "ok");

  auto analyzed = client.Post("/api/analyze",
                              json{{"position", position({0, 1}, {1, 2})}}.dump(),
                              "application/json");
  ASSERT_TRUE(analyzed);
  EXPECT_EQ(analyzed->status, 200);
  EXPECT_EQ(json::parse(analyzed->body)["nimSum"], 2);

  auto wrong = client.Delete("/api/analyze");
  ASSERT_TRUE(wrong);
  EXPECT_EQ(wrong->status, 405);

  server.stop();
  worker.join();
}

TEST(HttpServer, MissingStaticDirectoryFailsToBind) {
  Server server({.host = "127.0.0.1", .port = 0, .static_dir = "/definitely/not/here"});
  EXPECT_THROW(server.bind(), std::runtime_error);
}

}  // namespace
}  // namespace coinslide::service
