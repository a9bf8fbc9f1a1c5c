#include <random>

#include <gtest/gtest.h>

#include "coinslide/notation.hpp"
#include "coinslide/sumgame.hpp"

namespace coinslide {
namespace {

constexpr RuleVariant kA = RuleVariant::PushOnlyRemoval;

std::vector<StrapState> all_straps(Square max) {
  std::vector<StrapState> out = {StrapState::empty()};
  for (Square r = 0; r <= max; ++r) out.push_back(StrapState::one(r));
  for (Square y = 1; y <= max; ++y) {
    for (Square x = 0; x < y; ++x) out.push_back(StrapState::two(x, y));
  }
  return out;
}

StrapState random_strap(std::mt19937& rng, Square max) {
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<Square> coord(0, max);
  const int k = kind(rng);
  if (k == 0) return StrapState::empty();
  if (k == 1) return StrapState::one(coord(rng));
  for (;;) {
    Square x = coord(rng);
    Square y = coord(rng);
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    return StrapState::two(x, y);
  }
}

TEST(NimSum, Examples) {
  EXPECT_EQ(nim_sum(0, 7), 7u);
  EXPECT_EQ(nim_sum(3, 5), 6u);
  EXPECT_EQ(nim_sum(9, 9), 0u);
  EXPECT_EQ(nim_sum(std::vector<Grundy>{1, 2, 4, 7}), 0u);
}

TEST(SumGrundy, Examples) {
  EXPECT_EQ(sum_grundy(parse_sum("0,1|1,2"), kA), 2u);
  EXPECT_EQ(sum_grundy(parse_sum("0,2|0,2"), kA), 0u);
  EXPECT_EQ(sum_grundy(parse_sum("-|-"), kA), 0u);
}

TEST(Outcome, Examples) {
  EXPECT_EQ(outcome(parse_sum("-|-"), kA), Outcome::PPosition);
  EXPECT_EQ(outcome(parse_sum("0,2|0,2"), kA), Outcome::PPosition);
  EXPECT_EQ(outcome(parse_sum("0,1|-"), kA), Outcome::NPosition);
}

TEST(WinningMoves, SingleReply) {
  const auto moves = winning_moves(parse_sum("0,1|1,2"), kA);
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0].move, (SumMove{Side::Right, StrapMove::push(1)}));
  EXPECT_EQ(format_sum(moves[0].result), "0,1|0,1");
}

TEST(WinningMoves, NoneFromPPosition) {
  EXPECT_TRUE(winning_moves(parse_sum("0,2|0,2"), kA).empty());
  EXPECT_TRUE(winning_moves(parse_sum("-|-"), kA).empty());
}

TEST(WinningMoves, BothPushesWinAndLowestRankComesFirst) {
  const auto moves = winning_moves(parse_sum("0,1|-"), kA);
  ASSERT_EQ(moves.size(), 2u);
  EXPECT_EQ(moves[0].move, (SumMove{Side::Left, StrapMove::push(2)}));
  EXPECT_EQ(moves[0].result.left, StrapState::empty());
  EXPECT_EQ(moves[1].move, (SumMove{Side::Left, StrapMove::push(1)}));
  EXPECT_EQ(moves[1].result.left, StrapState::one(0));
}

TEST(Minimax, Examples) {
  EXPECT_EQ(minimax_outcome(parse_sum("-|-"), kA), Outcome::PPosition);
  EXPECT_EQ(minimax_outcome(parse_sum("0|-"), kA), Outcome::PPosition);
  EXPECT_EQ(minimax_outcome(parse_sum("0,1|-"), kA), Outcome::NPosition);
  EXPECT_EQ(minimax_outcome(parse_sum("0,2|0,2"), kA), Outcome::PPosition);
}

TEST(Minimax, AgreesWithNimSumOnSmallBoards) {
  for (RuleVariant v : {RuleVariant::PushOnlyRemoval, RuleVariant::StandaloneRemoval}) {
    MinimaxSolver solver(v);
    const auto straps = all_straps(7);
    for (const auto& l : straps) {
      for (const auto& r : straps) {
        const SumState s{l, r};
        ASSERT_EQ(solver.outcome(s), outcome(s, v)) << format_sum(s);
      }
    }
  }
}

TEST(WinningMoves, EveryReplyIsALossForTheOpponent) {
  std::mt19937 rng(2024);
  MinimaxSolver solver(kA);
  for (int i = 0; i < 300; ++i) {
    const SumState s{random_strap(rng, 9), random_strap(rng, 9)};
    const auto moves = winning_moves(s, kA);
    EXPECT_EQ(moves.empty(), solver.outcome(s) == Outcome::PPosition) << format_sum(s);
    for (const auto& t : moves) {
      ASSERT_EQ(apply(s, t.move, kA), t.result);
      ASSERT_EQ(solver.outcome(t.result), Outcome::PPosition) << format_sum(s);
    }
  }
}

TEST(WinningMoves, EmptyMeansEverySuccessorIsNonzero) {
  std::mt19937 rng(7);
  int p_positions = 0;
  for (int i = 0; i < 4000 && p_positions < 30; ++i) {
    const SumState s{random_strap(rng, 40), random_strap(rng, 40)};
    if (!winning_moves(s, kA).empty()) continue;
    ++p_positions;
    for (const auto& t : sum_successors(s, kA)) ASSERT_NE(sum_grundy(t.result, kA), 0u);
  }
  EXPECT_GT(p_positions, 0);
}

TEST(Engine, LosingSidePlaysLongestMove) {
  const auto move = engine_move(parse_sum("0,2|0,2"), kA);
  ASSERT_TRUE(move.has_value());
  EXPECT_EQ(move->move, (SumMove{Side::Left, StrapMove::slide_right_coin(1)}));
  EXPECT_FALSE(engine_move(parse_sum("-|0"), kA).has_value());
}

TEST(Engine, SelfPlayFromNPositionEndsWithStarterMovingLast) {
  std::mt19937 rng(11);
  for (int game = 0; game < 100; ++game) {
    SumState s{random_strap(rng, 30), random_strap(rng, 30)};
    if (outcome(s, kA) != Outcome::NPosition) continue;
    int plies = 0;
    while (auto m = engine_move(s, kA)) {
      ASSERT_LT(rank(m->result), rank(s));
      s = m->result;
      ++plies;
    }
    EXPECT_EQ(plies % 2, 1) << "starter must make the last move";
  }
}

}  // namespace
}  // namespace coinslide
