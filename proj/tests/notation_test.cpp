#include <random>

#include <gtest/gtest.h>

#include "coinslide/errors.hpp"
#include "coinslide/notation.hpp"

namespace coinslide {
namespace {

std::string parse_error_code(std::string_view text) {
  try {
    parse_strap(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  return "accepted";
}

TEST(StrapNotation, Parses) {
  EXPECT_EQ(parse_strap("0,2"), StrapState::two(0, 2));
  EXPECT_EQ(parse_strap("2,0"), StrapState::two(0, 2));
  EXPECT_EQ(parse_strap(" 3 , 11 "), StrapState::two(3, 11));
  EXPECT_EQ(parse_strap("5"), StrapState::one(5));
  EXPECT_EQ(parse_strap("-"), StrapState::empty());
  EXPECT_EQ(parse_strap(" - "), StrapState::empty());
}

TEST(StrapNotation, Rejects) {
  EXPECT_EQ(parse_error_code("2,2"), "duplicate-coin");
  EXPECT_EQ(parse_error_code("-1,3"), "negative-coordinate");
  EXPECT_EQ(parse_error_code("1,-3"), "negative-coordinate");
  EXPECT_EQ(parse_error_code(""), "malformed");
  EXPECT_EQ(parse_error_code("a,b"), "malformed");
  EXPECT_EQ(parse_error_code("1,"), "malformed");
  EXPECT_EQ(parse_error_code("99999999999"), "malformed");
  EXPECT_EQ(parse_error_code("1,2,3"), "too-many-coins");
}

TEST(StrapNotation, RoundTripsRandomStates) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<Square> coord(0, 100000);
  for (int i = 0; i < 2000; ++i) {
    const Square a = coord(rng);
    const Square b = coord(rng);
    StrapState s;
    switch (i % 3) {
      case 0:
        s = StrapState::empty();
        break;
      case 1:
        s = StrapState::one(a);
        break;
      default:
        if (a == b) continue;
        s = StrapState::two(std::min(a, b), std::max(a, b));
    }
    ASSERT_EQ(parse_strap(format_strap(s)), s);
  }
}

TEST(SumNotation, ParsesAndFormats) {
  const SumState s = parse_sum("0,1|1,2");
  EXPECT_EQ(s.left, StrapState::two(0, 1));
  EXPECT_EQ(s.right, StrapState::two(1, 2));
  EXPECT_EQ(format_sum(parse_sum("-|3,0")), "-|0,3");
  EXPECT_THROW(parse_sum("0,1"), ParseError);
  EXPECT_THROW(parse_sum("0,1|1,2|3"), ParseError);
}

TEST(MoveNotation, ParsesGrammar) {
  EXPECT_EQ(parse_move("right push 1"), (SumMove{Side::Right, StrapMove::push(1)}));
  EXPECT_EQ(parse_move("left slide right 2"),
            (SumMove{Side::Left, StrapMove::slide_right_coin(2)}));
  EXPECT_EQ(parse_move("  LEFT  slide lone 0 "),
            (SumMove{Side::Left, StrapMove::slide_lone_coin(0)}));
  EXPECT_EQ(parse_move("right remove"), (SumMove{Side::Right, StrapMove::remove_left_coin()}));
  for (const char* bad : {"", "left", "up push 1", "left push", "left push x", "left slide 2",
                          "left slide middle 2", "left remove 3", "left push -1"}) {
    EXPECT_THROW(parse_move(bad), ParseError) << bad;
  }
}

TEST(MoveNotation, FormatInvertsParse) {
  for (const char* text : {"left slide left 0", "right slide right 7", "left slide lone 3",
                           "right push 12", "left remove"}) {
    EXPECT_EQ(format_move(parse_move(text)), text);
  }
}

}  // namespace
}  // namespace coinslide
