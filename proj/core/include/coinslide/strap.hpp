#pragma once

// One strap: a semi-infinite board (squares 0, 1, 2, ...) holding at most two
// coins. Coins only ever move toward square 0; a coin pushed past square 0
// leaves the game for good.
//
// Move semantics for a pair of coins at x < y:
//   slide left coin    x -> x'        for any x' < x
//   slide right coin   y -> y'        for any x < y' < y (never onto/over x)
//   push, depth j      right coin sweeps into the left coin, then both shift
//                      j-1 further squares left:
//                        j <= x    -> (x-j, x+1-j)
//                        j == x+1  -> left coin falls off, lone coin at 0
//                        j == x+2  -> both coins fall off
//   remove left coin   (StandaloneRemoval only) left coin leaves, lone coin
//                      stays at y
//
// A lone coin may slide to any lower square under PushOnlyRemoval and is
// frozen under StandaloneRemoval.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace coinslide {

using Square = std::uint32_t;
using Rank = std::uint64_t;

enum class RuleVariant : std::uint8_t {
  PushOnlyRemoval,    // "A": coins leave only by being pushed
  StandaloneRemoval,  // "B": left coin may be removed outright; lone coins frozen
};

// "A" / "B" (case-insensitive); throws ParseError("unknown-variant").
RuleVariant parse_variant(std::string_view text);
char variant_letter(RuleVariant variant) noexcept;

struct CoinPair {
  Square x;
  Square y;

  friend constexpr auto operator<=>(const CoinPair&, const CoinPair&) = default;
};

class StrapState {
 public:
  enum class Kind : std::uint8_t { Empty, One, Two };

  constexpr StrapState() = default;

  static constexpr StrapState empty() { return StrapState(); }
  static constexpr StrapState one(Square r) { return StrapState(Kind::One, r, 0); }
  // Throws InvalidState unless x < y.
  static StrapState two(Square x, Square y);
  static StrapState two(CoinPair p) { return two(p.x, p.y); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_empty() const { return kind_ == Kind::Empty; }
  constexpr bool has_one() const { return kind_ == Kind::One; }
  constexpr bool has_two() const { return kind_ == Kind::Two; }
  constexpr int coin_count() const { return static_cast<int>(kind_); }

  // Two coins: the coin nearer the edge. One coin: that coin.
  constexpr Square left() const { return first_; }
  // Two coins only.
  constexpr Square right() const { return second_; }
  constexpr Square lone() const { return first_; }
  constexpr CoinPair pair() const { return {first_, second_}; }

  friend constexpr auto operator<=>(const StrapState&, const StrapState&) = default;

 private:
  constexpr StrapState(Kind kind, Square first, Square second)
      : kind_(kind), first_(first), second_(second) {}

  Kind kind_ = Kind::Empty;
  Square first_ = 0;
  Square second_ = 0;
};

class StrapMove {
 public:
  enum class Kind : std::uint8_t {
    SlideLeftCoin,
    SlideRightCoin,
    SlideLoneCoin,
    Push,
    RemoveLeftCoin,
  };

  static constexpr StrapMove slide_left_coin(Square to) { return {Kind::SlideLeftCoin, to}; }
  static constexpr StrapMove slide_right_coin(Square to) { return {Kind::SlideRightCoin, to}; }
  static constexpr StrapMove slide_lone_coin(Square to) { return {Kind::SlideLoneCoin, to}; }
  static constexpr StrapMove push(std::uint32_t depth) { return {Kind::Push, depth}; }
  static constexpr StrapMove remove_left_coin() { return {Kind::RemoveLeftCoin, 0}; }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_slide() const {
    return kind_ == Kind::SlideLeftCoin || kind_ == Kind::SlideRightCoin ||
           kind_ == Kind::SlideLoneCoin;
  }
  // Slide target square; meaningful for slides only.
  constexpr Square to() const { return param_; }
  // Push depth; meaningful for pushes only.
  constexpr std::uint32_t depth() const { return param_; }

  friend constexpr auto operator<=>(const StrapMove&, const StrapMove&) = default;

 private:
  constexpr StrapMove(Kind kind, std::uint32_t param) : kind_(kind), param_(param) {}

  Kind kind_;
  std::uint32_t param_;
};

struct Transition {
  StrapMove move;
  StrapState result;

  friend constexpr bool operator==(const Transition&, const Transition&) = default;
};

// Every legal move from `s`, in a fixed order: left-coin slides (ascending
// target), right-coin slides (ascending target), pushes (ascending depth),
// then removal (variant B). Lone-coin slides ascend by target.
std::vector<Transition> successors(const StrapState& s, RuleVariant variant);

// Throws IllegalMove carrying the reason when `m` is not legal in `s`.
StrapState apply(const StrapState& s, const StrapMove& m, RuleVariant variant);

// Termination witness: strictly decreases along every legal move.
constexpr Rank rank(const StrapState& s) {
  switch (s.kind()) {
    case StrapState::Kind::Empty:
      return 0;
    case StrapState::Kind::One:
      return Rank{s.lone()} + 1;
    case StrapState::Kind::Two:
      return Rank{s.left()} + Rank{s.right()} + 2;
  }
  return 0;
}

}  // namespace coinslide

template <>
struct std::hash<coinslide::StrapState> {
  std::size_t operator()(const coinslide::StrapState& s) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(s.kind());
    h = h * 0x9E3779B97F4A7C15ULL + s.left();
    h = h * 0x9E3779B97F4A7C15ULL + s.right();
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};
