#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coinslide/grundy.hpp"
#include "coinslide/strap.hpp"

namespace coinslide {

enum class Side : std::uint8_t { Left, Right };

// Two straps played side by side; a turn is one move on one strap. Both
// straps are held in the same leftward orientation: index = distance from
// that strap's edge. The physical right strap runs the other way, which is
// purely a rendering concern.
struct SumState {
  StrapState left;
  StrapState right;

  const StrapState& strap(Side side) const { return side == Side::Left ? left : right; }
  StrapState& strap(Side side) { return side == Side::Left ? left : right; }

  friend constexpr auto operator<=>(const SumState&, const SumState&) = default;
};

struct SumMove {
  Side side;
  StrapMove move;

  friend constexpr auto operator<=>(const SumMove&, const SumMove&) = default;
};

struct SumTransition {
  SumMove move;
  SumState result;

  friend constexpr bool operator==(const SumTransition&, const SumTransition&) = default;
};

enum class Outcome : std::uint8_t { PPosition, NPosition };

constexpr Grundy nim_sum(Grundy a, Grundy b) { return a ^ b; }
Grundy nim_sum(std::span<const Grundy> values);

constexpr Rank rank(const SumState& s) { return rank(s.left) + rank(s.right); }

// Nim-sum of the two straps' closed-form values.
Grundy sum_grundy(const SumState& s, RuleVariant variant);

Outcome outcome(const SumState& s, RuleVariant variant);

SumState apply(const SumState& s, const SumMove& m, RuleVariant variant);

// All legal moves: left strap first, each strap in `successors` order.
std::vector<SumTransition> sum_successors(const SumState& s, RuleVariant variant);

// Every move to a state with nim-sum 0, in engine preference order: lowest
// resulting total rank first, then left strap before right, then by
// resulting state. Scans all successors of each strap, since a strap move
// can raise that strap's value.
std::vector<SumTransition> winning_moves(const SumState& s, RuleVariant variant);

// Engine policy. Winning: first of winning_moves. Losing: the legal move
// with the largest resulting total rank (ties: left strap first, then
// smallest resulting state). Empty when no move exists.
std::optional<SumTransition> engine_move(const SumState& s, RuleVariant variant);

// Plain game-tree search under normal play, independent of Grundy values.
// Recursion depth is bounded by the total rank, so keep coordinates at desk
// scale. Not thread-safe.
class MinimaxSolver {
 public:
  explicit MinimaxSolver(RuleVariant variant) : variant_(variant) {}

  Outcome outcome(const SumState& s);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Hash {
    std::size_t operator()(const SumState& s) const noexcept {
      std::hash<StrapState> h;
      return h(s.left) * 0x100000001B3ULL ^ h(s.right);
    }
  };

  RuleVariant variant_;
  std::unordered_map<SumState, Outcome, Hash> memo_;
};

Outcome minimax_outcome(const SumState& s, RuleVariant variant);

}  // namespace coinslide
