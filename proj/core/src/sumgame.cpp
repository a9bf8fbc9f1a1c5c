#include "coinslide/sumgame.hpp"

#include <algorithm>
#include <tuple>

namespace coinslide {

Grundy nim_sum(std::span<const Grundy> values) {
  Grundy acc = 0;
  for (Grundy v : values) acc ^= v;
  return acc;
}

Grundy sum_grundy(const SumState& s, RuleVariant variant) {
  return nim_sum(grundy_closed_form(s.left, variant), grundy_closed_form(s.right, variant));
}

Outcome outcome(const SumState& s, RuleVariant variant) {
  return sum_grundy(s, variant) == 0 ? Outcome::PPosition : Outcome::NPosition;
}

SumState apply(const SumState& s, const SumMove& m, RuleVariant variant) {
  SumState next = s;
  next.strap(m.side) = apply(s.strap(m.side), m.move, variant);
  return next;
}

std::vector<SumTransition> sum_successors(const SumState& s, RuleVariant variant) {
  std::vector<SumTransition> out;
  for (Side side : {Side::Left, Side::Right}) {
    for (const Transition& t : successors(s.strap(side), variant)) {
      SumState next = s;
      next.strap(side) = t.result;
      out.push_back({{side, t.move}, next});
    }
  }
  return out;
}

namespace {

auto preference_key(const SumTransition& t) {
  return std::make_tuple(rank(t.result), t.move.side, t.result);
}

}  // namespace

std::vector<SumTransition> winning_moves(const SumState& s, RuleVariant variant) {
  std::vector<SumTransition> out;
  for (Side side : {Side::Left, Side::Right}) {
    const Side other = side == Side::Left ? Side::Right : Side::Left;
    // Moving on `side` wins iff the new strap value equals the other strap's.
    const Grundy target = grundy_closed_form(s.strap(other), variant);
    for (const Transition& t : successors(s.strap(side), variant)) {
      if (grundy_closed_form(t.result, variant) != target) continue;
      SumState next = s;
      next.strap(side) = t.result;
      out.push_back({{side, t.move}, next});
    }
  }
  std::sort(out.begin(), out.end(), [](const SumTransition& a, const SumTransition& b) {
    return preference_key(a) < preference_key(b);
  });
  return out;
}

std::optional<SumTransition> engine_move(const SumState& s, RuleVariant variant) {
  if (auto wins = winning_moves(s, variant); !wins.empty()) return wins.front();

  std::optional<SumTransition> best;
  for (const SumTransition& t : sum_successors(s, variant)) {
    if (!best) {
      best = t;
      continue;
    }
    const Rank r = rank(t.result);
    const Rank best_r = rank(best->result);
    if (r > best_r ||
        (r == best_r && std::tie(t.move.side, t.result) < std::tie(best->move.side, best->result))) {
      best = t;
    }
  }
  return best;
}

Outcome MinimaxSolver::outcome(const SumState& s) {
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  Outcome result = Outcome::PPosition;
  for (const SumTransition& t : sum_successors(s, variant_)) {
    if (outcome(t.result) == Outcome::PPosition) {
      result = Outcome::NPosition;
      break;
    }
  }
  memo_.emplace(s, result);
  return result;
}

Outcome minimax_outcome(const SumState& s, RuleVariant variant) {
  MinimaxSolver solver(variant);
  return solver.outcome(s);
}

}  // namespace coinslide
