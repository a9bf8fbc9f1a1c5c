#include "coinslide/strap.hpp"

#include <string>

#include "coinslide/errors.hpp"

namespace coinslide {

RuleVariant parse_variant(std::string_view text) {
  if (text == "A" || text == "a") return RuleVariant::PushOnlyRemoval;
  if (text == "B" || text == "b") return RuleVariant::StandaloneRemoval;
  throw ParseError("unknown-variant",
                   "rule variant must be A or B, got '" + std::string(text) + "'");
}

char variant_letter(RuleVariant variant) noexcept {
  return variant == RuleVariant::PushOnlyRemoval ? 'A' : 'B';
}

StrapState StrapState::two(Square x, Square y) {
  if (x >= y) {
    throw InvalidState("two-coin strap needs left < right, got " + std::to_string(x) +
                       "," + std::to_string(y));
  }
  return StrapState(Kind::Two, x, y);
}

std::vector<Transition> successors(const StrapState& s, RuleVariant variant) {
  std::vector<Transition> out;
  switch (s.kind()) {
    case StrapState::Kind::Empty:
      break;

    case StrapState::Kind::One:
      if (variant == RuleVariant::PushOnlyRemoval) {
        out.reserve(s.lone());
        for (Square r = 0; r < s.lone(); ++r) {
          out.push_back({StrapMove::slide_lone_coin(r), StrapState::one(r)});
        }
      }
      break;

    case StrapState::Kind::Two: {
      const Square x = s.left();
      const Square y = s.right();
      out.reserve(std::size_t{x} + (y - x - 1) + x + 3);
      for (Square to = 0; to < x; ++to) {
        out.push_back({StrapMove::slide_left_coin(to), StrapState::two(to, y)});
      }
      for (Square to = x + 1; to < y; ++to) {
        out.push_back({StrapMove::slide_right_coin(to), StrapState::two(x, to)});
      }
      for (std::uint32_t j = 1; j <= x; ++j) {
        out.push_back({StrapMove::push(j), StrapState::two(x - j, x + 1 - j)});
      }
      out.push_back({StrapMove::push(x + 1), StrapState::one(0)});
      out.push_back({StrapMove::push(x + 2), StrapState::empty()});
      if (variant == RuleVariant::StandaloneRemoval) {
        out.push_back({StrapMove::remove_left_coin(), StrapState::one(y)});
      }
      break;
    }
  }
  return out;
}

namespace {

[[noreturn]] void reject(IllegalReason reason, const std::string& what) {
  throw IllegalMove(reason, what);
}

}  // namespace

StrapState apply(const StrapState& s, const StrapMove& m, RuleVariant variant) {
  using K = StrapMove::Kind;
  switch (m.kind()) {
    case K::SlideLoneCoin:
      if (!s.has_one()) reject(IllegalReason::NoSuchCoin, "no lone coin on this strap");
      if (variant == RuleVariant::StandaloneRemoval) {
        reject(IllegalReason::WrongVariant, "lone coins cannot move under variant B");
      }
      if (m.to() >= s.lone()) {
        reject(IllegalReason::TargetNotLower, "coin must move to a lower square");
      }
      return StrapState::one(m.to());

    case K::SlideLeftCoin:
      if (!s.has_two()) reject(IllegalReason::NoSuchCoin, "strap has no pair of coins");
      if (m.to() >= s.left()) {
        reject(IllegalReason::TargetNotLower, "coin must move to a lower square");
      }
      return StrapState::two(m.to(), s.right());

    case K::SlideRightCoin:
      if (!s.has_two()) reject(IllegalReason::NoSuchCoin, "strap has no pair of coins");
      if (m.to() >= s.right()) {
        reject(IllegalReason::TargetNotLower, "coin must move to a lower square");
      }
      if (m.to() <= s.left()) {
        reject(IllegalReason::TargetOccupiedOrJump,
               "right coin cannot land on or jump over the left coin");
      }
      return StrapState::two(s.left(), m.to());

    case K::Push: {
      if (!s.has_two()) reject(IllegalReason::NoSuchCoin, "push needs two coins");
      const Square x = s.left();
      const std::uint64_t depth = m.depth();
      if (depth < 1 || depth > std::uint64_t{x} + 2) {
        reject(IllegalReason::PushDepthOutOfRange,
               "push depth must be between 1 and " + std::to_string(std::uint64_t{x} + 2));
      }
      if (depth == std::uint64_t{x} + 2) return StrapState::empty();
      if (depth == std::uint64_t{x} + 1) return StrapState::one(0);
      return StrapState::two(x - m.depth(), x + 1 - m.depth());
    }

    case K::RemoveLeftCoin:
      if (variant != RuleVariant::StandaloneRemoval) {
        reject(IllegalReason::WrongVariant, "outright removal needs variant B");
      }
      if (!s.has_two()) reject(IllegalReason::NoSuchCoin, "strap has no pair of coins");
      return StrapState::one(s.right());
  }
  reject(IllegalReason::NoSuchCoin, "unknown move");
}

}  // namespace coinslide
