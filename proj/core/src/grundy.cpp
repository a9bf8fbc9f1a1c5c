#include "coinslide/grundy.hpp"

#include <algorithm>
#include <stdexcept>

#include "coinslide/errors.hpp"

namespace coinslide {

Grundy mex(std::span<const Grundy> values) {
  // The answer is at most values.size(), so larger values can be ignored.
  std::vector<bool> seen(values.size() + 1, false);
  for (Grundy v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  Grundy m = 0;
  while (seen[m]) ++m;
  return m;
}

Grundy GrundyOracle::value(const StrapState& root) {
  if (auto it = memo_.find(root); it != memo_.end()) return it->second;

  // Explicit stack: chains of moves are as long as the starting rank.
  struct Frame {
    StrapState state;
    std::vector<Transition> next;
    std::size_t cursor = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({root, successors(root, variant_)});

  std::vector<Grundy> child_values;
  while (!stack.empty()) {
    Frame& top = stack.back();
    while (top.cursor < top.next.size() && memo_.contains(top.next[top.cursor].result)) {
      ++top.cursor;
    }
    if (top.cursor < top.next.size()) {
      const StrapState child = top.next[top.cursor].result;
      stack.push_back({child, successors(child, variant_)});
      continue;
    }
    child_values.clear();
    for (const Transition& t : top.next) child_values.push_back(memo_.at(t.result));
    memo_.emplace(top.state, mex(child_values));
    stack.pop_back();
  }
  return memo_.at(root);
}

Grundy grundy_bruteforce(const StrapState& s, RuleVariant variant) {
  GrundyOracle oracle(variant);
  return oracle.value(s);
}

Family family_from_number(int number) {
  if (number < 1 || number > 3) {
    throw std::invalid_argument("family must be 1, 2 or 3");
  }
  return static_cast<Family>(number);
}

bool GrundyClass::has(Family f) const {
  return std::any_of(witnesses.begin(), witnesses.end(),
                     [f](const Witness& w) { return w.family == f; });
}

std::string GrundyClass::families_joined(char separator) const {
  std::string out;
  for (const Witness& w : witnesses) {
    if (!out.empty()) out += separator;
    out += static_cast<char>('0' + family_number(w.family));
  }
  return out;
}

namespace {

struct Candidate {
  Family family;
  Grundy value;
  Square offset;
};

}  // namespace

GrundyClass classify(Square x, Square y) {
  if (x >= y) {
    throw InvalidState("classify needs x < y, got " + std::to_string(x) + "," +
                       std::to_string(y));
  }
  const Grundy gx = x;
  const Grundy gy = y;
  const Grundy half_up = (gx + 1) / 2;     // floor((x+1)/2)
  const Grundy half_down_parity = (gx / 2) % 2;

  std::vector<Candidate> found;

  // Constant gap d = y - x: d even and a = x - (d-2) >= 0, value (3d-2)/2.
  const Grundy gap = gy - gx;
  if (gap % 2 == 0 && gy <= 2 * gx + 2) {
    found.push_back({Family::ConstantGap, (3 * gap - 2) / 2,
                     static_cast<Square>(gx - (gap - 2))});
  }

  // Raised: y = n + floor((x+1)/2).
  if (gy >= half_up) {
    const Grundy n = gy - half_up;
    if (gx + half_up + 1 <= n && half_down_parity == n % 2) {
      found.push_back({Family::Raised, n, x});
    }
  }

  // Lowered: y = n - floor((x+1)/2); the size condition reduces to x < y.
  {
    const Grundy n = gy + half_up;
    if (half_down_parity == (n + 1) % 2) {
      found.push_back({Family::Lowered, n, x});
    }
  }

  auto describe = [&] {
    std::string s = "(" + std::to_string(x) + "," + std::to_string(y) + ") candidates:";
    for (const Candidate& c : found) {
      s += " family " + std::to_string(family_number(c.family)) + " -> " +
           std::to_string(c.value);
    }
    return s;
  };
  if (found.empty()) throw ClassificationFailure("no family applies to " + describe());

  GrundyClass result{found.front().value, {}};
  for (const Candidate& c : found) {
    if (c.value != result.value) {
      throw ClassificationFailure("families disagree on " + describe());
    }
    result.witnesses.push_back({c.family, c.offset});
  }
  return result;
}

Grundy grundy_closed_form(const StrapState& s, RuleVariant variant) {
  switch (s.kind()) {
    case StrapState::Kind::Empty:
      return 0;
    case StrapState::Kind::One:
      return variant == RuleVariant::PushOnlyRemoval ? Grundy{s.lone()} : 0;
    case StrapState::Kind::Two:
      return classify(s.left(), s.right()).value;
  }
  return 0;
}

std::vector<CoinPair> enumerate_class(Grundy n, Family family, Square bound) {
  std::vector<CoinPair> out;
  const Grundy limit = bound;

  if (family == Family::ConstantGap) {
    if (n % 3 != 2) return out;
    const Grundy k = (n - 2) / 3;
    for (Grundy a = 0; a + 4 * k + 2 <= limit; ++a) {
      out.push_back({static_cast<Square>(a + 2 * k), static_cast<Square>(a + 4 * k + 2)});
    }
    return out;
  }

  const Grundy wanted_parity = family == Family::Raised ? n % 2 : (n + 1) % 2;
  for (Grundy a = 0; a + (a + 1) / 2 + 1 <= n; ++a) {
    if ((a / 2) % 2 != wanted_parity) continue;
    const Grundy y = family == Family::Raised ? n + (a + 1) / 2 : n - (a + 1) / 2;
    if (y <= limit) out.push_back({static_cast<Square>(a), static_cast<Square>(y)});
  }
  return out;
}

}  // namespace coinslide
