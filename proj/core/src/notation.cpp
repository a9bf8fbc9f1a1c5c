#include "coinslide/notation.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

#include "coinslide/errors.hpp"

namespace coinslide {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

Square parse_square(std::string_view token, std::string_view whole) {
  if (!token.empty() && token.front() == '-') {
    throw ParseError("negative-coordinate",
                     "coordinates must be nonnegative: '" + std::string(whole) + "'");
  }
  Square value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("malformed", "bad coordinate '" + std::string(token) + "' in '" +
                                      std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

StrapState parse_strap(std::string_view text) {
  const std::string compact = strip_spaces(text);
  if (compact == "-") return StrapState::empty();
  if (compact.empty()) throw ParseError("malformed", "empty strap text");

  const auto parts = split(compact, ',');
  if (parts.size() > 2) {
    throw ParseError("too-many-coins", "a strap holds at most two coins: '" + compact + "'");
  }
  if (parts.size() == 1) return StrapState::one(parse_square(parts[0], compact));

  const Square a = parse_square(parts[0], compact);
  const Square b = parse_square(parts[1], compact);
  if (a == b) {
    throw ParseError("duplicate-coin", "coins must be on distinct squares: '" + compact + "'");
  }
  return a < b ? StrapState::two(a, b) : StrapState::two(b, a);
}

std::string format_strap(const StrapState& s) {
  switch (s.kind()) {
    case StrapState::Kind::Empty:
      return "-";
    case StrapState::Kind::One:
      return std::to_string(s.lone());
    case StrapState::Kind::Two:
      return std::to_string(s.left()) + "," + std::to_string(s.right());
  }
  return "-";
}

SumState parse_sum(std::string_view text) {
  const auto parts = split(text, '|');
  if (parts.size() != 2) {
    throw ParseError("malformed", "sum position needs exactly one '|': '" + std::string(text) + "'");
  }
  return {parse_strap(parts[0]), parse_strap(parts[1])};
}

std::string format_sum(const SumState& s) {
  return format_strap(s.left) + "|" + format_strap(s.right);
}

std::string_view side_name(Side side) { return side == Side::Left ? "left" : "right"; }

std::string format_move(const StrapMove& m) {
  using K = StrapMove::Kind;
  switch (m.kind()) {
    case K::SlideLeftCoin:
      return "slide left " + std::to_string(m.to());
    case K::SlideRightCoin:
      return "slide right " + std::to_string(m.to());
    case K::SlideLoneCoin:
      return "slide lone " + std::to_string(m.to());
    case K::Push:
      return "push " + std::to_string(m.depth());
    case K::RemoveLeftCoin:
      return "remove";
  }
  return "?";
}

std::string format_move(const SumMove& m) {
  return std::string(side_name(m.side)) + " " + format_move(m.move);
}

SumMove parse_move(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) {
    for (char& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    words.push_back(std::move(w));
  }
  auto fail = [&]() -> SumMove {
    throw ParseError("malformed-move",
                     "expected '<left|right> slide <left|right|lone> <to>', "
                     "'<left|right> push <depth>' or '<left|right> remove', got '" +
                         std::string(text) + "'");
  };
  if (words.size() < 2) return fail();

  Side side;
  if (words[0] == "left") {
    side = Side::Left;
  } else if (words[0] == "right") {
    side = Side::Right;
  } else {
    return fail();
  }

  auto number = [&](const std::string& w) -> std::uint32_t {
    try {
      return parse_square(w, text);
    } catch (const ParseError&) {
      fail();
    }
    return 0;
  };

  if (words[1] == "remove" && words.size() == 2) return {side, StrapMove::remove_left_coin()};
  if (words[1] == "push" && words.size() == 3) return {side, StrapMove::push(number(words[2]))};
  if (words[1] == "slide" && words.size() == 4) {
    const Square to = number(words[3]);
    if (words[2] == "left") return {side, StrapMove::slide_left_coin(to)};
    if (words[2] == "right") return {side, StrapMove::slide_right_coin(to)};
    if (words[2] == "lone") return {side, StrapMove::slide_lone_coin(to)};
  }
  return fail();
}

}  // namespace coinslide
