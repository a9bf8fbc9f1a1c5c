#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coinslide {

// Base class for every error raised by the library. `code()` is a short,
// stable, machine-readable identifier (e.g. "duplicate-coin") that the CLI
// and the HTTP service surface verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// A strap configuration that violates the representation invariants
// (two coins on one square, or coordinates out of order).
class InvalidState : public Error {
 public:
  explicit InvalidState(const std::string& message)
      : Error("invalid-state", message) {}
};

enum class IllegalReason {
  NoSuchCoin,             // the move names a coin the strap does not hold
  TargetNotLower,         // slide target is not strictly left of the coin
  TargetOccupiedOrJump,   // right coin would land on or pass the left coin
  PushDepthOutOfRange,    // push depth outside 1..x+2
  WrongVariant,           // move kind not available under the rule variant
};

std::string_view reason_code(IllegalReason reason) noexcept;

class IllegalMove : public Error {
 public:
  IllegalMove(IllegalReason reason, const std::string& message)
      : Error(std::string(reason_code(reason)), message), reason_(reason) {}

  IllegalReason reason() const noexcept { return reason_; }

 private:
  IllegalReason reason_;
};

// Text that does not follow the strap / sum / move notation.
// Codes: "malformed", "duplicate-coin", "negative-coordinate", "too-many-coins".
class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised by the closed-form classifier when no family applies or two
// families disagree. Never expected to fire; if it does, that is a finding.
class ClassificationFailure : public Error {
 public:
  explicit ClassificationFailure(const std::string& message)
      : Error("classification-failure", message) {}
};

}  // namespace coinslide
