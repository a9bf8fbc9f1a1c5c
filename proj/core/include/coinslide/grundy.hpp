#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "coinslide/strap.hpp"

namespace coinslide {

using Grundy = std::uint64_t;

// Least nonnegative integer not in `values`.
Grundy mex(std::span<const Grundy> values);

// Memoized mex recursion over the successor relation. The memo is owned by
// the object; results never depend on what was computed before. Not
// thread-safe: confine an oracle to one thread.
class GrundyOracle {
 public:
  explicit GrundyOracle(RuleVariant variant) : variant_(variant) {}

  Grundy value(const StrapState& s);

  RuleVariant variant() const { return variant_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  RuleVariant variant_;
  std::unordered_map<StrapState, Grundy> memo_;
};

// One-shot brute force with a fresh memo table.
Grundy grundy_bruteforce(const StrapState& s, RuleVariant variant);

// The three closed-form position families. For value n:
//   ConstantGap  (x, y) = (a + 2(n-2)/3, a + 4(n-2)/3 + 2), n = 2 mod 3
//   Raised       (x, y) = (a, n + floor((a+1)/2))
//   Lowered      (x, y) = (a, n - floor((a+1)/2))
// where Raised and Lowered need a + floor((a+1)/2) + 1 <= n, and floor(a/2)
// must equal n (Raised) or n+1 (Lowered) modulo 2.
enum class Family : std::uint8_t { ConstantGap = 1, Raised = 2, Lowered = 3 };

constexpr int family_number(Family f) { return static_cast<int>(f); }
// Throws std::invalid_argument outside 1..3.
Family family_from_number(int number);

struct Witness {
  Family family;
  Square offset;  // the parameter `a` of the family

  friend constexpr bool operator==(const Witness&, const Witness&) = default;
};

struct GrundyClass {
  Grundy value;
  std::vector<Witness> witnesses;  // ascending by family, never empty

  bool has(Family f) const;
  // "1+2" style list of family numbers.
  std::string families_joined(char separator) const;
};

// Closed-form value of the pair (x, y). Throws InvalidState unless x < y,
// ClassificationFailure if the families are not total and consistent.
GrundyClass classify(Square x, Square y);

// Two coins: classify(x, y).value. Empty: 0. Lone coin at r: r under
// PushOnlyRemoval, 0 under StandaloneRemoval.
Grundy grundy_closed_form(const StrapState& s, RuleVariant variant);

// Members of the family for value n with y <= bound, ascending, built from
// the family's own parameterization rather than by scanning pairs.
std::vector<CoinPair> enumerate_class(Grundy n, Family family, Square bound);

}  // namespace coinslide
