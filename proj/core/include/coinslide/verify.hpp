#pragma once

// Bounded computational checks of the closed-form Grundy description.
// Every checker is deterministic for fixed bounds; findings are sorted by
// position so reports are reproducible.

#include <array>
#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coinslide/grundy.hpp"
#include "coinslide/strap.hpp"

namespace coinslide::verify {

enum class Status : std::uint8_t { Pass, PassWithNotes, Fail };

std::string_view status_name(Status status);

struct Finding {
  CoinPair position;
  std::string kind;
  std::string detail;

  friend auto operator<=>(const Finding&, const Finding&) = default;
};

struct Bound {
  std::string name;
  std::uint64_t value;
};

struct Report {
  std::string claim;
  std::vector<Bound> bounds;
  Status status = Status::Pass;
  std::uint64_t checked = 0;
  std::vector<Finding> counterexamples;
  // Documented discrepancies that do not invalidate the claim.
  std::vector<Finding> notes;
  std::chrono::milliseconds elapsed{0};

  bool ok() const { return status != Status::Fail; }
};

// Brute-force oracle against the closed form for all 0 <= x < y <= bound.
Report check_theorem2(Square bound);

// classify() is total and consistent on the range, and every witness
// regenerates the pair from its family's parameterization.
Report check_classifier(Square bound);

// The six residue classes of n modulo 6, each with explicit parametric
// descriptions (indexed by m and t) of the three families.
enum class ResidueCase : std::uint8_t {
  SixMPlus2,  // (i)
  SixMPlus5,  // (ii)
  SixM,       // (iii)
  SixMPlus1,  // (iv)
  SixMPlus3,  // (v)
  SixMPlus4,  // (vi)
};

inline constexpr std::array<ResidueCase, 6> kResidueCases = {
    ResidueCase::SixMPlus2, ResidueCase::SixMPlus5, ResidueCase::SixM,
    ResidueCase::SixMPlus1, ResidueCase::SixMPlus3, ResidueCase::SixMPlus4};

std::string_view roman(ResidueCase c);
Grundy case_value(ResidueCase c, std::uint32_t m);

struct ExplicitSets {
  Grundy n;
  // Indexed by family_number(f) - 1; each ascending, y <= bound.
  std::array<std::vector<CoinPair>, 3> families;
};

ExplicitSets explicit_sets(ResidueCase c, std::uint32_t m, Square bound);

// Per residue case: one report per family (claim "lemma-1.<case>.G<f>") and
// one for the union ("lemma-1.<case>.union"), aggregated over m <= m_max and
// n <= n_max. Family reports may pass with notes when an explicit set holds
// an element that the family's size condition excludes but that belongs to a
// sibling family of the same value; anything else fails.
std::vector<Report> check_lemma1(std::uint32_t m_max, Square bound,
                                 std::optional<Grundy> n_max = std::nullopt);

// Membership of the four adjacent pairs (4m-1,4m), (4m,4m+1), (4m+1,4m+2),
// (4m+2,4m+3) in the Lowered family of 6m, 6m+1, 6m+3, 6m+4.
Report check_lemma2(std::uint32_t m_max);

// For every pair with value n: each n' < n is reached by some successor and
// no successor has value n.
Report check_mex_reachability(Square bound);

// Every two-coin position has value >= 1 and can move to the empty strap.
Report check_n_positions(Square bound);

// Brute-force two-coin values agree under both rule variants.
Report check_variant_equivalence(Square bound);

std::string to_json(const Report& report, bool include_timing);
std::string to_json(const std::vector<Report>& reports, bool include_timing);
std::string to_text(const Report& report, bool include_timing);

}  // namespace coinslide::verify
