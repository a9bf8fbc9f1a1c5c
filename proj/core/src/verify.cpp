#include "coinslide/verify.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

#include <json.hpp>

#include "coinslide/errors.hpp"
#include "coinslide/notation.hpp"

namespace coinslide::verify {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
  }

 private:
  Clock::time_point start_ = Clock::now();
};

void finish(Report& r, const Timer& timer) {
  std::sort(r.counterexamples.begin(), r.counterexamples.end());
  std::sort(r.notes.begin(), r.notes.end());
  if (!r.counterexamples.empty()) {
    r.status = Status::Fail;
  } else if (!r.notes.empty()) {
    r.status = Status::PassWithNotes;
  } else {
    r.status = Status::Pass;
  }
  r.elapsed = timer.elapsed();
}

Report make_report(std::string claim, std::vector<Bound> bounds) {
  Report r;
  r.claim = std::move(claim);
  r.bounds = std::move(bounds);
  return r;
}

std::string pair_text(CoinPair p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

std::string_view status_name(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::PassWithNotes:
      return "pass-with-notes";
    case Status::Fail:
      return "fail";
  }
  return "fail";
}

Report check_theorem2(Square bound) {
  Timer timer;
  Report r = make_report("theorem-2", {{"max", bound}});
  GrundyOracle oracle(RuleVariant::PushOnlyRemoval);
  for (Square y = 1; y <= bound; ++y) {
    for (Square x = 0; x < y; ++x) {
      ++r.checked;
      const Grundy brute = oracle.value(StrapState::two(x, y));
      try {
        const Grundy formula = classify(x, y).value;
        if (brute != formula) {
          r.counterexamples.push_back({{x, y}, "value-mismatch",
                                       "oracle " + std::to_string(brute) + ", formula " +
                                           std::to_string(formula)});
        }
      } catch (const ClassificationFailure& e) {
        r.counterexamples.push_back({{x, y}, "classification-failure", e.what()});
      }
    }
  }
  finish(r, timer);
  return r;
}

namespace {

// Rebuilds the pair a witness claims to generate, straight from the family
// definition, and checks that family's side conditions.
std::optional<std::string> witness_problem(CoinPair p, Grundy n, const Witness& w) {
  const Grundy a = w.offset;
  switch (w.family) {
    case Family::ConstantGap: {
      if (n % 3 != 2) return "value not 2 mod 3";
      const Grundy k = (n - 2) / 3;
      if (a + 2 * k != p.x || a + 4 * k + 2 != p.y) return "pair not generated by offset";
      return std::nullopt;
    }
    case Family::Raised:
    case Family::Lowered: {
      if (a + (a + 1) / 2 + 1 > n) return "size condition fails";
      const bool raised = w.family == Family::Raised;
      if ((a / 2) % 2 != (raised ? n % 2 : (n + 1) % 2)) return "parity condition fails";
      const Grundy y = raised ? n + (a + 1) / 2 : n - (a + 1) / 2;
      if (a != p.x || y != p.y) return "pair not generated by offset";
      return std::nullopt;
    }
  }
  return "unknown family";
}

}  // namespace

Report check_classifier(Square bound) {
  Timer timer;
  Report r = make_report("classifier-consistency", {{"max", bound}});
  for (Square y = 1; y <= bound; ++y) {
    for (Square x = 0; x < y; ++x) {
      ++r.checked;
      try {
        const GrundyClass c = classify(x, y);
        for (const Witness& w : c.witnesses) {
          if (auto problem = witness_problem({x, y}, c.value, w)) {
            r.counterexamples.push_back(
                {{x, y}, "bad-witness",
                 "family " + std::to_string(family_number(w.family)) + ": " + *problem});
          }
        }
      } catch (const ClassificationFailure& e) {
        r.counterexamples.push_back({{x, y}, "classification-failure", e.what()});
      }
    }
  }
  finish(r, timer);
  return r;
}

namespace {

// (4t + x_offset, 6m + direction*2t + y_offset) for t >= 0, 6t <= 6m + t_slack.
struct Branch {
  Family family;
  int x_offset;
  int direction;
  int y_offset;
  int t_slack;
};

struct CaseTable {
  ResidueCase which;
  int residue;
  bool has_gap_line;
  // Gap line: (a + 4m + gap_x, a + 8m + gap_y) for a >= 0.
  int gap_x;
  int gap_y;
  std::array<Branch, 4> branches;
};

constexpr Family R = Family::Raised;
constexpr Family L = Family::Lowered;

constexpr std::array<CaseTable, 6> kTables = {{
    {ResidueCase::SixMPlus2, 2, true, 0, 2,
     {{{R, 0, +1, 2, 4}, {R, 1, +1, 3, 2}, {L, 2, -1, 1, -1}, {L, 3, -1, 0, -3}}}},
    {ResidueCase::SixMPlus5, 5, true, 2, 6,
     {{{R, 2, +1, 6, 1}, {R, 3, +1, 7, -1}, {L, 0, -1, 5, 4}, {L, 1, -1, 4, 2}}}},
    {ResidueCase::SixM, 0, false, 0, 0,
     {{{R, 0, +1, 0, -1}, {R, 1, +1, 1, -3}, {L, 2, -1, -1, -4}, {L, 3, -1, -2, -6}}}},
    {ResidueCase::SixMPlus1, 1, false, 0, 0,
     {{{R, 2, +1, 2, -3}, {R, 3, +1, 3, -5}, {L, 0, -1, 1, 0}, {L, 1, -1, 0, -2}}}},
    {ResidueCase::SixMPlus3, 3, false, 0, 0,
     {{{R, 2, +1, 4, -1}, {R, 3, +1, 5, -3}, {L, 0, -1, 3, 2}, {L, 1, -1, 2, 0}}}},
    {ResidueCase::SixMPlus4, 4, false, 0, 0,
     {{{R, 0, +1, 4, 3}, {R, 1, +1, 5, 1}, {L, 2, -1, 3, 0}, {L, 3, -1, 2, -2}}}},
}};

const CaseTable& table_for(ResidueCase c) {
  return kTables[static_cast<std::size_t>(c)];
}

}  // namespace

std::string_view roman(ResidueCase c) {
  static constexpr std::array<std::string_view, 6> names = {"i", "ii", "iii", "iv", "v", "vi"};
  return names[static_cast<std::size_t>(c)];
}

Grundy case_value(ResidueCase c, std::uint32_t m) {
  return 6 * Grundy{m} + static_cast<Grundy>(table_for(c).residue);
}

ExplicitSets explicit_sets(ResidueCase c, std::uint32_t m, Square bound) {
  const CaseTable& table = table_for(c);
  const std::int64_t mm = m;
  const std::int64_t limit = bound;
  ExplicitSets out{case_value(c, m), {}};

  if (table.has_gap_line) {
    auto& g1 = out.families[0];
    for (std::int64_t a = 0; a + 8 * mm + table.gap_y <= limit; ++a) {
      g1.push_back({static_cast<Square>(a + 4 * mm + table.gap_x),
                    static_cast<Square>(a + 8 * mm + table.gap_y)});
    }
  }
  for (const Branch& b : table.branches) {
    auto& dest = out.families[family_number(b.family) - 1];
    for (std::int64_t t = 0; 6 * t <= 6 * mm + b.t_slack; ++t) {
      const std::int64_t x = 4 * t + b.x_offset;
      const std::int64_t y = 6 * mm + b.direction * 2 * t + b.y_offset;
      if (y > limit || y < 0) continue;
      dest.push_back({static_cast<Square>(x), static_cast<Square>(y)});
    }
  }
  for (auto& family : out.families) std::sort(family.begin(), family.end());
  return out;
}

std::vector<Report> check_lemma1(std::uint32_t m_max, Square bound,
                                 std::optional<Grundy> n_max) {
  std::vector<Report> reports;
  for (ResidueCase c : kResidueCases) {
    Timer timer;
    const std::string prefix = "lemma-1." + std::string(roman(c));
    std::vector<Bound> bounds = {{"m_max", m_max}, {"y_max", bound}};
    if (n_max) bounds.push_back({"n_max", *n_max});

    std::array<Report, 3> family_reports;
    for (int f = 1; f <= 3; ++f) {
      family_reports[f - 1] = make_report(prefix + ".G" + std::to_string(f), bounds);
    }
    Report union_report = make_report(prefix + ".union", bounds);

    for (std::uint32_t m = 0; m <= m_max; ++m) {
      const Grundy n = case_value(c, m);
      if (n_max && n > *n_max) break;
      const ExplicitSets sets = explicit_sets(c, m, bound);
      const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m);

      std::set<CoinPair> explicit_union;
      std::set<CoinPair> defined_union;
      for (int f = 1; f <= 3; ++f) {
        const Family family = family_from_number(f);
        Report& report = family_reports[f - 1];
        const auto& listed = sets.families[f - 1];
        const auto defined = enumerate_class(n, family, bound);
        explicit_union.insert(listed.begin(), listed.end());
        defined_union.insert(defined.begin(), defined.end());
        report.checked += listed.size() + defined.size();

        std::vector<CoinPair> extra;
        std::vector<CoinPair> missing;
        std::set_difference(listed.begin(), listed.end(), defined.begin(), defined.end(),
                            std::back_inserter(extra));
        std::set_difference(defined.begin(), defined.end(), listed.begin(), listed.end(),
                            std::back_inserter(missing));

        for (CoinPair p : missing) {
          report.counterexamples.push_back(
              {p, "missing-from-explicit-set",
               where + ": in family " + std::to_string(f) + " but not in its explicit form"});
        }
        for (CoinPair p : extra) {
          if (p.x >= p.y) {
            report.counterexamples.push_back(
                {p, "not-a-position", where + ": explicit form lists a pair with x >= y"});
            continue;
          }
          // Tolerated shape: the family's size condition rejects the pair,
          // and a sibling family of the same value owns it.
          const GrundyClass actual = classify(p.x, p.y);
          const Grundy a = p.x;
          const bool size_fails = family != Family::ConstantGap && a + (a + 1) / 2 + 1 > n;
          const bool sibling_owns = actual.value == n && !actual.has(family);
          if (size_fails && sibling_owns) {
            report.notes.push_back(
                {p, "outside-size-condition",
                 where + ": explicit form of family " + std::to_string(f) +
                     " lists it, the size condition excludes it, family " +
                     actual.families_joined('+') + " holds it"});
          } else {
            report.counterexamples.push_back(
                {p, "extra-in-explicit-set",
                 where + ": explicit form of family " + std::to_string(f) +
                     " lists it; classified as value " + std::to_string(actual.value) +
                     " families " + actual.families_joined('+')});
          }
        }
      }

      union_report.checked += explicit_union.size() + defined_union.size();
      std::vector<CoinPair> diff;
      std::set_symmetric_difference(explicit_union.begin(), explicit_union.end(),
                                    defined_union.begin(), defined_union.end(),
                                    std::back_inserter(diff));
      for (CoinPair p : diff) {
        union_report.counterexamples.push_back(
            {p, "union-mismatch",
             where + (explicit_union.contains(p) ? ": only in explicit union"
                                                 : ": only in family union")});
      }
    }

    for (Report& report : family_reports) {
      finish(report, timer);
      reports.push_back(std::move(report));
    }
    finish(union_report, timer);
    reports.push_back(std::move(union_report));
  }
  return reports;
}

Report check_lemma2(std::uint32_t m_max) {
  Timer timer;
  Report r = make_report("lemma-2", {{"m_max", m_max}});

  struct Case {
    std::string_view name;
    int residue;
    int x_offset;  // pair is (4m + x_offset, 4m + x_offset + 1)
    std::uint32_t first_m;
  };
  static constexpr std::array<Case, 4> cases = {{
      {"i", 0, -1, 1},  // m = 0 would need square -1
      {"ii", 1, 0, 0},
      {"iii", 3, 1, 0},
      {"iv", 4, 2, 0},
  }};

  for (const Case& c : cases) {
    for (std::uint32_t m = c.first_m; m <= m_max; ++m) {
      ++r.checked;
      const Grundy n = 6 * Grundy{m} + static_cast<Grundy>(c.residue);
      const auto x = static_cast<Square>(4 * std::int64_t{m} + c.x_offset);
      const GrundyClass actual = classify(x, x + 1);
      if (actual.value != n || !actual.has(Family::Lowered)) {
        r.counterexamples.push_back(
            {{x, x + 1}, "not-in-lowered-family",
             "case " + std::string(c.name) + " m=" + std::to_string(m) + ": expected value " +
                 std::to_string(n) + " via family 3, got " + std::to_string(actual.value) +
                 " families " + actual.families_joined('+')});
      }
    }
  }
  finish(r, timer);
  return r;
}

Report check_mex_reachability(Square bound) {
  Timer timer;
  Report r = make_report("mex-reach", {{"max", bound}});
  std::vector<Grundy> values;
  for (Square y = 1; y <= bound; ++y) {
    for (Square x = 0; x < y; ++x) {
      ++r.checked;
      const StrapState s = StrapState::two(x, y);
      const Grundy n = classify(x, y).value;
      values.clear();
      for (const Transition& t : successors(s, RuleVariant::PushOnlyRemoval)) {
        const Grundy v = grundy_closed_form(t.result, RuleVariant::PushOnlyRemoval);
        if (v == n) {
          r.counterexamples.push_back({{x, y}, "value-preserving-move",
                                       format_move(t.move) + " reaches " +
                                           format_strap(t.result) + " with value " +
                                           std::to_string(n)});
        }
        values.push_back(v);
      }
      std::sort(values.begin(), values.end());
      for (Grundy want = 0; want < n; ++want) {
        if (!std::binary_search(values.begin(), values.end(), want)) {
          r.counterexamples.push_back(
              {{x, y}, "missing-value",
               "value " + std::to_string(want) + " < " + std::to_string(n) + " unreachable"});
        }
      }
    }
  }
  finish(r, timer);
  return r;
}

Report check_n_positions(Square bound) {
  Timer timer;
  Report r = make_report("n-positions", {{"max", bound}});
  for (Square y = 1; y <= bound; ++y) {
    for (Square x = 0; x < y; ++x) {
      ++r.checked;
      const StrapState s = StrapState::two(x, y);
      if (grundy_closed_form(s, RuleVariant::PushOnlyRemoval) == 0) {
        r.counterexamples.push_back({{x, y}, "zero-value", "closed-form value is 0"});
      }
      const auto next = successors(s, RuleVariant::PushOnlyRemoval);
      const bool can_clear = std::any_of(next.begin(), next.end(), [](const Transition& t) {
        return t.result.is_empty();
      });
      if (!can_clear) {
        r.counterexamples.push_back({{x, y}, "no-clearing-move", "empty strap unreachable"});
      }
    }
  }
  finish(r, timer);
  return r;
}

Report check_variant_equivalence(Square bound) {
  Timer timer;
  Report r = make_report("variant-equivalence", {{"max", bound}});
  GrundyOracle a(RuleVariant::PushOnlyRemoval);
  GrundyOracle b(RuleVariant::StandaloneRemoval);
  for (Square y = 1; y <= bound; ++y) {
    for (Square x = 0; x < y; ++x) {
      ++r.checked;
      const StrapState s = StrapState::two(x, y);
      const Grundy va = a.value(s);
      const Grundy vb = b.value(s);
      if (va != vb) {
        r.counterexamples.push_back({{x, y}, "variant-mismatch",
                                     "variant A " + std::to_string(va) + ", variant B " +
                                         std::to_string(vb)});
      }
    }
  }
  finish(r, timer);
  return r;
}

namespace {

nlohmann::ordered_json finding_json(const Finding& f) {
  return {{"x", f.position.x}, {"y", f.position.y}, {"kind", f.kind}, {"detail", f.detail}};
}

nlohmann::ordered_json report_json(const Report& r, bool include_timing) {
  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  for (const Bound& b : r.bounds) bounds[b.name] = b.value;
  nlohmann::ordered_json counterexamples = nlohmann::ordered_json::array();
  for (const Finding& f : r.counterexamples) counterexamples.push_back(finding_json(f));
  nlohmann::ordered_json notes = nlohmann::ordered_json::array();
  for (const Finding& f : r.notes) notes.push_back(finding_json(f));

  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["bounds"] = std::move(bounds);
  j["status"] = status_name(r.status);
  j["checked"] = r.checked;
  j["counterexamples"] = std::move(counterexamples);
  j["notes"] = std::move(notes);
  if (include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

}  // namespace

std::string to_json(const Report& report, bool include_timing) {
  return report_json(report, include_timing).dump(2);
}

std::string to_json(const std::vector<Report>& reports, bool include_timing) {
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const Report& r : reports) all.push_back(report_json(r, include_timing));
  return all.dump(2);
}

std::string to_text(const Report& report, bool include_timing) {
  std::ostringstream out;
  out << "[" << status_name(report.status) << "] " << report.claim << " (";
  for (std::size_t i = 0; i < report.bounds.size(); ++i) {
    if (i) out << ", ";
    out << report.bounds[i].name << "=" << report.bounds[i].value;
  }
  out << ") checked=" << report.checked;
  if (include_timing) out << " elapsed_ms=" << report.elapsed.count();
  out << "\n";
  for (const Finding& f : report.counterexamples) {
    out << "  counterexample " << pair_text(f.position) << " " << f.kind << ": " << f.detail
        << "\n";
  }
  for (const Finding& f : report.notes) {
    out << "  note " << pair_text(f.position) << " " << f.kind << ": " << f.detail << "\n";
  }
  return out.str();
}

}  // namespace coinslide::verify
