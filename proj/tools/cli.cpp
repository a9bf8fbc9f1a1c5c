#include "cli.hpp"

#include <pthread.h>
#include <signal.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "coinslide/errors.hpp"
#include "coinslide/grundy.hpp"
#include "coinslide/notation.hpp"
#include "coinslide/service.hpp"
#include "coinslide/sumgame.hpp"
#include "coinslide/verify.hpp"

namespace coinslide::cli {

namespace {

constexpr const char* kArrow = " → ";

// Above this the brute-force oracle gets slow enough that `grundy` skips it
// unless asked explicitly.
constexpr Square kDefaultOracleLimit = 400;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// --------------------------------------------------------------------- grundy

struct GrundyArgs {
  Square x = 0;
  Square y = 0;
  bool force_oracle = false;
  bool skip_oracle = false;
  std::string format = "text";
};

int cmd_grundy(const GrundyArgs& a, Io io) {
  if (a.x == a.y) {
    io.err << "error: coins must be on distinct squares\n";
    return kUsage;
  }
  const Square x = std::min(a.x, a.y);
  const Square y = std::max(a.x, a.y);
  const GrundyClass c = classify(x, y);

  const bool run_oracle = !a.skip_oracle && (a.force_oracle || y <= kDefaultOracleLimit);
  std::optional<Grundy> oracle;
  if (run_oracle) oracle = grundy_bruteforce(StrapState::two(x, y), RuleVariant::PushOnlyRemoval);
  const bool agree = !oracle || *oracle == c.value;

  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["x"] = x;
    j["y"] = y;
    j["grundy"] = c.value;
    j["families"] = nlohmann::ordered_json::array();
    for (const Witness& w : c.witnesses) j["families"].push_back(family_number(w.family));
    j["oracle"] = oracle ? nlohmann::ordered_json(*oracle) : nlohmann::ordered_json(nullptr);
    j["agree"] = agree;
    io.out << j.dump() << "\n";
  } else {
    io.out << "G=" << c.value << " families=" << c.families_joined(',') << " oracle="
           << (oracle ? std::to_string(*oracle) : std::string("skipped")) << " "
           << (agree ? "OK" : "MISMATCH") << "\n";
  }
  return agree ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------- table

struct TableArgs {
  Square max = 20;
  std::string format = "csv";
  std::string output;
};

void write_table(const TableArgs& a, std::ostream& out) {
  if (a.format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Square x = 0; x < a.max; ++x) {
      for (Square y = x + 1; y <= a.max; ++y) {
        const GrundyClass c = classify(x, y);
        nlohmann::ordered_json row;
        row["x"] = x;
        row["y"] = y;
        row["grundy"] = c.value;
        row["families"] = nlohmann::ordered_json::array();
        for (const Witness& w : c.witnesses) row["families"].push_back(family_number(w.family));
        rows.push_back(std::move(row));
      }
    }
    out << rows.dump() << "\n";
    return;
  }
  out << "x,y,grundy,families\n";
  for (Square x = 0; x < a.max; ++x) {
    for (Square y = x + 1; y <= a.max; ++y) {
      const GrundyClass c = classify(x, y);
      out << x << ',' << y << ',' << c.value << ',' << c.families_joined('+') << '\n';
    }
  }
}

int cmd_table(const TableArgs& a, Io io) {
  if (a.output.empty() || a.output == "-") {
    write_table(a, io.out);
    return kOk;
  }
  std::ofstream file(a.output, std::ios::binary);
  if (!file) {
    io.err << "error: cannot write " << a.output << "\n";
    return kIoError;
  }
  write_table(a, file);
  file.flush();
  if (!file) {
    io.err << "error: write to " << a.output << " failed\n";
    return kIoError;
  }
  return kOk;
}

// --------------------------------------------------------------------- verify

struct VerifyArgs {
  Square max = 300;
  std::optional<Square> mex_max;
  std::optional<Square> variant_max;
  std::optional<Square> lemma1_max_y;
  std::uint32_t m_max = 50;
  std::optional<Grundy> n_max;
  std::vector<std::string> checks;
  std::vector<int> lemmas;
  std::vector<int> theorems;
  bool timing = false;
  std::string format = "text";
};

const std::vector<std::string> kAllChecks = {
    "theorem-2", "classifier-consistency", "lemma-1", "lemma-2",
    "mex-reach", "n-positions",            "variant-equivalence"};

int cmd_verify(const VerifyArgs& a, Io io) {
  std::set<std::string> selected(a.checks.begin(), a.checks.end());
  for (int lemma : a.lemmas) {
    if (lemma == 1) {
      selected.insert("lemma-1");
    } else if (lemma == 2) {
      selected.insert("lemma-2");
    } else {
      // The reachability lemmas are covered by the mex check.
      selected.insert("mex-reach");
    }
  }
  for (int theorem : a.theorems) {
    if (theorem == 2) selected.insert("theorem-2");
  }
  if (selected.empty()) selected.insert(kAllChecks.begin(), kAllChecks.end());

  std::vector<verify::Report> reports;
  for (const std::string& name : kAllChecks) {
    if (!selected.contains(name)) continue;
    if (name == "theorem-2") {
      reports.push_back(verify::check_theorem2(a.max));
    } else if (name == "classifier-consistency") {
      reports.push_back(verify::check_classifier(a.max));
    } else if (name == "lemma-1") {
      for (auto& r : verify::check_lemma1(a.m_max, a.lemma1_max_y.value_or(a.max), a.n_max)) {
        reports.push_back(std::move(r));
      }
    } else if (name == "lemma-2") {
      reports.push_back(verify::check_lemma2(a.m_max));
    } else if (name == "mex-reach") {
      reports.push_back(verify::check_mex_reachability(a.mex_max.value_or(std::min<Square>(a.max, 120))));
    } else if (name == "n-positions") {
      reports.push_back(verify::check_n_positions(a.max));
    } else if (name == "variant-equivalence") {
      reports.push_back(
          verify::check_variant_equivalence(a.variant_max.value_or(std::min<Square>(a.max, 150))));
    }
  }

  std::size_t failed = 0;
  std::size_t noted = 0;
  for (const auto& r : reports) {
    failed += r.status == verify::Status::Fail;
    noted += r.status == verify::Status::PassWithNotes;
  }

  if (a.format == "json") {
    io.out << verify::to_json(reports, a.timing) << "\n";
  } else {
    for (const auto& r : reports) io.out << verify::to_text(r, a.timing);
    io.out << reports.size() << " checks: " << reports.size() - failed - noted << " pass, "
           << noted << " pass-with-notes, " << failed << " fail\n";
  }
  return failed ? kCheckFailed : kOk;
}

// ------------------------------------------------------------------ best-move

std::string describe(const SumTransition& t) {
  return format_move(t.move) + kArrow + format_sum(t.result);
}

int cmd_best_move(const std::string& position_text, const std::string& format, RuleVariant v,
                  Io io) {
  const SumState s = parse_sum(position_text);
  const auto wins = winning_moves(s, v);
  const Grundy value = sum_grundy(s, v);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["position"] = format_sum(s);
    j["grundyLeft"] = grundy_closed_form(s.left, v);
    j["grundyRight"] = grundy_closed_form(s.right, v);
    j["nimSum"] = value;
    j["outcome"] = value == 0 ? "P" : "N";
    j["winningMoves"] = nlohmann::ordered_json::array();
    for (const auto& t : wins) {
      j["winningMoves"].push_back({{"move", format_move(t.move)}, {"position", format_sum(t.result)}});
    }
    io.out << j.dump() << "\n";
    return kOk;
  }

  if (wins.empty()) {
    io.out << "P-position; no winning move\n";
    return kOk;
  }
  io.out << "N-position; winning: ";
  for (std::size_t i = 0; i < wins.size(); ++i) {
    if (i) io.out << ", ";
    io.out << describe(wins[i]);
  }
  io.out << "\n";
  return kOk;
}

// ----------------------------------------------------------------------- play

constexpr const char* kMoveHelp =
    "moves: <left|right> slide <left|right|lone> <to>\n"
    "       <left|right> push <depth>\n"
    "       <left|right> remove            (variant B only)\n"
    "other: moves (list legal moves), help, quit\n";

int cmd_play(const std::string& position_text, const std::string& first, RuleVariant v, Io io) {
  SumState s = parse_sum(position_text);
  bool human_to_move = first == "human";
  io.out << "Position " << format_sum(s) << ", variant " << variant_letter(v) << ", "
         << (human_to_move ? "you move first" : "engine moves first") << "\n";

  for (;;) {
    if (sum_successors(s, v).empty()) {
      if (human_to_move) {
        io.out << "No moves left for you. The engine made the last move and wins.\n";
      } else {
        io.out << "No moves left for the engine. You made the last move and win.\n";
      }
      return kOk;
    }

    if (!human_to_move) {
      const auto reply = engine_move(s, v);
      io.out << "Engine: " << describe(*reply) << "\n";
      s = reply->result;
      human_to_move = true;
      continue;
    }

    io.out << "[" << format_sum(s) << "] your move> " << std::flush;
    std::string line;
    if (!std::getline(io.in, line)) {
      io.out << "\nGame abandoned.\n";
      return kOk;
    }
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();

    if (line == "quit" || line == "exit") {
      io.out << "Game abandoned.\n";
      return kOk;
    }
    if (line == "help") {
      io.out << kMoveHelp;
      continue;
    }
    if (line == "moves") {
      for (const auto& t : sum_successors(s, v)) io.out << "  " << describe(t) << "\n";
      continue;
    }
    try {
      const SumMove move = parse_move(line);
      s = apply(s, move, v);
      io.out << "You: " << format_move(move) << kArrow << format_sum(s) << "\n";
      human_to_move = false;
    } catch (const ParseError& e) {
      io.out << "Cannot parse move: " << e.what() << "\n" << kMoveHelp;
    } catch (const IllegalMove& e) {
      io.out << "Illegal move (" << e.code() << "): " << e.what() << "\n";
    }
  }
}

// ------------------------------------------------------------------- selfplay

struct SelfplayArgs {
  int games = 100;
  std::uint64_t seed = 0;
  Square max = 40;
  std::string format = "text";
};

StrapState sample_pair(std::mt19937_64& rng, Square max) {
  std::uniform_int_distribution<Square> coord(0, max);
  for (;;) {
    const Square a = coord(rng);
    const Square b = coord(rng);
    if (a != b) return StrapState::two(std::min(a, b), std::max(a, b));
  }
}

int cmd_selfplay(const SelfplayArgs& a, RuleVariant v, Io io) {
  if (a.max < 1) {
    io.err << "error: --max must be at least 1\n";
    return kUsage;
  }
  std::mt19937_64 rng(a.seed);
  int wins = 0;
  std::uint64_t skipped = 0;
  std::uint64_t total_plies = 0;
  std::vector<std::string> losses;
  for (int game = 0; game < a.games; ++game) {
    SumState start;
    do {
      start = {sample_pair(rng, a.max), sample_pair(rng, a.max)};
      if (outcome(start, v) == Outcome::PPosition) ++skipped;
    } while (outcome(start, v) == Outcome::PPosition);

    SumState s = start;
    std::uint64_t plies = 0;
    while (auto m = engine_move(s, v)) {
      s = m->result;
      ++plies;
    }
    total_plies += plies;
    if (plies % 2 == 1) {
      ++wins;
    } else {
      losses.push_back(format_sum(start));
    }
  }

  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["games"] = a.games;
    j["seed"] = a.seed;
    j["max"] = a.max;
    j["firstPlayerWins"] = wins;
    j["skippedPPositions"] = skipped;
    j["totalPlies"] = total_plies;
    j["losses"] = losses;
    io.out << j.dump() << "\n";
  } else {
    io.out << "N-positions: " << wins << "/" << a.games << " first-player wins\n";
    for (const auto& l : losses) io.out << "  first player lost from " << l << "\n";
  }
  return losses.empty() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------- serve

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
};

int cmd_serve(const ServeArgs& a, Io io) {
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  service::Server server({a.host, a.port, a.static_dir});
  int port = 0;
  try {
    port = server.bind();
  } catch (const std::exception& e) {
    pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
    io.err << "error: " << e.what() << "\n";
    return kIoError;
  }
  io.out << "listening on http://" << a.host << ":" << port << "\n" << std::flush;

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  server.run();
  waiter.join();
  io.out << "stopped\n";
  return kOk;
}

std::optional<RuleVariant> variant_from_env(std::ostream& err) {
  const char* env = std::getenv("COINSLIDE_VARIANT");
  if (!env || !*env) return RuleVariant::PushOnlyRemoval;
  try {
    return parse_variant(env);
  } catch (const ParseError&) {
    err << "error: COINSLIDE_VARIANT must be A or B\n";
    return std::nullopt;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io{in, out, err};
  const auto env_variant = variant_from_env(err);
  if (!env_variant) return kUsage;

  CLI::App app{"coinslide: two-coin strap game solver, verifier and engine"};
  app.require_subcommand(1);
  std::string variant_text(1, variant_letter(*env_variant));
  app.add_option("--variant", variant_text, "Rule variant A (push-only removal) or B")
      ->check(CLI::IsMember({"A", "B", "a", "b"}))
      ->capture_default_str();

  GrundyArgs grundy;
  auto* grundy_cmd = app.add_subcommand("grundy", "Closed-form Grundy value of a two-coin strap");
  grundy_cmd->add_option("x", grundy.x, "Square of one coin")->required();
  grundy_cmd->add_option("y", grundy.y, "Square of the other coin")->required();
  grundy_cmd->add_flag("--oracle", grundy.force_oracle, "Always run the brute-force oracle");
  grundy_cmd->add_flag("--no-oracle", grundy.skip_oracle, "Skip the brute-force oracle");
  grundy_cmd->add_option("--format", grundy.format)->check(CLI::IsMember({"text", "json"}));

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Grundy table for all 0 <= x < y <= max");
  table_cmd->add_option("--max", table.max, "Largest square")->capture_default_str();
  table_cmd->add_option("--format", table.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table_cmd->add_option("-o,--output", table.output, "Output file (default stdout)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the bounded verification suite");
  verify_cmd->add_option("--max", verify_args.max, "Coordinate bound for value checks")
      ->capture_default_str();
  verify_cmd->add_option("--mex-max", verify_args.mex_max, "Bound for mex-reach (default min(max,120))");
  verify_cmd->add_option("--variant-max", verify_args.variant_max,
                         "Bound for variant-equivalence (default min(max,150))");
  verify_cmd->add_option("--lemma1-max-y", verify_args.lemma1_max_y,
                         "Coordinate bound for the explicit family sets (default max)");
  verify_cmd->add_option("--m-max", verify_args.m_max, "Largest m for the residue-case checks")
      ->capture_default_str();
  verify_cmd->add_option("--n-max", verify_args.n_max, "Largest value for the explicit family sets");
  verify_cmd->add_option("--check", verify_args.checks, "Run only these checks")
      ->check(CLI::IsMember(kAllChecks));
  verify_cmd->add_option("--lemma", verify_args.lemmas, "Select by lemma number (1-6)")
      ->check(CLI::Range(1, 6));
  verify_cmd->add_option("--theorem", verify_args.theorems, "Select by theorem number (2)")
      ->check(CLI::Range(2, 2));
  verify_cmd->add_flag("--timing", verify_args.timing, "Include elapsed times (not byte-stable)");
  verify_cmd->add_option("--format", verify_args.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string best_position;
  std::string best_format = "text";
  auto* best_cmd = app.add_subcommand("best-move", "Outcome and all winning moves of a position");
  best_cmd->add_option("position", best_position, "Sum position, e.g. \"0,1|1,2\"")->required();
  best_cmd->add_option("--format", best_format)->check(CLI::IsMember({"text", "json"}));

  std::string play_position;
  std::string play_first = "human";
  auto* play_cmd = app.add_subcommand("play", std::string("Play against the engine\n") + kMoveHelp);
  play_cmd->add_option("position", play_position, "Starting position, e.g. \"0,3|2,5\"")->required();
  play_cmd->add_option("--first", play_first, "Who moves first")
      ->check(CLI::IsMember({"human", "engine"}))
      ->capture_default_str();

  SelfplayArgs selfplay;
  auto* selfplay_cmd = app.add_subcommand("selfplay", "Engine-vs-engine from random N-positions");
  selfplay_cmd->add_option("--games", selfplay.games)->check(CLI::NonNegativeNumber)->capture_default_str();
  selfplay_cmd->add_option("--seed", selfplay.seed)->capture_default_str();
  selfplay_cmd->add_option("--max", selfplay.max, "Largest starting square")->capture_default_str();
  selfplay_cmd->add_option("--format", selfplay.format)->check(CLI::IsMember({"text", "json"}));

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the JSON API (and optional static UI)");
  serve_cmd->add_option("--port", serve.port)->check(CLI::Range(1, 65535))->capture_default_str();
  serve_cmd->add_option("--host", serve.host)->capture_default_str();
  serve_cmd->add_option("--static", serve.static_dir, "Directory of web assets served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const RuleVariant variant = parse_variant(variant_text);
    if (*grundy_cmd) return cmd_grundy(grundy, io);
    if (*table_cmd) return cmd_table(table, io);
    if (*verify_cmd) return cmd_verify(verify_args, io);
    if (*best_cmd) return cmd_best_move(best_position, best_format, variant, io);
    if (*play_cmd) return cmd_play(play_position, play_first, variant, io);
    if (*selfplay_cmd) return cmd_selfplay(selfplay, variant, io);
    if (*serve_cmd) return cmd_serve(serve, io);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ClassificationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace coinslide::cli
