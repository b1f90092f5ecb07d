// Command-line front end: bounds tables, strategy construction and export,
// exhaustive verification, simulation, optimal search, outcome strings.
//
// Exit codes: 0 success, 1 verification or search failure, 2 usage or
// malformed input.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "alternator/jacobsthal.hpp"
#include "alternator/model.hpp"
#include "alternator/search.hpp"
#include "alternator/strategy.hpp"
#include "alternator/tree_io.hpp"
#include "alternator/verifier.hpp"

namespace {

using namespace alternator;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

constexpr const char* kIndexNote =
    "Coins are numbered from 0: a weighing written \"coins 1, 2 versus 3, 4\" "
    "in 1-based prose is {0,1} v {2,3} here.";

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitUsage;
}

std::string trivial_column(int n, InitialState state) {
  if (n < 2) return "-";
  const auto range = trivial_bounds(n, state);
  return std::to_string(range.lower) + ".." + std::to_string(range.upper);
}

int run_bounds(int from, int to) {
  if (from < 1 || to < from) {
    return usage_error("need 1 <= --from <= --to");
  }
  std::cout << std::setw(8) << "N" << std::setw(4) << "f" << std::setw(4) << "r"
            << std::setw(4) << "a" << std::setw(11) << "trivial_f"
            << std::setw(12) << "trivial_ar" << "  interval\n";
  for (int n = from; n <= to; ++n) {
    const int f = min_weighings_bound(n, InitialState::Fake);
    const int r = min_weighings_bound(n, InitialState::Real);
    const int a = min_weighings_bound(n, InitialState::Unknown);
    std::ostringstream interval;
    interval << "J_" << a << "=" << jacobsthal(a) << " < N <= J_" << a + 1
             << "=" << jacobsthal(a + 1);
    std::cout << std::setw(8) << n << std::setw(4) << f << std::setw(4) << r
              << std::setw(4) << a << std::setw(11)
              << trivial_column(n, InitialState::Fake) << std::setw(12)
              << trivial_column(n, InitialState::Unknown) << "  "
              << interval.str() << '\n';
  }
  return kExitOk;
}

int run_build(int coins, const std::string& state_text, const std::string& out) {
  if (coins < 1) return usage_error("--coins must be at least 1");
  const StrategyTree tree = build_strategy(coins, parse_initial_state(state_text));
  if (out.empty() || out == "-") {
    std::cout << serialize_tree(tree);
    return kExitOk;
  }
  try {
    write_tree_file(out, tree);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  std::cout << "wrote " << out << " (" << coins << " coins, state "
            << state_text << ", depth " << depth(tree) << ")\n";
  return kExitOk;
}

int run_verify(const std::string& path, int threads) {
  const StrategyTree tree = read_tree_file(path);
  const VerificationReport report = verify(tree, {threads});
  const int bound = min_weighings_bound(tree.n_coins, tree.initial_state);
  std::cout << "tree: " << tree.n_coins << " coins, start state "
            << to_char(tree.initial_state) << '\n'
            << format_report(report) << "lower bound: " << bound
            << (report.valid && report.max_depth <= bound ? " (met)\n" : "\n");
  return report.valid ? kExitOk : kExitFailed;
}

int run_simulate(const std::string& path, int alternator, const std::string& start) {
  const StrategyTree tree = read_tree_file(path);
  if (alternator < 0 || alternator >= tree.n_coins) {
    return usage_error("--alternator must lie in [0, " +
                       std::to_string(tree.n_coins) + ")");
  }
  const AlternatorState state =
      start == "f" ? AlternatorState::Fake : AlternatorState::Real;
  if (!admits(tree.initial_state, state)) {
    return usage_error(std::string("tree was built for start state '") +
                       to_char(tree.initial_state) + "', not '" + start + "'");
  }

  std::cout << "alternator " << alternator << " starts " << start << '\n';
  RunResult result;
  try {
    result = run_strategy(tree, World{tree.n_coins, alternator, state});
  } catch (const UnsoundStrategy& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  int index = 1;
  for (const auto& step : result.transcript) {
    std::cout << index++ << ". " << describe(step.weighing) << " -> "
              << to_char(step.outcome) << "  (alternator now "
              << to_char(step.state_after) << ")\n";
  }
  std::cout << "alternator: " << result.identified << '\n';
  return result.identified == alternator ? kExitOk : kExitFailed;
}

int run_search(int coins, const std::string& state_text, int budget,
               int max_coins, bool no_ballast, const std::string& emit_tree) {
  if (coins < 1) return usage_error("--coins must be at least 1");
  if (coins > max_coins) {
    return usage_error("--coins " + std::to_string(coins) +
                       " exceeds the search maximum of " +
                       std::to_string(max_coins) +
                       "; raise --max-coins to accept the longer runtime");
  }
  if (budget < 0 || budget > 10) return usage_error("--budget must lie in [0, 10]");

  const InitialState state = parse_initial_state(state_text);
  const SearchOptions options{!no_ballast};
  const int bound = min_weighings_bound(coins, state);
  const auto optimum = optimal_weighings(coins, state, budget, options);
  if (!optimum) {
    std::cout << "no strategy within " << budget << " weighings (bound: "
              << bound << ")\n";
    return kExitFailed;
  }
  std::cout << *optimum
            << (*optimum == bound ? " (matches bound)"
                                  : " (bound is " + std::to_string(bound) + ")")
            << '\n';
  if (!emit_tree.empty()) {
    const auto tree = extract_optimal_tree(coins, state, budget, options);
    try {
      write_tree_file(emit_tree, *tree);
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitFailed;
    }
    std::cout << "wrote " << emit_tree << '\n';
  }
  return kExitOk;
}

int run_strings(int length) {
  if (length < 0 || length > 12) return usage_error("--length must lie in [0, 12]");
  const auto strings = enumerate_admissible_strings(length);
  std::cout << strings.size() << '\n';
  for (const auto& s : strings) std::cout << s << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Find the alternator coin: strategies, verification and bounds"};
  app.footer(kIndexNote);
  app.require_subcommand(1);

  int from = 1;
  int to = 20;
  auto* bounds = app.add_subcommand("bounds", "Print f(N), r(N), a(N) and bounds");
  bounds->add_option("--from", from, "First N")->required();
  bounds->add_option("--to", to, "Last N")->required();

  int coins = 0;
  std::string state = "a";
  std::string out;
  auto* build = app.add_subcommand("build", "Write the Jacobsthal strategy tree");
  build->add_option("--coins", coins, "Number of coins")->required();
  build->add_option("--state", state, "Start state")
      ->check(CLI::IsMember({"f", "r", "a"}));
  build->add_option("--out", out, "Output path (stdout when omitted)");
  build->footer(kIndexNote);

  std::string tree_path;
  int threads = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively verify a tree");
  verify_cmd->add_option("path", tree_path, "Tree document")->required();
  verify_cmd->add_option("--threads", threads, "Worker threads")
      ->check(CLI::Range(1, 256));

  int alternator_id = 0;
  std::string start = "f";
  auto* simulate = app.add_subcommand("simulate", "Play a tree against one world");
  simulate->add_option("path", tree_path, "Tree document")->required();
  simulate->add_option("--alternator", alternator_id, "Alternator coin id")
      ->required();
  simulate->add_option("--start", start, "Alternator start state")
      ->required()
      ->check(CLI::IsMember({"f", "r"}));
  simulate->footer(kIndexNote);

  int budget = 8;
  int max_coins = 15;
  bool no_ballast = false;
  std::string emit_tree;
  auto* search = app.add_subcommand("search", "Exact optimum by minimax search");
  search->add_option("--coins", coins, "Number of coins")->required();
  search->add_option("--state", state, "Start state")
      ->required()
      ->check(CLI::IsMember({"f", "r", "a"}));
  search->add_option("--budget", budget, "Maximum weighings to search")
      ->required();
  search->add_option("--emit-tree", emit_tree, "Write the optimal tree here");
  search->add_option("--max-coins", max_coins,
                     "Largest N accepted (runtime grows quickly)");
  search->add_flag("--no-ballast", no_ballast,
                   "Never put coins proven real on the pans");

  int length = 0;
  auto* strings = app.add_subcommand("strings", "List admissible outcome strings");
  strings->add_option("--length", length, "String length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bounds) return run_bounds(from, to);
    if (*build) return run_build(coins, state, out);
    if (*verify_cmd) return run_verify(tree_path, threads);
    if (*simulate) return run_simulate(tree_path, alternator_id, start);
    if (*search) {
      return run_search(coins, state, budget, max_coins, no_ballast, emit_tree);
    }
    if (*strings) return run_strings(length);
  } catch (const TreeFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
