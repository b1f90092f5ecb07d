#include "alternator/verifier.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <thread>

namespace alternator {

namespace {

struct WorldRun {
  World world;
  std::optional<RunResult> result;
  std::string error;
};

WorldRun play(const StrategyTree& tree, const World& world) {
  WorldRun run{world, std::nullopt, {}};
  try {
    run.result = run_strategy(tree, world);
  } catch (const UnsoundStrategy& e) {
    run.error = e.what();
  }
  return run;
}

std::vector<World> worlds_for(const StrategyTree& tree) {
  std::vector<World> worlds;
  for (CoinId coin = 0; coin < tree.n_coins; ++coin) {
    for (AlternatorState state : {AlternatorState::Fake, AlternatorState::Real}) {
      if (admits(tree.initial_state, state)) {
        worlds.push_back({tree.n_coins, coin, state});
      }
    }
  }
  return worlds;
}

std::vector<WorldRun> play_all(const StrategyTree& tree,
                               const std::vector<World>& worlds, int threads) {
  std::vector<WorldRun> runs(worlds.size());
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || worlds.size() < 2) {
    for (std::size_t i = 0; i < worlds.size(); ++i) runs[i] = play(tree, worlds[i]);
    return runs;
  }
  // Each worker owns a strided slice of `runs`; results land in world order.
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < worlds.size(); i += workers) {
        runs[i] = play(tree, worlds[i]);
      }
    });
  }
  pool.clear();
  return runs;
}

bool same_transcript(const RunResult& a, const RunResult& b) {
  if (a.identified != b.identified || a.transcript.size() != b.transcript.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.transcript.size(); ++i) {
    if (a.transcript[i].outcome != b.transcript[i].outcome ||
        !(a.transcript[i].weighing == b.transcript[i].weighing)) {
      return false;
    }
  }
  return true;
}

struct PathStep {
  const Weighing* weighing;
  Outcome outcome;
};

std::string letters(const std::vector<PathStep>& path) {
  std::string out;
  for (const auto& step : path) out.push_back(to_char(step.outcome));
  return out;
}

// First start world whose play follows `path`.
std::optional<World> world_following(const std::vector<World>& starts,
                                     const std::vector<PathStep>& path) {
  for (const World& start : starts) {
    World current = start;
    bool follows = true;
    for (const auto& step : path) {
      const auto [outcome, next] = weigh(current, *step.weighing);
      if (outcome != step.outcome) {
        follows = false;
        break;
      }
      current = next;
    }
    if (follows) return start;
  }
  return std::nullopt;
}

// Every unreachable marker must be reached with an empty knowledge state.
void check_unreachable(const StrategyNode& node, const KnowledgeState& knowledge,
                       const std::vector<World>& starts,
                       std::vector<PathStep>& path,
                       std::vector<VerificationFailure>& failures) {
  if (node.is_leaf() || knowledge.empty()) return;
  if (node.is_unreachable()) {
    const auto witness = world_following(starts, path);
    failures.push_back(
        {witness.value_or(World{knowledge.n_coins(), -1, AlternatorState::Fake}),
         "unreachable marker after '" + letters(path) + "' still admits " +
             std::to_string(knowledge.size()) + " hypothesis(es)"});
    return;
  }
  for (Outcome outcome : kAllOutcomes) {
    path.push_back({&node.weighing(), outcome});
    check_unreachable(node.child(outcome),
                      update_knowledge(knowledge, node.weighing(), outcome),
                      starts, path, failures);
    path.pop_back();
  }
}

}  // namespace

VerificationReport verify(const StrategyTree& tree, VerifyOptions options) {
  validate_tree(tree);

  VerificationReport report;
  const std::vector<World> worlds = worlds_for(tree);
  const std::vector<WorldRun> runs = play_all(tree, worlds, options.threads);

  for (std::size_t i = 0; i < runs.size(); ++i) {
    const WorldRun& run = runs[i];
    // Unknown start: (i, f) is followed by (i, r). A coin that never reaches a
    // pan gives the same transcript either way and counts once.
    const bool duplicate =
        tree.initial_state == InitialState::Unknown &&
        run.world.state == AlternatorState::Real && i > 0 && run.result &&
        runs[i - 1].result && same_transcript(*run.result, *runs[i - 1].result);
    if (!duplicate) ++report.worlds_checked;

    if (!run.result) {
      report.failures.push_back({run.world, run.error});
      continue;
    }
    const auto& transcript = run.result->transcript;
    report.max_depth = std::max<WeighingsCount>(
        report.max_depth, static_cast<WeighingsCount>(transcript.size()));
    const std::string outcomes = outcome_string(transcript);
    if (run.result->identified != run.world.alternator) {
      report.failures.push_back(
          {run.world, "identified coin " + std::to_string(run.result->identified) +
                          " after '" + outcomes + "'"});
    }
    if (!is_admissible_string(outcomes)) {
      report.path_string_violations.push_back({run.world, outcomes});
    }
  }

  std::vector<VerificationFailure> unreachable_failures;
  std::vector<PathStep> path;
  check_unreachable(tree.root,
                    initial_knowledge(tree.n_coins, tree.initial_state), worlds,
                    path, unreachable_failures);
  for (auto& failure : unreachable_failures) {
    const bool already_reported =
        std::any_of(report.failures.begin(), report.failures.end(),
                    [&](const VerificationFailure& f) { return f.world == failure.world; });
    if (!already_reported) report.failures.push_back(std::move(failure));
  }

  report.valid = report.failures.empty() && report.path_string_violations.empty();
  return report;
}

bool verify_against_bound(const StrategyTree& tree) {
  const VerificationReport report = verify(tree);
  return report.valid &&
         report.max_depth <= min_weighings_bound(tree.n_coins, tree.initial_state);
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  out << "valid: " << (report.valid ? "yes" : "no") << '\n'
      << "max depth: " << report.max_depth << '\n'
      << "worlds checked: " << report.worlds_checked << '\n';
  for (const auto& f : report.failures) {
    out << "failure: alternator " << f.world.alternator << " starting "
        << to_char(f.world.state) << ": " << f.description << '\n';
  }
  for (const auto& v : report.path_string_violations) {
    out << "adjacent light outcomes: alternator " << v.world.alternator
        << " starting " << to_char(v.world.state) << ": '" << v.outcomes
        << "'\n";
  }
  return out.str();
}

}  // namespace alternator
