#pragma once

// Exact optimal weighing counts by adversarial search.
//
// Coins that carry the same hypotheses are interchangeable, so a knowledge
// state collapses to four counts: coins that may still be the alternator in
// either state (fr), only acting fake next (f), only acting real next (r), and
// coins proven real (x). The search never consults the Jacobsthal
// construction; the admissible-string count is used only as a pruning bound.

#include <compare>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "alternator/jacobsthal.hpp"
#include "alternator/model.hpp"
#include "alternator/strategy.hpp"

namespace alternator {

struct ClassCounts {
  int fr = 0;
  int f = 0;
  int r = 0;
  int x = 0;

  int total() const { return fr + f + r + x; }
  int candidates() const { return fr + f + r; }
  int hypotheses() const { return 2 * fr + f + r; }

  auto operator<=>(const ClassCounts&) const = default;
};

// Coins of each class on one pan.
struct PanLoad {
  int fr = 0;
  int f = 0;
  int r = 0;
  int x = 0;

  int size() const { return fr + f + r + x; }
  auto operator<=>(const PanLoad&) const = default;
};

struct Move {
  PanLoad left;
  PanLoad right;

  auto operator<=>(const Move&) const = default;
};

ClassCounts initial_class_counts(int n_coins, InitialState state);
ClassCounts class_counts_of(const KnowledgeState& knowledge);

// Throws std::invalid_argument unless both pans hold the same positive number
// of coins and no class is over-drawn.
void validate_move(const ClassCounts& counts, const Move& move);

// Counts after observing `outcome`, or nullopt when no hypothesis predicts it.
//   E: weighed fr -> f, weighed f -> x, weighed r -> f, the rest unchanged.
//   L: the left pan's fr and f coins become r, everything else x (R mirrors).
std::optional<ClassCounts> successor(const ClassCounts& counts, const Move& move,
                                     Outcome outcome);

// At most one coin can still be the alternator; its state may stay unknown.
bool is_terminal(const ClassCounts& counts);

// Smallest w for which the outcome strings of length w can still separate
// the remaining candidates: candidates <= J_{w+2}, and real-only coins (whose
// first outcome is always E) <= J_{w+1}.
WeighingsCount admissible_lower_bound(const ClassCounts& counts);

struct SearchOptions {
  // Allow coins proven real onto the pans as ballast.
  bool allow_ballast = true;
};

// Moves in ascending lexicographic order (left pan counts, then right),
// keeping only left >= right, at least one candidate on the scale, and
// ballast on at most one pan.
std::vector<Move> canonical_moves(const ClassCounts& counts,
                                  SearchOptions options = {});

// Lowest-indexed coins of each class fill the left pan, then the right.
Weighing embed_move(const KnowledgeState& knowledge, const Move& move);

// Depth-bounded minimax over class counts. Results are cached per state as a
// proven lower bound and a proven upper bound on its value; a state can
// recur along a path (e.g. two fake-only coins weighed against ballast), so
// every query carries a remaining budget. Not thread-safe.
class OptimalSearch {
 public:
  explicit OptimalSearch(SearchOptions options = {});

  // Can `counts` be resolved in at most `budget` more weighings?
  bool solvable(const ClassCounts& counts, WeighingsCount budget);

  // Exact minimax value, or nullopt when it exceeds `budget`.
  std::optional<WeighingsCount> value(const ClassCounts& counts,
                                      WeighingsCount budget);

  // First canonical move whose every possible outcome is solvable within
  // budget - 1.
  std::optional<Move> first_move_within(const ClassCounts& counts,
                                        WeighingsCount budget);

  // Materializes an optimal policy from `knowledge`; nullopt past budget.
  std::optional<StrategyNode> extract(const KnowledgeState& knowledge,
                                      WeighingsCount budget);

  std::size_t cached_states() const { return memo_.size(); }

 private:
  struct Bounds {
    WeighingsCount lower;
    WeighingsCount upper;
  };

  Bounds& bounds_for(const ClassCounts& counts);

  SearchOptions options_;
  std::unordered_map<std::uint64_t, Bounds> memo_;
};

std::optional<WeighingsCount> optimal_weighings(int n_coins, InitialState state,
                                                WeighingsCount budget,
                                                SearchOptions options = {});

// An optimal tree built by following the search. nullopt when the optimum
// exceeds `budget`.
std::optional<StrategyTree> extract_optimal_tree(int n_coins, InitialState state,
                                                 WeighingsCount budget,
                                                 SearchOptions options = {});

}  // namespace alternator
