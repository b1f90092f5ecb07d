#pragma once

// Ternary decision trees for finding the alternator, and the recursive
// Jacobsthal construction that meets the lower bound for every N.

#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "alternator/jacobsthal.hpp"
#include "alternator/model.hpp"

namespace alternator {

class StrategyNode {
 public:
  struct Leaf {
    CoinId alternator = 0;
    bool operator==(const Leaf&) const = default;
  };
  struct Unreachable {
    bool operator==(const Unreachable&) const = default;
  };
  struct Branch {
    Weighing weighing;
    std::vector<StrategyNode> children;  // indexed by Outcome: E, L, R
    bool operator==(const Branch&) const;
  };

  StrategyNode() : node_(Unreachable{}) {}

  static StrategyNode leaf(CoinId alternator);
  static StrategyNode unreachable();
  static StrategyNode weigh(Weighing weighing, StrategyNode on_equal,
                            StrategyNode on_left_light,
                            StrategyNode on_right_light);

  bool is_leaf() const { return std::holds_alternative<Leaf>(node_); }
  bool is_unreachable() const {
    return std::holds_alternative<Unreachable>(node_);
  }
  bool is_branch() const { return std::holds_alternative<Branch>(node_); }

  // Precondition: is_leaf().
  CoinId coin() const { return std::get<Leaf>(node_).alternator; }
  // Precondition: is_branch().
  const Weighing& weighing() const { return std::get<Branch>(node_).weighing; }
  const StrategyNode& child(Outcome outcome) const;
  StrategyNode& child(Outcome outcome);

  // Follows `path` from this node. Throws std::out_of_range when the path
  // walks through a leaf or an unreachable marker.
  const StrategyNode& at(std::span<const Outcome> path) const;
  StrategyNode& at(std::span<const Outcome> path);

  bool operator==(const StrategyNode&) const = default;

 private:
  std::variant<Branch, Leaf, Unreachable> node_;
};

struct StrategyTree {
  int n_coins = 1;
  InitialState initial_state = InitialState::Unknown;
  StrategyNode root;

  bool operator==(const StrategyTree&) const = default;
};

// Throws std::invalid_argument on an invalid weighing or an out-of-range
// leaf anywhere in the tree.
void validate_tree(const StrategyTree& tree);

// The recursive Jacobsthal strategy. Pans always take the lowest-indexed
// candidates; a set-aside coin is the highest-indexed one.
//   fake start:  weigh J_{k-1} v J_{k-1} (J_k < n <= J_{k+1}); a light pan
//                holds the alternator, now acting real; a balance leaves it
//                among the rest, still fake.
//   real start:  weigh everything (minus one coin when n is odd); the scale
//                must balance and every weighed coin now acts fake.
//   unknown:     the same first weighing; a light pan is recursed on as real,
//                a balance as fake.
// Throws std::invalid_argument for n_coins < 1.
StrategyTree build_strategy(int n_coins, InitialState state);

// Longest root-to-leaf path in weighings; unreachable markers do not count.
WeighingsCount depth(const StrategyTree& tree);
WeighingsCount depth(const StrategyNode& node);

// Raised when a run reaches an unreachable marker.
class UnsoundStrategy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TranscriptStep {
  Weighing weighing;
  Outcome outcome;
  AlternatorState state_after;  // alternator's state after this weighing
};

struct RunResult {
  CoinId identified = 0;
  std::vector<TranscriptStep> transcript;
};

std::string outcome_string(const std::vector<TranscriptStep>& transcript);

// Plays `tree` against `world`. Throws std::invalid_argument if the world
// does not fit the tree (coin count, or a start state the tree does not
// allow) and UnsoundStrategy if the run hits an unreachable marker.
RunResult run_strategy(const StrategyTree& tree, const World& world);

bool admits(InitialState tree_state, AlternatorState world_state);

}  // namespace alternator
