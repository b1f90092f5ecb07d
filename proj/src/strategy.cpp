#include "alternator/strategy.hpp"

#include <algorithm>
#include <string>

namespace alternator {

bool StrategyNode::Branch::operator==(const Branch&) const = default;

StrategyNode StrategyNode::leaf(CoinId alternator) {
  StrategyNode node;
  node.node_ = Leaf{alternator};
  return node;
}

StrategyNode StrategyNode::unreachable() { return StrategyNode(); }

StrategyNode StrategyNode::weigh(Weighing weighing, StrategyNode on_equal,
                                 StrategyNode on_left_light,
                                 StrategyNode on_right_light) {
  Branch branch{std::move(weighing), {}};
  branch.children.reserve(3);
  branch.children.push_back(std::move(on_equal));
  branch.children.push_back(std::move(on_left_light));
  branch.children.push_back(std::move(on_right_light));
  StrategyNode node;
  node.node_ = std::move(branch);
  return node;
}

const StrategyNode& StrategyNode::child(Outcome outcome) const {
  return std::get<Branch>(node_).children[static_cast<std::size_t>(outcome)];
}

StrategyNode& StrategyNode::child(Outcome outcome) {
  return std::get<Branch>(node_).children[static_cast<std::size_t>(outcome)];
}

const StrategyNode& StrategyNode::at(std::span<const Outcome> path) const {
  const StrategyNode* node = this;
  for (Outcome outcome : path) {
    if (!node->is_branch()) throw std::out_of_range("path leaves the tree");
    node = &node->child(outcome);
  }
  return *node;
}

StrategyNode& StrategyNode::at(std::span<const Outcome> path) {
  return const_cast<StrategyNode&>(std::as_const(*this).at(path));
}

namespace {

void validate_node(const StrategyNode& node, int n_coins) {
  if (node.is_leaf()) {
    if (node.coin() < 0 || node.coin() >= n_coins) {
      throw std::invalid_argument("leaf names coin " +
                                  std::to_string(node.coin()) +
                                  " outside [0, " + std::to_string(n_coins) +
                                  ")");
    }
    return;
  }
  if (node.is_unreachable()) return;
  validate_weighing(node.weighing(), n_coins);
  for (Outcome outcome : kAllOutcomes) validate_node(node.child(outcome), n_coins);
}

using Coins = std::vector<CoinId>;

StrategyNode build_fake(const Coins& coins);
StrategyNode build_real(const Coins& coins);

// Weighs the first and second halves of `coins` (even size).
Weighing halves(const Coins& coins, std::size_t pan) {
  return {Coins(coins.begin(), coins.begin() + pan),
          Coins(coins.begin() + pan, coins.begin() + 2 * pan)};
}

// Walks the all-balanced path of a fake-state subtree over an even number of
// coins and replaces its terminal unreachable marker with the set-aside coin.
StrategyNode with_set_aside(StrategyNode subtree, CoinId set_aside) {
  StrategyNode* node = &subtree;
  while (node->is_branch()) node = &node->child(Outcome::Equal);
  if (!node->is_unreachable()) {
    throw std::logic_error("all-balanced path of an even fake-state subtree "
                           "must end unreachable");
  }
  *node = StrategyNode::leaf(set_aside);
  return subtree;
}

StrategyNode build_fake(const Coins& coins) {
  if (coins.empty()) return StrategyNode::unreachable();
  if (coins.size() == 1) return StrategyNode::leaf(coins.front());

  const auto split = jacobsthal_split(coins.size());
  const auto pan = static_cast<std::size_t>(split.pan_size);
  Weighing weighing = halves(coins, pan);
  const Coins rest(coins.begin() + 2 * pan, coins.end());
  StrategyNode on_left = build_real(weighing.left);
  StrategyNode on_right = build_real(weighing.right);
  return StrategyNode::weigh(std::move(weighing), build_fake(rest),
                             std::move(on_left), std::move(on_right));
}

StrategyNode build_real(const Coins& coins) {
  if (coins.empty()) return StrategyNode::unreachable();
  if (coins.size() == 1) return StrategyNode::leaf(coins.front());

  if (coins.size() % 2 == 1) {
    const Coins weighed(coins.begin(), coins.end() - 1);
    return with_set_aside(build_real(weighed), coins.back());
  }
  // A real-acting alternator cannot tip the scale; every weighed coin turns
  // fake-acting.
  return StrategyNode::weigh(halves(coins, coins.size() / 2), build_fake(coins),
                             StrategyNode::unreachable(),
                             StrategyNode::unreachable());
}

StrategyNode build_unknown(const Coins& coins) {
  if (coins.size() == 1) return StrategyNode::leaf(coins.front());

  const std::size_t pan = coins.size() / 2;
  const Coins weighed(coins.begin(), coins.begin() + 2 * pan);
  Weighing weighing = halves(coins, pan);
  StrategyNode on_equal = build_fake(weighed);
  if (coins.size() % 2 == 1) {
    on_equal = with_set_aside(std::move(on_equal), coins.back());
  }
  StrategyNode on_left = build_real(weighing.left);
  StrategyNode on_right = build_real(weighing.right);
  return StrategyNode::weigh(std::move(weighing), std::move(on_equal),
                             std::move(on_left), std::move(on_right));
}

}  // namespace

void validate_tree(const StrategyTree& tree) {
  if (tree.n_coins < 1) {
    throw std::invalid_argument("tree must cover at least one coin");
  }
  validate_node(tree.root, tree.n_coins);
}

StrategyTree build_strategy(int n_coins, InitialState state) {
  if (n_coins < 1) {
    throw std::invalid_argument("build_strategy needs at least one coin");
  }
  Coins coins(n_coins);
  for (CoinId i = 0; i < n_coins; ++i) coins[i] = i;

  StrategyTree tree{n_coins, state, {}};
  switch (state) {
    case InitialState::Fake: tree.root = build_fake(coins); break;
    case InitialState::Real: tree.root = build_real(coins); break;
    case InitialState::Unknown: tree.root = build_unknown(coins); break;
  }
  return tree;
}

WeighingsCount depth(const StrategyNode& node) {
  if (!node.is_branch()) return 0;
  WeighingsCount deepest = 0;
  for (Outcome outcome : kAllOutcomes) {
    const StrategyNode& child = node.child(outcome);
    if (!child.is_unreachable()) deepest = std::max(deepest, depth(child));
  }
  return deepest + 1;
}

WeighingsCount depth(const StrategyTree& tree) { return depth(tree.root); }

std::string outcome_string(const std::vector<TranscriptStep>& transcript) {
  std::string out;
  out.reserve(transcript.size());
  for (const auto& step : transcript) out.push_back(to_char(step.outcome));
  return out;
}

bool admits(InitialState tree_state, AlternatorState world_state) {
  switch (tree_state) {
    case InitialState::Fake: return world_state == AlternatorState::Fake;
    case InitialState::Real: return world_state == AlternatorState::Real;
    case InitialState::Unknown: return true;
  }
  return false;
}

RunResult run_strategy(const StrategyTree& tree, const World& world) {
  if (world.n_coins != tree.n_coins) {
    throw std::invalid_argument("world has " + std::to_string(world.n_coins) +
                                " coins but the tree expects " +
                                std::to_string(tree.n_coins));
  }
  if (!admits(tree.initial_state, world.state)) {
    throw std::invalid_argument(std::string("tree built for start state '") +
                                to_char(tree.initial_state) +
                                "' cannot run a world starting in '" +
                                to_char(world.state) + "'");
  }

  RunResult result;
  World current = world;
  const StrategyNode* node = &tree.root;
  while (node->is_branch()) {
    const auto [outcome, next] = weigh(current, node->weighing());
    result.transcript.push_back({node->weighing(), outcome, next.state});
    current = next;
    node = &node->child(outcome);
  }
  if (node->is_unreachable()) {
    throw UnsoundStrategy("alternator " + std::to_string(world.alternator) +
                          " starting '" + to_char(world.state) +
                          "' reached an unreachable branch after '" +
                          outcome_string(result.transcript) + "'");
  }
  result.identified = node->coin();
  return result;
}

}  // namespace alternator
