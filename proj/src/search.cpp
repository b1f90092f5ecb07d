#include "alternator/search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace alternator {

namespace {

constexpr WeighingsCount kUnknownUpper = std::numeric_limits<WeighingsCount>::max();

std::uint64_t key_of(const ClassCounts& c) {
  return (static_cast<std::uint64_t>(c.fr) << 48) |
         (static_cast<std::uint64_t>(c.f) << 32) |
         (static_cast<std::uint64_t>(c.r) << 16) |
         static_cast<std::uint64_t>(c.x);
}

bool fits(const PanLoad& left, const PanLoad& right, const ClassCounts& c) {
  return left.fr >= 0 && right.fr >= 0 && left.f >= 0 && right.f >= 0 &&
         left.r >= 0 && right.r >= 0 && left.x >= 0 && right.x >= 0 &&
         left.fr + right.fr <= c.fr && left.f + right.f <= c.f &&
         left.r + right.r <= c.r && left.x + right.x <= c.x;
}

}  // namespace

ClassCounts initial_class_counts(int n_coins, InitialState state) {
  if (n_coins < 1) throw std::invalid_argument("need at least one coin");
  switch (state) {
    case InitialState::Unknown: return {n_coins, 0, 0, 0};
    case InitialState::Fake: return {0, n_coins, 0, 0};
    case InitialState::Real: return {0, 0, n_coins, 0};
  }
  return {};
}

ClassCounts class_counts_of(const KnowledgeState& knowledge) {
  ClassCounts counts;
  for (CoinId coin = 0; coin < knowledge.n_coins(); ++coin) {
    switch (knowledge.mask(coin)) {
      case KnowledgeState::kFakeBit | KnowledgeState::kRealBit: ++counts.fr; break;
      case KnowledgeState::kFakeBit: ++counts.f; break;
      case KnowledgeState::kRealBit: ++counts.r; break;
      default: ++counts.x; break;
    }
  }
  return counts;
}

void validate_move(const ClassCounts& counts, const Move& move) {
  if (!fits(move.left, move.right, counts)) {
    throw std::invalid_argument("move draws more coins of a class than exist");
  }
  if (move.left.size() != move.right.size() || move.left.size() < 1) {
    throw std::invalid_argument("move must put the same positive number of "
                                "coins on each pan");
  }
}

std::optional<ClassCounts> successor(const ClassCounts& c, const Move& move,
                                     Outcome outcome) {
  validate_move(c, move);
  ClassCounts next;
  switch (outcome) {
    case Outcome::Equal: {
      const int weighed_fr = move.left.fr + move.right.fr;
      const int weighed_f = move.left.f + move.right.f;
      const int weighed_r = move.left.r + move.right.r;
      next.fr = c.fr - weighed_fr;
      next.f = c.f - weighed_f + weighed_fr + weighed_r;
      next.r = c.r - weighed_r;
      next.x = c.x + weighed_f;
      break;
    }
    case Outcome::LeftLight:
    case Outcome::RightLight: {
      const PanLoad& light = outcome == Outcome::LeftLight ? move.left : move.right;
      next.r = light.fr + light.f;
      next.x = c.total() - next.r;
      break;
    }
  }
  if (next.hypotheses() == 0) return std::nullopt;
  return next;
}

bool is_terminal(const ClassCounts& counts) { return counts.candidates() <= 1; }

WeighingsCount admissible_lower_bound(const ClassCounts& counts) {
  const auto candidates = static_cast<std::uint64_t>(counts.candidates());
  const auto real_only = static_cast<std::uint64_t>(counts.r);
  for (WeighingsCount w = 0; w + 2 <= kMaxJacobsthalIndex; ++w) {
    if (candidates <= jacobsthal(w + 2) && real_only <= jacobsthal(w + 1)) {
      return w;
    }
  }
  throw std::out_of_range("class counts too large for the admissible bound");
}

std::vector<Move> canonical_moves(const ClassCounts& c, SearchOptions options) {
  std::vector<Move> moves;
  const int max_x = options.allow_ballast ? c.x : 0;
  PanLoad left;
  for (left.fr = 0; left.fr <= c.fr; ++left.fr) {
    for (left.f = 0; left.f <= c.f; ++left.f) {
      for (left.r = 0; left.r <= c.r; ++left.r) {
        for (left.x = 0; left.x <= max_x; ++left.x) {
          const int pan = left.size();
          if (pan == 0 || 2 * pan > c.total()) continue;
          PanLoad right;
          for (right.fr = 0; right.fr <= c.fr - left.fr; ++right.fr) {
            for (right.f = 0; right.f <= c.f - left.f; ++right.f) {
              for (right.r = 0; right.r <= c.r - left.r; ++right.r) {
                right.x = pan - right.fr - right.f - right.r;
                if (right.x < 0 || right.x > max_x - left.x) continue;
                // Ballast on both pans cancels out.
                if (left.x > 0 && right.x > 0) continue;
                if (left < right) continue;
                if (left.fr + left.f + left.r + right.fr + right.f + right.r == 0) {
                  continue;
                }
                moves.push_back({left, right});
              }
            }
          }
        }
      }
    }
  }
  return moves;
}

Weighing embed_move(const KnowledgeState& knowledge, const Move& move) {
  validate_move(class_counts_of(knowledge), move);
  std::vector<CoinId> by_class[4];  // fr, f, r, x
  for (CoinId coin = 0; coin < knowledge.n_coins(); ++coin) {
    switch (knowledge.mask(coin)) {
      case KnowledgeState::kFakeBit | KnowledgeState::kRealBit:
        by_class[0].push_back(coin);
        break;
      case KnowledgeState::kFakeBit: by_class[1].push_back(coin); break;
      case KnowledgeState::kRealBit: by_class[2].push_back(coin); break;
      default: by_class[3].push_back(coin); break;
    }
  }
  const int left_counts[4] = {move.left.fr, move.left.f, move.left.r, move.left.x};
  const int right_counts[4] = {move.right.fr, move.right.f, move.right.r,
                               move.right.x};
  std::vector<CoinId> left;
  std::vector<CoinId> right;
  for (int cls = 0; cls < 4; ++cls) {
    const auto& coins = by_class[cls];
    left.insert(left.end(), coins.begin(), coins.begin() + left_counts[cls]);
    right.insert(right.end(), coins.begin() + left_counts[cls],
                 coins.begin() + left_counts[cls] + right_counts[cls]);
  }
  return make_weighing(std::move(left), std::move(right));
}

OptimalSearch::OptimalSearch(SearchOptions options) : options_(options) {}

OptimalSearch::Bounds& OptimalSearch::bounds_for(const ClassCounts& counts) {
  auto [it, inserted] =
      memo_.try_emplace(key_of(counts), Bounds{0, kUnknownUpper});
  if (inserted) it->second.lower = admissible_lower_bound(counts);
  return it->second;
}

bool OptimalSearch::solvable(const ClassCounts& counts, WeighingsCount budget) {
  if (is_terminal(counts)) return true;
  if (budget <= 0) return false;
  Bounds& known = bounds_for(counts);
  if (known.upper <= budget) return true;
  if (known.lower > budget) return false;

  const bool found = first_move_within(counts, budget).has_value();
  if (found) {
    known.upper = std::min(known.upper, budget);
  } else {
    known.lower = std::max(known.lower, budget + 1);
  }
  return found;
}

std::optional<Move> OptimalSearch::first_move_within(const ClassCounts& counts,
                                                     WeighingsCount budget) {
  if (budget <= 0) return std::nullopt;
  for (const Move& move : canonical_moves(counts, options_)) {
    bool all_solvable = true;
    for (Outcome outcome : kAllOutcomes) {
      const auto next = successor(counts, move, outcome);
      if (next && !solvable(*next, budget - 1)) {
        all_solvable = false;
        break;
      }
    }
    if (all_solvable) return move;
  }
  return std::nullopt;
}

std::optional<WeighingsCount> OptimalSearch::value(const ClassCounts& counts,
                                                   WeighingsCount budget) {
  if (is_terminal(counts)) return 0;
  for (WeighingsCount w = admissible_lower_bound(counts); w <= budget; ++w) {
    if (solvable(counts, w)) return w;
  }
  return std::nullopt;
}

std::optional<StrategyNode> OptimalSearch::extract(const KnowledgeState& knowledge,
                                                   WeighingsCount budget) {
  if (knowledge.empty()) return StrategyNode::unreachable();
  if (const auto coin = solved_coin(knowledge)) return StrategyNode::leaf(*coin);

  const ClassCounts counts = class_counts_of(knowledge);
  const auto optimum = value(counts, budget);
  if (!optimum) return std::nullopt;
  const auto move = first_move_within(counts, *optimum);
  if (!move) throw std::logic_error("search value without a witnessing move");

  Weighing weighing = embed_move(knowledge, *move);
  std::vector<StrategyNode> children;
  for (Outcome outcome : kAllOutcomes) {
    auto child = extract(update_knowledge(knowledge, weighing, outcome),
                         *optimum - 1);
    if (!child) throw std::logic_error("witnessing move has an unsolvable outcome");
    children.push_back(std::move(*child));
  }
  return StrategyNode::weigh(std::move(weighing), std::move(children[0]),
                             std::move(children[1]), std::move(children[2]));
}

std::optional<WeighingsCount> optimal_weighings(int n_coins, InitialState state,
                                                WeighingsCount budget,
                                                SearchOptions options) {
  OptimalSearch search(options);
  return search.value(initial_class_counts(n_coins, state), budget);
}

std::optional<StrategyTree> extract_optimal_tree(int n_coins, InitialState state,
                                                 WeighingsCount budget,
                                                 SearchOptions options) {
  OptimalSearch search(options);
  auto root = search.extract(initial_knowledge(n_coins, state), budget);
  if (!root) return std::nullopt;
  return StrategyTree{n_coins, state, std::move(*root)};
}

}  // namespace alternator
