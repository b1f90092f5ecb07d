#pragma once

// Game semantics for a single alternator among otherwise identical real coins.
//
// Coins are 0-indexed. Real coins all weigh the same and pans always carry
// the same number of coins, so an outcome depends only on where the alternator
// sits and which way it is about to behave.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alternator/jacobsthal.hpp"

namespace alternator {

using CoinId = int;

// Behaviour at the alternator's next appearance on the scale.
enum class AlternatorState : std::uint8_t { Fake, Real };

enum class Outcome : std::uint8_t { Equal, LeftLight, RightLight };

inline constexpr Outcome kAllOutcomes[] = {Outcome::Equal, Outcome::LeftLight,
                                           Outcome::RightLight};

char to_char(AlternatorState state);  // 'f' or 'r'
char to_char(Outcome outcome);        // 'E', 'L' or 'R'

// Two disjoint, equally sized, ascending lists of coins.
struct Weighing {
  std::vector<CoinId> left;
  std::vector<CoinId> right;

  bool operator==(const Weighing&) const = default;
};

// Sorts both pans. Does not validate.
Weighing make_weighing(std::vector<CoinId> left, std::vector<CoinId> right);

// Throws std::invalid_argument unless both pans are non-empty, equally sized,
// ascending, disjoint and within [0, n_coins).
void validate_weighing(const Weighing& weighing, int n_coins);

std::string describe(const Weighing& weighing);  // "{0,1} v {2,3}"

enum class Pan : std::uint8_t { Off, Left, Right };
Pan pan_of(const Weighing& weighing, CoinId coin);

struct World {
  int n_coins = 0;
  CoinId alternator = 0;
  AlternatorState state = AlternatorState::Fake;

  bool operator==(const World&) const = default;
};

struct WeighResult {
  Outcome outcome;
  World world;
};

// The alternator toggles every time it is on a pan: acting fake makes its pan
// light, acting real balances the scale.
WeighResult weigh(const World& world, const Weighing& weighing);

struct Hypothesis {
  CoinId coin = 0;
  AlternatorState state = AlternatorState::Fake;

  auto operator<=>(const Hypothesis&) const = default;
};

// Thrown by solved_coin() when no hypothesis survives.
class InconsistentKnowledge : public std::logic_error {
 public:
  InconsistentKnowledge()
      : std::logic_error("no hypothesis is consistent with the observations") {}
};

// The (coin, state) pairs still consistent with every observation. Stored as
// one bitmask per coin: bit 0 for the fake hypothesis, bit 1 for the real one.
class KnowledgeState {
 public:
  static constexpr std::uint8_t kFakeBit = 1;
  static constexpr std::uint8_t kRealBit = 2;

  KnowledgeState() = default;
  explicit KnowledgeState(int n_coins);  // no hypotheses
  KnowledgeState(int n_coins, const std::vector<Hypothesis>& hypotheses);

  int n_coins() const { return static_cast<int>(masks_.size()); }
  std::uint8_t mask(CoinId coin) const { return masks_.at(coin); }
  bool contains(const Hypothesis& h) const;
  void insert(const Hypothesis& h);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  // Ascending by coin, fake before real.
  std::vector<Hypothesis> hypotheses() const;

  bool operator==(const KnowledgeState&) const = default;

 private:
  std::vector<std::uint8_t> masks_;
};

KnowledgeState initial_knowledge(int n_coins, InitialState state);

// Keeps the hypotheses that predict `outcome`, advanced past the weighing.
// An empty result means the outcome cannot happen.
KnowledgeState update_knowledge(const KnowledgeState& knowledge,
                                const Weighing& weighing, Outcome outcome);

// The coin every hypothesis agrees on, if any. The alternator's state may
// remain unknown, e.g. {(4,f), (4,r)} for a coin that never touched a pan.
// Throws InconsistentKnowledge on an empty state.
std::optional<CoinId> solved_coin(const KnowledgeState& knowledge);

}  // namespace alternator
