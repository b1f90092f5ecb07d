#include "alternator/model.hpp"

#include <algorithm>
#include <sstream>

namespace alternator {

char to_char(AlternatorState state) {
  return state == AlternatorState::Fake ? 'f' : 'r';
}

char to_char(Outcome outcome) {
  switch (outcome) {
    case Outcome::Equal: return 'E';
    case Outcome::LeftLight: return 'L';
    case Outcome::RightLight: return 'R';
  }
  return '?';
}

Weighing make_weighing(std::vector<CoinId> left, std::vector<CoinId> right) {
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return {std::move(left), std::move(right)};
}

void validate_weighing(const Weighing& weighing, int n_coins) {
  if (weighing.left.empty() || weighing.right.empty()) {
    throw std::invalid_argument("weighing " + describe(weighing) +
                                " has an empty pan");
  }
  if (weighing.left.size() != weighing.right.size()) {
    throw std::invalid_argument("weighing " + describe(weighing) +
                                " has unequal pans");
  }
  for (const auto* pan : {&weighing.left, &weighing.right}) {
    for (std::size_t i = 0; i < pan->size(); ++i) {
      const CoinId coin = (*pan)[i];
      if (coin < 0 || coin >= n_coins) {
        throw std::invalid_argument("weighing " + describe(weighing) +
                                    " uses coin " + std::to_string(coin) +
                                    " outside [0, " + std::to_string(n_coins) +
                                    ")");
      }
      if (i > 0 && (*pan)[i - 1] >= coin) {
        throw std::invalid_argument("weighing " + describe(weighing) +
                                    " has a pan that is not strictly ascending");
      }
    }
  }
  for (CoinId coin : weighing.left) {
    if (std::binary_search(weighing.right.begin(), weighing.right.end(), coin)) {
      throw std::invalid_argument("weighing " + describe(weighing) +
                                  " puts coin " + std::to_string(coin) +
                                  " on both pans");
    }
  }
}

std::string describe(const Weighing& weighing) {
  std::ostringstream out;
  auto pan = [&out](const std::vector<CoinId>& coins) {
    out << '{';
    for (std::size_t i = 0; i < coins.size(); ++i) {
      if (i > 0) out << ',';
      out << coins[i];
    }
    out << '}';
  };
  pan(weighing.left);
  out << " v ";
  pan(weighing.right);
  return out.str();
}

Pan pan_of(const Weighing& weighing, CoinId coin) {
  if (std::binary_search(weighing.left.begin(), weighing.left.end(), coin)) {
    return Pan::Left;
  }
  if (std::binary_search(weighing.right.begin(), weighing.right.end(), coin)) {
    return Pan::Right;
  }
  return Pan::Off;
}

namespace {

struct Step {
  Outcome outcome;
  AlternatorState state;
};

std::uint8_t bit_of(AlternatorState state) {
  return state == AlternatorState::Fake ? KnowledgeState::kFakeBit
                                        : KnowledgeState::kRealBit;
}

// One appearance (or non-appearance) of the alternator at a weighing.
Step step(Pan pan, AlternatorState state) {
  if (pan == Pan::Off) return {Outcome::Equal, state};
  if (state == AlternatorState::Real) {
    return {Outcome::Equal, AlternatorState::Fake};
  }
  return {pan == Pan::Left ? Outcome::LeftLight : Outcome::RightLight,
          AlternatorState::Real};
}

}  // namespace

WeighResult weigh(const World& world, const Weighing& weighing) {
  validate_weighing(weighing, world.n_coins);
  if (world.alternator < 0 || world.alternator >= world.n_coins) {
    throw std::invalid_argument("alternator " +
                                std::to_string(world.alternator) +
                                " out of range");
  }
  const auto [outcome, state] = step(pan_of(weighing, world.alternator),
                                     world.state);
  World next = world;
  next.state = state;
  return {outcome, next};
}

KnowledgeState::KnowledgeState(int n_coins) {
  if (n_coins < 1) throw std::invalid_argument("need at least one coin");
  masks_.assign(n_coins, 0);
}

KnowledgeState::KnowledgeState(int n_coins,
                               const std::vector<Hypothesis>& hypotheses)
    : KnowledgeState(n_coins) {
  for (const auto& h : hypotheses) insert(h);
}

bool KnowledgeState::contains(const Hypothesis& h) const {
  return h.coin >= 0 && h.coin < n_coins() && (masks_[h.coin] & bit_of(h.state));
}

void KnowledgeState::insert(const Hypothesis& h) {
  if (h.coin < 0 || h.coin >= n_coins()) {
    throw std::invalid_argument("hypothesis coin " + std::to_string(h.coin) +
                                " out of range");
  }
  masks_[h.coin] |= bit_of(h.state);
}

std::size_t KnowledgeState::size() const {
  std::size_t total = 0;
  for (std::uint8_t m : masks_) {
    total += (m & kFakeBit ? 1 : 0) + (m & kRealBit ? 1 : 0);
  }
  return total;
}

std::vector<Hypothesis> KnowledgeState::hypotheses() const {
  std::vector<Hypothesis> out;
  for (CoinId coin = 0; coin < n_coins(); ++coin) {
    if (masks_[coin] & kFakeBit) out.push_back({coin, AlternatorState::Fake});
    if (masks_[coin] & kRealBit) out.push_back({coin, AlternatorState::Real});
  }
  return out;
}

KnowledgeState initial_knowledge(int n_coins, InitialState state) {
  KnowledgeState knowledge(n_coins);
  for (CoinId coin = 0; coin < n_coins; ++coin) {
    if (state != InitialState::Real) {
      knowledge.insert({coin, AlternatorState::Fake});
    }
    if (state != InitialState::Fake) {
      knowledge.insert({coin, AlternatorState::Real});
    }
  }
  return knowledge;
}

KnowledgeState update_knowledge(const KnowledgeState& knowledge,
                                const Weighing& weighing, Outcome outcome) {
  validate_weighing(weighing, knowledge.n_coins());
  std::vector<Pan> pans(knowledge.n_coins(), Pan::Off);
  for (CoinId coin : weighing.left) pans[coin] = Pan::Left;
  for (CoinId coin : weighing.right) pans[coin] = Pan::Right;

  KnowledgeState next(knowledge.n_coins());
  for (CoinId coin = 0; coin < knowledge.n_coins(); ++coin) {
    const std::uint8_t mask = knowledge.mask(coin);
    for (AlternatorState state : {AlternatorState::Fake, AlternatorState::Real}) {
      if (!(mask & bit_of(state))) continue;
      const Step predicted = step(pans[coin], state);
      if (predicted.outcome == outcome) next.insert({coin, predicted.state});
    }
  }
  return next;
}

std::optional<CoinId> solved_coin(const KnowledgeState& knowledge) {
  std::optional<CoinId> found;
  for (CoinId coin = 0; coin < knowledge.n_coins(); ++coin) {
    if (knowledge.mask(coin) == 0) continue;
    if (found) return std::nullopt;
    found = coin;
  }
  if (!found) throw InconsistentKnowledge();
  return found;
}

}  // namespace alternator
