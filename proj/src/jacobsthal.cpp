#include "alternator/jacobsthal.hpp"

#include <stdexcept>
#include <string>

namespace alternator {

char to_char(InitialState state) {
  switch (state) {
    case InitialState::Fake: return 'f';
    case InitialState::Real: return 'r';
    case InitialState::Unknown: return 'a';
  }
  return '?';
}

InitialState parse_initial_state(std::string_view text) {
  if (text == "f") return InitialState::Fake;
  if (text == "r") return InitialState::Real;
  if (text == "a") return InitialState::Unknown;
  throw std::invalid_argument("initial state must be one of f, r, a; got '" +
                              std::string(text) + "'");
}

std::uint64_t jacobsthal(int n) {
  if (n < 0 || n > kMaxJacobsthalIndex) {
    throw std::out_of_range("jacobsthal index " + std::to_string(n) +
                            " outside [0, " +
                            std::to_string(kMaxJacobsthalIndex) + "]");
  }
  const std::uint64_t power = std::uint64_t{1} << n;
  // (2^n - (-1)^n) / 3; the numerator is exact in 64 bits for n <= 63.
  return n % 2 == 0 ? (power - 1) / 3 : (power + 1) / 3;
}

JacobsthalSplit jacobsthal_split(std::uint64_t n_coins) {
  if (n_coins < 2) {
    throw std::domain_error("jacobsthal_split needs at least 2 coins");
  }
  // J_1 = J_2 = 1, so the first candidate interval is (J_2, J_3].
  for (int k = 2; k < kMaxJacobsthalIndex; ++k) {
    if (jacobsthal(k) < n_coins && n_coins <= jacobsthal(k + 1)) {
      const std::uint64_t pan = jacobsthal(k - 1);
      return {k, pan, n_coins - 2 * pan};
    }
  }
  throw std::out_of_range("coin count beyond J_" +
                          std::to_string(kMaxJacobsthalIndex));
}

WeighingsCount min_weighings_bound(std::uint64_t n_coins, InitialState state) {
  if (n_coins < 1) {
    throw std::domain_error("min_weighings_bound needs at least 1 coin");
  }
  const int offset = state == InitialState::Fake ? 2 : 1;
  for (int w = 0; w + offset <= kMaxJacobsthalIndex; ++w) {
    if (n_coins <= jacobsthal(w + offset)) return w;
  }
  throw std::out_of_range("coin count beyond J_" +
                          std::to_string(kMaxJacobsthalIndex));
}

WeighingsRange trivial_bounds(std::uint64_t n_coins, InitialState state) {
  if (n_coins < 2) {
    throw std::domain_error("trivial_bounds needs at least 2 coins");
  }
  int k = 0;
  std::uint64_t power = 1;
  while (power < n_coins) {
    ++k;
    power = classic_fake_capacity(k);
  }
  if (state == InitialState::Fake) return {k, 2 * k - 1};
  return {k + 1, 2 * k};
}

std::uint64_t classic_fake_capacity(WeighingsCount w) {
  if (w < 0 || w > kMaxClassicWeighings) {
    throw std::out_of_range("3^" + std::to_string(w) +
                            " does not fit in 64 bits");
  }
  std::uint64_t result = 1;
  for (int i = 0; i < w; ++i) result *= 3;
  return result;
}

std::uint64_t count_admissible_strings(WeighingsCount w) {
  if (w < 0 || w > kMaxAdmissibleLength) {
    throw std::out_of_range("admissible string length " + std::to_string(w) +
                            " outside [0, " +
                            std::to_string(kMaxAdmissibleLength) + "]");
  }
  // ends_free: strings whose last letter is E (or the empty string),
  // ends_light: strings ending in L or R, which must be followed by E.
  std::uint64_t ends_free = 1;
  std::uint64_t ends_light = 0;
  for (int i = 0; i < w; ++i) {
    const std::uint64_t next_light = 2 * ends_free;
    ends_free += ends_light;
    ends_light = next_light;
  }
  return ends_free + ends_light;
}

namespace {

void extend(std::string& prefix, int remaining, std::vector<std::string>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  const bool after_light = !prefix.empty() && prefix.back() != 'E';
  for (char letter : {'E', 'L', 'R'}) {
    if (after_light && letter != 'E') continue;
    prefix.push_back(letter);
    extend(prefix, remaining - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::string> enumerate_admissible_strings(WeighingsCount w) {
  if (w < 0 || w > kMaxEnumeratedLength) {
    throw std::out_of_range("cannot enumerate admissible strings of length " +
                            std::to_string(w));
  }
  std::vector<std::string> out;
  out.reserve(count_admissible_strings(w));
  std::string prefix;
  extend(prefix, w, out);
  return out;
}

bool is_admissible_string(std::string_view outcomes) {
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    if (outcomes[i - 1] != 'E' && outcomes[i] != 'E') return false;
  }
  return true;
}

}  // namespace alternator
