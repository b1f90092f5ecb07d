#pragma once

// Jacobsthal numbers and the counting bounds built on them.
//
// J_n = (2^n - (-1)^n) / 3 = 0, 1, 1, 3, 5, 11, 21, 43, ...
//
// Every sequence of optimal weighing counts steps up by one just after N
// passes a Jacobsthal number, so the functions here double as the closed-form
// answer for f(N), r(N) and a(N).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace alternator {

// Starting knowledge about the alternator: next appearance on the scale acts
// fake, acts real, or nobody knows which.
enum class InitialState { Fake, Real, Unknown };

char to_char(InitialState state);                 // 'f', 'r' or 'a'
InitialState parse_initial_state(std::string_view text);  // throws std::invalid_argument

using WeighingsCount = int;

// Largest index accepted by jacobsthal(). J_63 = (2^63 + 1) / 3 is the last
// value whose closed form fits an unsigned 64-bit intermediate.
inline constexpr int kMaxJacobsthalIndex = 63;
// 3^40 is the largest power of three below 2^64.
inline constexpr int kMaxClassicWeighings = 40;
// count_admissible_strings(w) == J_{w+2}, so w is limited to 61.
inline constexpr int kMaxAdmissibleLength = kMaxJacobsthalIndex - 2;
inline constexpr int kMaxEnumeratedLength = 20;

// Throws std::out_of_range for n < 0 or n > kMaxJacobsthalIndex.
std::uint64_t jacobsthal(int n);

struct JacobsthalSplit {
  int index = 0;                // k with J_k < n_coins <= J_{k+1}
  std::uint64_t pan_size = 0;   // J_{k-1}
  std::uint64_t leftover = 0;   // n_coins - 2 * J_{k-1}, always in [0, J_k]

  bool operator==(const JacobsthalSplit&) const = default;
};

// Throws std::domain_error for n_coins < 2.
JacobsthalSplit jacobsthal_split(std::uint64_t n_coins);

// Fewest weighings that can possibly identify the alternator among n_coins:
// smallest w with n_coins <= J_{w+2} for a fake start, J_{w+1} otherwise.
// A single coin needs no weighing at all.
WeighingsCount min_weighings_bound(std::uint64_t n_coins, InitialState state);

struct WeighingsRange {
  WeighingsCount lower = 0;
  WeighingsCount upper = 0;

  bool operator==(const WeighingsRange&) const = default;
};

// Bounds from the plain fake-coin ternary search (each weighing done twice
// for the upper bound). With 3^{k-1} < n_coins <= 3^k: (k, 2k-1) for a fake
// start, (k+1, 2k) otherwise. Throws std::domain_error for n_coins < 2.
WeighingsRange trivial_bounds(std::uint64_t n_coins, InitialState state);

// 3^w: how many coins a single light fake can be found among in w weighings.
std::uint64_t classic_fake_capacity(WeighingsCount w);

// Number of length-w strings over {E, L, R} with no L/R letter directly
// followed by another L/R letter. Counted with a two-state automaton, not
// through jacobsthal().
std::uint64_t count_admissible_strings(WeighingsCount w);

// All such strings, sorted with E < L < R. Throws std::out_of_range for
// w > kMaxEnumeratedLength.
std::vector<std::string> enumerate_admissible_strings(WeighingsCount w);

// True when no L/R letter is directly followed by another L/R letter.
bool is_admissible_string(std::string_view outcomes);

}  // namespace alternator
