#include "alternator/jacobsthal.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

namespace alternator {
namespace {

// All 3^w strings over {E, L, R}, filtered: the independent oracle for the
// admissible-string counter and enumerator.
std::vector<std::string> brute_force_admissible(int w) {
  std::vector<std::string> out;
  std::size_t total = 1;
  for (int i = 0; i < w; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::string s;
    std::size_t rest = code;
    for (int i = 0; i < w; ++i) {
      s.push_back("ELR"[rest % 3]);
      rest /= 3;
    }
    bool ok = true;
    for (int i = 1; i < w; ++i) {
      if (s[i - 1] != 'E' && s[i] != 'E') ok = false;
    }
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end());  // 'E' < 'L' < 'R' in ASCII
  return out;
}

TEST(Jacobsthal, KnownValues) {
  EXPECT_EQ(jacobsthal(0), 0u);
  EXPECT_EQ(jacobsthal(1), 1u);
  EXPECT_EQ(jacobsthal(2), 1u);
  EXPECT_EQ(jacobsthal(3), 3u);
  EXPECT_EQ(jacobsthal(4), 5u);
  EXPECT_EQ(jacobsthal(5), 11u);
  EXPECT_EQ(jacobsthal(6), 21u);
  EXPECT_EQ(jacobsthal(7), 43u);
}

TEST(Jacobsthal, RecurrencesHold) {
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(jacobsthal(n + 1), jacobsthal(n) + 2 * jacobsthal(n - 1)) << n;
    const auto doubled = 2 * static_cast<std::int64_t>(jacobsthal(n - 1));
    const std::int64_t sign = n % 2 == 0 ? 1 : -1;
    EXPECT_EQ(static_cast<std::int64_t>(jacobsthal(n)), doubled - sign) << n;
  }
}

TEST(Jacobsthal, RangeLimit) {
  EXPECT_EQ(jacobsthal(63), ((std::uint64_t{1} << 63) + 1) / 3);
  EXPECT_EQ(jacobsthal(62), jacobsthal(63) - 2 * jacobsthal(61));
  EXPECT_THROW(jacobsthal(64), std::out_of_range);
  EXPECT_THROW(jacobsthal(-1), std::out_of_range);
}

TEST(JacobsthalSplit, Examples) {
  EXPECT_EQ(jacobsthal_split(4), (JacobsthalSplit{3, 1, 2}));
  EXPECT_EQ(jacobsthal_split(5), (JacobsthalSplit{3, 1, 3}));
  EXPECT_EQ(jacobsthal_split(11), (JacobsthalSplit{4, 3, 5}));
  EXPECT_EQ(jacobsthal_split(2), (JacobsthalSplit{2, 1, 0}));
  EXPECT_THROW(jacobsthal_split(1), std::domain_error);
  EXPECT_THROW(jacobsthal_split(0), std::domain_error);
}

TEST(JacobsthalSplit, LeftoverStaysInRange) {
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    const auto split = jacobsthal_split(n);
    ASSERT_LT(jacobsthal(split.index), n);
    ASSERT_LE(n, jacobsthal(split.index + 1));
    ASSERT_EQ(split.pan_size, jacobsthal(split.index - 1));
    ASSERT_EQ(2 * split.pan_size + split.leftover, n);
    ASSERT_LE(split.leftover, jacobsthal(split.index)) << n;
  }
}

TEST(MinWeighingsBound, Examples) {
  EXPECT_EQ(min_weighings_bound(3, InitialState::Fake), 1);
  EXPECT_EQ(min_weighings_bound(5, InitialState::Unknown), 3);
  EXPECT_EQ(min_weighings_bound(1, InitialState::Unknown), 0);
  EXPECT_EQ(min_weighings_bound(1, InitialState::Fake), 0);
  EXPECT_EQ(min_weighings_bound(1, InitialState::Real), 0);
  EXPECT_EQ(min_weighings_bound(11, InitialState::Unknown), 4);
  EXPECT_EQ(min_weighings_bound(12, InitialState::Unknown), 5);
  EXPECT_EQ(min_weighings_bound(11, InitialState::Fake), 3);
  EXPECT_THROW(min_weighings_bound(0, InitialState::Fake), std::domain_error);
}

TEST(MinWeighingsBound, SmallTable) {
  const int f[] = {1, 1, 2, 2};
  const int ar[] = {2, 2, 3, 3};
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(min_weighings_bound(n, InitialState::Fake), f[n - 2]);
    EXPECT_EQ(min_weighings_bound(n, InitialState::Real), ar[n - 2]);
    EXPECT_EQ(min_weighings_bound(n, InitialState::Unknown), ar[n - 2]);
  }
}

TEST(MinWeighingsBound, UnknownAndRealExceedFakeByOne) {
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    const int f = min_weighings_bound(n, InitialState::Fake);
    ASSERT_EQ(min_weighings_bound(n, InitialState::Real), f + 1) << n;
    ASSERT_EQ(min_weighings_bound(n, InitialState::Unknown), f + 1) << n;
  }
}

TEST(MinWeighingsBound, WithinTrivialBounds) {
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    for (auto state : {InitialState::Fake, InitialState::Real, InitialState::Unknown}) {
      const auto range = trivial_bounds(n, state);
      const int bound = min_weighings_bound(n, state);
      ASSERT_LE(range.lower, bound) << n;
      ASSERT_LE(bound, range.upper) << n;
    }
  }
}

TEST(TrivialBounds, Examples) {
  EXPECT_EQ(trivial_bounds(9, InitialState::Unknown), (WeighingsRange{3, 4}));
  EXPECT_EQ(trivial_bounds(4, InitialState::Real), (WeighingsRange{3, 4}));
  EXPECT_EQ(trivial_bounds(3, InitialState::Fake), (WeighingsRange{1, 1}));
  EXPECT_EQ(trivial_bounds(2, InitialState::Unknown), (WeighingsRange{2, 2}));
  EXPECT_EQ(trivial_bounds(27, InitialState::Real), (WeighingsRange{4, 6}));
  EXPECT_EQ(trivial_bounds(28, InitialState::Fake), (WeighingsRange{4, 7}));
  EXPECT_THROW(trivial_bounds(1, InitialState::Fake), std::domain_error);
}

TEST(ClassicFakeCapacity, Powers) {
  EXPECT_EQ(classic_fake_capacity(0), 1u);
  EXPECT_EQ(classic_fake_capacity(2), 9u);
  EXPECT_EQ(classic_fake_capacity(4), 81u);
  EXPECT_EQ(classic_fake_capacity(40), 12157665459056928801ull);
  EXPECT_THROW(classic_fake_capacity(41), std::out_of_range);
}

TEST(AdmissibleStrings, CountMatchesJacobsthal) {
  EXPECT_EQ(count_admissible_strings(0), 1u);
  EXPECT_EQ(count_admissible_strings(1), 3u);
  EXPECT_EQ(count_admissible_strings(2), 5u);
  for (int w = 0; w <= kMaxAdmissibleLength; ++w) {
    EXPECT_EQ(count_admissible_strings(w), jacobsthal(w + 2)) << w;
  }
  EXPECT_THROW(count_admissible_strings(kMaxAdmissibleLength + 1), std::out_of_range);
}

TEST(AdmissibleStrings, EnumerationExamples) {
  EXPECT_EQ(enumerate_admissible_strings(0), std::vector<std::string>{""});
  EXPECT_EQ(enumerate_admissible_strings(1),
            (std::vector<std::string>{"E", "L", "R"}));
  EXPECT_EQ(enumerate_admissible_strings(2),
            (std::vector<std::string>{"EE", "EL", "ER", "LE", "RE"}));
  EXPECT_THROW(enumerate_admissible_strings(kMaxEnumeratedLength + 1),
               std::out_of_range);
}

TEST(AdmissibleStrings, EnumerationMatchesBruteForce) {
  for (int w = 0; w <= 9; ++w) {
    EXPECT_EQ(enumerate_admissible_strings(w), brute_force_admissible(w)) << w;
  }
}

TEST(AdmissibleStrings, EnumerationProperties) {
  for (int w = 0; w <= 12; ++w) {
    const auto strings = enumerate_admissible_strings(w);
    ASSERT_EQ(strings.size(), count_admissible_strings(w));
    ASSERT_TRUE(std::is_sorted(strings.begin(), strings.end()));
    ASSERT_EQ(std::adjacent_find(strings.begin(), strings.end()), strings.end());
    for (const auto& s : strings) {
      ASSERT_EQ(static_cast<int>(s.size()), w);
      ASSERT_TRUE(is_admissible_string(s)) << s;
    }
  }
}

TEST(AdmissibleStrings, Predicate) {
  EXPECT_TRUE(is_admissible_string(""));
  EXPECT_TRUE(is_admissible_string("LERE"));
  EXPECT_FALSE(is_admissible_string("LR"));
  EXPECT_FALSE(is_admissible_string("ELL"));
  EXPECT_FALSE(is_admissible_string("RL"));
}

TEST(InitialStateText, RoundTrip) {
  for (auto state : {InitialState::Fake, InitialState::Real, InitialState::Unknown}) {
    EXPECT_EQ(parse_initial_state(std::string(1, to_char(state))), state);
  }
  EXPECT_THROW(parse_initial_state("x"), std::invalid_argument);
}

}  // namespace
}  // namespace alternator
