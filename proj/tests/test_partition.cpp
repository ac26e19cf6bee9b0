#include <random>
#include <unordered_set>

#include <gtest/gtest.h>

#include "dominance/partition.hpp"
#include "dominance/text.hpp"
#include "oracles.hpp"

using namespace dominance;

namespace {

std::vector<part_t> as_vec(std::span<const part_t> s) { return {s.begin(), s.end()}; }

Partition random_partition(std::mt19937_64& rng, part_t max_weight) {
  std::uniform_int_distribution<part_t> wd(0, max_weight);
  part_t w = wd(rng);
  std::vector<part_t> v;
  while (w > 0) {
    std::uniform_int_distribution<part_t> pd(1, w);
    const part_t x = pd(rng);
    v.push_back(x);
    w -= x;
  }
  return Partition::from_unsorted(std::move(v));
}

}  // namespace

TEST(Partition, Weight) {
  EXPECT_EQ(weight(Partition{4, 2, 1, 0}), 7);
  EXPECT_EQ(weight(Partition{4, 1, 1, 1}), 7);
  EXPECT_EQ(weight(Partition{}), 0);
  EXPECT_EQ(weight(Partition{5, 5, 5}), 15);
}

TEST(Partition, StrictConstructorRejectsBadInput) {
  EXPECT_THROW(Partition({1, 2}), invalid_input);
  EXPECT_THROW(Partition({3, -1}), invalid_input);
  EXPECT_THROW(Partition({kMaxMagnitude + 1}), invalid_input);
  EXPECT_NO_THROW(Partition({kMaxMagnitude}));
  // weight over 2^31 from parts that are individually fine
  EXPECT_THROW(Partition({kMaxMagnitude, 1}), invalid_input);
}

TEST(Partition, FromUnsortedSorts) {
  const auto p = Partition::from_unsorted({1, 4, 0, 2});
  EXPECT_EQ(as_vec(p.parts()), (std::vector<part_t>{4, 2, 1, 0}));
  EXPECT_THROW(Partition::from_unsorted({1, -4}), invalid_input);
}

TEST(Partition, EqualityIgnoresTrailingZeros) {
  EXPECT_EQ((Partition{2, 1}), (Partition{2, 1, 0, 0}));
  EXPECT_NE((Partition{2, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(Partition{}, (Partition{0, 0}));
  std::unordered_set<Partition> set{Partition{2, 1}, Partition{2, 1, 0}};
  EXPECT_EQ(set.size(), 1u);
}

TEST(Partition, Lengths) {
  const Partition p{4, 2, 1, 0};
  EXPECT_EQ(p.stored_length(), 4u);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.part(1), 4);
  EXPECT_EQ(p.part(4), 0);
  EXPECT_EQ(p.part(9), 0);
  EXPECT_EQ(p.stripped().stored_length(), 3u);
}

TEST(Pad, Examples) {
  EXPECT_EQ(as_vec(pad(Partition{2, 1}, 4).parts()), (std::vector<part_t>{2, 1, 0, 0}));
  EXPECT_EQ(as_vec(pad(Partition{4, 2, 1}, 4).parts()), (std::vector<part_t>{4, 2, 1, 0}));
  EXPECT_EQ(as_vec(pad(Partition{}, 3).parts()), (std::vector<part_t>{0, 0, 0}));
  // shrinking away stored zeros is allowed, dropping positive parts is not
  EXPECT_EQ(pad(Partition{3, 0, 0}, 1).stored_length(), 1u);
  EXPECT_THROW(pad(Partition{2, 1}, 1), invalid_input);
}

TEST(Dominates, Examples) {
  EXPECT_TRUE(dominates(Partition{4, 2, 1, 0}, Partition{4, 1, 1, 1}));
  EXPECT_FALSE(dominates(Partition{4, 1, 1, 1}, Partition{4, 2, 1, 0}));
  // incomparable: prefix sums 3,4,5,6 vs 2,4,6,6
  EXPECT_FALSE(dominates(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
  EXPECT_FALSE(dominates(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
  EXPECT_EQ(first_violated_prefix(Partition{3, 1, 1, 1}, Partition{2, 2, 2}), 3u);
  EXPECT_EQ(first_violated_prefix(Partition{2, 2, 2}, Partition{3, 1, 1, 1}), 1u);
}

TEST(Dominates, MixedSequenceKinds) {
  EXPECT_TRUE(dominates(NonIncSequence{3, 1, 1, 0}, Partition{3}));
  EXPECT_FALSE(dominates(NonIncSequence{0}, NonIncSequence{1}));
}

TEST(Dominates, AgreesWithPrefixSumOracle) {
  for (part_t n = 0; n <= 8; ++n)
    for (part_t m = 0; m <= 8; ++m)
      for (const auto& a : oracle::partitions(n))
        for (const auto& b : oracle::partitions(m))
          ASSERT_EQ(dominates(Partition(a), Partition(b)), oracle::dominates(a, b));
}

TEST(Dominates, PartialOrderOnSmallWeights) {
  std::vector<Partition> all;
  for (part_t n = 0; n <= 10; ++n)
    for (const auto& v : oracle::partitions(n)) all.emplace_back(v);
  for (const auto& a : all) {
    ASSERT_TRUE(dominates(a, a));
    for (const auto& b : all) {
      const bool ab = dominates(a, b);
      if (ab) {
        ASSERT_GE(a.weight(), b.weight());
      }
      if (ab && dominates(b, a)) {
        ASSERT_EQ(a, b);
      }
    }
  }
  // transitivity over weight <= 7 (cubic)
  std::vector<Partition> small;
  for (const auto& p : all)
    if (p.weight() <= 7) small.push_back(p);
  for (const auto& a : small)
    for (const auto& b : small) {
      if (!dominates(a, b)) continue;
      for (const auto& c : small)
        if (dominates(b, c)) {
          ASSERT_TRUE(dominates(a, c));
        }
    }
}

TEST(Dominates, PaddingInvariance) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_partition(rng, 15), b = random_partition(rng, 15);
    const bool base = dominates(a, b);
    for (std::size_t m : {0u, 1u, 3u}) {
      ASSERT_EQ(dominates(pad(a, a.length() + m), b), base);
      ASSERT_EQ(dominates(a, pad(b, b.length() + m)), base);
    }
  }
}

TEST(Dominates, OverflowIsReported) {
  const NonIncSequence huge{std::numeric_limits<part_t>::max(), std::numeric_limits<part_t>::max()};
  EXPECT_THROW(dominates(huge, NonIncSequence{1}), overflow_error);
}

TEST(KTransform, WorkedExample) {
  const Partition lambda{4, 2, 1, 0};
  EXPECT_EQ(k_transform(lambda, 2), (NonIncSequence{2, 2, 1, 0}));
  EXPECT_EQ(k_transform(lambda, 0), (NonIncSequence{4, 2, 1, 0}));
  EXPECT_EQ(k_transform(Partition{4, 1, 1, 1}, 3), (NonIncSequence{2, 2, 2, 1}));
  EXPECT_EQ(k_transform(Partition{3, 1}, 5), (NonIncSequence{4, 2}));
}

TEST(KTransform, LengthFollowsStoredLength) {
  EXPECT_EQ(k_transform(Partition{4}, 3).size(), 1u);
  EXPECT_EQ(k_transform(Partition{4, 0}, 3), (NonIncSequence{3, 1}));
  EXPECT_EQ(k_transform(Partition{}, 3).size(), 0u);
}

TEST(KTransform, RejectsHugeK) {
  EXPECT_THROW(k_transform(Partition{1}, kMaxMagnitude + 1), invalid_input);
}

TEST(KTransform, ContentShiftAndReversalLaws) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<part_t> kd(-6, 20);
  for (int trial = 0; trial < 3000; ++trial) {
    auto p = random_partition(rng, 14);
    p = pad(p, p.length() + static_cast<std::size_t>(trial % 3));
    const part_t k = kd(rng);
    const auto t = k_transform(p, k);
    ASSERT_EQ(t.size(), p.stored_length());
    ASSERT_EQ(oracle::abs_diff_multiset(as_vec(t.values()), 0),
              oracle::abs_diff_multiset(as_vec(p.parts()), k));
    if (k <= 0) {
      for (std::size_t q = 0; q < t.size(); ++q) ASSERT_EQ(t[q], p.parts()[q] - k);
    }
    if (k >= p.largest()) {
      const auto n = t.size();
      for (std::size_t q = 0; q < n; ++q) ASSERT_EQ(t[q], k - p.parts()[n - 1 - q]);
    }
  }
}

TEST(Text, ParseAndFormat) {
  EXPECT_EQ(parse_partition("4,2,1,0"), (Partition{4, 2, 1}));
  EXPECT_EQ(parse_partition("4 2  1").stored_length(), 3u);
  EXPECT_EQ(parse_partition(" 4, 2 ,1 ").weight(), 7);
  EXPECT_EQ(parse_partition("").stored_length(), 0u);
  EXPECT_EQ(parse_partition("()").stored_length(), 0u);
  EXPECT_EQ(format(Partition{4, 2, 1, 0}), "4,2,1,0");
  EXPECT_EQ(format_stripped(Partition{4, 2, 1, 0}), "4,2,1");
  EXPECT_EQ(format(Partition{}), "0");
  EXPECT_EQ(parse_partition("1,3", {.unsorted = true}), (Partition{3, 1}));
}

TEST(Text, ErrorsNameTheToken) {
  auto token_of = [](const char* text) {
    try {
      parse_partition(text);
    } catch (const parse_error& e) {
      return e.token();
    }
    return std::string("<no error>");
  };
  EXPECT_EQ(token_of("4,-1"), "-1");
  EXPECT_EQ(token_of("4,x"), "x");
  EXPECT_EQ(token_of("2,1.5"), "1.5");
  EXPECT_EQ(token_of("1,3"), "3");
  EXPECT_EQ(token_of("4,,2"), ",");
  EXPECT_EQ(token_of("4,"), ",");
  EXPECT_EQ(token_of("99999999999"), "99999999999");
}

TEST(Text, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    auto p = random_partition(rng, 30);
    p = pad(p, p.length() + static_cast<std::size_t>(trial % 2));
    EXPECT_EQ(parse_partition(format(p)), p);
    EXPECT_EQ(parse_partition(format_stripped(p)), p);
  }
}
