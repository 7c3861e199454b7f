#include "peakset/permutation.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace peakset;

namespace {

PeakSet peaks(std::initializer_list<int> w) { return peak_set(Permutation(w)); }

}  // namespace

TEST(Permutation, RejectsNonPermutations) {
  EXPECT_THROW(Permutation(std::vector<int>{}), ArgumentError);
  EXPECT_THROW(Permutation({1, 1}), ArgumentError);
  EXPECT_THROW(Permutation({0, 1}), ArgumentError);
  EXPECT_THROW(Permutation({1, 3}), ArgumentError);
  EXPECT_NO_THROW(Permutation({2, 1}));
}

TEST(Permutation, OneBasedAccess) {
  const Permutation p{3, 1, 2};
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(p(3), 2);
  EXPECT_THROW(p(4), std::out_of_range);
}

TEST(PeakSetType, SortsAndRejectsBadIndices) {
  const PeakSet s{4, 2};
  EXPECT_EQ(std::vector<int>(s.indices().begin(), s.indices().end()), (std::vector<int>{2, 4}));
  EXPECT_EQ(s.max(), 4);
  EXPECT_EQ(s.index_sum(), 6);
  EXPECT_EQ(PeakSet{}.max(), 0);
  EXPECT_THROW((PeakSet{2, 2}), ArgumentError);
  EXPECT_THROW((PeakSet{0}), ArgumentError);
  EXPECT_THROW((PeakSet{-3}), ArgumentError);
}

TEST(PeakSetType, WithWithout) {
  const PeakSet s{2};
  EXPECT_EQ(s.with(4), (PeakSet{2, 4}));
  EXPECT_EQ(s.with(2), s);
  EXPECT_EQ((PeakSet{2, 4}).without(4), s);
  EXPECT_EQ(s.without(7), s);
}

TEST(PeakSetType, WellFormed) {
  EXPECT_TRUE(PeakSet{}.is_well_formed());
  EXPECT_TRUE((PeakSet{2, 4, 6}).is_well_formed());
  EXPECT_FALSE((PeakSet{1}).is_well_formed());
  EXPECT_FALSE((PeakSet{2, 3}).is_well_formed());
}

TEST(PeakSetOf, Examples) {
  EXPECT_EQ(peaks({5, 4, 2, 1, 3}), PeakSet{});
  EXPECT_EQ(peaks({4, 5, 2, 1, 3}), PeakSet{2});
  EXPECT_EQ(peaks({2, 5, 4, 1, 3}), PeakSet{2});
  EXPECT_EQ(peaks({1, 3, 2}), PeakSet{2});
  EXPECT_EQ(peaks({1, 2, 3, 4, 5, 6}), PeakSet{});
  EXPECT_EQ(peaks({1}), PeakSet{});
  EXPECT_EQ(peaks({1, 3, 2, 5, 4}), (PeakSet{2, 4}));
}

TEST(PeakSetOf, GenericWordsIncludingNegatives) {
  const std::vector<int> w{0, 2, -1, 3, 1};
  EXPECT_EQ(peaks_of<int>(w), (PeakSet{2, 4}));
}

TEST(Flatten, Examples) {
  EXPECT_EQ(flatten(std::vector<int>{5, 6, 3}), (Permutation{2, 3, 1}));
  EXPECT_EQ(flatten(std::vector<int>{20, 18, 13}), (Permutation{3, 2, 1}));
  const Permutation flat{2, 4, 1, 3};
  EXPECT_EQ(flatten(flat.word()), flat);
  EXPECT_EQ(flatten(std::vector<int>{-4, 7, 0}), (Permutation{1, 3, 2}));
}

TEST(Flatten, Errors) {
  EXPECT_THROW(flatten(std::vector<int>{}), ArgumentError);
  EXPECT_THROW(flatten(std::vector<int>{3, 1, 3}), ArgumentError);
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible(PeakSet{2}, 3));
  for (int n = 1; n <= 8; ++n) EXPECT_FALSE(is_admissible(PeakSet{1}, n));
  EXPECT_FALSE(is_admissible((PeakSet{2, 3}), 5));
  EXPECT_FALSE(is_admissible(PeakSet{3}, 3));
  EXPECT_TRUE(is_admissible(PeakSet{}, 1));
  EXPECT_THROW(is_admissible(PeakSet{}, 0), ArgumentError);
}

TEST(EnumerateSn, SmallCases) {
  std::vector<Permutation> all;
  for (const Permutation& p : enumerate_sn(3)) all.push_back(p);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front(), (Permutation{1, 2, 3}));
  EXPECT_EQ(all.back(), (Permutation{3, 2, 1}));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));

  std::vector<Permutation> one;
  for (const Permutation& p : enumerate_sn(1)) one.push_back(p);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.front(), Permutation{1});
}

TEST(EnumerateSn, FiveHasTwentyFourWithPeakSetTwo) {
  int total = 0, with2 = 0;
  for (const Permutation& p : enumerate_sn(5)) {
    ++total;
    if (peak_set(p) == PeakSet{2}) ++with2;
  }
  EXPECT_EQ(total, 120);
  EXPECT_EQ(with2, 24);
}

TEST(EnumerateSn, Caps) {
  EXPECT_THROW(enumerate_sn(0), ArgumentError);
  EXPECT_THROW(enumerate_sn(11), ResourceLimitError);
  EnumerationLimits raised;
  raised.max_sn = 20;
  try {
    enumerate_sn(13, raised);
    FAIL() << "hard ceiling not enforced";
  } catch (const ResourceLimitError& e) {
    EXPECT_EQ(e.cap(), EnumerationLimits::kHardMaxSn);
    EXPECT_NE(std::string(e.what()).find("12"), std::string::npos);
  }
  EnumerationLimits tight;
  tight.max_sn = 4;
  EXPECT_THROW(enumerate_sn(5, tight), ResourceLimitError);
}

TEST(Factorial, Values) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(factorial(25).str(), "15511210043330985984000000");
}
