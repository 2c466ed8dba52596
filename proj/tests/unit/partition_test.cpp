#include <gtest/gtest.h>

#include "oclat/error.hpp"
#include "oclat/partition.hpp"
#include "oclat/word.hpp"
#include "oracles.hpp"

namespace oclat {
namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) {
    out.emplace_back(p.parts().begin(), p.parts().end());
  }
  return out;
}

TEST(Partition, EnumerateSmall) {
  EXPECT_EQ(parts_of(enumerate_partitions(3, 2)), (std::vector<std::vector<int>>{{2, 1}}));
  EXPECT_EQ(parts_of(enumerate_partitions(4, 2)), (std::vector<std::vector<int>>{{3, 1}, {2, 2}}));
  EXPECT_EQ(parts_of(enumerate_partitions(5, 5)), (std::vector<std::vector<int>>{{1, 1, 1, 1, 1}}));
}

TEST(Partition, EnumerateMatchesCompositionOracle) {
  for (int n = 2; n <= 9; ++n) {
    for (int m = 2; m <= n; ++m) {
      EXPECT_EQ(parts_of(enumerate_partitions(n, m)), oracle::partitions(n, m)) << n << "," << m;
    }
  }
}

TEST(Partition, EnumerateRejectsBadRanges) {
  EXPECT_THROW(enumerate_partitions(3, 1), DomainError);
  EXPECT_THROW(enumerate_partitions(3, 4), DomainError);
}

TEST(Partition, Arithmetic) {
  const Partition p21({2, 1});
  EXPECT_EQ(q_of(p21), 1);
  EXPECT_EQ(r_of(p21), 2);
  EXPECT_EQ(delta_of(p21), 0);
  EXPECT_EQ(s_of(p21), 1);

  const Partition p22({2, 2});
  EXPECT_EQ(q_of(p22), 0);
  EXPECT_EQ(delta_of(p22), 1);

  const Partition p111({1, 1, 1});
  EXPECT_EQ(q_of(p111), 3);
  EXPECT_EQ(r_of(p111), 0);
  EXPECT_EQ(delta_of(p111), 1);
  EXPECT_EQ(s_of(p111), 0);

  const Partition p3211({3, 2, 1, 1});
  EXPECT_EQ(r_of(p3211), 5);
  EXPECT_EQ(s_of(p3211), 2);
  EXPECT_EQ(r_of(Partition({1, 1})), 0);
}

TEST(Partition, Invariants) {
  for (const auto& p : enumerate_lambda(8)) {
    int big = 0;
    for (int part : p.parts()) {
      big += part > 1 ? 1 : 0;
    }
    EXPECT_EQ(q_of(p) + big, p.m());
    EXPECT_EQ(q_of(p) + r_of(p), p.n());
    EXPECT_GE(s_of(p), 0);
    if (r_of(p) <= q_of(p) + delta_of(p)) {
      EXPECT_EQ(s_of(p), 0);
    }
  }
}

TEST(Partition, Extend) {
  const Partition p21({2, 1});
  EXPECT_EQ(extend(p21, 0), p21);
  EXPECT_EQ(extend(p21, 2), Partition({2, 1, 1, 1}));
  EXPECT_EQ(extend(Partition({1, 1}), 1), Partition({1, 1, 1}));
  EXPECT_EQ(extend(extend(p21, 1), 2), extend(p21, 3));
  EXPECT_EQ(extend(p21, 3).n(), 6);
  EXPECT_EQ(extend(p21, 3).m(), 5);
}

TEST(Partition, TransversalSizeMatchesWordCount) {
  EXPECT_EQ(transversal_size(Partition({2, 1})), 3u);
  EXPECT_EQ(transversal_size(Partition({2, 2})), 6u);
  EXPECT_EQ(transversal_size(Partition({1, 1})), 2u);
  for (const auto& p : enumerate_lambda(7)) {
    EXPECT_EQ(transversal_size(p), transversal(p).words.size()) << to_string(p);
  }
}

TEST(Partition, TransversalSizeOverflow) {
  std::vector<int> ones(30, 1);
  EXPECT_THROW(transversal_size(Partition(ones)), OverflowError);
}

TEST(Partition, TextForm) {
  EXPECT_EQ(to_string(Partition({2, 1, 1})), "2,1,1");
  EXPECT_EQ(parse_partition("3,2"), Partition({3, 2}));
  EXPECT_THROW(parse_partition("1,2"), Error);
  EXPECT_THROW(parse_partition("2, 1"), Error);
  EXPECT_THROW(parse_partition(""), Error);
  EXPECT_THROW(Partition({2, 0}), DomainError);
}

}  // namespace
}  // namespace oclat
