#include <gtest/gtest.h>

#include "oclat/error.hpp"
#include "oclat/permutation.hpp"
#include "oclat/word.hpp"
#include "oracles.hpp"

namespace oclat {
namespace {

TEST(Word, Counts) {
  EXPECT_EQ(letter_count(parse_word("112"), 1), 2);
  EXPECT_EQ(letter_count(parse_word("112"), 3), 0);
  EXPECT_EQ(letter_count(parse_word("12"), 2), 1);
  EXPECT_THROW(letter_count(parse_word("12"), 0), DomainError);
}

TEST(Word, PartitionOf) {
  EXPECT_EQ(partition_of(parse_word("112")), Partition({2, 1}));
  EXPECT_EQ(partition_of(parse_word("123")), Partition({1, 1, 1}));
  EXPECT_EQ(partition_of(parse_word("1111")), Partition({4}));
}

TEST(Word, Balanced) {
  EXPECT_TRUE(is_balanced(parse_word("112"), parse_word("121")));
  EXPECT_FALSE(is_balanced(parse_word("112"), parse_word("122")));
  EXPECT_TRUE(is_balanced(parse_word("2131"), parse_word("2131")));
  EXPECT_THROW(BalancedIdentity(parse_word("112"), parse_word("122")), DomainError);
}

TEST(Word, TransversalExamples) {
  auto text = [](const Transversal& t) {
    std::vector<std::string> out;
    for (const auto& w : t.words) {
      out.push_back(to_string(w));
    }
    return out;
  };
  EXPECT_EQ(text(transversal(Partition({2, 1}))), (std::vector<std::string>{"112", "121", "211"}));
  EXPECT_EQ(text(transversal(Partition({1, 1}))), (std::vector<std::string>{"12", "21"}));
  EXPECT_EQ(transversal(Partition({1, 1, 1})).words.size(), 6u);
}

TEST(Word, TransversalAgainstOracle) {
  for (const auto& p : enumerate_lambda(7)) {
    const auto t = transversal(p);
    std::vector<std::string> got;
    for (const auto& w : t.words) {
      got.push_back(to_string(w));
      EXPECT_EQ(t.words[t.index_of(w)], w);
    }
    EXPECT_EQ(got, oracle::words({p.parts().begin(), p.parts().end()})) << to_string(p);
  }
}

TEST(Word, TransversalCaps) {
  EXPECT_THROW(transversal(Partition({1, 1, 1, 1}), 10), CapExceeded);
  EXPECT_THROW(transversal(Partition({3})), DomainError);
}

TEST(Word, ApplyPermutation) {
  EXPECT_EQ(apply_permutation(parse_permutation("(2 3)", 3), parse_word("1123")), parse_word("1132"));
  EXPECT_EQ(apply_permutation(parse_permutation("(1 2)", 2), parse_word("12")), parse_word("21"));
  EXPECT_EQ(apply_permutation(Permutation::identity(3), parse_word("312")), parse_word("312"));
  EXPECT_THROW(apply_permutation(parse_permutation("(1 2)", 2), parse_word("13")), DomainError);
}

TEST(Word, TextForms) {
  EXPECT_EQ(parse_word("1,1,2"), parse_word("112"));
  EXPECT_EQ(to_string(parse_word("1,10,2")), "1,10,2");
  EXPECT_THROW(parse_word(""), Error);
  EXPECT_THROW(parse_word("102"), Error);
  const auto e = parse_identity("112=121");
  EXPECT_EQ(to_string(e), "112=121");
  EXPECT_THROW(parse_identity("112"), Error);
  EXPECT_THROW(parse_identity("112=122"), Error);
}

}  // namespace
}  // namespace oclat
