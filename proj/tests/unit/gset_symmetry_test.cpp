#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "oclat/error.hpp"
#include "oclat/gset.hpp"
#include "oclat/gset_symmetry.hpp"

namespace oclat {
namespace {

std::vector<Congruence> every_free_congruence(const GSet& a) {
  std::vector<Congruence> out;
  for_each_free_congruence(a, [&](const Congruence& c) { out.push_back(c); });
  return out;
}

TEST(FreeGSet, CountsMatchEnumeration) {
  for (const auto& p : {Partition({2, 1}), Partition({2, 2}), Partition({3, 1}),
                        Partition({1, 1, 1}), Partition({2, 1, 1}), Partition({3, 2})}) {
    const auto a = from_transversal(p);
    const auto all = all_congruences(a, {.strategy = ConStrategy::principal_join});
    EXPECT_EQ(count_congruences_free(a), all.size()) << to_string(p);
    auto visited = every_free_congruence(a);
    std::sort(visited.begin(), visited.end());
    EXPECT_EQ(visited, all) << to_string(p);
  }
}

TEST(FreeGSet, RegularActions) {
  EXPECT_EQ(count_congruences_free(GSet::regular(symmetric_group(4))), 30u);
  EXPECT_EQ(count_congruences_free(GSet::regular(symmetric_group(5))), 156u);
}

TEST(FreeGSet, LargeCounts) {
  EXPECT_EQ(count_congruences_free(from_transversal(Partition({3, 1, 1}))), 36738144u);
  EXPECT_EQ(count_congruences_free(from_transversal(Partition({2, 2, 1}))), 7186474088735u);
  EXPECT_EQ(count_greedy_congruences(from_transversal(Partition({3, 1, 1}))), 678570u);
  EXPECT_EQ(count_greedy_congruences(from_transversal(Partition({2, 2, 1}))), 10480142147u);
}

TEST(FreeGSet, AutomorphismGenerators) {
  const auto a = from_transversal(Partition({2, 1, 1}));
  for (const auto& g : automorphism_generators(a)) {
    EXPECT_TRUE(is_automorphism(a, g));
  }
  std::vector<std::uint32_t> bad(a.size());
  std::iota(bad.begin(), bad.end(), 0);
  std::swap(bad[0], bad[1]);
  std::swap(bad[2], bad[5]);
  EXPECT_FALSE(is_automorphism(a, bad));
  const GSet not_free({"a", "b", "c"}, symmetric_group(2), {{0, 1, 2}, {1, 0, 2}});
  EXPECT_THROW(automorphism_generators(not_free), PreconditionError);
}

// Representatives must hit each automorphism class once; the classes are
// recomputed by orbit search over the full list.
TEST(FreeGSet, RepresentativesMatchOrbitSearch) {
  for (const auto& p : {Partition({2, 2}), Partition({2, 1, 1}), Partition({1, 1, 1})}) {
    const auto a = from_transversal(p);
    const auto all = all_congruences(a, {.strategy = ConStrategy::principal_join});
    const auto gens = automorphism_generators(a);
    const auto classes = orbit_representatives(all, gens);
    const auto reps = free_congruence_representatives(a);
    EXPECT_EQ(reps.size(), classes.size()) << to_string(p);

    std::map<Congruence, std::size_t> class_of;
    for (std::size_t i = 0; i < all.size(); ++i) {
      class_of[all[i]] = i;
    }
    // Map every congruence to its class representative by closure.
    std::vector<std::size_t> owner(all.size(), all.size());
    for (std::size_t r : classes) {
      std::vector<std::size_t> stack{r};
      owner[r] = r;
      while (!stack.empty()) {
        const auto i = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
          const auto j = class_of.at(apply_map(all[i], g));
          if (owner[j] == all.size()) {
            owner[j] = r;
            stack.push_back(j);
          }
        }
      }
    }
    std::set<std::size_t> hit;
    for (const auto& rep : reps) {
      EXPECT_TRUE(is_congruence(a, rep));
      EXPECT_TRUE(hit.insert(owner[class_of.at(rep)]).second) << "two reps in one class";
    }
  }
}

TEST(FreeGSet, KnownRepresentativeCounts) {
  EXPECT_EQ(free_congruence_representatives(from_transversal(Partition({2, 2}))).size(), 10u);
  EXPECT_EQ(free_congruence_representatives(from_transversal(Partition({2, 1, 1}))).size(), 65u);
  EXPECT_EQ(greedy_congruence_representatives(from_transversal(Partition({2, 2}))).size(), 7u);
  EXPECT_EQ(greedy_congruence_representatives(from_transversal(Partition({2, 1, 1}))).size(), 30u);
}

TEST(FreeGSet, GreedyRepresentativesAreGreedy) {
  const auto a = from_transversal(Partition({3, 1, 1}));
  const auto reps = greedy_congruence_representatives(a);
  EXPECT_EQ(reps.size(), 139u);
  for (const auto& r : reps) {
    EXPECT_TRUE(is_congruence(a, r));
    EXPECT_TRUE(is_greedy_congruence(a, r));
  }
}

TEST(FreeGSet, GreedyEnumerationCap) {
  EXPECT_THROW(enumerate_greedy_congruences(from_transversal(Partition({3, 1, 1})), 1000),
               CapExceeded);
}

}  // namespace
}  // namespace oclat
