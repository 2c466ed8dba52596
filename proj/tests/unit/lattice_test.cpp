#include <gtest/gtest.h>

#include "oclat/error.hpp"
#include "oclat/lattice.hpp"
#include "oclat/set_partition.hpp"
#include "oracles.hpp"

namespace oclat {
namespace {

// 0 < a < b < 1 and 0 < c < 1.
FiniteLattice pentagon() {
  //                 0      a      b      c      1
  FiniteLattice::Matrix leq{{true, true, true, true, true},
                            {false, true, true, false, true},
                            {false, false, true, false, true},
                            {false, false, false, true, true},
                            {false, false, false, false, true}};
  return FiniteLattice::from_order(leq, {"0", "a", "b", "c", "1"});
}

std::size_t some_atom(const FiniteLattice& l) {
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x != l.bottom() && x != l.top()) {
      return x;
    }
  }
  return l.size();
}

TEST(SetPartition, CanonicalForm) {
  const std::vector<std::uint32_t> raw{7, 3, 7, 9};
  const auto p = SetPartition::from_labels(raw);
  EXPECT_EQ(std::vector<std::uint32_t>(p.labels().begin(), p.labels().end()),
            (std::vector<std::uint32_t>{0, 1, 0, 2}));
  EXPECT_EQ(p.block_count(), 3u);
  EXPECT_EQ(p.blocks(), (std::vector<std::vector<std::size_t>>{{0, 2}, {1}, {3}}));
  EXPECT_THROW(SetPartition::from_blocks(3, {{0, 1}}), DomainError);
  EXPECT_THROW(SetPartition::from_blocks(3, {{0, 1}, {1, 2}}), DomainError);
}

TEST(SetPartition, BellNumbersAgainstOracle) {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(all_set_partitions(n).size(), bell[n]);
    EXPECT_EQ(oracle::equivalences(n).size(), bell[n]);
  }
}

TEST(SetPartition, JoinMeetAgainstRelations) {
  const auto all = all_set_partitions(4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto ra = oracle::relation_of(a);
      const auto rb = oracle::relation_of(b);
      const auto rm = oracle::relation_of(meet(a, b));
      const auto rj = oracle::relation_of(join(a, b));
      for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = 0; y < 4; ++y) {
          EXPECT_EQ(rm[x][y], ra[x][y] && rb[x][y]);
          if (ra[x][y] || rb[x][y]) {
            EXPECT_TRUE(rj[x][y]);
          }
        }
      }
      EXPECT_TRUE(refines(a, join(a, b)));
      EXPECT_TRUE(refines(b, join(a, b)));
      for (const auto& c : all) {
        if (refines(a, c) && refines(b, c)) {
          EXPECT_TRUE(refines(join(a, b), c));
        }
      }
    }
  }
}

TEST(Lattice, Axioms) {
  EXPECT_TRUE(verify_lattice_axioms(chain(2)));
  EXPECT_TRUE(verify_lattice_axioms(eq_lattice(3)));
  EXPECT_TRUE(verify_lattice_axioms(pentagon()));
}

TEST(Lattice, NonAssociativeJoinTable) {
  // A 4-element set with a broken join table.
  FiniteLattice::Matrix leq{{true, true, true, true},
                            {false, true, false, true},
                            {false, false, true, true},
                            {false, false, false, true}};
  FiniteLattice::Table join{{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
  FiniteLattice::Table meet{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  join[1][2] = 1;
  join[2][1] = 1;
  const auto report = verify_lattice_axioms(FiniteLattice::from_tables(leq, join, meet));
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.violation.empty());
  EXPECT_FALSE(report.witness.empty());
}

TEST(Lattice, FromOrderRejectsNonLattice) {
  // Two maximal elements.
  FiniteLattice::Matrix leq{{true, true, true}, {false, true, false}, {false, false, true}};
  EXPECT_THROW(FiniteLattice::from_order(leq), DomainError);
}

TEST(Lattice, EqLatticeSizes) {
  EXPECT_EQ(eq_lattice(2).size(), 2u);
  EXPECT_EQ(eq_lattice(3).size(), 5u);
  EXPECT_EQ(eq_lattice(4).size(), 15u);
  EXPECT_TRUE(is_isomorphic(eq_lattice(2), chain(2)).has_value());
  EXPECT_THROW(eq_lattice(kMaxEqLatticePoints + 1), CapExceeded);
}

TEST(Lattice, DiamondAtom) {
  const auto d = eq_lattice(3);
  const std::size_t a = some_atom(d);
  const auto canc = is_cancellable_element(d, a);
  EXPECT_FALSE(canc.holds);
  ASSERT_EQ(canc.witness.size(), 2u);
  const auto y = canc.witness[0];
  const auto z = canc.witness[1];
  EXPECT_NE(y, z);
  EXPECT_EQ(d.join(a, y), d.join(a, z));
  EXPECT_EQ(d.meet(a, y), d.meet(a, z));

  const auto c = classify(d, a);
  EXPECT_FALSE(c.cancellable.holds);
  EXPECT_FALSE(c.distributive.holds);
  EXPECT_FALSE(c.codistributive.holds);
  EXPECT_FALSE(c.standard.holds);
  EXPECT_FALSE(c.costandard.holds);
  EXPECT_FALSE(c.neutral.holds);
  EXPECT_TRUE(c.modular.holds);
}

TEST(Lattice, PentagonIncomparable) {
  const auto p = pentagon();
  const std::size_t c = 3;
  const auto m = is_modular_element(p, c);
  EXPECT_FALSE(m.holds);
  ASSERT_EQ(m.witness.size(), 2u);
  EXPECT_EQ(m.witness[0], 1u);
  EXPECT_EQ(m.witness[1], 2u);
  const auto cls = classify(p, c);
  EXPECT_FALSE(cls.cancellable.holds || cls.standard.holds || cls.costandard.holds ||
               cls.modular.holds || cls.neutral.holds);
  // c is distributive and codistributive without being modular.
  EXPECT_TRUE(cls.distributive.holds);
  EXPECT_TRUE(cls.codistributive.holds);
}

TEST(Lattice, BoundsAndChains) {
  for (const auto& l : {chain(1), chain(4), eq_lattice(3), pentagon()}) {
    const auto b = classify(l, l.bottom());
    EXPECT_TRUE(b.cancellable.holds && b.distributive.holds && b.codistributive.holds &&
                b.standard.holds && b.costandard.holds && b.modular.holds && b.neutral.holds);
    EXPECT_TRUE(is_codistributive_element(l, l.top()).holds);
    EXPECT_TRUE(is_distributive_element(l, l.top()).holds);
  }
  const auto c = chain(5);
  for (std::size_t x = 0; x < c.size(); ++x) {
    EXPECT_TRUE(is_neutral_element(c, x).holds);
    EXPECT_TRUE(is_standard_element(c, x).holds);
    EXPECT_TRUE(is_costandard_element(c, x).holds);
  }
}

// Every predicate against its textbook definition on every lattice with at
// most 6 elements and the partition lattice on 4 points.
TEST(Lattice, PredicatesAgainstDefinitions) {
  auto pool = all_small_lattices(6);
  pool.push_back(eq_lattice(4));
  for (const auto& l : pool) {
    const auto p = oracle::poset_of(l);
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::size_t b = 0; b < l.size(); ++b) {
        ASSERT_EQ(l.join(a, b), p.join(a, b));
        ASSERT_EQ(l.meet(a, b), p.meet(a, b));
      }
    }
    for (std::size_t x = 0; x < l.size(); ++x) {
      EXPECT_EQ(is_cancellable_element(l, x).holds, oracle::cancellable(p, x));
      EXPECT_EQ(is_distributive_element(l, x).holds, oracle::distributive(p, x));
      EXPECT_EQ(is_codistributive_element(l, x).holds, oracle::codistributive(p, x));
      EXPECT_EQ(is_standard_element(l, x).holds, oracle::standard(p, x));
      EXPECT_EQ(is_costandard_element(l, x).holds, oracle::costandard(p, x));
      EXPECT_EQ(is_modular_element(l, x).holds, oracle::modular(p, x));
      EXPECT_EQ(is_neutral_by_median(l, x).holds, oracle::neutral(p, x));
      EXPECT_EQ(is_neutral_by_sublattice(l, x).holds, oracle::neutral(p, x));
    }
  }
}

// Counts of lattices up to isomorphism on 1..7 elements.
TEST(Lattice, SmallLatticeCounts) {
  const std::size_t expected[] = {1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    for (const auto& l : all_small_lattices(7)) {
      count += l.size() == n ? 1 : 0;
    }
    EXPECT_EQ(count, expected[n - 1]) << n;
  }
}

TEST(Lattice, DualAndIsomorphism) {
  const auto p = pentagon();
  EXPECT_TRUE(is_anti_isomorphic(p, dual(p)).has_value());
  EXPECT_TRUE(is_isomorphic(p, dual(p)).has_value());
  EXPECT_FALSE(is_isomorphic(p, eq_lattice(3)).has_value());
  const auto map = is_isomorphic(eq_lattice(3), eq_lattice(3));
  ASSERT_TRUE(map.has_value());
  const auto d = eq_lattice(3);
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = 0; b < d.size(); ++b) {
      EXPECT_EQ(d.leq(a, b), d.leq((*map)[a], (*map)[b]));
    }
  }
}

TEST(Lattice, Covers) {
  const auto cov = covers(chain(4));
  EXPECT_EQ(cov.size(), 3u);
  EXPECT_EQ(covers(eq_lattice(3)).size(), 6u);
  EXPECT_EQ(covers(pentagon()).size(), 5u);
}

}  // namespace
}  // namespace oclat
