#include <gtest/gtest.h>

#include "oclat/error.hpp"
#include "oclat/io.hpp"

namespace oclat {
namespace {

TEST(Io, CongruenceRoundTrip) {
  const auto a = from_transversal(Partition({2, 2}));
  for (const auto& c : all_congruences(a)) {
    const auto j = congruence_to_json(a, c);
    const auto back = congruence_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.carrier, a.labels());
    EXPECT_EQ(back.congruence, c);
  }
}

TEST(Io, CongruenceJsonShape) {
  const auto a = from_transversal(Partition({2, 1}));
  const auto c = SetPartition::from_blocks(3, {{0, 1}, {2}});
  EXPECT_EQ(congruence_to_json(a, c).dump(),
            R"({"blocks":[[0,1],[2]],"carrier":["112","121","211"]})");
}

TEST(Io, CongruenceRejectsMalformed) {
  using nlohmann::json;
  EXPECT_THROW(congruence_from_json(json::array()), ParseError);
  EXPECT_THROW(congruence_from_json(json{{"carrier", {"1"}}}), ParseError);
  EXPECT_THROW(congruence_from_json(json{{"carrier", {"a", "b"}}, {"blocks", {{0}}}}), ParseError);
  EXPECT_THROW(congruence_from_json(json{{"carrier", {"a"}}, {"blocks", "x"}}), ParseError);
}

TEST(Io, LatticeRoundTrip) {
  for (const auto& l : {chain(3), eq_lattice(4), subgroup_lattice(symmetric_group(3))}) {
    const auto back = lattice_from_json(nlohmann::json::parse(lattice_to_json(l).dump()));
    EXPECT_EQ(back, l);
    EXPECT_EQ(back.labels(), l.labels());
  }
  EXPECT_EQ(lattice_to_json(chain(2)).dump(), R"({"leq":[[true,true],[false,true]],"size":2})");
}

TEST(Io, LatticeRejectsMalformed) {
  using nlohmann::json;
  EXPECT_THROW(lattice_from_json(json{{"size", 2}}), ParseError);
  EXPECT_THROW(lattice_from_json(json{{"size", 2}, {"leq", {{true}}}}), ParseError);
  EXPECT_THROW(lattice_from_json(json{{"size", 2}, {"leq", {{true, true}, {true}}}}), ParseError);
  // An antichain of two elements is not a lattice.
  EXPECT_THROW(lattice_from_json(json{{"size", 2}, {"leq", {{true, false}, {false, true}}}}),
               DomainError);
}

TEST(Io, CongruenceLatticeRoundTrip) {
  const auto a = from_transversal(Partition({3, 1}));
  const auto cs = all_congruences(a);
  const auto l = congruence_lattice(a, cs);
  const auto back =
      congruence_lattice_from_json(nlohmann::json::parse(congruence_lattice_to_json(a, cs, l).dump()));
  EXPECT_EQ(back.carrier, a.labels());
  EXPECT_EQ(back.congruences, cs);
  EXPECT_EQ(back.lattice, l);

  auto j = congruence_lattice_to_json(a, cs, l);
  j["lattice"] = lattice_to_json(dual(l));
  EXPECT_THROW(congruence_lattice_from_json(j), ParseError);
}

TEST(Io, Dot) {
  const auto dot = lattice_to_dot(eq_lattice(3), {.graph_name = "P3"});
  EXPECT_EQ(dot.rfind("digraph \"P3\" {", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) {
    ++edges;
  }
  EXPECT_EQ(edges, 6u);
  EXPECT_NE(dot.find("tooltip=\"mod\""), std::string::npos);
  const auto plain = lattice_to_dot(chain(2), {.classification_tooltips = false});
  EXPECT_EQ(plain.find("tooltip"), std::string::npos);
}

}  // namespace
}  // namespace oclat
