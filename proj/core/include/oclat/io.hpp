#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oclat/gset.hpp"
#include "oclat/lattice.hpp"
#include "oclat/set_partition.hpp"

namespace oclat {

// {"carrier": [word strings], "blocks": [[indices]]}
nlohmann::json congruence_to_json(const GSet& a, const Congruence& alpha);

struct LabeledCongruence {
  std::vector<std::string> carrier;
  Congruence congruence;

  friend bool operator==(const LabeledCongruence&, const LabeledCongruence&) = default;
};

// Throws ParseError on a malformed document.
LabeledCongruence congruence_from_json(const nlohmann::json& j);

// {"size": k, "leq": [[bool]]}, plus "labels" when any element has a label.
nlohmann::json lattice_to_json(const FiniteLattice& lattice);

// Rebuilds join and meet from "leq"; throws ParseError on a malformed
// document and DomainError when the order is not a lattice.
FiniteLattice lattice_from_json(const nlohmann::json& j);

// {"carrier": [...], "congruences": [[[indices]]], "lattice": {...}}; the
// lattice elements are the congruences in the same order.
nlohmann::json congruence_lattice_to_json(const GSet& a, std::span<const Congruence> congruences,
                                          const FiniteLattice& lattice);

struct LabeledCongruenceLattice {
  std::vector<std::string> carrier;
  std::vector<Congruence> congruences;
  FiniteLattice lattice;
};

// Also checks that "leq" is the refinement order of the congruences.
LabeledCongruenceLattice congruence_lattice_from_json(const nlohmann::json& j);

struct DotOptions {
  std::string graph_name = "lattice";
  // Adds the classify() flags of every node as a tooltip.
  bool classification_tooltips = true;
};

// Hasse diagram, covers only, edges pointing upward.
std::string lattice_to_dot(const FiniteLattice& lattice, const DotOptions& options = {});

// Short flag string such as "canc dist std mod", or "-" when nothing holds.
std::string classification_flags(const ElementClassification& c);

}  // namespace oclat
