#include "oclat/io.hpp"

#include <sstream>

#include "oclat/error.hpp"

namespace oclat {

using nlohmann::json;

nlohmann::json congruence_to_json(const GSet& a, const Congruence& alpha) {
  if (alpha.size() != a.size()) {
    throw DomainError("congruence size differs from the carrier");
  }
  return json{{"carrier", a.labels()}, {"blocks", alpha.blocks()}};
}

LabeledCongruence congruence_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("carrier") || !j.contains("blocks")) {
    throw ParseError("congruence JSON needs \"carrier\" and \"blocks\"");
  }
  LabeledCongruence out;
  try {
    out.carrier = j.at("carrier").get<std::vector<std::string>>();
    const auto blocks = j.at("blocks").get<std::vector<std::vector<std::size_t>>>();
    out.congruence = SetPartition::from_blocks(out.carrier.size(), blocks);
  } catch (const json::exception& e) {
    throw ParseError(std::string("congruence JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("congruence JSON: ") + e.what());
  }
  return out;
}

nlohmann::json lattice_to_json(const FiniteLattice& lattice) {
  json j{{"size", lattice.size()}, {"leq", lattice.order_matrix()}};
  if (!lattice.labels().empty()) {
    j["labels"] = lattice.labels();
  }
  return j;
}

FiniteLattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("leq")) {
    throw ParseError("lattice JSON needs \"size\" and \"leq\"");
  }
  FiniteLattice::Matrix leq;
  std::vector<std::string> labels;
  std::size_t size = 0;
  try {
    size = j.at("size").get<std::size_t>();
    leq = j.at("leq").get<FiniteLattice::Matrix>();
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("lattice JSON: ") + e.what());
  }
  if (leq.size() != size) {
    throw ParseError("lattice JSON: \"leq\" has " + std::to_string(leq.size()) + " rows, size is " +
                     std::to_string(size));
  }
  for (const auto& row : leq) {
    if (row.size() != size) {
      throw ParseError("lattice JSON: \"leq\" is not square");
    }
  }
  if (!labels.empty() && labels.size() != size) {
    throw ParseError("lattice JSON: \"labels\" length differs from size");
  }
  return FiniteLattice::from_order(leq, std::move(labels));
}

nlohmann::json congruence_lattice_to_json(const GSet& a, std::span<const Congruence> congruences,
                                          const FiniteLattice& lattice) {
  if (congruences.size() != lattice.size()) {
    throw DomainError("lattice size differs from the number of congruences");
  }
  json blocks = json::array();
  for (const auto& c : congruences) {
    if (c.size() != a.size()) {
      throw DomainError("congruence size differs from the carrier");
    }
    blocks.push_back(c.blocks());
  }
  return json{{"carrier", a.labels()}, {"congruences", std::move(blocks)},
              {"lattice", lattice_to_json(lattice)}};
}

LabeledCongruenceLattice congruence_lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("carrier") || !j.contains("congruences") ||
      !j.contains("lattice")) {
    throw ParseError("congruence lattice JSON needs \"carrier\", \"congruences\" and \"lattice\"");
  }
  std::vector<std::string> carrier;
  std::vector<Congruence> congruences;
  try {
    carrier = j.at("carrier").get<std::vector<std::string>>();
    for (const auto& b : j.at("congruences")) {
      congruences.push_back(SetPartition::from_blocks(
          carrier.size(), b.get<std::vector<std::vector<std::size_t>>>()));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("congruence lattice JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("congruence lattice JSON: ") + e.what());
  }
  FiniteLattice lattice = lattice_from_json(j.at("lattice"));
  if (lattice.size() != congruences.size()) {
    throw ParseError("congruence lattice JSON: lattice size differs from the congruence count");
  }
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    for (std::size_t y = 0; y < lattice.size(); ++y) {
      if (lattice.leq(x, y) != refines(congruences[x], congruences[y])) {
        throw ParseError("congruence lattice JSON: \"leq\" is not the refinement order");
      }
    }
  }
  return {std::move(carrier), std::move(congruences), std::move(lattice)};
}

std::string classification_flags(const ElementClassification& c) {
  std::string out;
  auto add = [&](bool holds, const char* name) {
    if (holds) {
      if (!out.empty()) {
        out += ' ';
      }
      out += name;
    }
  };
  add(c.neutral.holds, "neut");
  add(c.standard.holds, "std");
  add(c.costandard.holds, "costd");
  add(c.distributive.holds, "dist");
  add(c.codistributive.holds, "codist");
  add(c.cancellable.holds, "canc");
  add(c.modular.holds, "mod");
  return out.empty() ? "-" : out;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out += '\\';
    }
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string lattice_to_dot(const FiniteLattice& lattice, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph " << dot_quote(options.graph_name) << " {\n";
  out << "  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << "  n" << i << " [label=" << dot_quote(lattice.label(i));
    if (options.classification_tooltips) {
      out << ", tooltip=" << dot_quote(classification_flags(classify(lattice, i)));
    }
    out << "];\n";
  }
  for (const auto& [lo, hi] : covers(lattice)) {
    out << "  n" << lo << " -> n" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace oclat
