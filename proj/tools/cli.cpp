#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oclat/deduction.hpp"
#include "oclat/error.hpp"
#include "oclat/gset.hpp"
#include "oclat/io.hpp"
#include "oclat/lattice.hpp"
#include "oclat/partition.hpp"
#include "oclat/permutation.hpp"
#include "oclat/verify.hpp"
#include "oclat/word.hpp"

namespace oclat::cli {
namespace {

using nlohmann::json;

struct Output {
  std::string format = "text";
  std::string path;
};

struct Options {
  Output output;
  int n = 0;
  std::optional<int> m;
  bool all = false;
  std::string lambda;
  std::vector<std::string> lambdas;
  std::string strategy = "auto";
  std::uint64_t max_carrier = kDefaultMaxCarrier;
  std::size_t max_congruences = kDefaultMaxCongruences;
  int max_length = 5;
  std::string source;
  std::optional<std::size_t> element;
  std::string identities;
  std::vector<std::string> suites;
  std::optional<int> sn;
};

void add_output_options(CLI::App* cmd, Output& o, std::vector<std::string> formats) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  cmd->add_option("--output,-o", o.path, "Write to this file instead of standard output");
}

Partition lambda_arg(const std::string& text) {
  Partition p = [&] {
    try {
      return parse_partition(text);
    } catch (const Error& e) {
      throw UsageError("bad --lambda '" + text + "': " + e.what());
    }
  }();
  if (p.m() < 2) {
    throw UsageError("--lambda " + text + " has fewer than two parts");
  }
  return p;
}

ConOptions con_options(const Options& o) {
  ConOptions c;
  if (o.strategy == "scan") {
    c.strategy = ConStrategy::scan;
  } else if (o.strategy == "principal-join") {
    c.strategy = ConStrategy::principal_join;
  }
  c.max_congruences = o.max_congruences;
  return c;
}

std::string spaced_blocks(const GSet& a, const Congruence& c) {
  std::string out;
  for (const auto& block : c.blocks()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      out += (i ? "," : "") + a.label(block[i]);
    }
    out += '}';
  }
  return out;
}

void write_upper_covers(std::ostream& os, std::size_t x,
                        const std::vector<std::pair<std::size_t, std::size_t>>& cov) {
  bool first = true;
  for (const auto& [lo, hi] : cov) {
    if (lo == x) {
      os << (first ? "  < " : " ") << hi;
      first = false;
    }
  }
}

int cmd_partitions(const Options& o, std::ostream& os) {
  if (o.n < 2) {
    throw UsageError("--n must be at least 2");
  }
  std::vector<Partition> rows;
  if (o.all) {
    if (o.m) {
      throw UsageError("--all and --m are exclusive");
    }
    rows = enumerate_lambda(o.n);
  } else {
    const int m = o.m.value_or(2);
    if (m < 2 || m > o.n) {
      throw UsageError("--m must satisfy 2 <= m <= n");
    }
    rows = enumerate_partitions(o.n, m);
  }
  if (o.output.format == "json") {
    json arr = json::array();
    for (const auto& p : rows) {
      arr.push_back({{"lambda", to_string(p)}, {"n", p.n()}, {"m", p.m()}, {"q", q_of(p)},
                     {"r", r_of(p)}, {"s", s_of(p)}, {"delta", delta_of(p)}});
    }
    os << arr.dump(2) << '\n';
    return kExitOk;
  }
  os << std::left << std::setw(12) << "lambda" << " n  m  q  r  s  delta\n";
  for (const auto& p : rows) {
    os << std::left << std::setw(12) << to_string(p) << ' ' << std::setw(2) << p.n() << ' '
       << std::setw(2) << p.m() << ' ' << std::setw(2) << q_of(p) << ' ' << std::setw(2)
       << r_of(p) << ' ' << std::setw(2) << s_of(p) << ' ' << delta_of(p) << '\n';
  }
  return kExitOk;
}

int cmd_transversal(const Options& o, std::ostream& os) {
  const Partition lambda = lambda_arg(o.lambda);
  const Transversal t = transversal(lambda, o.max_carrier);
  if (o.output.format == "json") {
    json words = json::array();
    for (const auto& w : t.words) {
      words.push_back(to_string(w));
    }
    os << json{{"lambda", to_string(lambda)}, {"words", words}}.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    os << (i ? " " : "") << to_string(t.words[i]);
  }
  os << '\n';
  return kExitOk;
}

int cmd_con(const Options& o, std::ostream& os) {
  const Partition lambda = lambda_arg(o.lambda);
  const GSet a = from_transversal(lambda, o.max_carrier);
  const auto congruences = all_congruences(a, con_options(o));
  const FiniteLattice l = congruence_lattice(a, congruences);
  if (o.output.format == "json") {
    json j = congruence_lattice_to_json(a, congruences, l);
    j["lambda"] = to_string(lambda);
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  if (o.output.format == "dot") {
    os << lattice_to_dot(l, {.graph_name = "Con(W_" + to_string(lambda) + ")"});
    return kExitOk;
  }
  os << "lambda " << to_string(lambda) << ": " << a.size() << " words, " << congruences.size()
     << " congruences\n";
  const auto cov = covers(l);
  for (std::size_t i = 0; i < congruences.size(); ++i) {
    os << i << "  " << spaced_blocks(a, congruences[i]);
    write_upper_covers(os, i, cov);
    os << '\n';
  }
  return kExitOk;
}

int parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError("bad " + what + " '" + text + "'");
  }
  return v;
}

FiniteLattice load_source(const Options& o) {
  const std::string& s = o.source;
  const auto colon = s.find(':');
  const std::string kind = colon == std::string::npos ? "" : s.substr(0, colon);
  const std::string arg = colon == std::string::npos ? s : s.substr(colon + 1);
  if (kind == "con") {
    const GSet a = from_transversal(lambda_arg(arg), o.max_carrier);
    return congruence_lattice(a, all_congruences(a, con_options(o)));
  }
  if (kind == "sub") {
    return subgroup_lattice(symmetric_group(parse_count(arg, "degree")));
  }
  if (kind == "chain") {
    const int n = parse_count(arg, "chain length");
    if (n < 1) {
      throw UsageError("chain length must be positive");
    }
    return chain(static_cast<std::size_t>(n));
  }
  if (kind == "eq") {
    return eq_lattice(parse_count(arg, "point count"));
  }
  const std::string path = kind == "file" ? arg : s;
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open lattice source '" + path + "'");
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (j.is_object() && j.contains("congruences")) {
    return congruence_lattice_from_json(j).lattice;
  }
  return lattice_from_json(j);
}

int cmd_classify(const Options& o, std::ostream& os) {
  const FiniteLattice l = load_source(o);
  if (o.output.format == "dot") {
    os << lattice_to_dot(l);
    return kExitOk;
  }
  std::vector<std::size_t> elements;
  if (o.element) {
    if (*o.element >= l.size()) {
      throw UsageError("--element " + std::to_string(*o.element) + " is out of range; the lattice has " +
                       std::to_string(l.size()) + " elements");
    }
    elements.push_back(*o.element);
  } else {
    for (std::size_t x = 0; x < l.size(); ++x) {
      elements.push_back(x);
    }
  }
  struct Column {
    const char* name;
    ElementTest ElementClassification::*test;
  };
  static const Column columns[] = {
      {"cancellable", &ElementClassification::cancellable},
      {"distributive", &ElementClassification::distributive},
      {"codistributive", &ElementClassification::codistributive},
      {"standard", &ElementClassification::standard},
      {"costandard", &ElementClassification::costandard},
      {"modular", &ElementClassification::modular},
      {"neutral", &ElementClassification::neutral},
  };
  if (o.output.format == "json") {
    json arr = json::array();
    for (std::size_t x : elements) {
      const auto c = classify(l, x);
      json row{{"element", x}, {"label", l.label(x)}};
      json witnesses = json::object();
      for (const auto& col : columns) {
        const ElementTest& t = c.*col.test;
        row[col.name] = t.holds;
        if (!t.holds) {
          witnesses[col.name] = t.witness;
        }
      }
      row["witnesses"] = std::move(witnesses);
      arr.push_back(std::move(row));
    }
    os << json{{"size", l.size()}, {"elements", arr}}.dump(2) << '\n';
    return kExitOk;
  }
  os << "elem  canc dist codist std costd mod neut  label\n";
  for (std::size_t x : elements) {
    const auto c = classify(l, x);
    auto yn = [](const ElementTest& t) { return t.holds ? "Y" : "."; };
    os << std::left << std::setw(6) << x << std::setw(5) << yn(c.cancellable) << std::setw(5)
       << yn(c.distributive) << std::setw(7) << yn(c.codistributive) << std::setw(4)
       << yn(c.standard) << std::setw(6) << yn(c.costandard) << std::setw(4) << yn(c.modular)
       << std::setw(6) << yn(c.neutral) << l.label(x) << '\n';
  }
  return kExitOk;
}

int cmd_subgroups(const Options& o, std::ostream& os) {
  if (o.n < 1) {
    throw UsageError("--n must be at least 1");
  }
  const auto subgroups = all_subgroups(symmetric_group(o.n));
  const FiniteLattice l = subgroup_lattice(subgroups);
  if (o.output.format == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
      json elements = json::array();
      for (const auto& g : subgroups[i].elements()) {
        elements.push_back(to_cycle_string(g));
      }
      arr.push_back({{"label", l.label(i)}, {"order", subgroups[i].order()}, {"elements", elements}});
    }
    os << json{{"n", o.n}, {"subgroups", arr}, {"lattice", lattice_to_json(l)}}.dump(2) << '\n';
    return kExitOk;
  }
  if (o.output.format == "dot") {
    os << lattice_to_dot(l, {.graph_name = "Sub(S_" + std::to_string(o.n) + ")"});
    return kExitOk;
  }
  os << "Sub(S_" << o.n << "): " << subgroups.size() << " subgroups\n";
  const auto cov = covers(l);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    os << i << "  order " << subgroups[i].order() << "  " << l.label(i);
    write_upper_covers(os, i, cov);
    os << '\n';
  }
  return kExitOk;
}

int cmd_deduce(const Options& o, std::ostream& os) {
  const Partition lambda = lambda_arg(o.lambda);
  std::ifstream in(o.identities);
  if (!in) {
    throw UsageError("cannot open identity file '" + o.identities + "'");
  }
  const IdentitySet e = parse_identity_set(in);
  const InducedCongruence ic = induced_congruence(e, lambda, o.max_carrier);
  const GSet a = from_transversal(ic.transversal);
  if (o.output.format == "json") {
    json j = congruence_to_json(a, ic.congruence);
    j["lambda"] = to_string(lambda);
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  os << spaced_blocks(a, ic.congruence) << '\n';
  return kExitOk;
}

std::string flatten_params(const nlohmann::ordered_json& params) {
  std::string out;
  for (const auto& [key, value] : params.items()) {
    out += (out.empty() ? "" : " ") + key + "=" +
           (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

int cmd_verify(const Options& o, std::ostream& os) {
  RunConfig config;
  config.suites = o.suites;
  for (const auto& text : o.lambdas) {
    config.lambdas.push_back(lambda_arg(text));
  }
  config.n_bound = o.max_length;
  if (o.sn) {
    if (*o.sn < 1) {
      throw UsageError("--n must be at least 1");
    }
    config.min_sn = config.max_sn = *o.sn;
  }
  config.slice.max_carrier = o.max_carrier;
  config.slice.con = con_options(o);
  std::size_t failed = 0;
  std::size_t total = 0;
  const bool as_json = o.output.format == "json";
  run_all(config, [&](const VerificationReport& r) {
    ++total;
    if (!r.passed()) {
      ++failed;
    }
    if (as_json) {
      os << to_json_line(r) << '\n';
    } else {
      os << to_string(r.verdict) << "  " << r.statement;
      const std::string params = flatten_params(r.params);
      if (!params.empty()) {
        os << "  " << params;
      }
      os << '\n';
      if (!r.passed()) {
        os << "  witness: " << r.witness.dump() << '\n';
      }
    }
    os.flush();
  });
  if (!as_json) {
    os << (total - failed) << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice, G-set and word-transversal toolkit for overcommutative varieties", "oclat"};
  app.require_subcommand(1);
  Options o;

  auto* partitions = app.add_subcommand("partitions", "List Lambda_{n,m} with q, r, s and delta");
  partitions->add_option("--n", o.n, "Total")->required();
  partitions->add_option("--m", o.m, "Number of parts (default 2)");
  partitions->add_flag("--all", o.all, "Every member of Lambda with total at most n");
  add_output_options(partitions, o.output, {"text", "json"});

  auto* trans = app.add_subcommand("transversal", "List the words of W_lambda");
  trans->add_option("--lambda", o.lambda, "Partition such as 2,1")->required();
  trans->add_option("--max-carrier", o.max_carrier, "Carrier cap")->capture_default_str();
  add_output_options(trans, o.output, {"text", "json"});

  auto* con = app.add_subcommand("con", "Congruence lattice of the S_lambda-set W_lambda");
  con->add_option("--lambda", o.lambda, "Partition such as 2,1")->required();
  con->add_option("--strategy", o.strategy, "Enumeration strategy")
      ->check(CLI::IsMember({"auto", "scan", "principal-join"}))
      ->capture_default_str();
  con->add_option("--max-carrier", o.max_carrier, "Carrier cap")->capture_default_str();
  con->add_option("--max-congruences", o.max_congruences, "Congruence count cap")->capture_default_str();
  add_output_options(con, o.output, {"text", "json", "dot"});

  auto* cls = app.add_subcommand("classify", "Classify lattice elements");
  cls->add_option("--source", o.source,
                  "con:<lambda>, sub:<n>, chain:<k>, eq:<k>, or a lattice JSON file")
      ->required();
  cls->add_option("--element", o.element, "Only this element");
  cls->add_option("--max-carrier", o.max_carrier, "Carrier cap")->capture_default_str();
  cls->add_option("--max-congruences", o.max_congruences, "Congruence count cap")->capture_default_str();
  add_output_options(cls, o.output, {"text", "json", "dot"});

  auto* sub = app.add_subcommand("subgroups", "Subgroup lattice of S_n");
  sub->add_option("--n", o.n, "Degree")->required();
  add_output_options(sub, o.output, {"text", "json", "dot"});

  auto* deduce = app.add_subcommand("deduce", "Congruence on W_lambda induced by an identity file");
  deduce->add_option("--identities", o.identities, "One identity u=v per line")->required();
  deduce->add_option("--lambda", o.lambda, "Partition such as 2,1")->required();
  deduce->add_option("--max-carrier", o.max_carrier, "Carrier cap")->capture_default_str();
  add_output_options(deduce, o.output, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suites, "Suite names, comma separated, or all")->delimiter(',');
  verify->add_option("--lambda", o.lambdas, "Partition; repeat for several");
  verify->add_option("--n", o.sn, "Run canc-sn for this n only");
  verify->add_option("--max-length", o.max_length, "Word length bound for greedy varieties")
      ->capture_default_str();
  verify->add_option("--max-carrier", o.max_carrier, "Carrier cap")->capture_default_str();
  verify->add_option("--strategy", o.strategy, "Enumeration strategy")
      ->check(CLI::IsMember({"auto", "scan", "principal-join"}))
      ->capture_default_str();
  add_output_options(verify, o.output, {"text", "json"});

  std::vector<const char*> argv{"oclat"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::Success&) {
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (partitions->parsed()) {
      code = cmd_partitions(o, buffer);
    } else if (trans->parsed()) {
      code = cmd_transversal(o, buffer);
    } else if (con->parsed()) {
      code = cmd_con(o, buffer);
    } else if (cls->parsed()) {
      code = cmd_classify(o, buffer);
    } else if (sub->parsed()) {
      code = cmd_subgroups(o, buffer);
    } else if (deduce->parsed()) {
      code = cmd_deduce(o, buffer);
    } else if (verify->parsed()) {
      if (o.output.path.empty()) {
        // Reports stream as they finish.
        return cmd_verify(o, out);
      }
      code = cmd_verify(o, buffer);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.output.path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output.path);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write '" << o.output.path << "'\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace oclat::cli
