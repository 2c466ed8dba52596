#include "oclat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "oclat/error.hpp"
#include "oclat/gset_symmetry.hpp"
#include "oclat/permutation.hpp"

namespace oclat {

using Json = nlohmann::ordered_json;

std::string to_string(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

std::string to_json_line(const VerificationReport& r) {
  Json j;
  j["statement"] = r.statement;
  j["params"] = r.params;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness;
  j["ms"] = r.ms;
  return j.dump();
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.statement = j.at("statement").get<std::string>();
  r.params = Json::parse(j.at("params").dump());
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "pass" && verdict != "fail") {
    throw ParseError("unknown verdict '" + verdict + "'");
  }
  r.verdict = verdict == "pass" ? Verdict::pass : Verdict::fail;
  r.witness = Json::parse(j.at("witness").dump());
  r.ms = j.at("ms").get<std::int64_t>();
  return r;
}

std::string to_string(CancellabilityStatus s) {
  switch (s) {
    case CancellabilityStatus::cancellable:
      return "cancellable";
    case CancellabilityStatus::not_cancellable:
      return "not-cancellable";
    case CancellabilityStatus::undetermined:
      return "undetermined";
  }
  return "?";
}

bool is_cancellation_witness(const GSet& a, const Congruence& alpha, const Congruence& beta,
                             const Congruence& gamma) {
  return beta != gamma && is_congruence(a, beta) && is_congruence(a, gamma) &&
         join(alpha, beta) == join(alpha, gamma) && meet(alpha, beta) == meet(alpha, gamma);
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<SetPartition, SetPartition>& p) const noexcept {
    SetPartitionHash h;
    return h(p.first) * 31 + h(p.second);
  }
};

// Points in `orbits` merged into one block; everything else keeps its
// alpha-class within its region, where regions are told apart by `region`.
Congruence regional(const OrbitDecomposition& orb, const Congruence& alpha,
                    const std::vector<int>& region_of_orbit) {
  const std::size_t n = alpha.size();
  std::vector<std::uint32_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const int region = region_of_orbit[orb.orbit_of[x]];
    // region < 0: collapse the whole region -region into one block.
    labels[x] = region < 0 ? static_cast<std::uint32_t>(-region) * static_cast<std::uint32_t>(n + 1)
                           : static_cast<std::uint32_t>(region) * static_cast<std::uint32_t>(n + 1) +
                                 alpha.block_of(x) + 1;
  }
  return SetPartition::from_labels(labels);
}

CancellabilityResult structural(const GSet& a, const Congruence& alpha) {
  CancellabilityResult r;
  const auto orb = orbits(a);
  const std::size_t k = orb.count();
  if (k < 2) {
    r.method = "transitive";
    return r;
  }
  const GreedyTest greedy = is_greedy_congruence(orb, alpha);
  if (!greedy) {
    // Orbits b, c connected but not collapsed: blow up b, or blow up c.
    const auto [b, c] = *greedy.witness;
    std::vector<int> beta_regions(k, 3);
    std::vector<int> gamma_regions(k, 3);
    beta_regions[b] = -1;
    beta_regions[c] = 2;
    gamma_regions[b] = 1;
    gamma_regions[c] = -2;
    r.status = CancellabilityStatus::not_cancellable;
    r.witness = {regional(orb, alpha, beta_regions), regional(orb, alpha, gamma_regions)};
    r.method = "not-greedy";
  } else if (const SetPartition star = alpha_star(orb, alpha); !star.is_equality()) {
    if (star.is_universal()) {
      throw InternalError("greedy congruence with universal alpha* is not universal");
    }
    // N: a non-trivial alpha* block with orbits x != y; m: all orbits outside N.
    std::vector<std::size_t> block;
    for (const auto& candidate : star.blocks()) {
      if (candidate.size() > 1) {
        block = candidate;
        break;
      }
    }
    const std::size_t x = block[0];
    const std::size_t y = block[1];
    std::vector<int> beta_regions(k);
    std::vector<int> gamma_regions(k);
    for (std::size_t i = 0; i < k; ++i) {
      const bool outside = star.block_of(i) != star.block_of(x);
      // Singletons everywhere except the merged region -1 and the lone orbit.
      beta_regions[i] = outside ? -1 : static_cast<int>(i) + 10;
      gamma_regions[i] = outside ? -1 : static_cast<int>(i) + 10;
    }
    beta_regions[x] = -1;
    beta_regions[y] = -2;
    gamma_regions[y] = -1;
    gamma_regions[x] = -2;
    const Congruence equality = Congruence::equality(alpha.size());
    r.status = CancellabilityStatus::not_cancellable;
    r.witness = {regional(orb, equality, beta_regions), regional(orb, equality, gamma_regions)};
    r.method = "merged-orbits";
  } else {
    // alpha isolates every orbit and is non-trivial inside some orbit b.
    std::size_t b = 0;
    std::size_t u = 0;
    std::size_t v = 0;
    bool found = false;
    for (std::size_t i = 0; i < k && !found; ++i) {
      const auto& o = orb.orbits[i];
      for (std::size_t p = 0; p < o.size() && !found; ++p) {
        for (std::size_t q = p + 1; q < o.size() && !found; ++q) {
          if (alpha.related(o[p], o[q])) {
            b = i;
            u = o[p];
            v = o[q];
            found = true;
          }
        }
      }
    }
    const std::size_t c = b == 0 ? 1 : 0;
    const auto phi = orbit_isomorphism(a, b, c);
    if (!phi) {
      r.method = "no-orbit-isomorphism";
      return r;
    }
    const auto& ob = orb.orbits[b];
    auto image = [&](std::size_t point) {
      return (*phi)[static_cast<std::size_t>(std::lower_bound(ob.begin(), ob.end(), point) - ob.begin())];
    };
    const std::pair<std::size_t, std::size_t> beta_pair{u, image(u)};
    const std::pair<std::size_t, std::size_t> gamma_pair{u, image(v)};
    r.status = CancellabilityStatus::not_cancellable;
    r.witness = {principal_closure(a, std::span(&beta_pair, 1)),
                 principal_closure(a, std::span(&gamma_pair, 1))};
    r.method = "isolated-orbits";
  }
  return r;
}

}  // namespace

CancellabilityResult classify_congruence_cancellability(const GSet& a, const Congruence& alpha,
                                                        std::span<const Congruence> universe) {
  if (alpha.size() != a.size() || !is_congruence(a, alpha)) {
    throw DomainError("not a congruence of the G-set");
  }
  CancellabilityResult r;
  if (alpha.is_equality()) {
    r.status = CancellabilityStatus::cancellable;
    r.method = "bottom";
    return r;
  }
  if (alpha.is_universal()) {
    r.status = CancellabilityStatus::cancellable;
    r.method = "top";
    return r;
  }
  if (!universe.empty()) {
    std::unordered_map<std::pair<SetPartition, SetPartition>, std::size_t, PairHash> seen;
    seen.reserve(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) {
      auto [it, inserted] = seen.try_emplace({join(alpha, universe[i]), meet(alpha, universe[i])}, i);
      if (!inserted) {
        r.status = CancellabilityStatus::not_cancellable;
        r.witness = {universe[it->second], universe[i]};
        break;
      }
    }
    if (r.status != CancellabilityStatus::not_cancellable) {
      r.status = CancellabilityStatus::cancellable;
    }
    r.method = "universe-scan";
  } else {
    r = structural(a, alpha);
  }
  if (r.witness && !is_cancellation_witness(a, alpha, r.witness->first, r.witness->second)) {
    throw InternalError("cancellation witness (" + r.method + ") does not re-validate");
  }
  return r;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Json witness_json(const GSet& a, const Congruence& alpha, const CancellabilityResult& r) {
  Json w;
  w["congruence"] = block_string(a, alpha);
  w["status"] = to_string(r.status);
  w["method"] = r.method;
  if (r.witness) {
    w["beta"] = block_string(a, r.witness->first);
    w["gamma"] = block_string(a, r.witness->second);
  }
  return w;
}

void require_lambda1(const Partition& lambda) {
  if (lambda[0] == 1) {
    throw PreconditionError("needs lambda_1 > 1; W_" + to_string(lambda) +
                            " is a transitive S_lambda-set");
  }
}

// Remark check shared by every transversal suite; sets a fail verdict.
bool stabilizers_trivial(const GSet& a, VerificationReport& report) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!stabilizer(a, x).is_trivial()) {
      report.verdict = Verdict::fail;
      report.witness = Json{{"word", a.label(x)}, {"reason", "non-trivial stabilizer"}};
      return false;
    }
  }
  return true;
}

VerificationReport prop_canc_impl(const Partition& lambda, const SliceOptions& options,
                                  std::vector<FiniteLattice>* built) {
  const auto start = Clock::now();
  require_lambda1(lambda);
  VerificationReport report;
  report.statement = "cancellable-congruences";
  const GSet a = from_transversal(lambda, options.max_carrier, options.max_degree);
  report.params["lambda"] = to_string(lambda);
  report.params["carrier"] = a.size();
  report.params["group_order"] = a.group().order();
  report.params["orbits"] = orbits(a).count();
  if (!stabilizers_trivial(a, report)) {
    report.ms = elapsed_ms(start);
    return report;
  }
  const std::uint64_t count = count_congruences_free(a);
  report.params["congruences"] = count;
  std::size_t cancellable = 0;
  auto expect = [&](const Congruence& alpha, const CancellabilityResult& r) {
    const bool trivial = alpha.is_equality() || alpha.is_universal();
    const bool is_canc = r.status == CancellabilityStatus::cancellable;
    cancellable += is_canc ? 1 : 0;
    if (r.status == CancellabilityStatus::undetermined || is_canc != trivial) {
      report.verdict = Verdict::fail;
      report.witness = witness_json(a, alpha, r);
      return false;
    }
    return true;
  };
  if (count <= kExhaustiveConLimit) {
    report.params["mode"] = "exhaustive";
    const auto all = all_congruences(a, options.con);
    if (all.size() != count) {
      throw InternalError("Con enumeration size " + std::to_string(all.size()) +
                          " differs from the structural count " + std::to_string(count));
    }
    std::optional<FiniteLattice> table;
    if (all.size() <= kTableCrossCheckLimit) {
      table = congruence_lattice(a, all);
      report.params["lattice_cross_check"] = true;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto r = classify_congruence_cancellability(a, all[i], all);
      const auto s = classify_congruence_cancellability(a, all[i]);
      if (r.status != s.status) {
        report.verdict = Verdict::fail;
        report.witness = witness_json(a, all[i], r);
        report.witness["structural"] = to_string(s.status);
        break;
      }
      if (table && is_cancellable_element(*table, i).holds !=
                       (r.status == CancellabilityStatus::cancellable)) {
        report.verdict = Verdict::fail;
        report.witness = witness_json(a, all[i], r);
        report.witness["lattice_tables"] = is_cancellable_element(*table, i).holds;
        break;
      }
      if (!expect(all[i], r)) {
        break;
      }
    }
    if (table && built) {
      built->push_back(std::move(*table));
    }
  } else {
    report.params["mode"] = "automorphism-classes";
    const auto reps = free_congruence_representatives(a);
    report.params["classes"] = reps.size();
    for (const auto& alpha : reps) {
      if (!expect(alpha, classify_congruence_cancellability(a, alpha))) {
        break;
      }
    }
  }
  report.params["cancellable"] = cancellable;
  report.ms = elapsed_ms(start);
  return report;
}

std::vector<std::size_t> cancellable_elements(const FiniteLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (is_cancellable_element(l, i)) {
      out.push_back(i);
    }
  }
  return out;
}

VerificationReport canc_sn_impl(int n, int max_degree, std::vector<FiniteLattice>* built) {
  const auto start = Clock::now();
  if (n < 1) {
    throw DomainError("canc-sn needs n >= 1");
  }
  VerificationReport report;
  report.statement = "cancellable-subgroups";
  report.params["n"] = n;
  const auto subgroups = all_subgroups(symmetric_group(n, max_degree));
  FiniteLattice l = subgroup_lattice(subgroups);
  report.params["subgroups"] = l.size();
  const auto canc = cancellable_elements(l);
  report.params["cancellable"] = canc.size();
  std::vector<std::size_t> expected{0};
  if (subgroups.size() > 1) {
    expected.push_back(subgroups.size() - 1);
  }
  if (canc != expected) {
    report.verdict = Verdict::fail;
    for (std::size_t i = 0; i < l.size(); ++i) {
      const bool is_expected = std::find(expected.begin(), expected.end(), i) != expected.end();
      const auto test = is_cancellable_element(l, i);
      if (test.holds != is_expected) {
        report.witness = Json{{"subgroup", l.label(i)}, {"cancellable", test.holds}};
        if (!test.holds) {
          report.witness["y"] = l.label(test.witness[0]);
          report.witness["z"] = l.label(test.witness[1]);
        }
        break;
      }
    }
  }
  if (built) {
    built->push_back(std::move(l));
  }
  report.ms = elapsed_ms(start);
  return report;
}

VerificationReport main_slice_impl(const Partition& lambda, const SliceOptions& options,
                                   std::vector<FiniteLattice>* built) {
  const auto start = Clock::now();
  if (lambda[0] > 1) {
    VerificationReport inner = prop_canc_impl(lambda, options, built);
    VerificationReport report;
    report.statement = "main-slice";
    report.params["lambda"] = to_string(lambda);
    report.params["case"] = 1;
    for (const auto& [key, value] : inner.params.items()) {
      if (key != "lambda") {
        report.params[key] = value;
      }
    }
    report.verdict = inner.verdict;
    report.witness = inner.witness;
    report.ms = elapsed_ms(start);
    return report;
  }
  VerificationReport report;
  report.statement = "main-slice";
  report.params["lambda"] = to_string(lambda);
  report.params["case"] = 2;
  const GSet a = from_transversal(lambda, options.max_carrier, options.max_degree);
  if (!stabilizers_trivial(a, report)) {
    report.ms = elapsed_ms(start);
    return report;
  }
  const auto con = all_congruences(a, options.con);
  FiniteLattice lc = congruence_lattice(a, con);
  FiniteLattice ls = subgroup_lattice(symmetric_group(lambda.m(), options.max_degree));
  report.params["congruences"] = lc.size();
  report.params["subgroups"] = ls.size();
  const auto iso = is_isomorphic(lc, ls);
  if (!iso) {
    report.verdict = Verdict::fail;
    report.witness = Json{{"reason", "no isomorphism Con(W) -> Sub(S_m)"}};
  } else {
    std::size_t cancellable = 0;
    for (std::size_t i = 0; i < lc.size() && report.passed(); ++i) {
      for (std::size_t j = 0; j < lc.size(); ++j) {
        if (lc.leq(i, j) != ls.leq((*iso)[i], (*iso)[j])) {
          throw InternalError("isomorphism search returned a non-isomorphism");
        }
      }
      const bool left = is_cancellable_element(lc, i).holds;
      const bool right = is_cancellable_element(ls, (*iso)[i]).holds;
      cancellable += left ? 1 : 0;
      if (left != right) {
        report.verdict = Verdict::fail;
        report.witness = Json{{"congruence", lc.label(i)},
                              {"subgroup", ls.label((*iso)[i])},
                              {"congruence_cancellable", left},
                              {"subgroup_cancellable", right}};
      }
    }
    report.params["cancellable"] = cancellable;
  }
  if (built) {
    built->push_back(std::move(lc));
    built->push_back(std::move(ls));
  }
  report.ms = elapsed_ms(start);
  return report;
}

}  // namespace

VerificationReport verify_prop_canc_gset(const Partition& lambda, const SliceOptions& options) {
  return prop_canc_impl(lambda, options, nullptr);
}

VerificationReport verify_lemma_canc_sn(int n, int max_degree) {
  return canc_sn_impl(n, max_degree, nullptr);
}

VerificationReport verify_theorem_main_slice(const Partition& lambda, const SliceOptions& options) {
  return main_slice_impl(lambda, options, nullptr);
}

VerificationReport verify_greedy_equivalence(std::span<const Partition> lambdas, int n_bound,
                                             const SliceOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.statement = "greedy-equivalence";
  Json lambda_list = Json::array();
  for (const auto& lambda : lambdas) {
    lambda_list.push_back(to_string(lambda));
  }
  report.params["lambdas"] = lambda_list;
  report.params["verified_up_to_length"] = n_bound;
  auto fail = [&](Json witness) {
    report.verdict = Verdict::fail;
    report.witness = std::move(witness);
    report.ms = elapsed_ms(start);
    return report;
  };
  Json slices = Json::array();
  for (const auto& lambda : lambdas) {
    const GSet a = from_transversal(lambda, options.max_carrier, options.max_degree);
    if (!stabilizers_trivial(a, report)) {
      report.ms = elapsed_ms(start);
      return report;
    }
    const auto orb = orbits(a);
    const bool transitive = orb.count() == 1;
    std::vector<Congruence> candidates;
    std::vector<Congruence> universe;
    std::string mode;
    if (transitive || count_congruences_free(a) <= kExhaustiveConLimit) {
      universe = all_congruences(a, options.con);
      candidates = universe;
      mode = "exhaustive";
    } else {
      candidates = free_congruence_representatives(a);
      mode = "automorphism-classes";
    }
    std::size_t cancellable = 0;
    for (const auto& alpha : candidates) {
      const auto r = classify_congruence_cancellability(a, alpha, universe);
      if (r.status == CancellabilityStatus::undetermined) {
        return fail(witness_json(a, alpha, r));
      }
      if (r.status != CancellabilityStatus::cancellable) {
        continue;
      }
      ++cancellable;
      const auto greedy = is_greedy_congruence(orb, alpha);
      if (!greedy) {
        auto w = witness_json(a, alpha, r);
        w["lambda"] = to_string(lambda);
        w["reason"] = "cancellable congruence is not greedy";
        w["orbits"] = {greedy.witness->first, greedy.witness->second};
        return fail(w);
      }
      if (!transitive && !alpha.is_equality() && !alpha.is_universal()) {
        auto w = witness_json(a, alpha, r);
        w["lambda"] = to_string(lambda);
        w["reason"] = "non-trivial cancellable congruence on a non-transitive slice";
        return fail(w);
      }
    }
    slices.push_back(Json{{"lambda", to_string(lambda)}, {"mode", mode}, {"cancellable", cancellable}});
  }
  report.params["slices"] = slices;
  Json varieties = Json::array();
  const int length_cap = std::max(n_bound, kDefaultMaxLength);
  for (const auto& mu : lambdas) {
    const IdentitySet e = s_lambda_identity_set(mu, n_bound, options.max_carrier);
    const auto g = is_greedy_variety_bounded(e, n_bound, length_cap, options.max_carrier);
    if (!g) {
      const auto nu = induced_congruence(e, *g.witness, options.max_carrier);
      const GSet a = from_transversal(nu.transversal, options.max_degree);
      return fail(Json{{"mu", to_string(mu)},
                       {"reason", "S_mu identities reduce without collapsing"},
                       {"lambda", to_string(*g.witness)},
                       {"blocks", block_string(a, nu.congruence)}});
    }
    varieties.push_back(Json{{"mu", to_string(mu)}, {"identities", e.size()}, {"slices", g.slices_checked}});
  }
  report.params["varieties"] = varieties;
  report.ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_gcon_embedding(const Partition& lambda, const SliceOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.statement = "gcon-embedding";
  report.params["lambda"] = to_string(lambda);
  const GSet a = from_transversal(lambda, options.max_carrier, options.max_degree);
  if (!stabilizers_trivial(a, report)) {
    report.ms = elapsed_ms(start);
    return report;
  }
  const auto orb = orbits(a);
  const std::uint64_t count = count_greedy_congruences(a);
  report.params["gcon"] = count;
  std::vector<Congruence> all;
  std::vector<std::size_t> left;
  if (count_congruences_free(a) <= kExhaustiveConLimit && count <= kExhaustiveGconLimit) {
    report.params["mode"] = "exhaustive";
    all = gcon(a, options.con);
    if (all != enumerate_greedy_congruences(a, kExhaustiveGconLimit)) {
      throw InternalError("filtered GCon differs from the structural GCon");
    }
    left.resize(all.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
      left[i] = i;
    }
  } else if (count <= kMaxGcon) {
    report.params["mode"] = "automorphism-classes";
    all = enumerate_greedy_congruences(a, kMaxGcon);
    for (const auto& alpha : all) {
      if (!is_greedy_congruence(orb, alpha) || !is_congruence(a, alpha)) {
        throw InternalError("structural GCon produced a non-greedy congruence");
      }
    }
    for (const auto& rep : greedy_congruence_representatives(a)) {
      left.push_back(static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), rep) - all.begin()));
    }
    report.params["classes"] = left.size();
  } else {
    throw CapExceeded("GCon(W_" + to_string(lambda) + ") has " + std::to_string(count) +
                      " elements, above the cap " + std::to_string(kMaxGcon));
  }
  if (all.size() != count) {
    throw InternalError("GCon size differs from the structural count");
  }
  const auto check = gcon_embedding_check(a, all, left);
  report.params["pairs"] = check.pairs_checked;
  if (!check) {
    report.verdict = Verdict::fail;
    Json blocks = Json::array();
    for (const auto& c : check.witness) {
      blocks.push_back(block_string(a, c));
    }
    report.witness = Json{{"violation", check.violation}, {"congruences", blocks}};
  }
  report.ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_trivial_stabilizers(const Partition& lambda, const SliceOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.statement = "trivial-stabilizers";
  report.params["lambda"] = to_string(lambda);
  const GSet a = from_transversal(lambda, options.max_carrier, options.max_degree);
  report.params["words"] = a.size();
  stabilizers_trivial(a, report);
  report.ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_con_strategies(const Partition& lambda, const SliceOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.statement = "con-strategies";
  report.params["lambda"] = to_string(lambda);
  const GSet a = from_transversal(lambda, options.max_carrier, options.max_degree);
  ConOptions scan = options.con;
  scan.strategy = ConStrategy::scan;
  ConOptions closure = options.con;
  closure.strategy = ConStrategy::principal_join;
  const auto by_scan = all_congruences(a, scan);
  const auto by_closure = all_congruences(a, closure);
  report.params["carrier"] = a.size();
  report.params["congruences"] = by_scan.size();
  if (by_scan != by_closure) {
    report.verdict = Verdict::fail;
    std::vector<Congruence> only;
    std::set_symmetric_difference(by_scan.begin(), by_scan.end(), by_closure.begin(),
                                  by_closure.end(), std::back_inserter(only));
    report.witness = Json{{"scan", by_scan.size()},
                          {"principal_join", by_closure.size()},
                          {"differs_at", block_string(a, only.front())}};
  }
  report.ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_hierarchy_suite(std::span<const FiniteLattice> pool,
                                          const HierarchyPredicates& p) {
  const auto start = Clock::now();
  VerificationReport report;
  report.statement = "hierarchy";
  report.params["lattices"] = pool.size();
  report.params["vacuous"] = pool.empty();
  std::size_t elements = 0;
  for (std::size_t li = 0; li < pool.size() && report.passed(); ++li) {
    const auto& l = pool[li];
    for (std::size_t x = 0; x < l.size(); ++x) {
      ++elements;
      const bool canc = p.cancellable(l, x).holds;
      const bool dist = p.distributive(l, x).holds;
      const bool codist = p.codistributive(l, x).holds;
      const bool stand = p.standard(l, x).holds;
      const bool costand = p.costandard(l, x).holds;
      const bool modular = p.modular(l, x).holds;
      const bool median = p.neutral_median(l, x).holds;
      const bool sub = p.neutral_sublattice(l, x).holds;
      const char* violated = nullptr;
      if (median != sub) {
        violated = "median and sublattice neutrality disagree";
      } else if (median && !(stand && costand)) {
        violated = "neutral => standard and costandard";
      } else if (stand && !(dist && canc)) {
        violated = "standard => distributive and cancellable";
      } else if (costand && !(codist && canc)) {
        violated = "costandard => codistributive and cancellable";
      } else if (canc && !modular) {
        violated = "cancellable => modular";
      }
      if (violated) {
        report.verdict = Verdict::fail;
        report.witness = Json{{"lattice", li},
                              {"size", l.size()},
                              {"element", x},
                              {"label", l.label(x)},
                              {"implication", violated},
                              {"flags",
                               {{"cancellable", canc},
                                {"distributive", dist},
                                {"codistributive", codist},
                                {"standard", stand},
                                {"costandard", costand},
                                {"modular", modular},
                                {"neutral_median", median},
                                {"neutral_sublattice", sub}}}};
        break;
      }
    }
  }
  report.params["elements"] = elements;
  report.ms = elapsed_ms(start);
  return report;
}

const std::vector<std::string>& default_suites() {
  static const std::vector<std::string> names{"canc-gset", "canc-sn", "main-slice", "greedy",
                                              "hierarchy"};
  return names;
}

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names{"canc-gset", "canc-sn",     "main-slice",
                                              "greedy",    "gcon",        "stabilizers",
                                              "con-strategies", "hierarchy"};
  return names;
}

std::vector<Partition> default_lambdas() { return enumerate_lambda(5); }

std::vector<VerificationReport> run_all(const RunConfig& config,
                                        const std::function<void(const VerificationReport&)>& on_report) {
  std::vector<std::string> selected;
  if (config.suites.empty()) {
    selected = default_suites();
  } else if (config.suites.size() == 1 && config.suites.front() == "all") {
    selected = all_suites();
  } else {
    for (const auto& name : config.suites) {
      if (std::find(all_suites().begin(), all_suites().end(), name) == all_suites().end()) {
        throw UsageError("unknown suite '" + name + "'");
      }
    }
    selected = config.suites;
  }
  const auto lambdas = config.lambdas.empty() ? default_lambdas() : config.lambdas;
  auto wants = [&](const std::string& name) {
    return std::find(selected.begin(), selected.end(), name) != selected.end();
  };

  std::vector<VerificationReport> reports;
  std::vector<FiniteLattice> built;
  auto record = [&](VerificationReport r) {
    if (on_report) {
      on_report(r);
    }
    reports.push_back(std::move(r));
  };
  // Runs one suite step, turning library errors into fail reports.
  auto guarded = [&](const std::string& statement, Json params, const std::function<VerificationReport()>& body) {
    const auto start = Clock::now();
    try {
      record(body());
    } catch (const UsageError&) {
      throw;
    } catch (const Error& err) {
      VerificationReport r;
      r.statement = statement;
      r.params = std::move(params);
      r.verdict = Verdict::fail;
      r.witness = Json{{"error", err.what()}};
      r.ms = elapsed_ms(start);
      record(std::move(r));
    }
  };

  for (const auto& suite : all_suites()) {
    if (!wants(suite)) {
      continue;
    }
    if (suite == "canc-gset") {
      for (const auto& lambda : lambdas) {
        if (lambda[0] > 1) {
          guarded("cancellable-congruences", Json{{"lambda", to_string(lambda)}},
                  [&] { return prop_canc_impl(lambda, config.slice, &built); });
        }
      }
    } else if (suite == "canc-sn") {
      for (int n = std::max(config.min_sn, 1); n <= config.max_sn; ++n) {
        guarded("cancellable-subgroups", Json{{"n", n}},
                [&] { return canc_sn_impl(n, std::max(config.max_sn, 1), &built); });
      }
    } else if (suite == "main-slice") {
      for (const auto& lambda : lambdas) {
        guarded("main-slice", Json{{"lambda", to_string(lambda)}},
                [&] { return main_slice_impl(lambda, config.slice, &built); });
      }
    } else if (suite == "greedy") {
      guarded("greedy-equivalence", Json{{"verified_up_to_length", config.n_bound}},
              [&] { return verify_greedy_equivalence(lambdas, config.n_bound, config.slice); });
    } else if (suite == "gcon") {
      for (const auto& lambda : lambdas) {
        guarded("gcon-embedding", Json{{"lambda", to_string(lambda)}},
                [&] { return verify_gcon_embedding(lambda, config.slice); });
      }
    } else if (suite == "stabilizers") {
      for (const auto& lambda : lambdas) {
        guarded("trivial-stabilizers", Json{{"lambda", to_string(lambda)}},
                [&] { return verify_trivial_stabilizers(lambda, config.slice); });
      }
    } else if (suite == "con-strategies") {
      for (const auto& lambda : lambdas) {
        if (transversal_size(lambda) <= config.slice.con.max_scan_carrier) {
          guarded("con-strategies", Json{{"lambda", to_string(lambda)}},
                  [&] { return verify_con_strategies(lambda, config.slice); });
        }
      }
    } else if (suite == "hierarchy") {
      guarded("hierarchy", Json::object(), [&] {
        auto pool = all_small_lattices(config.small_lattice_size);
        const std::size_t generated = pool.size();
        pool.insert(pool.end(), built.begin(), built.end());
        auto r = verify_hierarchy_suite(pool);
        r.params["generated"] = generated;
        r.params["from_suites"] = built.size();
        return r;
      });
    }
  }
  return reports;
}

}  // namespace oclat
