// Acceptance run: one [PASS]/[FAIL] line per criterion C1..C8. Exit status
// is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oclat/deduction.hpp"
#include "oclat/error.hpp"
#include "oclat/gset.hpp"
#include "oclat/lattice.hpp"
#include "oclat/permutation.hpp"
#include "oclat/verify.hpp"

namespace {

using namespace oclat;
using Clock = std::chrono::steady_clock;

// Wall-clock limits in seconds.
constexpr double kC1Limit = 10.0;
constexpr double kC2SliceLimit = 60.0;
constexpr double kC3Limit = 60.0;
constexpr double kC4Limit = 120.0;
constexpr double kC6Limit = 300.0;
constexpr std::size_t kHierarchyMaxSize = 7;
constexpr int kGreedyBound = 5;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

struct Line {
  std::string id;
  bool pass = true;
  std::string detail;
};

int failures = 0;

void emit(const Line& l) {
  if (!l.pass) {
    ++failures;
  }
  std::cout << (l.pass ? "[PASS] " : "[FAIL] ") << l.id << "  " << l.detail << std::endl;
}

// Runs body, converting library errors into a failed report.
VerificationReport guarded(const std::string& statement, const std::function<VerificationReport()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    VerificationReport r;
    r.statement = statement;
    r.verdict = Verdict::fail;
    r.witness = nlohmann::ordered_json{{"error", e.what()}};
    return r;
  }
}

const std::vector<Partition> kSlices{Partition({2, 1}),    Partition({3, 1}),
                                     Partition({2, 2}),    Partition({2, 1, 1}),
                                     Partition({3, 1, 1}), Partition({2, 2, 1})};
const std::vector<Partition> kCase2{Partition({1, 1, 1}), Partition({1, 1, 1, 1})};

std::vector<FiniteLattice> built;

Line c1() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (int n : {3, 4}) {
    const auto r = guarded("cancellable-subgroups", [&] { return verify_lemma_canc_sn(n); });
    const auto subs = all_subgroups(symmetric_group(n));
    const auto l = subgroup_lattice(subs);
    built.push_back(l);
    std::size_t canc = 0;
    bool ends_only = true;
    for (std::size_t x = 0; x < l.size(); ++x) {
      if (is_cancellable_element(l, x).holds) {
        ++canc;
        ends_only = ends_only && (subs[x].is_trivial() || subs[x].order() == subs.back().order());
      }
    }
    const std::size_t want_subs = n == 3 ? 6 : 30;
    ok = ok && r.passed() && canc == 2 && ends_only && l.size() == want_subs;
    detail << "Sub(S_" << n << ") " << canc << "/" << l.size() << " cancellable; ";
  }
  const double t = seconds_since(start);
  ok = ok && t < kC1Limit;
  detail << fmt(t) << " (limit " << kC1Limit << " s)";
  return {"C1", ok, detail.str()};
}

std::map<std::string, double> slice_seconds;

Line c2_checks;

void c2() {
  bool ok = true;
  std::ostringstream detail;
  for (const auto& lambda : kSlices) {
    const auto start = Clock::now();
    const auto r = guarded("cancellable-congruences", [&] { return verify_prop_canc_gset(lambda); });
    slice_seconds[to_string(lambda)] += seconds_since(start);
    const bool pass = r.passed() && r.params.value("cancellable", 0) == 2;
    ok = ok && pass;
    detail << (detail.tellp() > 0 ? " " : "") << to_string(lambda) << ":" << (pass ? "ok" : "FAIL")
           << "/" << r.params.value("mode", std::string("?"));
    if (!pass) {
      detail << " " << r.witness.dump();
    }
    const auto a = from_transversal(lambda);
    if (transversal_size(lambda) <= 12) {
      try {
        const auto cs = all_congruences(a);
        if (cs.size() <= kDefaultMaxLatticeTable) {
          built.push_back(congruence_lattice(a, cs));
        }
      } catch (const CapExceeded&) {
      }
    }
  }
  c2_checks = {"C2", ok, detail.str()};
}

Line c2_with_timing() {
  bool ok = c2_checks.pass;
  std::ostringstream detail;
  detail << c2_checks.detail << "; ";
  double worst = 0;
  std::string worst_slice;
  for (const auto& [lambda, s] : slice_seconds) {
    if (s > worst) {
      worst = s;
      worst_slice = lambda;
    }
    ok = ok && s < kC2SliceLimit;
  }
  detail << "slowest slice " << worst_slice << " " << fmt(worst) << " including GCon check (limit "
         << kC2SliceLimit << " s per slice)";
  return {"C2", ok, detail.str()};
}

Line c3() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (const auto& lambda : kCase2) {
    const auto r = guarded("main-slice", [&] { return verify_theorem_main_slice(lambda); });
    const auto a = from_transversal(lambda);
    const auto lc = congruence_lattice(a);
    const auto ls = subgroup_lattice(symmetric_group(lambda.m()));
    const auto iso = is_isomorphic(lc, ls);
    bool matched = iso.has_value();
    if (iso) {
      for (std::size_t x = 0; x < lc.size(); ++x) {
        matched = matched &&
                  is_cancellable_element(lc, x).holds == is_cancellable_element(ls, (*iso)[x]).holds;
      }
    }
    built.push_back(lc);
    ok = ok && r.passed() && matched;
    detail << "Con(W_" << to_string(lambda) << ") ~ Sub(S_" << lambda.m() << ") "
           << (r.passed() && matched ? "ok" : "FAIL") << "; ";
  }
  const double t = seconds_since(start);
  ok = ok && t < kC3Limit;
  detail << fmt(t) << " (limit " << kC3Limit << " s)";
  return {"C3", ok, detail.str()};
}

Line c4() {
  const auto start = Clock::now();
  auto pool = all_small_lattices(kHierarchyMaxSize);
  const std::size_t small = pool.size();
  pool.insert(pool.end(), built.begin(), built.end());
  const auto r = verify_hierarchy_suite(pool);
  const double t = seconds_since(start);
  std::ostringstream detail;
  detail << small << " lattices up to " << kHierarchyMaxSize << " elements + " << built.size()
         << " built, " << r.params.value("elements", 0) << " elements; " << fmt(t) << " (limit "
         << kC4Limit << " s)";
  if (!r.passed()) {
    detail << " " << r.witness.dump();
  }
  return {"C4", r.passed() && t < kC4Limit, detail.str()};
}

Line c5() {
  bool ok = true;
  std::ostringstream detail;
  for (const auto& lambda : kSlices) {
    const auto start = Clock::now();
    const auto r = guarded("gcon-embedding", [&] { return verify_gcon_embedding(lambda); });
    slice_seconds[to_string(lambda)] += seconds_since(start);
    ok = ok && r.passed();
    detail << (detail.tellp() > 0 ? " " : "") << to_string(lambda) << ":"
           << (r.passed() ? "ok" : "FAIL");
    if (!r.passed()) {
      detail << " " << r.witness.dump();
    }
  }
  return {"C5", ok, detail.str()};
}

Line c6() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (const auto& lambda :
       {Partition({2, 1}), Partition({1, 1}), Partition({1, 1, 1}), Partition({2, 2})}) {
    const auto g = is_greedy_variety_bounded(s_lambda_identity_set(lambda), kGreedyBound);
    ok = ok && g.greedy;
    detail << "S_" << to_string(lambda) << ":" << (g.greedy ? "greedy" : "NOT greedy") << " ";
  }
  IdentitySet single;
  single.insert(parse_identity("112=121"));
  const auto g = is_greedy_variety_bounded(single, kGreedyBound);
  bool witness_ok = !g.greedy && g.witness && *g.witness == Partition({2, 1});
  if (witness_ok) {
    const auto ic = induced_congruence(single, *g.witness);
    std::set<std::set<std::string>> blocks;
    for (const auto& b : ic.congruence.blocks()) {
      std::set<std::string> words;
      for (auto x : b) {
        words.insert(to_string(ic.transversal.words[x]));
      }
      blocks.insert(words);
    }
    witness_ok = blocks == std::set<std::set<std::string>>{{"112", "121"}, {"211"}};
  }
  ok = ok && witness_ok;
  detail << "{112=121}:" << (witness_ok ? "not greedy at 2,1" : "FAIL") << "; verified up to length "
         << kGreedyBound << "; ";
  const double t = seconds_since(start);
  ok = ok && t < kC6Limit;
  detail << fmt(t) << " (limit " << kC6Limit << " s)";
  return {"C6", ok, detail.str()};
}

Line c7() {
  bool ok = true;
  std::ostringstream detail;
  std::vector<Partition> used(kSlices);
  used.insert(used.end(), kCase2.begin(), kCase2.end());
  for (const auto& lambda : used) {
    if (transversal_size(lambda) > kDefaultMaxScanCarrier) {
      continue;
    }
    const auto r = guarded("con-strategies", [&] { return verify_con_strategies(lambda); });
    ok = ok && r.passed();
    detail << (detail.tellp() > 0 ? " " : "") << to_string(lambda) << ":"
           << (r.passed() ? "ok" : "FAIL");
  }
  return {"C7", ok, detail.str()};
}

Line c8() {
  std::set<Partition> tested(kSlices.begin(), kSlices.end());
  tested.insert(kCase2.begin(), kCase2.end());
  for (const auto& p : enumerate_lambda(kGreedyBound)) {
    tested.insert(p);
  }
  bool ok = true;
  std::size_t words = 0;
  for (const auto& lambda : tested) {
    const auto r = guarded("trivial-stabilizers", [&] { return verify_trivial_stabilizers(lambda); });
    ok = ok && r.passed();
    words += r.params.value("words", std::size_t{0});
  }
  std::ostringstream detail;
  detail << tested.size() << " transversals, " << words << " words, all stabilizers trivial: "
         << (ok ? "yes" : "no");
  return {"C8", ok, detail.str()};
}

}  // namespace

int main() {
  // C4 needs the lattices built by C1..C3, and the C2 time per slice
  // includes the GCon check of C5.
  const Line l1 = c1();
  c2();
  const Line l3 = c3();
  const Line l4 = c4();
  const Line l5 = c5();
  emit(l1);
  emit(c2_with_timing());
  emit(l3);
  emit(l4);
  emit(l5);
  emit(c6());
  emit(c7());
  emit(c8());
  std::cout << (8 - failures) << " of 8 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
