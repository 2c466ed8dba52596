#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "oclat/deduction.hpp"
#include "oclat/gset.hpp"
#include "oclat/lattice.hpp"
#include "oclat/partition.hpp"

namespace oclat {

enum class Verdict { pass, fail };

std::string to_string(Verdict v);

struct VerificationReport {
  std::string statement;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::pass;
  // null on pass; on fail, data that reproduces the violation.
  nlohmann::ordered_json witness;
  std::int64_t ms = 0;

  bool passed() const noexcept { return verdict == Verdict::pass; }
};

// {"statement", "params", "verdict", "witness", "ms"} on one line.
std::string to_json_line(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

enum class CancellabilityStatus { cancellable, not_cancellable, undetermined };

std::string to_string(CancellabilityStatus s);

struct CancellabilityResult {
  CancellabilityStatus status = CancellabilityStatus::undetermined;
  // For not_cancellable: beta != gamma with alpha v beta = alpha v gamma and
  // alpha ^ beta = alpha ^ gamma.
  std::optional<std::pair<Congruence, Congruence>> witness;
  // "bottom", "top", "universe-scan", "not-greedy", "merged-orbits" or
  // "isolated-orbits".
  std::string method;
};

// beta, gamma are distinct congruences of `a` agreeing with alpha on join
// and meet.
bool is_cancellation_witness(const GSet& a, const Congruence& alpha, const Congruence& beta,
                             const Congruence& gamma);

// Decides whether alpha is cancellable in Con(A). With a non-empty universe
// (all of Con(A)) the answer is exhaustive; otherwise it relies on explicit
// witness constructions, which settle every congruence of a non-transitive
// G-set whose orbits are pairwise isomorphic. Every witness is re-checked.
CancellabilityResult classify_congruence_cancellability(const GSet& a, const Congruence& alpha,
                                                        std::span<const Congruence> universe = {});

inline constexpr std::size_t kExhaustiveConLimit = 20000;
inline constexpr std::size_t kTableCrossCheckLimit = 256;
inline constexpr std::size_t kExhaustiveGconLimit = 2000;
inline constexpr std::size_t kMaxGcon = 1000000;

struct SliceOptions {
  std::uint64_t max_carrier = kDefaultMaxCarrier;
  int max_degree = kDefaultMaxDegree;
  ConOptions con;
};

// Cancellable congruences of Con(W_lambda) are exactly equality and
// universal. Needs lambda_1 > 1 (PreconditionError otherwise). Exhaustive
// when |Con| <= kExhaustiveConLimit; above that, one congruence per
// automorphism class, reported as mode "automorphism-classes".
VerificationReport verify_prop_canc_gset(const Partition& lambda, const SliceOptions& options = {});

// Cancellable elements of Sub(S_n) are exactly T and S_n.
VerificationReport verify_lemma_canc_sn(int n, int max_degree = 4);

// lambda_1 > 1: verify_prop_canc_gset. lambda = (1,...,1): Con(W_lambda) is
// isomorphic to Sub(S_m) and the isomorphism matches cancellable elements.
VerificationReport verify_theorem_main_slice(const Partition& lambda,
                                             const SliceOptions& options = {});

// Per slice: every cancellable congruence is greedy, and is equality or
// universal when W_lambda is non-transitive. Per mu: the identity set of
// S_mu is greedy up to length n_bound.
VerificationReport verify_greedy_equivalence(std::span<const Partition> lambdas, int n_bound,
                                             const SliceOptions& options = {});

// GCon(W_lambda) embedding check: exhaustive pairs up to
// kExhaustiveGconLimit, automorphism classes times all of GCon up to
// kMaxGcon. Throws CapExceeded beyond.
VerificationReport verify_gcon_embedding(const Partition& lambda, const SliceOptions& options = {});

// Every word of W_lambda has trivial stabilizer.
VerificationReport verify_trivial_stabilizers(const Partition& lambda,
                                              const SliceOptions& options = {});

// Partition scan and principal-join closure give the same Con(W_lambda).
VerificationReport verify_con_strategies(const Partition& lambda, const SliceOptions& options = {});

using ElementPredicate = std::function<ElementTest(const FiniteLattice&, std::size_t)>;

struct HierarchyPredicates {
  ElementPredicate cancellable = is_cancellable_element;
  ElementPredicate distributive = is_distributive_element;
  ElementPredicate codistributive = is_codistributive_element;
  ElementPredicate standard = is_standard_element;
  ElementPredicate costandard = is_costandard_element;
  ElementPredicate modular = is_modular_element;
  ElementPredicate neutral_median = is_neutral_by_median;
  ElementPredicate neutral_sublattice = is_neutral_by_sublattice;
};

// On every element of every lattice: neutral => standard and costandard,
// standard => distributive and cancellable, costandard => codistributive and
// cancellable, cancellable => modular, and both neutrality tests agree. An
// empty pool passes with params.vacuous = true.
VerificationReport verify_hierarchy_suite(std::span<const FiniteLattice> pool,
                                          const HierarchyPredicates& predicates = {});

struct RunConfig {
  // Empty selects default_suites(); "all" selects every suite.
  std::vector<std::string> suites;
  // Empty selects default_lambdas().
  std::vector<Partition> lambdas;
  int n_bound = 5;
  // canc-sn runs n = min_sn..max_sn.
  int min_sn = 1;
  int max_sn = 4;
  // Lattices on at most this many elements go into the hierarchy pool.
  std::size_t small_lattice_size = 7;
  SliceOptions slice;
};

// canc-gset, canc-sn, main-slice, greedy, hierarchy.
const std::vector<std::string>& default_suites();
// The above plus gcon, stabilizers, con-strategies.
const std::vector<std::string>& all_suites();
// Every lambda with n <= 5, (2,2,1) included.
std::vector<Partition> default_lambdas();

// Runs the selected suites in order. Cap errors inside a suite become fail
// reports whose witness holds {"error": message}. Throws UsageError for an
// unknown suite name.
std::vector<VerificationReport> run_all(const RunConfig& config,
                                        const std::function<void(const VerificationReport&)>& on_report = {});

}  // namespace oclat
