#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oclat/gset.hpp"
#include "oclat/partition.hpp"
#include "oclat/word.hpp"

namespace oclat {

// A finite set of balanced identities. Each identity is stored with
// lhs < rhs; trivial identities are dropped and the list is sorted.
class IdentitySet {
 public:
  IdentitySet() = default;
  explicit IdentitySet(std::vector<BalancedIdentity> identities);

  void insert(const BalancedIdentity& e);
  void insert(const IdentitySet& other);

  std::span<const BalancedIdentity> identities() const noexcept { return identities_; }
  std::size_t size() const noexcept { return identities_.size(); }
  bool empty() const noexcept { return identities_.empty(); }
  // Length of the longest side, 0 when empty.
  std::size_t max_length() const noexcept;

  friend bool operator==(const IdentitySet&, const IdentitySet&) = default;

 private:
  std::vector<BalancedIdentity> identities_;
};

// Words a.phi(v).b for every factorization w = a.phi(u).b with u = v or
// v = u in `e`, phi sending letters to non-empty words. Sorted, without w.
std::vector<Word> one_step_rewrites(const Word& w, const IdentitySet& e);

// The restriction to W_lambda of the fully invariant congruence generated by
// `e`, as a congruence on from_transversal(lambda).
struct InducedCongruence {
  Partition lambda;
  Transversal transversal;
  Congruence congruence;
};

InducedCongruence induced_congruence(const IdentitySet& e, const Partition& lambda,
                                     std::uint64_t max_carrier = kDefaultMaxCarrier);

// The first word of W_lambda equated with each other word. Throws
// DomainError when lambda is not in Lambda.
IdentitySet transversal_identity_set(const Partition& lambda,
                                     std::uint64_t max_carrier = kDefaultMaxCarrier);

// Union of transversal_identity_set(extend(lambda, i)) for i = 0..s(lambda).
// With max_length set, components longer than it are left out; they cannot
// act on words of that length or shorter.
IdentitySet s_lambda_identity_set(const Partition& lambda,
                                  std::optional<int> max_length = std::nullopt,
                                  std::uint64_t max_carrier = kDefaultMaxCarrier);

bool reduces(const IdentitySet& e, const Partition& lambda,
             std::uint64_t max_carrier = kDefaultMaxCarrier);
bool collapses(const IdentitySet& e, const Partition& lambda,
               std::uint64_t max_carrier = kDefaultMaxCarrier);

inline constexpr int kDefaultMaxLength = 6;

struct GreedyVarietyResult {
  bool greedy = true;
  // First lambda (by n, m, then decreasing parts) reduced but not collapsed.
  std::optional<Partition> witness;
  std::size_t slices_checked = 0;
  explicit operator bool() const noexcept { return greedy; }
};

// Every lambda with n <= n_max is either not reduced or collapsed. A true
// result holds only up to length n_max. Throws CapExceeded when n_max
// exceeds max_length.
GreedyVarietyResult is_greedy_variety_bounded(const IdentitySet& e, int n_max,
                                              int max_length = kDefaultMaxLength,
                                              std::uint64_t max_carrier = kDefaultMaxCarrier);

// One "u=v" per line; blank lines and lines starting with '#' are skipped.
// Throws ParseError naming the line.
IdentitySet parse_identity_set(std::istream& in);
std::string to_string(const IdentitySet& e);

}  // namespace oclat
