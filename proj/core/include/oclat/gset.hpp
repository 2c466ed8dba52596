#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oclat/lattice.hpp"
#include "oclat/partition.hpp"
#include "oclat/permutation.hpp"
#include "oclat/set_partition.hpp"
#include "oclat/word.hpp"

namespace oclat {

// A finite set {0..size()-1} with a permutation group acting on it. The
// action is a table: act(g, x) is the image of point x under the group
// element with index g in group().elements().
class GSet {
 public:
  // Throws DomainError unless every row of `action` is a bijection, the
  // identity acts trivially and act(gh, x) = act(g, act(h, x)).
  GSet(std::vector<std::string> labels, PermutationGroup group,
       std::vector<std::vector<std::uint32_t>> action);

  // n points, trivial group.
  static GSet trivial(std::size_t n);
  // G acting on itself by left multiplication; labels are one-line images.
  static GSet regular(const PermutationGroup& g);

  std::size_t size() const noexcept { return n_; }
  const PermutationGroup& group() const noexcept { return group_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t x) const { return labels_[x]; }

  std::size_t act(std::size_t g, std::size_t x) const { return action_[g * n_ + x]; }
  // Row of group element g: images of 0..size()-1.
  std::span<const std::uint32_t> row(std::size_t g) const {
    return {action_.data() + g * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  PermutationGroup group_;
  std::vector<std::uint32_t> action_;
};

// Carrier transversal(lambda) in lexicographic order, group S_lambda,
// action by letter renaming.
GSet from_transversal(const Partition& lambda, std::uint64_t max_carrier = kDefaultMaxCarrier,
                      int max_degree = kDefaultMaxDegree);
GSet from_transversal(const Transversal& t, int max_degree = kDefaultMaxDegree);

using Congruence = SetPartition;

// Action-closed: every group element maps each block into a single block.
bool is_congruence(const GSet& a, const SetPartition& p);

struct OrbitDecomposition {
  // Each orbit sorted; orbits sorted by their minimum.
  std::vector<std::vector<std::size_t>> orbits;
  // orbit_of[x] indexes `orbits`.
  std::vector<std::size_t> orbit_of;

  std::size_t count() const noexcept { return orbits.size(); }
};

OrbitDecomposition orbits(const GSet& a);
PermutationGroup stabilizer(const GSet& a, std::size_t x);
bool is_transitive(const GSet& a);

// Least congruence relating every given pair.
Congruence principal_closure(const GSet& a, std::span<const std::pair<std::size_t, std::size_t>> pairs);

// Pairs {g(b), g(c)} over all g, plus equality. Throws PreconditionError
// when b and c share an orbit or have different stabilizers.
Congruence rho_bc(const GSet& a, std::size_t b, std::size_t c);

enum class ConStrategy { automatic, scan, principal_join };

inline constexpr std::size_t kDefaultMaxScanCarrier = 10;
inline constexpr std::size_t kDefaultMaxCongruences = 200000;

struct ConOptions {
  ConStrategy strategy = ConStrategy::automatic;
  // The scan strategy filters all set partitions; automatic uses it up to here.
  std::size_t max_scan_carrier = kDefaultMaxScanCarrier;
  // Enumeration stops with CapExceeded past this many congruences.
  std::size_t max_congruences = kDefaultMaxCongruences;
};

// Con(A) in canonical (label sequence) order.
std::vector<Congruence> all_congruences(const GSet& a, const ConOptions& options = {});

inline constexpr std::size_t kDefaultMaxLatticeTable = 1024;

// Con(A) under refinement; element i is all_congruences(a)[i] and labels are
// block listings. Throws CapExceeded past max_elements.
FiniteLattice congruence_lattice(const GSet& a, const ConOptions& options = {},
                                 std::size_t max_elements = kDefaultMaxLatticeTable);
// The refinement lattice on a join- and meet-closed list of congruences.
FiniteLattice congruence_lattice(const GSet& a, std::span<const Congruence> congruences,
                                 std::size_t max_elements = kDefaultMaxLatticeTable);

// Block listing "{112,121}{211}" over the carrier labels.
std::string block_string(const GSet& a, const SetPartition& p);

// The equivalence on orbits: B, C together when equal or connected by alpha.
// Points of the result are orbit indices.
SetPartition alpha_star(const GSet& a, const Congruence& alpha);
SetPartition alpha_star(const OrbitDecomposition& orb, const Congruence& alpha);

enum class OrbitRelation { isolated, connects_only, collapses };

std::string to_string(OrbitRelation r);

// Throws DomainError when b == c.
OrbitRelation classify_orbit_relation(const GSet& a, const Congruence& alpha, std::size_t b,
                                      std::size_t c);
OrbitRelation classify_orbit_relation(const OrbitDecomposition& orb, const Congruence& alpha,
                                      std::size_t b, std::size_t c);

struct GreedyTest {
  bool greedy = true;
  // An orbit pair that alpha connects without collapsing.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  explicit operator bool() const noexcept { return greedy; }
};

GreedyTest is_greedy_congruence(const GSet& a, const Congruence& alpha);
GreedyTest is_greedy_congruence(const OrbitDecomposition& orb, const Congruence& alpha);

std::vector<Congruence> gcon(const GSet& a, const ConOptions& options = {});

// alpha restricted to one orbit, as a partition of positions within it.
SetPartition restrict_to_orbit(const OrbitDecomposition& orb, const Congruence& alpha,
                               std::size_t orbit);

struct EmbeddingReport {
  bool ok = true;
  std::string violation;
  std::vector<Congruence> witness;
  // Greedy congruences and pairs examined.
  std::size_t gcon_size = 0;
  std::size_t pairs_checked = 0;
  explicit operator bool() const noexcept { return ok; }
};

// GCon(A) is closed under join and meet in Con(A), and alpha -> (alpha*,
// restrictions to every orbit) is injective and preserves both operations.
EmbeddingReport gcon_embedding_check(const GSet& a, const ConOptions& options = {});
// Same checks for a given GCon(A), pairing each of `left` with every element.
// Sound when every pair (x, y) of GCon is carried onto some (left_i, y') by a
// lattice automorphism compatible with the embedding; `left` = all of GCon is
// the exhaustive case.
EmbeddingReport gcon_embedding_check(const GSet& a, std::span<const Congruence> gcon_all,
                                     std::span<const std::size_t> left);

// An equivariant bijection from orbit b onto orbit c as map[i] = image of
// orb.orbits[b][i], or nullopt.
std::optional<std::vector<std::size_t>> orbit_isomorphism(const GSet& a, std::size_t b,
                                                          std::size_t c);

}  // namespace oclat
