#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oclat {

// A finite lattice stored as explicit order, join and meet tables over the
// indices 0..size()-1. Lattices built through from_order() derive join and
// meet from the order and are lattices by construction; from_tables() takes
// arbitrary tables, and verify_lattice_axioms() is the check for those.
class FiniteLattice {
 public:
  using Matrix = std::vector<std::vector<bool>>;
  using Table = std::vector<std::vector<std::size_t>>;

  // Throws DomainError when `leq` is not a partial order on a non-empty set
  // or some pair lacks a least upper or greatest lower bound.
  static FiniteLattice from_order(const Matrix& leq, std::vector<std::string> labels = {});

  // No validation beyond matching dimensions.
  static FiniteLattice from_tables(const Matrix& leq, const Table& join, const Table& meet,
                                   std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }

  // Least / greatest element (index 0 when the tables are not a lattice).
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // The stored label, or the decimal index when none was given.
  std::string label(std::size_t i) const;

  Matrix order_matrix() const;

  // Compares tables, ignoring labels.
  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.n_ == b.n_ && a.leq_ == b.leq_ && a.join_ == b.join_ && a.meet_ == b.meet_;
  }

 private:
  FiniteLattice() = default;
  void locate_bounds();

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::string> labels_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

struct AxiomReport {
  bool ok = true;
  std::string violation;             // empty when ok
  std::vector<std::size_t> witness;  // offending elements
  explicit operator bool() const noexcept { return ok; }
};

// Partial order, join/meet as least upper / greatest lower bounds, and the
// commutative, associative and absorption laws. Reports the first violation.
AxiomReport verify_lattice_axioms(const FiniteLattice& lattice);

// Result of a special-element predicate. When `holds` is false, `witness`
// is the lexicographically first violating pair (y, z).
struct ElementTest {
  bool holds = true;
  std::vector<std::size_t> witness;
  explicit operator bool() const noexcept { return holds; }
};

// x v y = x v z and x ^ y = x ^ z imply y = z.
ElementTest is_cancellable_element(const FiniteLattice& lattice, std::size_t x);
// x v (y ^ z) = (x v y) ^ (x v z).
ElementTest is_distributive_element(const FiniteLattice& lattice, std::size_t x);
// x ^ (y v z) = (x ^ y) v (x ^ z).
ElementTest is_codistributive_element(const FiniteLattice& lattice, std::size_t x);
// (x v y) ^ z = (x ^ z) v (y ^ z).
ElementTest is_standard_element(const FiniteLattice& lattice, std::size_t x);
// (x ^ y) v z = (x v z) ^ (y v z).
ElementTest is_costandard_element(const FiniteLattice& lattice, std::size_t x);
// y <= z implies (x v y) ^ z = (x ^ z) v y.
ElementTest is_modular_element(const FiniteLattice& lattice, std::size_t x);

// (x v y) ^ (y v z) ^ (z v x) = (x ^ y) v (y ^ z) v (z ^ x) for all y, z.
ElementTest is_neutral_by_median(const FiniteLattice& lattice, std::size_t x);
// The sublattice generated by x, y, z is distributive for all y, z.
ElementTest is_neutral_by_sublattice(const FiniteLattice& lattice, std::size_t x);
// Evaluates both characterizations; throws InternalError if they disagree.
ElementTest is_neutral_element(const FiniteLattice& lattice, std::size_t x);

struct ElementClassification {
  std::size_t element = 0;
  ElementTest cancellable;
  ElementTest distributive;
  ElementTest codistributive;
  ElementTest standard;
  ElementTest costandard;
  ElementTest modular;
  ElementTest neutral;
};

ElementClassification classify(const FiniteLattice& lattice, std::size_t x);

// Order reversed, join and meet swapped, labels kept.
FiniteLattice dual(const FiniteLattice& lattice);

// 0 < 1 < ... < n-1.
FiniteLattice chain(std::size_t n);

inline constexpr int kMaxEqLatticePoints = 6;

// Set partitions of a k-set under refinement, elements in restricted growth
// string order. Throws CapExceeded for k > 6, DomainError for k < 1.
FiniteLattice eq_lattice(int k);

// Every element distributive.
bool is_distributive_lattice(const FiniteLattice& lattice);

// Upward covering pairs (a, b): a < b with nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> covers(const FiniteLattice& lattice);

inline constexpr std::size_t kMaxIsomorphismSize = 200;

// An order isomorphism as map[i] = image of element i, or nullopt.
std::optional<std::vector<std::size_t>> is_isomorphic(const FiniteLattice& a,
                                                      const FiniteLattice& b);
// An order-reversing bijection a -> b, or nullopt.
std::optional<std::vector<std::size_t>> is_anti_isomorphic(const FiniteLattice& a,
                                                           const FiniteLattice& b);

// Every lattice with 1..max_size elements, one per isomorphism class,
// ordered by size. Throws CapExceeded for max_size > 8.
std::vector<FiniteLattice> all_small_lattices(std::size_t max_size);

}  // namespace oclat
