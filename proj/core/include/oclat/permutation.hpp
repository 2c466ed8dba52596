#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oclat/lattice.hpp"
#include "oclat/partition.hpp"

namespace oclat {

// A bijection of {1..m}; images()[i-1] holds sigma(i).
class Permutation {
 public:
  // Throws DomainError unless `images` is a bijection of {1..images.size()}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  // sigma(i) for 1 <= i <= degree().
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  // (a * b)(i) = a(b(i)): b acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// One-line form "2,1,4,3".
std::string to_string(const Permutation& p);
// Cycle form "(1 2)(3 4)"; the identity prints as "()".
std::string to_cycle_string(const Permutation& p);

// Accepts both the one-line form and cycle notation. Cycle notation needs a
// degree; degree 0 means "the largest point mentioned".
Permutation parse_permutation(std::string_view text, int degree = 0);

// A finite group of permutations of {1..m}, stored as its sorted element list.
class PermutationGroup {
 public:
  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

  bool contains(const Permutation& p) const;
  // Position in elements(); throws DomainError when absent.
  std::size_t index_of(const Permutation& p) const;
  bool is_subgroup_of(const PermutationGroup& other) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  friend bool operator==(const PermutationGroup&, const PermutationGroup&) = default;
  friend auto operator<=>(const PermutationGroup& a, const PermutationGroup& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) {
      return c;
    }
    return a.elements_ <=> b.elements_;
  }

  // Closure of `gens` under composition; the identity is always included.
  friend PermutationGroup generate(std::span<const Permutation> gens, int degree);

 private:
  PermutationGroup(int degree, std::vector<Permutation> elements)
      : degree_(degree), elements_(std::move(elements)) {}

  int degree_ = 0;
  std::vector<Permutation> elements_;
};

PermutationGroup generate(std::span<const Permutation> gens, int degree);

inline constexpr int kDefaultMaxDegree = 6;
inline constexpr std::size_t kDefaultMaxOrder = 120;

// All m! permutations. Throws CapExceeded above max_degree.
PermutationGroup symmetric_group(int m, int max_degree = kDefaultMaxDegree);

// Permutations sigma of {1..m} with p[i] = p[sigma(i)] for every i.
PermutationGroup s_lambda_group(const Partition& p, int max_degree = kDefaultMaxDegree);

// Closure, identity, inverses and the order dividing m!.
bool verify_group_axioms(const PermutationGroup& g);

// Every subgroup of g, sorted by order and then by element list.
// Throws CapExceeded when |g| > max_order.
std::vector<PermutationGroup> all_subgroups(const PermutationGroup& g,
                                            std::size_t max_order = kDefaultMaxOrder);

// Sub(g) ordered by inclusion. Element i is all_subgroups(g)[i]; labels list a
// small generating set in cycle form, e.g. "<(1 2 3),(1 2)>", with "<>" trivial.
FiniteLattice subgroup_lattice(const PermutationGroup& g, std::size_t max_order = kDefaultMaxOrder);
FiniteLattice subgroup_lattice(std::span<const PermutationGroup> subgroups);

// Subgroup generated by the union (the lattice join in Sub(G)).
PermutationGroup join(const PermutationGroup& a, const PermutationGroup& b);
// Intersection (the lattice meet in Sub(G)).
PermutationGroup meet(const PermutationGroup& a, const PermutationGroup& b);

// g H g^{-1}.
PermutationGroup conjugate(const PermutationGroup& h, const Permutation& g);

}  // namespace oclat
