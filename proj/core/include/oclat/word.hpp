#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oclat/partition.hpp"
#include "oclat/permutation.hpp"

namespace oclat {

// A non-empty sequence of 1-based letter indices.
class Word {
 public:
  // Throws DomainError when empty or when a letter is < 1.
  explicit Word(std::vector<int> letters);

  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  // Largest letter index.
  int max_letter() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<int> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Occurrences of letter i. Throws DomainError for i < 1.
int letter_count(const Word& w, int i);
// Nonzero letter counts sorted non-increasingly.
Partition partition_of(const Word& w);
bool is_balanced(const Word& u, const Word& v);

// An identity u = v between words with equal letter counts.
class BalancedIdentity {
 public:
  // Throws DomainError when u and v are not balanced.
  BalancedIdentity(Word lhs, Word rhs);

  const Word& lhs() const noexcept { return lhs_; }
  const Word& rhs() const noexcept { return rhs_; }
  bool is_trivial() const noexcept { return lhs_ == rhs_; }

  friend bool operator==(const BalancedIdentity&, const BalancedIdentity&) = default;
  friend auto operator<=>(const BalancedIdentity&, const BalancedIdentity&) = default;

 private:
  Word lhs_;
  Word rhs_;
};

inline constexpr std::uint64_t kDefaultMaxCarrier = 5040;

// The words w over {1..m} with letter_count(w, i) = lambda_i, sorted
// lexicographically.
struct Transversal {
  Partition lambda;
  std::vector<Word> words;

  std::size_t size() const noexcept { return words.size(); }
  // Position of w in `words`; throws DomainError when absent.
  std::size_t index_of(const Word& w) const;
};

// Throws DomainError unless lambda is in Lambda and CapExceeded when the
// transversal is larger than max_carrier.
Transversal transversal(const Partition& lambda, std::uint64_t max_carrier = kDefaultMaxCarrier);

// Replaces each letter i by sigma(i). Throws DomainError when a letter
// exceeds the degree of sigma.
Word apply_permutation(const Permutation& sigma, const Word& w);

// Digit string when every letter is at most 9, otherwise comma-separated.
std::string to_string(const Word& w);
// Accepts both forms. Throws ParseError.
Word parse_word(std::string_view text);

// "lhs=rhs"
std::string to_string(const BalancedIdentity& e);
// Throws ParseError on syntax, DomainError when unbalanced.
BalancedIdentity parse_identity(std::string_view text);

}  // namespace oclat
