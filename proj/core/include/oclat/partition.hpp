#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oclat {

// A non-increasing sequence of positive integers. Members of the index set
// Lambda additionally satisfy 2 <= m <= n; looser values (a single part) are
// representable because word contents and extensions pass through them.
class Partition {
 public:
  // Throws DomainError when `parts` is empty, has a non-positive entry or
  // increases somewhere.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(parts_.size()); }

  // 2 <= m <= n.
  bool in_lambda() const noexcept { return m() >= 2 && m() <= n_; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Lambda_{n,m} in lexicographically decreasing order of parts.
// Throws DomainError unless 2 <= m <= n.
std::vector<Partition> enumerate_partitions(int n, int m);

// Every member of Lambda with n <= max_n, ordered by n, then m, then
// lexicographically decreasing parts.
std::vector<Partition> enumerate_lambda(int max_n);

// Number of parts equal to 1.
int q_of(const Partition& p);
// Sum of the parts greater than 1.
int r_of(const Partition& p);
// 0 exactly for (2,1), 1 otherwise.
int delta_of(const Partition& p);
// max(r - q - delta, 0).
int s_of(const Partition& p);

// Appends k parts equal to 1.
Partition extend(const Partition& p, int k);

// Multinomial n! / (l_1! ... l_m!), the number of words with content p.
// Throws OverflowError past 64 bits.
std::uint64_t transversal_size(const Partition& p);

// "2,1,1"
std::string to_string(const Partition& p);
// Accepts "2,1,1"; no whitespace. Throws ParseError / DomainError.
Partition parse_partition(std::string_view text);

}  // namespace oclat
