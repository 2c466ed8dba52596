#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace oclat {

// A set partition of {0, ..., n-1} in canonical form: labels()[i] is the
// block index of point i, blocks numbered in order of their minimum element
// (a restricted growth string). Equal partitions have equal labels.
class SetPartition {
 public:
  SetPartition() = default;

  // Canonicalizes arbitrary labels; points with equal labels share a block.
  static SetPartition from_labels(std::span<const std::uint32_t> labels);
  // Throws DomainError unless `blocks` cover {0..n-1} exactly once.
  static SetPartition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);
  // All singletons.
  static SetPartition equality(std::size_t n);
  // One block.
  static SetPartition universal(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::uint32_t block_of(std::size_t x) const { return labels_[x]; }
  bool related(std::size_t x, std::size_t y) const { return labels_[x] == labels_[y]; }
  std::span<const std::uint32_t> labels() const noexcept { return labels_; }

  // Blocks sorted by minimum element, each block sorted.
  std::vector<std::vector<std::size_t>> blocks() const;

  bool is_equality() const noexcept { return block_count_ == labels_.size(); }
  bool is_universal() const noexcept { return block_count_ <= 1; }

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.labels_ == b.labels_;
  }
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<std::uint32_t> labels_;
  std::size_t block_count_ = 0;
};

struct SetPartitionHash {
  std::size_t operator()(const SetPartition& p) const noexcept;
};

// Finest common coarsening.
SetPartition join(const SetPartition& a, const SetPartition& b);
// Common refinement.
SetPartition meet(const SetPartition& a, const SetPartition& b);
// Every block of `finer` lies inside a block of `coarser`.
bool refines(const SetPartition& finer, const SetPartition& coarser);

// All set partitions of an n-set in restricted-growth-string order.
std::vector<SetPartition> all_set_partitions(std::size_t n);

// Union-find over a fixed range; path halving plus union by index.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  // Returns true when x and y were in different classes.
  bool unite(std::size_t x, std::size_t y);
  SetPartition to_partition();

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace oclat
