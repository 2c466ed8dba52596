#include "oclat/set_partition.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "oclat/error.hpp"

namespace oclat {

SetPartition SetPartition::from_labels(std::span<const std::uint32_t> labels) {
  SetPartition p;
  p.labels_.resize(labels.size());
  std::uint32_t max_label = 0;
  for (std::uint32_t v : labels) {
    max_label = std::max(max_label, v);
  }
  if (max_label < 16 * labels.size() + 64) {
    constexpr auto kUnset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> renumber(std::size_t{max_label} + 1, kUnset);
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto& slot = renumber[labels[i]];
      if (slot == kUnset) {
        slot = next++;
      }
      p.labels_[i] = slot;
    }
    p.block_count_ = next;
    return p;
  }
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = renumber.try_emplace(labels[i], static_cast<std::uint32_t>(renumber.size()));
    p.labels_[i] = it->second;
  }
  p.block_count_ = renumber.size();
  return p;
}

SetPartition SetPartition::from_blocks(std::size_t n,
                                       const std::vector<std::vector<std::size_t>>& blocks) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> labels(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw DomainError("set partition blocks must be non-empty");
    }
    for (std::size_t x : blocks[b]) {
      if (x >= n) {
        throw DomainError("set partition block mentions point " + std::to_string(x) +
                          " outside a carrier of size " + std::to_string(n));
      }
      if (labels[x] != kUnset) {
        throw DomainError("point " + std::to_string(x) + " lies in two blocks");
      }
      labels[x] = static_cast<std::uint32_t>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), kUnset) != labels.end()) {
    throw DomainError("set partition blocks do not cover the carrier");
  }
  return from_labels(labels);
}

SetPartition SetPartition::equality(std::size_t n) {
  SetPartition p;
  p.labels_.resize(n);
  std::iota(p.labels_.begin(), p.labels_.end(), 0U);
  p.block_count_ = n;
  return p;
}

SetPartition SetPartition::universal(std::size_t n) {
  SetPartition p;
  p.labels_.assign(n, 0U);
  p.block_count_ = n == 0 ? 0 : 1;
  return p;
}

std::vector<std::vector<std::size_t>> SetPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    out[labels_[i]].push_back(i);
  }
  return out;
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t v : p.labels()) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) {
    throw DomainError("join of set partitions on different carriers");
  }
  DisjointSets sets(a.size());
  // Linking each point to the first point of its block in a and in b suffices.
  std::vector<std::size_t> first_a(a.block_count(), a.size());
  std::vector<std::size_t> first_b(b.block_count(), b.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    auto la = a.block_of(x);
    auto lb = b.block_of(x);
    if (first_a[la] == a.size()) {
      first_a[la] = x;
    } else {
      sets.unite(first_a[la], x);
    }
    if (first_b[lb] == b.size()) {
      first_b[lb] = x;
    } else {
      sets.unite(first_b[lb], x);
    }
  }
  return sets.to_partition();
}

SetPartition meet(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) {
    throw DomainError("meet of set partitions on different carriers");
  }
  std::vector<std::uint32_t> labels(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    labels[x] = a.block_of(x) * static_cast<std::uint32_t>(b.block_count()) + b.block_of(x);
  }
  return SetPartition::from_labels(labels);
}

bool refines(const SetPartition& finer, const SetPartition& coarser) {
  if (finer.size() != coarser.size()) {
    return false;
  }
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> image(finer.block_count(), kUnset);
  for (std::size_t x = 0; x < finer.size(); ++x) {
    auto& slot = image[finer.block_of(x)];
    if (slot == kUnset) {
      slot = coarser.block_of(x);
    } else if (slot != coarser.block_of(x)) {
      return false;
    }
  }
  return true;
}

std::vector<SetPartition> all_set_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  if (n == 0) {
    out.push_back(SetPartition{});
    return out;
  }
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::uint32_t> rgs(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);
  while (true) {
    out.push_back(SetPartition::from_labels(rgs));
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) {
    return false;
  }
  if (x < y) {
    parent_[y] = x;
  } else {
    parent_[x] = y;
  }
  return true;
}

SetPartition DisjointSets::to_partition() {
  std::vector<std::uint32_t> labels(parent_.size());
  for (std::size_t x = 0; x < parent_.size(); ++x) {
    labels[x] = static_cast<std::uint32_t>(find(x));
  }
  return SetPartition::from_labels(labels);
}

}  // namespace oclat
