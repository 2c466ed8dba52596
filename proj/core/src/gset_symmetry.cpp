#include "oclat/gset_symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "oclat/error.hpp"

namespace oclat {

bool is_free(const GSet& a) {
  const std::size_t order = a.group().order();
  for (std::size_t x = 0; x < a.size(); ++x) {
    std::size_t fixed = 0;
    for (std::size_t g = 0; g < order; ++g) {
      fixed += a.act(g, x) == x ? 1 : 0;
    }
    if (fixed != 1) {
      return false;
    }
  }
  return true;
}

bool is_automorphism(const GSet& a, std::span<const std::uint32_t> image) {
  if (image.size() != a.size()) {
    return false;
  }
  std::vector<bool> hit(a.size(), false);
  for (std::uint32_t y : image) {
    if (y >= a.size() || hit[y]) {
      return false;
    }
    hit[y] = true;
  }
  for (std::size_t g = 0; g < a.group().order(); ++g) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (image[a.act(g, x)] != a.act(g, image[x])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Index arithmetic for a free G-set: point(i, g) = g(base_i).
class FreeLayout {
 public:
  explicit FreeLayout(const GSet& a) : a_(a), orb_(orbits(a)), order_(a.group().order()) {
    if (!is_free(a)) {
      throw PreconditionError("the G-set is not free (some stabilizer is non-trivial)");
    }
    const auto& g = a.group();
    mul_.resize(order_ * order_);
    for (std::size_t x = 0; x < order_; ++x) {
      for (std::size_t y = 0; y < order_; ++y) {
        mul_[x * order_ + y] = g.index_of(g.element(x) * g.element(y));
      }
    }
    for (const auto& orbit : orb_.orbits) {
      base_.push_back(orbit.front());
    }
    subgroups_ = all_subgroups(g);
    for (const auto& h : subgroups_) {
      std::vector<std::size_t> members;
      for (const auto& p : h.elements()) {
        members.push_back(g.index_of(p));
      }
      // coset[u] numbers the left cosets uH by first appearance.
      constexpr auto kUnset = static_cast<std::size_t>(-1);
      std::vector<std::size_t> coset(order_, kUnset);
      std::vector<std::size_t> reps;
      for (std::size_t u = 0; u < order_; ++u) {
        if (coset[u] != kUnset) {
          continue;
        }
        for (std::size_t m : members) {
          coset[mul_[u * order_ + m]] = reps.size();
        }
        reps.push_back(u);
      }
      coset_.push_back(std::move(coset));
      coset_reps_.push_back(std::move(reps));
    }
    class_of_.assign(subgroups_.size(), 0);
    for (std::size_t s = 0; s < subgroups_.size(); ++s) {
      std::size_t smallest = s;
      for (const auto& p : g.elements()) {
        auto conj = conjugate(subgroups_[s], p);
        auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), conj,
                                   [](const PermutationGroup& x, const PermutationGroup& y) {
                                     return x.order() != y.order() ? x.order() < y.order() : x < y;
                                   });
        smallest = std::min(smallest, static_cast<std::size_t>(it - subgroups_.begin()));
      }
      class_of_[s] = smallest;
      if (smallest == s) {
        class_reps_.push_back(s);
      }
    }
  }

  std::size_t orbit_count() const noexcept { return base_.size(); }
  std::size_t order() const noexcept { return order_; }
  std::size_t point(std::size_t orbit, std::size_t g) const { return a_.act(g, base_[orbit]); }
  std::size_t subgroup_count() const noexcept { return subgroups_.size(); }
  std::size_t index(std::size_t s) const noexcept { return coset_reps_[s].size(); }
  const std::vector<std::size_t>& coset_reps(std::size_t s) const { return coset_reps_[s]; }
  const std::vector<std::size_t>& class_reps() const noexcept { return class_reps_; }
  const std::vector<std::size_t>& orbit(std::size_t i) const { return orb_.orbits[i]; }
  std::size_t whole_group() const noexcept { return subgroups_.size() - 1; }

  // Block `orbits` with subgroup s and cosets t (t[0] is the identity slot):
  // g(base_p) ~ g'(base_q) iff g t_p H = g' t_q H.
  void label_block(const std::vector<std::size_t>& orbits, std::size_t s,
                   const std::vector<std::size_t>& t, std::uint32_t offset,
                   std::vector<std::uint32_t>& labels) const {
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      for (std::size_t g = 0; g < order_; ++g) {
        labels[point(orbits[i], g)] =
            offset + static_cast<std::uint32_t>(coset_[s][mul_[g * order_ + t[i]]]);
      }
    }
  }

  std::size_t identity() const {
    return a_.group().index_of(Permutation::identity(a_.group().degree()));
  }

 private:
  const GSet& a_;
  OrbitDecomposition orb_;
  std::size_t order_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> base_;
  std::vector<PermutationGroup> subgroups_;
  std::vector<std::vector<std::size_t>> coset_;
  std::vector<std::vector<std::size_t>> coset_reps_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> class_reps_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("count exceeds 64 bits");
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("count exceeds 64 bits");
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = checked_mul(out, n - k + i) / i;
  }
  return out;
}

// Calls visit(blocks) for every set partition of {0..k-1}, blocks listed by
// their minimum.
void for_each_set_partition(std::size_t k,
                            const std::function<void(const std::vector<std::vector<std::size_t>>&)>& visit) {
  std::vector<std::vector<std::size_t>> blocks;
  std::function<void(std::size_t)> place = [&](std::size_t x) {
    if (x == k) {
      visit(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(x);
      place(x + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({x});
    place(x + 1);
    blocks.pop_back();
  };
  place(0);
}

}  // namespace

std::vector<CarrierMap> automorphism_generators(const GSet& a) {
  const FreeLayout layout(a);
  const std::size_t k = layout.orbit_count();
  const std::size_t order = layout.order();
  std::vector<CarrierMap> gens;
  CarrierMap identity(a.size());
  std::iota(identity.begin(), identity.end(), 0U);
  if (k >= 2) {
    CarrierMap swap = identity;
    CarrierMap cycle = identity;
    for (std::size_t g = 0; g < order; ++g) {
      swap[layout.point(0, g)] = static_cast<std::uint32_t>(layout.point(1, g));
      swap[layout.point(1, g)] = static_cast<std::uint32_t>(layout.point(0, g));
      for (std::size_t i = 0; i < k; ++i) {
        cycle[layout.point(i, g)] = static_cast<std::uint32_t>(layout.point((i + 1) % k, g));
      }
    }
    gens.push_back(std::move(swap));
    if (k >= 3) {
      gens.push_back(std::move(cycle));
    }
  }
  // g(base_0) -> gh(base_0) for each h.
  const auto& group = a.group();
  for (std::size_t h = 0; h < order; ++h) {
    if (group.element(h).is_identity()) {
      continue;
    }
    CarrierMap right = identity;
    for (std::size_t g = 0; g < order; ++g) {
      const std::size_t gh = group.index_of(group.element(g) * group.element(h));
      right[layout.point(0, g)] = static_cast<std::uint32_t>(layout.point(0, gh));
    }
    gens.push_back(std::move(right));
  }
  for (const auto& gen : gens) {
    if (!is_automorphism(a, gen)) {
      throw InternalError("constructed map is not an automorphism");
    }
  }
  return gens;
}

SetPartition apply_map(const SetPartition& p, std::span<const std::uint32_t> image) {
  if (image.size() != p.size()) {
    throw DomainError("map and partition sizes differ");
  }
  std::vector<std::uint32_t> labels(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    labels[image[x]] = p.block_of(x);
  }
  return SetPartition::from_labels(labels);
}

std::vector<std::size_t> orbit_representatives(std::span<const SetPartition> family,
                                               std::span<const CarrierMap> gens) {
  std::unordered_map<SetPartition, std::size_t, SetPartitionHash> index;
  index.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    index.emplace(family[i], i);
  }
  DisjointSets sets(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const auto& gen : gens) {
      auto it = index.find(apply_map(family[i], gen));
      if (it == index.end()) {
        throw DomainError("family is not closed under the given maps");
      }
      sets.unite(i, it->second);
    }
  }
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (sets.find(i) == i) {
      reps.push_back(i);
    }
  }
  return reps;
}

std::uint64_t count_congruences_free(const GSet& a) {
  const FreeLayout layout(a);
  const std::size_t k = layout.orbit_count();
  std::vector<std::uint64_t> w(k + 1, 0);
  for (std::size_t j = 1; j <= k; ++j) {
    for (std::size_t s = 0; s < layout.subgroup_count(); ++s) {
      std::uint64_t term = 1;
      for (std::size_t e = 1; e < j; ++e) {
        term = checked_mul(term, layout.index(s));
      }
      w[j] = checked_add(w[j], term);
    }
  }
  std::vector<std::uint64_t> f(k + 1, 0);
  f[0] = 1;
  for (std::size_t n = 1; n <= k; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      f[n] = checked_add(f[n], checked_mul(checked_mul(binomial(n - 1, j - 1), w[j]), f[n - j]));
    }
  }
  return f[k];
}

void for_each_free_congruence(const GSet& a, const std::function<void(const Congruence&)>& visit) {
  const FreeLayout layout(a);
  std::vector<std::uint32_t> labels(a.size());
  for_each_set_partition(layout.orbit_count(), [&](const std::vector<std::vector<std::size_t>>& blocks) {
    // Choose a subgroup and cosets block by block.
    std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t b, std::uint32_t offset) {
      if (b == blocks.size()) {
        visit(SetPartition::from_labels(labels));
        return;
      }
      const auto& block = blocks[b];
      for (std::size_t s = 0; s < layout.subgroup_count(); ++s) {
        const auto& reps = layout.coset_reps(s);
        std::vector<std::size_t> choice(block.size(), 0);
        std::vector<std::size_t> t(block.size(), reps[0]);
        const auto next_offset = offset + static_cast<std::uint32_t>(layout.index(s));
        while (true) {
          layout.label_block(block, s, t, offset, labels);
          fill(b + 1, next_offset);
          std::size_t i = 1;
          while (i < block.size() && ++choice[i] == reps.size()) {
            choice[i] = 0;
            t[i] = reps[0];
            ++i;
          }
          if (i >= block.size()) {
            break;
          }
          t[i] = reps[choice[i]];
        }
      }
    };
    fill(0, 0);
  });
}

std::vector<Congruence> free_congruence_representatives(const GSet& a) {
  const FreeLayout layout(a);
  const std::size_t k = layout.orbit_count();
  const auto& classes = layout.class_reps();
  const std::size_t c = classes.size();
  const std::vector<std::size_t> identity_t(k, layout.identity());
  std::vector<Congruence> out;
  std::vector<std::size_t> types;
  // Multisets of (block size, subgroup class) with sizes summing to k, as
  // non-decreasing type sequences; type = (size - 1) * c + class.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t remaining, std::size_t min_type) {
    if (remaining == 0) {
      std::vector<std::uint32_t> labels(a.size());
      std::size_t next_orbit = 0;
      std::uint32_t offset = 0;
      for (std::size_t type : types) {
        const std::size_t size = type / c + 1;
        const std::size_t s = classes[type % c];
        std::vector<std::size_t> block(size);
        std::iota(block.begin(), block.end(), next_orbit);
        next_orbit += size;
        layout.label_block(block, s, identity_t, offset, labels);
        offset += static_cast<std::uint32_t>(layout.index(s));
      }
      out.push_back(SetPartition::from_labels(labels));
      return;
    }
    for (std::size_t type = min_type; type / c + 1 <= remaining; ++type) {
      types.push_back(type);
      extend(remaining - (type / c + 1), type);
      types.pop_back();
    }
  };
  extend(k, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_greedy_congruences(const GSet& a) {
  const FreeLayout layout(a);
  const std::size_t k = layout.orbit_count();
  // No-singleton set partitions: b0[n+1] = sum_{j>=1} C(n, j) b0[n-j].
  std::vector<std::uint64_t> b0(k + 1, 0);
  b0[0] = 1;
  for (std::size_t n = 0; n + 1 <= k; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      b0[n + 1] = checked_add(b0[n + 1], checked_mul(binomial(n, j), b0[n - j]));
    }
  }
  std::uint64_t total = 0;
  for (std::size_t s = 0; s <= k; ++s) {
    std::uint64_t term = checked_mul(binomial(k, s), b0[k - s]);
    for (std::size_t i = 0; i < s; ++i) {
      term = checked_mul(term, layout.subgroup_count());
    }
    total = checked_add(total, term);
  }
  return total;
}

std::vector<Congruence> enumerate_greedy_congruences(const GSet& a, std::size_t max_count) {
  const std::uint64_t count = count_greedy_congruences(a);
  if (count > max_count) {
    throw CapExceeded("GCon has " + std::to_string(count) + " elements, above the cap " +
                      std::to_string(max_count));
  }
  const FreeLayout layout(a);
  const std::vector<std::size_t> identity_t(layout.orbit_count(), layout.identity());
  std::vector<Congruence> out;
  out.reserve(count);
  std::vector<std::uint32_t> labels(a.size());
  for_each_set_partition(layout.orbit_count(), [&](const std::vector<std::vector<std::size_t>>& blocks) {
    std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t b, std::uint32_t offset) {
      if (b == blocks.size()) {
        out.push_back(SetPartition::from_labels(labels));
        return;
      }
      if (blocks[b].size() > 1) {
        layout.label_block(blocks[b], layout.whole_group(), identity_t, offset, labels);
        fill(b + 1, offset + 1);
        return;
      }
      for (std::size_t s = 0; s < layout.subgroup_count(); ++s) {
        layout.label_block(blocks[b], s, identity_t, offset, labels);
        fill(b + 1, offset + static_cast<std::uint32_t>(layout.index(s)));
      }
    };
    fill(0, 0);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Congruence> greedy_congruence_representatives(const GSet& a) {
  const FreeLayout layout(a);
  const std::size_t k = layout.orbit_count();
  const auto& classes = layout.class_reps();
  const std::vector<std::size_t> identity_t(k, layout.identity());
  std::vector<Congruence> out;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> singles;
  auto emit = [&]() {
    std::vector<std::uint32_t> labels(a.size());
    std::size_t next_orbit = 0;
    std::uint32_t offset = 0;
    for (std::size_t size : sizes) {
      std::vector<std::size_t> block(size);
      std::iota(block.begin(), block.end(), next_orbit);
      next_orbit += size;
      layout.label_block(block, layout.whole_group(), identity_t, offset, labels);
      offset += 1;
    }
    for (std::size_t cls : singles) {
      const std::size_t s = classes[cls];
      layout.label_block({next_orbit++}, s, identity_t, offset, labels);
      offset += static_cast<std::uint32_t>(layout.index(s));
    }
    out.push_back(SetPartition::from_labels(labels));
  };
  // Singleton classes as a non-decreasing sequence of class positions.
  std::function<void(std::size_t, std::size_t)> pick_singles = [&](std::size_t remaining, std::size_t min_cls) {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::size_t cls = min_cls; cls < classes.size(); ++cls) {
      singles.push_back(cls);
      pick_singles(remaining - 1, cls);
      singles.pop_back();
    }
  };
  // Block sizes >= 2 as a non-increasing sequence.
  std::function<void(std::size_t, std::size_t, std::size_t)> pick_sizes =
      [&](std::size_t remaining, std::size_t max_size, std::size_t singletons) {
        if (remaining == 0) {
          pick_singles(singletons, 0);
          return;
        }
        for (std::size_t size = std::min(max_size, remaining); size >= 2; --size) {
          sizes.push_back(size);
          pick_sizes(remaining - size, size, singletons);
          sizes.pop_back();
        }
      };
  for (std::size_t s = 0; s <= k; ++s) {
    pick_sizes(k - s, k - s, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oclat
