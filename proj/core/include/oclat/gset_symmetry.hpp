#pragma once

// Structure of free G-sets: every orbit is a copy of the regular action, so
// congruences and their symmetry classes have explicit descriptions. These
// make slices tractable whose congruence lattices are too large to list.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "oclat/gset.hpp"

namespace oclat {

// Every stabilizer is trivial.
bool is_free(const GSet& a);

// A bijection of the carrier, image[x] = theta(x).
using CarrierMap = std::vector<std::uint32_t>;

// Bijection commuting with the action.
bool is_automorphism(const GSet& a, std::span<const std::uint32_t> image);

// Generators of the automorphism group of a free G-set: a transposition and
// a cycle of orbits, and right multiplications on the first orbit. Throws
// PreconditionError unless `a` is free.
std::vector<CarrierMap> automorphism_generators(const GSet& a);

// The congruence theta(p): theta(x) ~ theta(y) iff x ~ y.
SetPartition apply_map(const SetPartition& p, std::span<const std::uint32_t> image);

// One index per orbit of the group generated by `gens` on `family`, the
// smallest index of each orbit, ascending. Throws DomainError when an image
// falls outside the family.
std::vector<std::size_t> orbit_representatives(std::span<const SetPartition> family,
                                               std::span<const CarrierMap> gens);

// |Con(A)| for a free G-set, from the block structure: f(k) = sum over j of
// C(k-1, j-1) w(j) f(k-j), w(j) = sum over subgroups H of [G:H]^(j-1).
// Throws OverflowError past 64 bits.
std::uint64_t count_congruences_free(const GSet& a);

// Calls visit on every congruence of a free G-set, each exactly once.
void for_each_free_congruence(const GSet& a, const std::function<void(const Congruence&)>& visit);

// One congruence per automorphism class: blocks of consecutive orbits, each
// block labelled by a size and a conjugacy class of subgroups.
std::vector<Congruence> free_congruence_representatives(const GSet& a);

// |GCon(A)| for a free G-set: orbit partitions whose singleton blocks each
// carry one of the |Sub(G)| congruences of a regular orbit.
std::uint64_t count_greedy_congruences(const GSet& a);

// GCon(A) for a free G-set, built directly, in canonical order.
// Throws CapExceeded when |GCon(A)| > max_count.
std::vector<Congruence> enumerate_greedy_congruences(const GSet& a, std::size_t max_count);

// One greedy congruence per automorphism class.
std::vector<Congruence> greedy_congruence_representatives(const GSet& a);

}  // namespace oclat
