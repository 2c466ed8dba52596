#include "oclat/gset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <unordered_map>
#include <unordered_set>

#include "oclat/error.hpp"

namespace oclat {

GSet::GSet(std::vector<std::string> labels, PermutationGroup group,
           std::vector<std::vector<std::uint32_t>> action)
    : n_(labels.size()), labels_(std::move(labels)), group_(std::move(group)) {
  if (n_ == 0) {
    throw DomainError("a G-set needs a non-empty carrier");
  }
  if (action.size() != group_.order()) {
    throw DomainError("action table needs one row per group element");
  }
  action_.reserve(group_.order() * n_);
  for (const auto& row : action) {
    if (row.size() != n_) {
      throw DomainError("action row length differs from the carrier size");
    }
    std::vector<bool> hit(n_, false);
    for (std::uint32_t y : row) {
      if (y >= n_ || hit[y]) {
        throw DomainError("action row is not a permutation of the carrier");
      }
      hit[y] = true;
    }
    action_.insert(action_.end(), row.begin(), row.end());
  }
  const std::size_t id = group_.index_of(Permutation::identity(group_.degree()));
  for (std::size_t x = 0; x < n_; ++x) {
    if (act(id, x) != x) {
      throw DomainError("the identity does not act trivially");
    }
  }
  for (std::size_t g = 0; g < group_.order(); ++g) {
    for (std::size_t h = 0; h < group_.order(); ++h) {
      const std::size_t gh = group_.index_of(group_.element(g) * group_.element(h));
      for (std::size_t x = 0; x < n_; ++x) {
        if (act(gh, x) != act(g, act(h, x))) {
          throw DomainError("action is not compatible with composition at point " +
                            std::to_string(x));
        }
      }
    }
  }
}

GSet GSet::trivial(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::uint32_t> row(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
    row[x] = static_cast<std::uint32_t>(x);
  }
  return GSet(std::move(labels), generate({}, 1), {row});
}

GSet GSet::regular(const PermutationGroup& g) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> action(g.order(), std::vector<std::uint32_t>(g.order()));
  for (std::size_t x = 0; x < g.order(); ++x) {
    labels.push_back(to_string(g.element(x)));
  }
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      action[a][x] = static_cast<std::uint32_t>(g.index_of(g.element(a) * g.element(x)));
    }
  }
  return GSet(std::move(labels), g, std::move(action));
}

GSet from_transversal(const Transversal& t, int max_degree) {
  PermutationGroup group = s_lambda_group(t.lambda, max_degree);
  std::vector<std::string> labels;
  labels.reserve(t.size());
  for (const auto& w : t.words) {
    labels.push_back(to_string(w));
  }
  std::vector<std::vector<std::uint32_t>> action(group.order(), std::vector<std::uint32_t>(t.size()));
  for (std::size_t g = 0; g < group.order(); ++g) {
    for (std::size_t x = 0; x < t.size(); ++x) {
      action[g][x] = static_cast<std::uint32_t>(t.index_of(apply_permutation(group.element(g), t.words[x])));
    }
  }
  return GSet(std::move(labels), std::move(group), std::move(action));
}

GSet from_transversal(const Partition& lambda, std::uint64_t max_carrier, int max_degree) {
  return from_transversal(transversal(lambda, max_carrier), max_degree);
}

bool is_congruence(const GSet& a, const SetPartition& p) {
  if (p.size() != a.size()) {
    return false;
  }
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> image(p.block_count());
  for (std::size_t g = 0; g < a.group().order(); ++g) {
    std::fill(image.begin(), image.end(), kUnset);
    for (std::size_t x = 0; x < a.size(); ++x) {
      const std::uint32_t target = p.block_of(a.act(g, x));
      auto& slot = image[p.block_of(x)];
      if (slot == kUnset) {
        slot = target;
      } else if (slot != target) {
        return false;
      }
    }
  }
  return true;
}

OrbitDecomposition orbits(const GSet& a) {
  OrbitDecomposition out;
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  out.orbit_of.assign(a.size(), kUnset);
  for (std::size_t start = 0; start < a.size(); ++start) {
    if (out.orbit_of[start] != kUnset) {
      continue;
    }
    const std::size_t id = out.orbits.size();
    std::vector<std::size_t> orbit;
    for (std::size_t g = 0; g < a.group().order(); ++g) {
      const std::size_t y = a.act(g, start);
      if (out.orbit_of[y] == kUnset) {
        out.orbit_of[y] = id;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

PermutationGroup stabilizer(const GSet& a, std::size_t x) {
  if (x >= a.size()) {
    throw DomainError("point " + std::to_string(x) + " is outside the carrier");
  }
  std::vector<Permutation> fixing;
  for (std::size_t g = 0; g < a.group().order(); ++g) {
    if (a.act(g, x) == x) {
      fixing.push_back(a.group().element(g));
    }
  }
  return generate(fixing, a.group().degree());
}

bool is_transitive(const GSet& a) { return orbits(a).count() == 1; }

namespace {

void check_point(const GSet& a, std::size_t x) {
  if (x >= a.size()) {
    throw DomainError("point " + std::to_string(x) + " is outside the carrier of size " +
                      std::to_string(a.size()));
  }
}

}  // namespace

Congruence principal_closure(const GSet& a,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  // The images of the generating pairs already form an action-closed set, so
  // their equivalence closure is the congruence.
  DisjointSets sets(a.size());
  for (const auto& [x, y] : pairs) {
    check_point(a, x);
    check_point(a, y);
    for (std::size_t g = 0; g < a.group().order(); ++g) {
      sets.unite(a.act(g, x), a.act(g, y));
    }
  }
  return sets.to_partition();
}

Congruence rho_bc(const GSet& a, std::size_t b, std::size_t c) {
  check_point(a, b);
  check_point(a, c);
  const auto orb = orbits(a);
  if (orb.orbit_of[b] == orb.orbit_of[c]) {
    throw PreconditionError("rho_bc needs b and c in distinct orbits");
  }
  if (stabilizer(a, b) != stabilizer(a, c)) {
    throw PreconditionError("rho_bc needs Stab(b) = Stab(c)");
  }
  const std::pair<std::size_t, std::size_t> pair{b, c};
  Congruence rho = principal_closure(a, std::span(&pair, 1));
  for (const auto& block : rho.blocks()) {
    if (block.size() > 2) {
      throw InternalError("rho_bc produced a block of size " + std::to_string(block.size()));
    }
  }
  return rho;
}

namespace {

std::vector<Congruence> scan_congruences(const GSet& a, const ConOptions& options) {
  if (a.size() > options.max_scan_carrier) {
    throw CapExceeded("partition scan needs a carrier of at most " +
                      std::to_string(options.max_scan_carrier) + " points, got " +
                      std::to_string(a.size()));
  }
  std::vector<Congruence> out;
  for (auto& p : all_set_partitions(a.size())) {
    if (is_congruence(a, p)) {
      if (out.size() == options.max_congruences) {
        throw CapExceeded("more than " + std::to_string(options.max_congruences) + " congruences");
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Congruence> principal_join_congruences(const GSet& a, const ConOptions& options) {
  std::unordered_set<Congruence, SetPartitionHash> principal_set;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      const std::pair<std::size_t, std::size_t> pair{x, y};
      principal_set.insert(principal_closure(a, std::span(&pair, 1)));
    }
  }
  std::vector<Congruence> principals(principal_set.begin(), principal_set.end());
  std::sort(principals.begin(), principals.end());

  std::unordered_set<Congruence, SetPartitionHash> found;
  std::vector<Congruence> queue{Congruence::equality(a.size())};
  found.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& p : principals) {
      if (refines(p, queue[i])) {
        continue;
      }
      Congruence joined = join(queue[i], p);
      if (found.insert(joined).second) {
        if (found.size() > options.max_congruences) {
          throw CapExceeded("more than " + std::to_string(options.max_congruences) +
                            " congruences");
        }
        queue.push_back(std::move(joined));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace

std::vector<Congruence> all_congruences(const GSet& a, const ConOptions& options) {
  switch (options.strategy) {
    case ConStrategy::scan:
      return scan_congruences(a, options);
    case ConStrategy::principal_join:
      return principal_join_congruences(a, options);
    case ConStrategy::automatic:
      break;
  }
  return a.size() <= options.max_scan_carrier ? scan_congruences(a, options)
                                               : principal_join_congruences(a, options);
}

std::string block_string(const GSet& a, const SetPartition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      out += (i ? "," : "") + a.label(block[i]);
    }
    out += '}';
  }
  return out;
}

FiniteLattice congruence_lattice(const GSet& a, std::span<const Congruence> congruences,
                                 std::size_t max_elements) {
  const std::size_t k = congruences.size();
  if (k > max_elements) {
    throw CapExceeded("congruence lattice with " + std::to_string(k) +
                      " elements exceeds the table cap " + std::to_string(max_elements));
  }
  std::unordered_map<Congruence, std::size_t, SetPartitionHash> index;
  for (std::size_t i = 0; i < k; ++i) {
    if (!index.emplace(congruences[i], i).second) {
      throw DomainError("duplicate congruence in lattice construction");
    }
  }
  auto lookup = [&](const Congruence& c, const char* op) {
    auto it = index.find(c);
    if (it == index.end()) {
      throw DomainError(std::string("congruence list is not closed under ") + op);
    }
    return it->second;
  };
  FiniteLattice::Matrix leq(k, std::vector<bool>(k));
  FiniteLattice::Table joins(k, std::vector<std::size_t>(k));
  FiniteLattice::Table meets(k, std::vector<std::size_t>(k));
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(block_string(a, congruences[i]));
    for (std::size_t j = 0; j < k; ++j) {
      leq[i][j] = refines(congruences[i], congruences[j]);
      if (j < i) {
        joins[i][j] = joins[j][i];
        meets[i][j] = meets[j][i];
      } else {
        joins[i][j] = lookup(join(congruences[i], congruences[j]), "join");
        meets[i][j] = lookup(meet(congruences[i], congruences[j]), "meet");
      }
    }
  }
  return FiniteLattice::from_tables(leq, joins, meets, std::move(labels));
}

FiniteLattice congruence_lattice(const GSet& a, const ConOptions& options,
                                 std::size_t max_elements) {
  auto cons = all_congruences(a, options);
  return congruence_lattice(a, cons, max_elements);
}

SetPartition alpha_star(const OrbitDecomposition& orb, const Congruence& alpha) {
  DisjointSets sets(orb.count());
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_orbit(alpha.block_count(), kUnset);
  for (std::size_t x = 0; x < alpha.size(); ++x) {
    auto& slot = first_orbit[alpha.block_of(x)];
    if (slot == kUnset) {
      slot = orb.orbit_of[x];
    } else {
      sets.unite(slot, orb.orbit_of[x]);
    }
  }
  return sets.to_partition();
}

SetPartition alpha_star(const GSet& a, const Congruence& alpha) {
  return alpha_star(orbits(a), alpha);
}

std::string to_string(OrbitRelation r) {
  switch (r) {
    case OrbitRelation::isolated:
      return "isolated";
    case OrbitRelation::connects_only:
      return "connects-only";
    case OrbitRelation::collapses:
      return "collapses";
  }
  return "?";
}

OrbitRelation classify_orbit_relation(const OrbitDecomposition& orb, const Congruence& alpha,
                                      std::size_t b, std::size_t c) {
  if (b == c) {
    throw DomainError("classify_orbit_relation needs two distinct orbits");
  }
  if (b >= orb.count() || c >= orb.count()) {
    throw DomainError("orbit index out of range");
  }
  const auto& ob = orb.orbits[b];
  const auto& oc = orb.orbits[c];
  const std::uint32_t first = alpha.block_of(ob.front());
  bool collapses = true;
  std::unordered_set<std::uint32_t> seen;
  for (std::size_t x : ob) {
    seen.insert(alpha.block_of(x));
    collapses = collapses && alpha.block_of(x) == first;
  }
  bool connects = false;
  for (std::size_t y : oc) {
    connects = connects || seen.contains(alpha.block_of(y));
    collapses = collapses && alpha.block_of(y) == first;
  }
  if (collapses) {
    return OrbitRelation::collapses;
  }
  return connects ? OrbitRelation::connects_only : OrbitRelation::isolated;
}

OrbitRelation classify_orbit_relation(const GSet& a, const Congruence& alpha, std::size_t b,
                                      std::size_t c) {
  return classify_orbit_relation(orbits(a), alpha, b, c);
}

GreedyTest is_greedy_congruence(const OrbitDecomposition& orb, const Congruence& alpha) {
  const std::size_t k = orb.count();
  constexpr auto kMixed = static_cast<std::uint32_t>(-1);
  // uniform[i]: the single block label of orbit i, or kMixed.
  std::vector<std::uint32_t> uniform(k);
  for (std::size_t i = 0; i < k; ++i) {
    uniform[i] = alpha.block_of(orb.orbits[i].front());
    for (std::size_t x : orb.orbits[i]) {
      if (alpha.block_of(x) != uniform[i]) {
        uniform[i] = kMixed;
        break;
      }
    }
  }
  std::vector<std::vector<std::size_t>> touched(alpha.block_count());
  for (std::size_t x = 0; x < alpha.size(); ++x) {
    auto& list = touched[alpha.block_of(x)];
    if (list.empty() || list.back() != orb.orbit_of[x]) {
      list.push_back(orb.orbit_of[x]);
    }
  }
  std::vector<bool> connected(k * k, false);
  for (auto& list : touched) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        connected[list[i] * k + list[j]] = true;
      }
    }
  }
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t c = b + 1; c < k; ++c) {
      if (connected[b * k + c] && (uniform[b] == kMixed || uniform[b] != uniform[c])) {
        return {false, std::pair{b, c}};
      }
    }
  }
  return {};
}

GreedyTest is_greedy_congruence(const GSet& a, const Congruence& alpha) {
  return is_greedy_congruence(orbits(a), alpha);
}

std::vector<Congruence> gcon(const GSet& a, const ConOptions& options) {
  const auto orb = orbits(a);
  std::vector<Congruence> out;
  for (auto& c : all_congruences(a, options)) {
    if (is_greedy_congruence(orb, c)) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

SetPartition restrict_to_orbit(const OrbitDecomposition& orb, const Congruence& alpha,
                               std::size_t orbit) {
  std::vector<std::uint32_t> labels;
  labels.reserve(orb.orbits.at(orbit).size());
  for (std::size_t x : orb.orbits[orbit]) {
    labels.push_back(alpha.block_of(x));
  }
  return SetPartition::from_labels(labels);
}

namespace {

// Congruences packed as byte label strings, with the embedding components
// precomputed, so the pairwise sweep avoids allocation.
class EmbeddingSweep {
 public:
  EmbeddingSweep(const GSet& a, std::span<const Congruence> family)
      : family_(family), orb_(orbits(a)), n_(a.size()), k_(orb_.count()) {
    if (n_ > 255) {
      throw CapExceeded("embedding check supports carriers of at most 255 points");
    }
    for (const auto& orbit : orb_.orbits) {
      orbit_order_.insert(orbit_order_.end(), orbit.begin(), orbit.end());
      segment_.push_back(orbit.size());
    }
    labels_.resize(family.size() * n_);
    star_.resize(family.size() * k_);
    restr_.resize(family.size() * n_);
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].size() != n_) {
        throw DomainError("congruence size differs from the carrier");
      }
      for (std::size_t x = 0; x < n_; ++x) {
        labels_[i * n_ + x] = static_cast<std::uint8_t>(family[i].block_of(x));
      }
      fill_components(&labels_[i * n_], &star_[i * k_], &restr_[i * n_]);
    }
    table_.assign(std::bit_ceil(family.size() * 2 + 1), kEmpty);
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!insert(i)) {
        throw DomainError("duplicate congruence in GCon list");
      }
    }
  }

  EmbeddingReport run(std::span<const std::size_t> left) {
    EmbeddingReport report;
    report.gcon_size = family_.size();
    if (auto bad = injectivity_witness()) {
      report.ok = false;
      report.violation = "embedding is not injective";
      report.witness = {family_[bad->first], family_[bad->second]};
      return report;
    }
    std::vector<std::uint8_t> joined(n_), met(n_), star(k_), restr(n_);
    for (std::size_t l : left) {
      const std::uint8_t* x = &labels_[l * n_];
      for (std::size_t r = 0; r < family_.size(); ++r) {
        const std::uint8_t* y = &labels_[r * n_];
        ++report.pairs_checked;
        join_labels(x, y, joined.data());
        meet_labels(x, y, met.data());
        const std::size_t j = find(joined.data());
        const std::size_t m = find(met.data());
        auto fail = [&](std::string what) {
          report.ok = false;
          report.violation = std::move(what);
          report.witness = {family_[l], family_[r]};
          return report;
        };
        if (j == kEmpty) {
          return fail("join of greedy congruences is not greedy");
        }
        if (m == kEmpty) {
          return fail("meet of greedy congruences is not greedy");
        }
        star_join(&star_[l * k_], &star_[r * k_], star.data());
        if (std::memcmp(star.data(), &star_[j * k_], k_) != 0) {
          return fail("alpha* does not preserve the join");
        }
        star_meet(&star_[l * k_], &star_[r * k_], star.data());
        if (std::memcmp(star.data(), &star_[m * k_], k_) != 0) {
          return fail("alpha* does not preserve the meet");
        }
        // Restrictions are stored side by side with disjoint labels, so one
        // join or meet over the whole string acts orbit by orbit.
        join_labels(&restr_[l * n_], &restr_[r * n_], restr.data());
        if (std::memcmp(restr.data(), &restr_[j * n_], n_) != 0) {
          return fail("orbit restrictions do not preserve the join");
        }
        meet_labels(&restr_[l * n_], &restr_[r * n_], restr.data());
        if (std::memcmp(restr.data(), &restr_[m * n_], n_) != 0) {
          return fail("orbit restrictions do not preserve the meet");
        }
      }
    }
    return report;
  }

 private:
  static constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);

  // Labels must be below label_bound.
  static void canonicalize(std::uint8_t* labels, std::size_t n, std::size_t label_bound) {
    std::array<std::uint8_t, 256> renumber;
    std::fill_n(renumber.begin(), label_bound, 0xFF);
    std::uint8_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto& slot = renumber[labels[i]];
      if (slot == 0xFF) {
        slot = next++;
      }
      labels[i] = slot;
    }
  }

  static std::size_t root(std::uint8_t* parent, std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Join of two canonical label strings on n points. Union-find runs over the
  // blocks of x; each block of y glues the x-blocks it meets.
  static void join_into(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out,
                        std::size_t n) {
    std::array<std::uint8_t, 256> parent;
    std::array<std::uint8_t, 256> seen_y;
    // Labels are canonical, hence below n.
    std::fill_n(seen_y.begin(), n, 0xFF);
    for (std::size_t b = 0; b < n; ++b) {
      parent[b] = static_cast<std::uint8_t>(b);
    }
    for (std::size_t p = 0; p < n; ++p) {
      auto& s = seen_y[y[p]];
      if (s == 0xFF) {
        s = x[p];
        continue;
      }
      if (s == x[p]) {
        continue;
      }
      const std::size_t ra = root(parent.data(), x[p]);
      const std::size_t rb = root(parent.data(), s);
      if (ra != rb) {
        parent[std::max(ra, rb)] = static_cast<std::uint8_t>(std::min(ra, rb));
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      out[p] = static_cast<std::uint8_t>(root(parent.data(), x[p]));
    }
    canonicalize(out, n, n);
  }

  void meet_into(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out,
                 std::size_t n) const {
    // Pair labels; x-labels and y-labels are each below n. The scratch table
    // is all-unset between calls.
    std::uint8_t next = 0;
    for (std::size_t p = 0; p < n; ++p) {
      auto& slot = pair_scratch_[x[p] * 256 + y[p]];
      if (slot == 0xFF) {
        slot = next++;
      }
      out[p] = slot;
    }
    for (std::size_t p = 0; p < n; ++p) {
      pair_scratch_[x[p] * 256 + y[p]] = 0xFF;
    }
  }

  void join_labels(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const {
    join_into(x, y, out, n_);
  }
  void meet_labels(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const {
    meet_into(x, y, out, n_);
  }
  void star_join(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const {
    join_into(x, y, out, k_);
  }
  void star_meet(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const {
    meet_into(x, y, out, k_);
  }

  void fill_components(const std::uint8_t* labels, std::uint8_t* star, std::uint8_t* restr) const {
    std::array<std::uint8_t, 256> parent;
    std::array<std::uint8_t, 256> first;
    first.fill(0xFF);
    for (std::size_t i = 0; i < k_; ++i) {
      parent[i] = static_cast<std::uint8_t>(i);
    }
    for (std::size_t x = 0; x < n_; ++x) {
      const std::size_t o = orb_.orbit_of[x];
      auto& f = first[labels[x]];
      if (f == 0xFF) {
        f = static_cast<std::uint8_t>(o);
      } else {
        std::size_t ra = root(parent.data(), o);
        std::size_t rb = root(parent.data(), f);
        if (ra != rb) {
          parent[std::max(ra, rb)] = static_cast<std::uint8_t>(std::min(ra, rb));
        }
      }
    }
    for (std::size_t i = 0; i < k_; ++i) {
      star[i] = static_cast<std::uint8_t>(root(parent.data(), i));
    }
    canonicalize(star, k_, k_);
    std::size_t offset = 0;
    for (std::size_t len : segment_) {
      for (std::size_t p = 0; p < len; ++p) {
        restr[offset + p] = labels[orbit_order_[offset + p]];
      }
      canonicalize(restr + offset, len, n_);
      for (std::size_t p = 0; p < len; ++p) {
        restr[offset + p] = static_cast<std::uint8_t>(restr[offset + p] + offset);
      }
      offset += len;
    }
    canonicalize(restr, n_, n_);
  }

  std::size_t hash(const std::uint8_t* labels) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < n_; ++i) {
      h = (h ^ labels[i]) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  bool insert(std::size_t i) {
    const std::uint8_t* labels = &labels_[i * n_];
    std::size_t slot = hash(labels) & (table_.size() - 1);
    while (table_[slot] != kEmpty) {
      if (std::memcmp(&labels_[table_[slot] * n_], labels, n_) == 0) {
        return false;
      }
      slot = (slot + 1) & (table_.size() - 1);
    }
    table_[slot] = i;
    return true;
  }

  std::size_t find(const std::uint8_t* labels) const {
    std::size_t slot = hash(labels) & (table_.size() - 1);
    while (table_[slot] != kEmpty) {
      if (std::memcmp(&labels_[table_[slot] * n_], labels, n_) == 0) {
        return table_[slot];
      }
      slot = (slot + 1) & (table_.size() - 1);
    }
    return kEmpty;
  }

  std::optional<std::pair<std::size_t, std::size_t>> injectivity_witness() const {
    const std::size_t width = k_ + n_;
    std::unordered_map<std::string, std::size_t> seen;
    seen.reserve(family_.size());
    for (std::size_t i = 0; i < family_.size(); ++i) {
      std::string key(width, '\0');
      std::memcpy(key.data(), &star_[i * k_], k_);
      std::memcpy(key.data() + k_, &restr_[i * n_], n_);
      auto [it, inserted] = seen.emplace(std::move(key), i);
      if (!inserted) {
        return std::pair{it->second, i};
      }
    }
    return std::nullopt;
  }

  std::span<const Congruence> family_;
  OrbitDecomposition orb_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::size_t> orbit_order_;
  std::vector<std::size_t> segment_;
  std::vector<std::uint8_t> labels_;
  std::vector<std::uint8_t> star_;
  std::vector<std::uint8_t> restr_;
  std::vector<std::size_t> table_;
  mutable std::vector<std::uint8_t> pair_scratch_ = std::vector<std::uint8_t>(256 * 256, 0xFF);
};

}  // namespace

EmbeddingReport gcon_embedding_check(const GSet& a, std::span<const Congruence> gcon_all,
                                     std::span<const std::size_t> left) {
  for (std::size_t l : left) {
    if (l >= gcon_all.size()) {
      throw DomainError("left index outside the GCon list");
    }
  }
  return EmbeddingSweep(a, gcon_all).run(left);
}

EmbeddingReport gcon_embedding_check(const GSet& a, const ConOptions& options) {
  const auto all = gcon(a, options);
  std::vector<std::size_t> left(all.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    left[i] = i;
  }
  return gcon_embedding_check(a, all, left);
}

std::optional<std::vector<std::size_t>> orbit_isomorphism(const GSet& a, std::size_t b,
                                                          std::size_t c) {
  if (b == c) {
    throw DomainError("orbit_isomorphism needs two distinct orbits");
  }
  const auto orb = orbits(a);
  if (b >= orb.count() || c >= orb.count()) {
    throw DomainError("orbit index out of range");
  }
  const auto& ob = orb.orbits[b];
  const auto& oc = orb.orbits[c];
  if (ob.size() != oc.size()) {
    return std::nullopt;
  }
  const std::size_t base = ob.front();
  const std::size_t order = a.group().order();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  for (std::size_t target : oc) {
    // phi(g(base)) = g(target) must be well defined and injective.
    std::vector<std::size_t> image(a.size(), kUnset);
    std::vector<bool> used(a.size(), false);
    bool ok = true;
    for (std::size_t g = 0; g < order && ok; ++g) {
      const std::size_t from = a.act(g, base);
      const std::size_t to = a.act(g, target);
      if (image[from] == kUnset) {
        if (used[to]) {
          ok = false;
        }
        image[from] = to;
        used[to] = true;
      } else if (image[from] != to) {
        ok = false;
      }
    }
    if (ok) {
      std::vector<std::size_t> map;
      map.reserve(ob.size());
      for (std::size_t x : ob) {
        map.push_back(image[x]);
      }
      return map;
    }
  }
  return std::nullopt;
}

}  // namespace oclat
