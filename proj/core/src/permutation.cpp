#include "oclat/permutation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "oclat/error.hpp"

namespace oclat {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("permutation images are not a bijection of {1.." +
                        std::to_string(images_.size()) + "}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) {
    throw DomainError("negative permutation degree");
  }
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("composing permutations of different degrees");
  }
  std::vector<int> out(a.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a(b.images_[i]);
  }
  return Permutation(std::move(out));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) {
      out += ',';
    }
    out += std::to_string(p(i));
  }
  return out;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> done(static_cast<std::size_t>(p.degree()) + 1, false);
  for (int start = 1; start <= p.degree(); ++start) {
    if (done[static_cast<std::size_t>(start)] || p(start) == start) {
      continue;
    }
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) {
        out += ' ';
      }
      first = false;
      out += std::to_string(x);
      done[static_cast<std::size_t>(x)] = true;
      x = p(x);
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

std::vector<int> parse_ints(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == ',') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) {
      throw ParseError("malformed permutation '" + std::string(whole) + "'");
    }
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int degree) {
  if (text.empty()) {
    throw ParseError("empty permutation");
  }
  if (text.front() != '(') {
    auto images = parse_ints(text, text);
    if (degree != 0 && static_cast<int>(images.size()) != degree) {
      throw ParseError("permutation '" + std::string(text) + "' does not have degree " +
                       std::to_string(degree));
    }
    return Permutation(std::move(images));
  }
  std::vector<std::vector<int>> cycles;
  int largest = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError("malformed cycle notation '" + std::string(text) + "'");
    }
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) {
      throw ParseError("unbalanced parenthesis in '" + std::string(text) + "'");
    }
    auto cycle = parse_ints(text.substr(i + 1, close - i - 1), text);
    for (int v : cycle) {
      if (v < 1) {
        throw ParseError("cycle points must be positive in '" + std::string(text) + "'");
      }
      largest = std::max(largest, v);
    }
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  if (degree == 0) {
    degree = largest;
  }
  if (largest > degree) {
    throw DomainError("cycle notation mentions point " + std::to_string(largest) +
                      " beyond degree " + std::to_string(degree));
  }
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  // Cycles compose right to left, matching operator*.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cycle = *it;
    std::vector<int> step(images.size());
    std::iota(step.begin(), step.end(), 1);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      step[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    }
    std::vector<int> composed(images.size());
    for (std::size_t x = 0; x < images.size(); ++x) {
      composed[x] = step[static_cast<std::size_t>(images[x] - 1)];
    }
    images = std::move(composed);
  }
  return Permutation(std::move(images));
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) {
    throw DomainError("permutation " + to_cycle_string(p) + " is not in the group");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (degree_ != other.degree_) {
    return false;
  }
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

PermutationGroup generate(std::span<const Permutation> gens, int degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw DomainError("generator " + to_string(g) + " does not have degree " +
                        std::to_string(degree));
    }
  }
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> queue{Permutation::identity(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = queue[i] * g;
      if (seen.insert(next).second) {
        queue.push_back(std::move(next));
      }
    }
  }
  return PermutationGroup(degree, std::vector<Permutation>(seen.begin(), seen.end()));
}

PermutationGroup symmetric_group(int m, int max_degree) {
  if (m < 1) {
    throw DomainError("symmetric_group needs m >= 1");
  }
  if (m > max_degree) {
    throw CapExceeded("symmetric group degree " + std::to_string(m) + " exceeds the cap " +
                      std::to_string(max_degree));
  }
  std::vector<Permutation> gens;
  if (m >= 2) {
    gens.push_back(parse_permutation("(1 2)", m));
    std::vector<int> cycle(static_cast<std::size_t>(m));
    std::iota(cycle.begin(), cycle.end(), 2);
    cycle.back() = 1;
    gens.emplace_back(std::move(cycle));
  }
  return generate(gens, m);
}

PermutationGroup s_lambda_group(const Partition& p, int max_degree) {
  const int m = p.m();
  if (m > max_degree) {
    throw CapExceeded("S_lambda degree " + std::to_string(m) + " exceeds the cap " +
                      std::to_string(max_degree));
  }
  // Transpositions of adjacent equal parts generate the stabilizer of the
  // part sequence, since equal parts occupy contiguous runs.
  std::vector<Permutation> gens;
  for (int i = 1; i < m; ++i) {
    if (p[static_cast<std::size_t>(i - 1)] == p[static_cast<std::size_t>(i)]) {
      std::vector<int> images(static_cast<std::size_t>(m));
      std::iota(images.begin(), images.end(), 1);
      std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
      gens.emplace_back(std::move(images));
    }
  }
  return generate(gens, m);
}

bool verify_group_axioms(const PermutationGroup& g) {
  if (!g.contains(Permutation::identity(g.degree()))) {
    return false;
  }
  for (const auto& a : g.elements()) {
    if (!g.contains(a.inverse())) {
      return false;
    }
    for (const auto& b : g.elements()) {
      if (!g.contains(a * b)) {
        return false;
      }
    }
  }
  std::uint64_t factorial = 1;
  for (int i = 2; i <= g.degree(); ++i) {
    factorial *= static_cast<std::uint64_t>(i);
  }
  return factorial % g.order() == 0;
}

namespace {

// Subsets of a group's element indices; |G| <= 128 keeps this to two words.
struct ElementSet {
  std::array<std::uint64_t, 2> bits{};
  void set(std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (bits[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const {
    return static_cast<std::size_t>(__builtin_popcountll(bits[0]) + __builtin_popcountll(bits[1]));
  }
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;
};

class SubgroupEnumerator {
 public:
  explicit SubgroupEnumerator(const PermutationGroup& g) : g_(g), n_(g.order()) {
    product_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        product_[a * n_ + b] = g.index_of(g.element(a) * g.element(b));
      }
    }
    identity_ = g.index_of(Permutation::identity(g.degree()));
  }

  std::vector<PermutationGroup> run() {
    std::vector<std::size_t> cyclic_gens;
    std::set<ElementSet> cyclic_seen;
    for (std::size_t x = 0; x < n_; ++x) {
      if (cyclic_seen.insert(closure({x})).second) {
        cyclic_gens.push_back(x);
      }
    }
    struct Item {
      ElementSet set;
      std::vector<std::size_t> gens;
    };
    std::set<ElementSet> found;
    std::vector<Item> work;
    ElementSet trivial;
    trivial.set(identity_);
    found.insert(trivial);
    work.push_back({trivial, {}});
    for (std::size_t i = 0; i < work.size(); ++i) {
      for (std::size_t c : cyclic_gens) {
        if (work[i].set.test(c)) {
          continue;
        }
        auto gens = work[i].gens;
        gens.push_back(c);
        ElementSet joined = closure(gens);
        if (found.insert(joined).second) {
          work.push_back({joined, std::move(gens)});
        }
      }
    }
    std::vector<PermutationGroup> out;
    out.reserve(found.size());
    for (const auto& s : found) {
      std::vector<Permutation> gens;
      for (std::size_t x = 0; x < n_; ++x) {
        if (s.test(x)) {
          gens.push_back(g_.element(x));
        }
      }
      out.push_back(generate(gens, g_.degree()));
    }
    std::sort(out.begin(), out.end(), [](const PermutationGroup& a, const PermutationGroup& b) {
      if (a.order() != b.order()) {
        return a.order() < b.order();
      }
      return a < b;
    });
    return out;
  }

 private:
  ElementSet closure(const std::vector<std::size_t>& gens) const {
    ElementSet s;
    s.set(identity_);
    std::vector<std::size_t> queue{identity_};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t gen : gens) {
        std::size_t next = product_[queue[i] * n_ + gen];
        if (!s.test(next)) {
          s.set(next);
          queue.push_back(next);
        }
      }
    }
    return s;
  }

  const PermutationGroup& g_;
  std::size_t n_;
  std::vector<std::size_t> product_;
  std::size_t identity_ = 0;
};

std::string subgroup_label(const PermutationGroup& h) {
  if (h.is_trivial()) {
    return "<>";
  }
  // Greedy generating set over the sorted element list.
  std::vector<Permutation> gens;
  std::size_t reached = 1;
  for (const auto& x : h.elements()) {
    if (reached == h.order()) {
      break;
    }
    std::vector<Permutation> trial = gens;
    trial.push_back(x);
    auto grown = generate(trial, h.degree());
    if (grown.order() > reached) {
      gens = std::move(trial);
      reached = grown.order();
    }
  }
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out += (i ? "," : "") + to_cycle_string(gens[i]);
  }
  return out + ">";
}

}  // namespace

std::vector<PermutationGroup> all_subgroups(const PermutationGroup& g, std::size_t max_order) {
  if (g.order() > max_order) {
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds the subgroup cap " +
                      std::to_string(max_order));
  }
  if (g.order() > 128) {
    throw CapExceeded("subgroup enumeration supports groups of order at most 128");
  }
  return SubgroupEnumerator(g).run();
}

FiniteLattice subgroup_lattice(std::span<const PermutationGroup> subgroups) {
  const std::size_t n = subgroups.size();
  FiniteLattice::Matrix leq(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      leq[a][b] = subgroups[a].is_subgroup_of(subgroups[b]);
    }
    labels.push_back(subgroup_label(subgroups[a]));
  }
  return FiniteLattice::from_order(leq, std::move(labels));
}

FiniteLattice subgroup_lattice(const PermutationGroup& g, std::size_t max_order) {
  auto subgroups = all_subgroups(g, max_order);
  return subgroup_lattice(subgroups);
}

PermutationGroup join(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("join of groups of different degrees");
  }
  std::vector<Permutation> gens(a.elements().begin(), a.elements().end());
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return generate(gens, a.degree());
}

PermutationGroup meet(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("meet of groups of different degrees");
  }
  std::vector<Permutation> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(common));
  return generate(common, a.degree());
}

PermutationGroup conjugate(const PermutationGroup& h, const Permutation& g) {
  const Permutation g_inv = g.inverse();
  std::vector<Permutation> gens;
  gens.reserve(h.order());
  for (const auto& x : h.elements()) {
    gens.push_back(g * x * g_inv);
  }
  return generate(gens, h.degree());
}

}  // namespace oclat
