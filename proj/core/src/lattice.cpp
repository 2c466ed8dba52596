#include "oclat/lattice.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "oclat/error.hpp"
#include "oclat/set_partition.hpp"

namespace oclat {

namespace {

constexpr auto kNone = static_cast<std::uint32_t>(-1);

void check_square(const FiniteLattice::Matrix& leq) {
  if (leq.empty()) {
    throw DomainError("a lattice needs at least one element");
  }
  for (const auto& row : leq) {
    if (row.size() != leq.size()) {
      throw DomainError("order matrix is not square");
    }
  }
}

}  // namespace

FiniteLattice FiniteLattice::from_order(const Matrix& leq, std::vector<std::string> labels) {
  check_square(leq);
  const std::size_t n = leq.size();
  FiniteLattice l;
  l.n_ = n;
  l.leq_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      l.leq_[a * n + b] = leq[a][b] ? 1 : 0;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!l.leq(a, a)) {
      throw DomainError("order is not reflexive at " + std::to_string(a));
    }
    for (std::size_t b = a + 1; b < n; ++b) {
      if (l.leq(a, b) && l.leq(b, a)) {
        throw DomainError("order is not antisymmetric at (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!l.leq(a, b)) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (l.leq(b, c) && !l.leq(a, c)) {
          throw DomainError("order is not transitive");
        }
      }
    }
  }

  std::vector<std::size_t> up_count(n, 0);
  std::vector<std::size_t> down_count(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (l.leq(a, b)) {
        ++up_count[a];
        ++down_count[b];
      }
    }
  }

  l.join_.assign(n * n, kNone);
  l.meet_.assign(n * n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      // The least upper bound is the upper bound with the largest up-set.
      std::size_t best_up = n;
      std::size_t best_down = n;
      for (std::size_t c = 0; c < n; ++c) {
        if (l.leq(a, c) && l.leq(b, c) && (best_up == n || up_count[c] > up_count[best_up])) {
          best_up = c;
        }
        if (l.leq(c, a) && l.leq(c, b) &&
            (best_down == n || down_count[c] > down_count[best_down])) {
          best_down = c;
        }
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (best_up == n || (l.leq(a, c) && l.leq(b, c) && !l.leq(best_up, c))) {
          throw DomainError("elements " + std::to_string(a) + " and " + std::to_string(b) +
                            " have no least upper bound");
        }
        if (best_down == n || (l.leq(c, a) && l.leq(c, b) && !l.leq(c, best_down))) {
          throw DomainError("elements " + std::to_string(a) + " and " + std::to_string(b) +
                            " have no greatest lower bound");
        }
      }
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint32_t>(best_up);
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint32_t>(best_down);
    }
  }
  l.labels_ = std::move(labels);
  l.locate_bounds();
  return l;
}

FiniteLattice FiniteLattice::from_tables(const Matrix& leq, const Table& join, const Table& meet,
                                         std::vector<std::string> labels) {
  check_square(leq);
  const std::size_t n = leq.size();
  if (join.size() != n || meet.size() != n) {
    throw DomainError("operation tables do not match the order size");
  }
  FiniteLattice l;
  l.n_ = n;
  l.leq_.resize(n * n);
  l.join_.resize(n * n);
  l.meet_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (join[a].size() != n || meet[a].size() != n) {
      throw DomainError("operation tables are not square");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (join[a][b] >= n || meet[a][b] >= n) {
        throw DomainError("operation table entry out of range");
      }
      l.leq_[a * n + b] = leq[a][b] ? 1 : 0;
      l.join_[a * n + b] = static_cast<std::uint32_t>(join[a][b]);
      l.meet_[a * n + b] = static_cast<std::uint32_t>(meet[a][b]);
    }
  }
  l.labels_ = std::move(labels);
  l.locate_bounds();
  return l;
}

void FiniteLattice::locate_bounds() {
  bottom_ = 0;
  top_ = 0;
  for (std::size_t a = 0; a < n_; ++a) {
    bool is_bottom = true;
    bool is_top = true;
    for (std::size_t b = 0; b < n_; ++b) {
      is_bottom = is_bottom && leq(a, b);
      is_top = is_top && leq(b, a);
    }
    if (is_bottom) {
      bottom_ = a;
    }
    if (is_top) {
      top_ = a;
    }
  }
}

std::string FiniteLattice::label(std::size_t i) const {
  if (i < labels_.size()) {
    return labels_[i];
  }
  return std::to_string(i);
}

FiniteLattice::Matrix FiniteLattice::order_matrix() const {
  Matrix m(n_, std::vector<bool>(n_));
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      m[a][b] = leq(a, b);
    }
  }
  return m;
}

AxiomReport verify_lattice_axioms(const FiniteLattice& l) {
  const std::size_t n = l.size();
  auto fail = [](std::string what, std::vector<std::size_t> witness) {
    return AxiomReport{false, std::move(what), std::move(witness)};
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (!l.leq(a, a)) {
      return fail("order not reflexive", {a});
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && l.leq(a, b) && l.leq(b, a)) {
        return fail("order not antisymmetric", {a, b});
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (l.leq(a, b) && l.leq(b, c) && !l.leq(a, c)) {
          return fail("order not transitive", {a, b, c});
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t j = l.join(a, b);
      const std::size_t m = l.meet(a, b);
      if (!l.leq(a, j) || !l.leq(b, j)) {
        return fail("join is not an upper bound", {a, b});
      }
      if (!l.leq(m, a) || !l.leq(m, b)) {
        return fail("meet is not a lower bound", {a, b});
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (l.leq(a, c) && l.leq(b, c) && !l.leq(j, c)) {
          return fail("join is not the least upper bound", {a, b, c});
        }
        if (l.leq(c, a) && l.leq(c, b) && !l.leq(c, m)) {
          return fail("meet is not the greatest lower bound", {a, b, c});
        }
      }
      if (j != l.join(b, a)) {
        return fail("join not commutative", {a, b});
      }
      if (m != l.meet(b, a)) {
        return fail("meet not commutative", {a, b});
      }
      if (l.join(a, m) != a) {
        return fail("absorption a v (a ^ b) = a fails", {a, b});
      }
      if (l.meet(a, j) != a) {
        return fail("absorption a ^ (a v b) = a fails", {a, b});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (l.join(l.join(a, b), c) != l.join(a, l.join(b, c))) {
          return fail("join not associative", {a, b, c});
        }
        if (l.meet(l.meet(a, b), c) != l.meet(a, l.meet(b, c))) {
          return fail("meet not associative", {a, b, c});
        }
      }
    }
  }
  return {};
}

namespace {

template <typename Pred>
ElementTest first_violation(const FiniteLattice& l, Pred&& ok) {
  for (std::size_t y = 0; y < l.size(); ++y) {
    for (std::size_t z = 0; z < l.size(); ++z) {
      if (!ok(y, z)) {
        return ElementTest{false, {y, z}};
      }
    }
  }
  return {};
}

// The sublattice generated by `seed`, as a sorted element list.
std::vector<std::size_t> generated_sublattice(const FiniteLattice& l,
                                              std::initializer_list<std::size_t> seed,
                                              std::vector<std::uint8_t>& member) {
  std::fill(member.begin(), member.end(), 0);
  std::vector<std::size_t> elems;
  for (std::size_t s : seed) {
    if (!member[s]) {
      member[s] = 1;
      elems.push_back(s);
    }
  }
  // Each new element is combined with everything found so far.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t r : {l.join(elems[i], elems[j]), l.meet(elems[i], elems[j])}) {
        if (!member[r]) {
          member[r] = 1;
          elems.push_back(r);
        }
      }
    }
  }
  return elems;
}

bool sublattice_is_distributive(const FiniteLattice& l, const std::vector<std::size_t>& s) {
  for (std::size_t a : s) {
    for (std::size_t b : s) {
      for (std::size_t c : s) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

ElementTest is_cancellable_element(const FiniteLattice& l, std::size_t x) {
  for (std::size_t y = 0; y < l.size(); ++y) {
    for (std::size_t z = y + 1; z < l.size(); ++z) {
      if (l.join(x, y) == l.join(x, z) && l.meet(x, y) == l.meet(x, z)) {
        return ElementTest{false, {y, z}};
      }
    }
  }
  return {};
}

ElementTest is_distributive_element(const FiniteLattice& l, std::size_t x) {
  return first_violation(l, [&](std::size_t y, std::size_t z) {
    return l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), l.join(x, z));
  });
}

ElementTest is_codistributive_element(const FiniteLattice& l, std::size_t x) {
  return first_violation(l, [&](std::size_t y, std::size_t z) {
    return l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z));
  });
}

ElementTest is_standard_element(const FiniteLattice& l, std::size_t x) {
  return first_violation(l, [&](std::size_t y, std::size_t z) {
    return l.meet(l.join(x, y), z) == l.join(l.meet(x, z), l.meet(y, z));
  });
}

ElementTest is_costandard_element(const FiniteLattice& l, std::size_t x) {
  return first_violation(l, [&](std::size_t y, std::size_t z) {
    return l.join(l.meet(x, y), z) == l.meet(l.join(x, z), l.join(y, z));
  });
}

ElementTest is_modular_element(const FiniteLattice& l, std::size_t x) {
  return first_violation(l, [&](std::size_t y, std::size_t z) {
    return !l.leq(y, z) || l.meet(l.join(x, y), z) == l.join(l.meet(x, z), y);
  });
}

ElementTest is_neutral_by_median(const FiniteLattice& l, std::size_t x) {
  return first_violation(l, [&](std::size_t y, std::size_t z) {
    const std::size_t upper = l.meet(l.meet(l.join(x, y), l.join(y, z)), l.join(z, x));
    const std::size_t lower = l.join(l.join(l.meet(x, y), l.meet(y, z)), l.meet(z, x));
    return upper == lower;
  });
}

ElementTest is_neutral_by_sublattice(const FiniteLattice& l, std::size_t x) {
  std::vector<std::uint8_t> member(l.size());
  // The generated sublattice is symmetric in y and z; test each unordered pair
  // once and report the lexicographically first ordered witness.
  for (std::size_t y = 0; y < l.size(); ++y) {
    for (std::size_t z = y; z < l.size(); ++z) {
      auto s = generated_sublattice(l, {x, y, z}, member);
      if (!sublattice_is_distributive(l, s)) {
        return ElementTest{false, {y, z}};
      }
    }
  }
  return {};
}

ElementTest is_neutral_element(const FiniteLattice& l, std::size_t x) {
  ElementTest median = is_neutral_by_median(l, x);
  ElementTest sub = is_neutral_by_sublattice(l, x);
  if (median.holds != sub.holds) {
    throw InternalError("neutrality characterizations disagree at element " + std::to_string(x));
  }
  return median;
}

ElementClassification classify(const FiniteLattice& l, std::size_t x) {
  ElementClassification c;
  c.element = x;
  c.cancellable = is_cancellable_element(l, x);
  c.distributive = is_distributive_element(l, x);
  c.codistributive = is_codistributive_element(l, x);
  c.standard = is_standard_element(l, x);
  c.costandard = is_costandard_element(l, x);
  c.modular = is_modular_element(l, x);
  c.neutral = is_neutral_element(l, x);
  return c;
}

FiniteLattice dual(const FiniteLattice& l) {
  const std::size_t n = l.size();
  FiniteLattice::Matrix leq(n, std::vector<bool>(n));
  FiniteLattice::Table join(n, std::vector<std::size_t>(n));
  FiniteLattice::Table meet(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      leq[a][b] = l.leq(b, a);
      join[a][b] = l.meet(a, b);
      meet[a][b] = l.join(a, b);
    }
  }
  return FiniteLattice::from_tables(leq, join, meet, l.labels());
}

FiniteLattice chain(std::size_t n) {
  FiniteLattice::Matrix leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      leq[a][b] = true;
    }
  }
  return FiniteLattice::from_order(leq);
}

FiniteLattice eq_lattice(int k) {
  if (k < 1) {
    throw DomainError("eq_lattice needs k >= 1");
  }
  if (k > kMaxEqLatticePoints) {
    throw CapExceeded("eq_lattice is capped at " + std::to_string(kMaxEqLatticePoints) + " points");
  }
  auto parts = all_set_partitions(static_cast<std::size_t>(k));
  const std::size_t n = parts.size();
  FiniteLattice::Matrix leq(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      leq[a][b] = refines(parts[a], parts[b]);
    }
    std::string text;
    for (const auto& block : parts[a].blocks()) {
      text += '{';
      for (std::size_t i = 0; i < block.size(); ++i) {
        text += (i ? "," : "") + std::to_string(block[i] + 1);
      }
      text += '}';
    }
    labels.push_back(std::move(text));
  }
  return FiniteLattice::from_order(leq, std::move(labels));
}

bool is_distributive_lattice(const FiniteLattice& l) {
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (!is_distributive_element(l, x)) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> covers(const FiniteLattice& l) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !l.leq(a, b)) {
        continue;
      }
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) {
        cover = c == a || c == b || !(l.leq(a, c) && l.leq(c, b));
      }
      if (cover) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

namespace {

struct Fingerprint {
  std::size_t below = 0;
  std::size_t above = 0;
  std::size_t lower_covers = 0;
  std::size_t upper_covers = 0;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

std::vector<Fingerprint> fingerprints(const FiniteLattice& l) {
  std::vector<Fingerprint> fp(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (l.leq(b, a)) {
        ++fp[a].below;
      }
      if (l.leq(a, b)) {
        ++fp[a].above;
      }
    }
  }
  for (auto [a, b] : covers(l)) {
    ++fp[a].upper_covers;
    ++fp[b].lower_covers;
  }
  return fp;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteLattice& a, const FiniteLattice& b)
      : a_(a), b_(b), fa_(fingerprints(a)), fb_(fingerprints(b)) {
    order_.resize(a.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    // Linear extension: everything below an element is placed before it.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return fa_[x].below < fa_[y].below; });
  }

  std::optional<std::vector<std::size_t>> run() {
    if (a_.size() != b_.size()) {
      return std::nullopt;
    }
    auto sa = fa_;
    auto sb = fb_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      return std::nullopt;
    }
    map_.assign(a_.size(), kUnmapped);
    used_.assign(b_.size(), false);
    if (extend(0)) {
      return map_;
    }
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      return true;
    }
    const std::size_t x = order_[depth];
    for (std::size_t y = 0; y < b_.size(); ++y) {
      if (used_[y] || fb_[y] != fa_[x] || !consistent(depth, x, y)) {
        continue;
      }
      map_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) {
        return true;
      }
      used_[y] = false;
      map_[x] = kUnmapped;
    }
    return false;
  }

  bool consistent(std::size_t depth, std::size_t x, std::size_t y) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const std::size_t p = order_[i];
      const std::size_t q = map_[p];
      if (a_.leq(p, x) != b_.leq(q, y) || a_.leq(x, p) != b_.leq(y, q)) {
        return false;
      }
    }
    return true;
  }

  const FiniteLattice& a_;
  const FiniteLattice& b_;
  std::vector<Fingerprint> fa_;
  std::vector<Fingerprint> fb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> is_isomorphic(const FiniteLattice& a,
                                                      const FiniteLattice& b) {
  if (a.size() > kMaxIsomorphismSize || b.size() > kMaxIsomorphismSize) {
    throw CapExceeded("isomorphism search is capped at " + std::to_string(kMaxIsomorphismSize) +
                      " elements");
  }
  return IsomorphismSearch(a, b).run();
}

std::optional<std::vector<std::size_t>> is_anti_isomorphic(const FiniteLattice& a,
                                                           const FiniteLattice& b) {
  return is_isomorphic(a, dual(b));
}

namespace {

// Order of an n-element bounded poset with bottom 0 and top n-1, whose
// interior relation is given as bits over index pairs i < j.
FiniteLattice::Matrix bounded_order(std::size_t n, std::uint32_t bits) {
  FiniteLattice::Matrix leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    leq[a][a] = true;
    leq[0][a] = true;
    leq[a][n - 1] = true;
  }
  const std::size_t inner = n - 2;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < inner; ++i) {
    for (std::size_t j = i + 1; j < inner; ++j, ++bit) {
      if (bits & (1U << bit)) {
        leq[i + 1][j + 1] = true;
      }
    }
  }
  return leq;
}

bool transitive(const FiniteLattice::Matrix& leq) {
  const std::size_t n = leq.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq[a][b]) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[b][c] && !leq[a][c]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Lexicographically least order matrix over relabelings of the interior.
std::vector<bool> canonical_form(const FiniteLattice::Matrix& leq) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    code.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        code.push_back(leq[perm[a]][perm[b]]);
      }
    }
    if (best.empty() || code < best) {
      best = std::move(code);
    }
  } while (n > 2 && std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

}  // namespace

std::vector<FiniteLattice> all_small_lattices(std::size_t max_size) {
  if (max_size > 8) {
    throw CapExceeded("all_small_lattices is capped at 8 elements");
  }
  std::vector<FiniteLattice> out;
  if (max_size >= 1) {
    out.push_back(chain(1));
  }
  for (std::size_t n = 2; n <= max_size; ++n) {
    // Every finite poset has a linear extension, so interior relations on
    // index pairs i < j reach every bounded poset up to isomorphism.
    const std::size_t inner = n - 2;
    const std::size_t pair_count = inner * (inner - (inner ? 1 : 0)) / 2;
    std::set<std::vector<bool>> seen;
    for (std::uint32_t bits = 0; bits < (1U << pair_count); ++bits) {
      auto leq = bounded_order(n, bits);
      if (!transitive(leq)) {
        continue;
      }
      if (!seen.insert(canonical_form(leq)).second) {
        continue;
      }
      try {
        out.push_back(FiniteLattice::from_order(leq));
      } catch (const DomainError&) {
        // bounded poset that is not a lattice
      }
    }
  }
  return out;
}

}  // namespace oclat
