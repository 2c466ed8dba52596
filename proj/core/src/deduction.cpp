#include "oclat/deduction.hpp"

#include <algorithm>
#include <istream>
#include <set>

#include "oclat/error.hpp"

namespace oclat {

IdentitySet::IdentitySet(std::vector<BalancedIdentity> identities) {
  for (const auto& e : identities) {
    insert(e);
  }
}

void IdentitySet::insert(const BalancedIdentity& e) {
  if (e.is_trivial()) {
    return;
  }
  BalancedIdentity oriented = e.lhs() < e.rhs() ? e : BalancedIdentity(e.rhs(), e.lhs());
  auto it = std::lower_bound(identities_.begin(), identities_.end(), oriented);
  if (it == identities_.end() || *it != oriented) {
    identities_.insert(it, std::move(oriented));
  }
}

void IdentitySet::insert(const IdentitySet& other) {
  for (const auto& e : other.identities()) {
    insert(e);
  }
}

std::size_t IdentitySet::max_length() const noexcept {
  std::size_t out = 0;
  for (const auto& e : identities_) {
    out = std::max(out, e.lhs().length());
  }
  return out;
}

namespace {

// Collects every a.phi(to).b where w = a.phi(from).b.
class Matcher {
 public:
  Matcher(const Word& w, const Word& from, const Word& to, std::set<Word>& out)
      : w_(w.letters()), from_(from.letters()), to_(to.letters()), out_(out),
        phi_(static_cast<std::size_t>(std::max(from.max_letter(), to.max_letter())) + 1) {}

  void run() {
    for (std::size_t start = 0; start + from_.size() <= w_.size(); ++start) {
      start_ = start;
      match(0, start);
    }
  }

 private:
  struct Span {
    std::size_t pos = 0;
    std::size_t len = 0;
  };

  void match(std::size_t k, std::size_t pos) {
    if (k == from_.size()) {
      emit(pos);
      return;
    }
    auto& image = phi_[static_cast<std::size_t>(from_[k])];
    if (image.len > 0) {
      if (pos + image.len <= w_.size() &&
          std::equal(w_.begin() + static_cast<std::ptrdiff_t>(image.pos),
                     w_.begin() + static_cast<std::ptrdiff_t>(image.pos + image.len),
                     w_.begin() + static_cast<std::ptrdiff_t>(pos))) {
        match(k + 1, pos + image.len);
      }
      return;
    }
    // Every later letter of `from` needs at least one position.
    const std::size_t later = from_.size() - k - 1;
    for (std::size_t len = 1; pos + len + later <= w_.size(); ++len) {
      image = {pos, len};
      match(k + 1, pos + len);
    }
    image = {};
  }

  void emit(std::size_t end) {
    std::vector<int> result(w_.begin(), w_.begin() + static_cast<std::ptrdiff_t>(start_));
    for (int x : to_) {
      const auto& image = phi_[static_cast<std::size_t>(x)];
      result.insert(result.end(), w_.begin() + static_cast<std::ptrdiff_t>(image.pos),
                    w_.begin() + static_cast<std::ptrdiff_t>(image.pos + image.len));
    }
    result.insert(result.end(), w_.begin() + static_cast<std::ptrdiff_t>(end), w_.end());
    out_.insert(Word(std::move(result)));
  }

  std::span<const int> w_;
  std::span<const int> from_;
  std::span<const int> to_;
  std::set<Word>& out_;
  std::vector<Span> phi_;
  std::size_t start_ = 0;
};

}  // namespace

std::vector<Word> one_step_rewrites(const Word& w, const IdentitySet& e) {
  std::set<Word> found;
  for (const auto& id : e.identities()) {
    if (id.lhs().length() > w.length()) {
      continue;
    }
    Matcher(w, id.lhs(), id.rhs(), found).run();
    Matcher(w, id.rhs(), id.lhs(), found).run();
  }
  found.erase(w);
  for (const auto& r : found) {
    if (!is_balanced(r, w)) {
      throw InternalError("rewrite " + to_string(w) + " -> " + to_string(r) +
                          " changed letter counts");
    }
  }
  return {found.begin(), found.end()};
}

InducedCongruence induced_congruence(const IdentitySet& e, const Partition& lambda,
                                     std::uint64_t max_carrier) {
  Transversal t = transversal(lambda, max_carrier);
  DisjointSets sets(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (const auto& r : one_step_rewrites(t.words[i], e)) {
      sets.unite(i, t.index_of(r));
    }
  }
  Congruence c = sets.to_partition();
  return {lambda, std::move(t), std::move(c)};
}

IdentitySet transversal_identity_set(const Partition& lambda, std::uint64_t max_carrier) {
  const Transversal t = transversal(lambda, max_carrier);
  IdentitySet out;
  for (std::size_t i = 1; i < t.size(); ++i) {
    out.insert(BalancedIdentity(t.words.front(), t.words[i]));
  }
  return out;
}

IdentitySet s_lambda_identity_set(const Partition& lambda, std::optional<int> max_length,
                                  std::uint64_t max_carrier) {
  if (!lambda.in_lambda()) {
    throw DomainError("S_lambda needs 2 <= m <= n, got " + to_string(lambda));
  }
  IdentitySet out;
  for (int i = 0; i <= s_of(lambda); ++i) {
    if (max_length && lambda.n() + i > *max_length) {
      break;
    }
    out.insert(transversal_identity_set(extend(lambda, i), max_carrier));
  }
  return out;
}

bool reduces(const IdentitySet& e, const Partition& lambda, std::uint64_t max_carrier) {
  return !induced_congruence(e, lambda, max_carrier).congruence.is_equality();
}

bool collapses(const IdentitySet& e, const Partition& lambda, std::uint64_t max_carrier) {
  return induced_congruence(e, lambda, max_carrier).congruence.is_universal();
}

GreedyVarietyResult is_greedy_variety_bounded(const IdentitySet& e, int n_max, int max_length,
                                              std::uint64_t max_carrier) {
  if (n_max > max_length) {
    throw CapExceeded("length bound " + std::to_string(n_max) + " exceeds the cap " +
                      std::to_string(max_length));
  }
  GreedyVarietyResult result;
  if (n_max < 2) {
    return result;
  }
  for (const auto& lambda : enumerate_lambda(n_max)) {
    ++result.slices_checked;
    const auto nu = induced_congruence(e, lambda, max_carrier).congruence;
    if (!nu.is_equality() && !nu.is_universal()) {
      result.greedy = false;
      result.witness = lambda;
      return result;
    }
  }
  return result;
}

IdentitySet parse_identity_set(std::istream& in) {
  IdentitySet out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    auto last = line.find_last_not_of(" \t\r");
    try {
      out.insert(parse_identity(std::string_view(line).substr(first, last - first + 1)));
    } catch (const Error& err) {
      throw ParseError("line " + std::to_string(number) + ": " + err.what());
    }
  }
  return out;
}

std::string to_string(const IdentitySet& e) {
  std::string out;
  for (const auto& id : e.identities()) {
    out += to_string(id) + "\n";
  }
  return out;
}

}  // namespace oclat
