#include "oclat/word.hpp"

#include <algorithm>
#include <charconv>

#include "oclat/error.hpp"

namespace oclat {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw DomainError("words are non-empty");
  }
  for (int x : letters_) {
    if (x < 1) {
      throw DomainError("letter indices start at 1");
    }
  }
}

int Word::max_letter() const noexcept { return *std::max_element(letters_.begin(), letters_.end()); }

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : w.letters()) {
    h = (h ^ static_cast<std::uint64_t>(x)) * 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

int letter_count(const Word& w, int i) {
  if (i < 1) {
    throw DomainError("letter indices start at 1");
  }
  return static_cast<int>(std::count(w.letters().begin(), w.letters().end(), i));
}

namespace {

std::vector<int> counts(const Word& w) {
  std::vector<int> c(static_cast<std::size_t>(w.max_letter()) + 1, 0);
  for (int x : w.letters()) {
    ++c[static_cast<std::size_t>(x)];
  }
  return c;
}

}  // namespace

Partition partition_of(const Word& w) {
  std::vector<int> parts;
  for (int c : counts(w)) {
    if (c > 0) {
      parts.push_back(c);
    }
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

bool is_balanced(const Word& u, const Word& v) { return counts(u) == counts(v); }

BalancedIdentity::BalancedIdentity(Word lhs, Word rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  if (!is_balanced(lhs_, rhs_)) {
    throw DomainError("identity " + to_string(lhs_) + "=" + to_string(rhs_) + " is not balanced");
  }
}

std::size_t Transversal::index_of(const Word& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) {
    throw DomainError("word " + to_string(w) + " is not in W_" + to_string(lambda));
  }
  return static_cast<std::size_t>(it - words.begin());
}

Transversal transversal(const Partition& lambda, std::uint64_t max_carrier) {
  if (!lambda.in_lambda()) {
    throw DomainError("transversal needs 2 <= m <= n, got " + to_string(lambda));
  }
  const std::uint64_t size = transversal_size(lambda);
  if (size > max_carrier) {
    throw CapExceeded("W_" + to_string(lambda) + " has " + std::to_string(size) +
                      " words, above the carrier cap " + std::to_string(max_carrier));
  }
  std::vector<int> letters;
  for (int i = 0; i < lambda.m(); ++i) {
    letters.insert(letters.end(), static_cast<std::size_t>(lambda[static_cast<std::size_t>(i)]),
                   i + 1);
  }
  Transversal t{lambda, {}};
  t.words.reserve(size);
  do {
    t.words.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return t;
}

Word apply_permutation(const Permutation& sigma, const Word& w) {
  std::vector<int> out(w.length());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (w[i] > sigma.degree()) {
      throw DomainError("letter " + std::to_string(w[i]) + " is outside the domain of " +
                        to_cycle_string(sigma));
    }
    out[i] = sigma(w[i]);
  }
  return Word(std::move(out));
}

std::string to_string(const Word& w) {
  std::string out;
  const bool digits = w.max_letter() <= 9;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (digits) {
      out += static_cast<char>('0' + w[i]);
    } else {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(w[i]);
    }
  }
  return out;
}

Word parse_word(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty word");
  }
  std::vector<int> letters;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw ParseError("malformed word '" + std::string(text) + "'");
      }
      letters.push_back(c - '0');
    }
    return Word(std::move(letters));
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    auto field = text.substr(start, end - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || v < 1) {
      throw ParseError("malformed word '" + std::string(text) + "'");
    }
    letters.push_back(v);
    start = end + 1;
  }
  return Word(std::move(letters));
}

std::string to_string(const BalancedIdentity& e) {
  return to_string(e.lhs()) + "=" + to_string(e.rhs());
}

BalancedIdentity parse_identity(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw ParseError("identity '" + std::string(text) + "' needs exactly one '='");
  }
  return BalancedIdentity(parse_word(text.substr(0, eq)), parse_word(text.substr(eq + 1)));
}

}  // namespace oclat
