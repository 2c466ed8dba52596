#include "oclat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "oclat/error.hpp"

namespace oclat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw DomainError("partition must have at least one part");
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw DomainError("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be non-increasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

void partitions_rec(int remaining, int slots, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (slots == 0) {
    if (remaining == 0) {
      out.emplace_back(prefix);
    }
    return;
  }
  // Every later slot needs at least 1, and no later slot may exceed `part`.
  int hi = std::min(max_part, remaining - (slots - 1));
  for (int part = hi; part >= 1; --part) {
    if (part * slots < remaining) {
      break;
    }
    prefix.push_back(part);
    partitions_rec(remaining - part, slots - 1, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int m) {
  if (m < 2 || m > n) {
    throw DomainError("enumerate_partitions requires 2 <= m <= n (got n=" + std::to_string(n) +
                      ", m=" + std::to_string(m) + ")");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(m));
  partitions_rec(n, m, n, prefix, out);
  return out;
}

std::vector<Partition> enumerate_lambda(int max_n) {
  std::vector<Partition> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 2; m <= n; ++m) {
      auto slice = enumerate_partitions(n, m);
      out.insert(out.end(), slice.begin(), slice.end());
    }
  }
  return out;
}

int q_of(const Partition& p) {
  return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), 1));
}

int r_of(const Partition& p) {
  int r = 0;
  for (int part : p.parts()) {
    if (part > 1) {
      r += part;
    }
  }
  return r;
}

int delta_of(const Partition& p) {
  return (p.m() == 2 && p[0] == 2 && p[1] == 1) ? 0 : 1;
}

int s_of(const Partition& p) {
  return std::max(r_of(p) - q_of(p) - delta_of(p), 0);
}

Partition extend(const Partition& p, int k) {
  if (k < 0) {
    throw DomainError("extend requires k >= 0");
  }
  std::vector<int> parts(p.parts().begin(), p.parts().end());
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(parts));
}

std::uint64_t transversal_size(const Partition& p) {
  // Product of binomials C(prefix + l_i, l_i), each step exact.
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (int part : p.parts()) {
    for (int j = 1; j <= part; ++j) {
      ++placed;
      // j divides result * placed; cancel the common factor first.
      const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(j));
      const std::uint64_t factor = placed / (static_cast<std::uint64_t>(j) / g);
      if (__builtin_mul_overflow(result / g, factor, &result)) {
        throw OverflowError("transversal size of " + to_string(p) + " exceeds 64 bits");
      }
    }
  }
  return result;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(p[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty partition");
  }
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) {
      comma = text.size();
    }
    std::string_view field = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace oclat
