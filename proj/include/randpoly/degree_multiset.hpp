#pragma once

// The multiset (m_1, m_2, ...) of factor degrees of a polynomial or cycle
// lengths of a permutation, plus the partition machinery over it.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "randpoly/errors.hpp"

namespace randpoly {

using DegreeSet = boost::dynamic_bitset<>;

class DegreeMultiset {
 public:
  // (part, multiplicity) pairs, ascending by part, multiplicities positive.
  using Counts = std::vector<std::pair<int, int>>;

  DegreeMultiset() = default;

  static DegreeMultiset from_parts(std::span<const int> parts) {
    DegreeMultiset out;
    for (int part : parts) out.add(part);
    return out;
  }

  static DegreeMultiset from_counts(const Counts& counts) {
    DegreeMultiset out;
    for (auto [part, count] : counts) out.add(part, count);
    return out;
  }

  void add(int part, int count = 1) {
    require(part >= 1, "DegreeMultiset: parts must be positive");
    require(count >= 0, "DegreeMultiset: negative multiplicity");
    if (count == 0) return;
    auto it = std::lower_bound(counts_.begin(), counts_.end(), part,
                               [](const auto& entry, int key) { return entry.first < key; });
    if (it != counts_.end() && it->first == part) {
      it->second += count;
    } else {
      counts_.insert(it, {part, count});
    }
    weight_ += part * count;
  }

  int weight() const { return weight_; }
  const Counts& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  int count(int part) const {
    auto it = std::lower_bound(counts_.begin(), counts_.end(), part,
                               [](const auto& entry, int key) { return entry.first < key; });
    return (it != counts_.end() && it->first == part) ? it->second : 0;
  }

  int num_parts() const {
    int total = 0;
    for (auto [part, c] : counts_) total += c;
    return total;
  }

  // Parts in descending order, repeated by multiplicity.
  std::vector<int> parts() const {
    std::vector<int> out;
    for (auto it = counts_.rbegin(); it != counts_.rend(); ++it)
      out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
    return out;
  }

  // The coordinates (m_r, m_{r+1}, ...); the weight shrinks accordingly.
  DegreeMultiset truncated_below(int r) const {
    DegreeMultiset out;
    for (auto [part, c] : counts_)
      if (part >= r) out.add(part, c);
    return out;
  }

  DegreeMultiset scaled_multiplicity(int factor) const {
    DegreeMultiset out;
    for (auto [part, c] : counts_) out.add(part, c * factor);
    return out;
  }

  void merge(const DegreeMultiset& other) {
    for (auto [part, c] : other.counts_) add(part, c);
  }

  // "1^2 3^1"; the empty multiset renders as "-".
  std::string to_string() const {
    if (counts_.empty()) return "-";
    std::string out;
    for (auto [part, c] : counts_) {
      if (!out.empty()) out += ' ';
      out += std::to_string(part) + '^' + std::to_string(c);
    }
    return out;
  }

  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;
  friend auto operator<=>(const DegreeMultiset& a, const DegreeMultiset& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return a.counts_ <=> b.counts_;
  }

 private:
  int weight_ = 0;
  Counts counts_;
};

inline constexpr int kDefaultPartitionCap = 90;

// Visits every partition of n exactly once, largest part first, in reverse
// lexicographic order of the descending part sequence:
//   n=4: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
inline void for_each_partition(int n, const std::function<void(const DegreeMultiset&)>& visit,
                               int cap = kDefaultPartitionCap) {
  require(n >= 1, "partitions: n must be >= 1");
  if (n > cap)
    throw CapacityError("partitions: n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(n));
  std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
    if (remaining == 0) {
      visit(DegreeMultiset::from_parts(stack));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      stack.push_back(part);
      recurse(remaining - part, part);
      stack.pop_back();
    }
  };
  recurse(n, n);
}

inline std::vector<DegreeMultiset> enumerate_partitions(int n, int cap = kDefaultPartitionCap) {
  std::vector<DegreeMultiset> out;
  for_each_partition(n, [&](const DegreeMultiset& m) { out.push_back(m); }, cap);
  return out;
}

// Subset sums of the parts, counted with multiplicity. Repeated parts are
// split into power-of-two bundles so each bundle costs one shift-or.
inline DegreeSet achievable_sums(const DegreeMultiset& ms) {
  const auto n = static_cast<std::size_t>(ms.weight());
  DegreeSet reach(n + 1);
  reach.set(0);
  for (auto [part, count] : ms.counts()) {
    int remaining = count;
    for (int bundle = 1; remaining > 0; bundle *= 2) {
      const int take = std::min(bundle, remaining);
      reach |= reach << static_cast<std::size_t>(part * take);
      remaining -= take;
    }
  }
  return reach;
}

// Some l > threshold divides two distinct parts (multiplicity counts).
inline bool has_double_divisor(const DegreeMultiset& ms, int threshold) {
  require(threshold >= 1, "has_double_divisor: threshold must be >= 1");
  const int n = ms.weight();
  // Two parts divisible by l sum to at least 2l.
  for (int l = threshold + 1; 2 * l <= n; ++l) {
    int hits = 0;
    for (auto [part, c] : ms.counts())
      if (part % l == 0) hits += c;
    if (hits >= 2) return true;
  }
  return false;
}

inline int largest_prime_factor(int value) {
  int largest = 1;
  for (int d = 2; static_cast<long long>(d) * d <= value; ++d) {
    while (value % d == 0) {
      largest = d;
      value /= d;
    }
  }
  return value > 1 ? std::max(largest, value) : largest;
}

}  // namespace randpoly
