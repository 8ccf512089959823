#pragma once

// Random permutations, their cycle types, the exact cycle-type law
// prod 1/(m_i! i^{m_i}), and the cycle events used by the experiments.
// Events take a DegreeMultiset so the same detectors apply to mod-p factor
// degrees.

#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "randpoly/degree_multiset.hpp"
#include "randpoly/errors.hpp"
#include "randpoly/random.hpp"
#include "randpoly/rational.hpp"

namespace randpoly {

class Permutation {
 public:
  // images[i] = sigma(i), 0-indexed.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    require(!images_.empty(), "Permutation: n must be >= 1");
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      require(v >= 0 && static_cast<std::size_t>(v) < images_.size() && !seen[static_cast<std::size_t>(v)],
              "Permutation: images are not a bijection");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    require(n >= 1, "Permutation: n must be >= 1");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Fisher-Yates with rejection-sampled indices.
inline Permutation sample_permutation(int n, RandomStream& stream) {
  require(n >= 1, "sample_permutation: n must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  for (int i = n - 1; i >= 1; --i) {
    const auto j = stream.uniform_below(static_cast<std::uint64_t>(i) + 1);
    std::swap(images[static_cast<std::size_t>(i)], images[j]);
  }
  return Permutation(std::move(images));
}

inline DegreeMultiset cycle_type(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> lengths;
  for (int start = 0; start < n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int i = start; !visited[static_cast<std::size_t>(i)]; i = sigma(i)) {
      visited[static_cast<std::size_t>(i)] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return DegreeMultiset::from_parts(lengths);
}

// Fraction of S_n with the given cycle type.
inline ExactRational exact_cycle_probability(const DegreeMultiset& ct) {
  require(ct.weight() >= 1, "exact_cycle_probability: weight must be >= 1");
  BigInt den = 1;
  for (auto [len, m] : ct.counts()) {
    den *= factorial(static_cast<unsigned long>(m));
    den *= pow(BigInt(len), static_cast<unsigned long>(m));
  }
  return make_rational(1, den);
}

// floor((ln n)^3), the default threshold for the cycle-length events.
inline int log_cubed_floor(int n) {
  const double l = std::log(static_cast<double>(n));
  return static_cast<int>(std::floor(l * l * l));
}

// Some part l with n^a <= l <= n^b has a prime factor > prime_floor.
inline bool has_rough_cycle(const DegreeMultiset& ct, double a, double b, int prime_floor) {
  require(0.0 <= a && a < b && b <= 1.0, "has_rough_cycle: need 0 <= a < b <= 1");
  const double n = static_cast<double>(ct.weight());
  // Small slack so exact powers (e.g. n^1 = n) are not lost to rounding.
  const double lo = std::pow(n, a) * (1 - 1e-12);
  const double hi = std::pow(n, b) * (1 + 1e-12);
  for (auto [len, m] : ct.counts()) {
    if (len < lo || len > hi) continue;
    if (largest_prime_factor(len) > prime_floor) return true;
  }
  return false;
}

// Elements l of [k, 2k] realizable as subset sums in all of the sets.
inline bool window_hit(const std::vector<DegreeSet>& sets, int k) {
  require(!sets.empty(), "window_hit: no sets");
  DegreeSet common = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) common &= sets[i];
  const auto n = common.size() - 1;
  for (std::size_t l = static_cast<std::size_t>(k); l <= std::min<std::size_t>(2 * static_cast<std::size_t>(k), n); ++l)
    if (common.test(l)) return true;
  return false;
}

// {l : l - j in sums for some 0 <= j <= slack}.
inline DegreeSet widen(const DegreeSet& sums, int slack) {
  DegreeSet out = sums;
  for (int j = 1; j <= slack; ++j) out |= sums << static_cast<std::size_t>(j);
  return out;
}

}  // namespace randpoly
