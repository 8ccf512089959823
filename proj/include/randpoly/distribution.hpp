#pragma once

// Exact laws of factor types (X_n) and cycle types (Y_n), their
// truncations to (m_r, m_{r+1}, ...), and total-variation distances.
// Everything here is exact rational arithmetic.

#include <cstdint>
#include <map>
#include <string>

#include "randpoly/degree_multiset.hpp"
#include "randpoly/errors.hpp"
#include "randpoly/field_poly.hpp"
#include "randpoly/permutation.hpp"
#include "randpoly/rational.hpp"

namespace randpoly {

enum class LawKind { X, Y };

struct FactorTypeDistribution {
  int n = 0;
  std::uint64_t q = 0;  // 0 for the permutation law
  std::map<DegreeMultiset, ExactRational> entries;

  ExactRational total() const {
    ExactRational s = 0;
    for (const auto& [key, prob] : entries) s += prob;
    return s;
  }
};

using Marginal = std::map<DegreeMultiset, ExactRational>;

inline constexpr int kDistributionCap = 60;
inline constexpr std::uint64_t kExhaustiveCap = 1ULL << 24;

// Memoizes alpha(q, i, m) across one distribution build.
class AlphaTable {
 public:
  explicit AlphaTable(std::uint64_t q) : q_(q) {}

  const ExactRational& operator()(int i, int m) {
    auto [it, inserted] = cache_.try_emplace({i, m});
    if (inserted) it->second = alpha(q_, i, m);
    return it->second;
  }

 private:
  std::uint64_t q_;
  std::map<std::pair<int, int>, ExactRational> cache_;
};

inline ExactRational exact_factor_probability(const DegreeMultiset& ct, AlphaTable& table) {
  require(ct.weight() >= 1, "exact_factor_probability: weight must be >= 1");
  ExactRational out = 1;
  for (auto [i, m] : ct.counts()) out *= table(i, m);
  return out;
}

inline ExactRational exact_factor_probability(std::uint64_t q, const DegreeMultiset& ct) {
  AlphaTable table(q);
  return exact_factor_probability(ct, table);
}

inline FactorTypeDistribution build_distribution(std::uint64_t q, int n, LawKind kind) {
  if (n > kDistributionCap)
    throw CapacityError("build_distribution: n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(kDistributionCap));
  FactorTypeDistribution dist;
  dist.n = n;
  dist.q = kind == LawKind::X ? q : 0;
  if (kind == LawKind::X) require(is_prime_u64(q), "build_distribution: q must be prime");
  AlphaTable table(q);
  for_each_partition(n, [&](const DegreeMultiset& ct) {
    dist.entries.emplace(ct, kind == LawKind::X ? exact_factor_probability(ct, table)
                                                : exact_cycle_probability(ct));
  });
  return dist;
}

// Tallies factor types over all q^n monic polynomials of degree n. This is
// the independent check on the product formula.
inline FactorTypeDistribution exhaustive_distribution(std::uint64_t q, int n) {
  require(n >= 1, "exhaustive_distribution: n must be >= 1");
  const PrimeModulus mod(q);
  BigInt total = pow(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned long>(n));
  if (total > BigInt(static_cast<unsigned long>(kExhaustiveCap)))
    throw CapacityError("exhaustive_distribution: q^n exceeds 2^24");
  const auto count = total.get_ui();
  std::map<DegreeMultiset, unsigned long> tally;
  FieldPoly::Coeffs coeffs(static_cast<std::size_t>(n) + 1, 0);
  coeffs.back() = 1;
  for (unsigned long index = 0; index < count; ++index) {
    unsigned long rest = index;
    for (int i = 0; i < n; ++i) {
      coeffs[static_cast<std::size_t>(i)] = rest % q;
      rest /= q;
    }
    ++tally[ff::factor_degree_multiset(FieldPoly(mod, coeffs))];
  }
  FactorTypeDistribution dist;
  dist.n = n;
  dist.q = q;
  for (const auto& [ct, hits] : tally) dist.entries.emplace(ct, make_rational(BigInt(hits), total));
  return dist;
}

inline Marginal marginal_from(const FactorTypeDistribution& dist, int r) {
  require(r >= 1 && r <= dist.n + 1, "marginal_from: need 1 <= r <= n+1");
  Marginal out;
  for (const auto& [ct, prob] : dist.entries) out[ct.truncated_below(r)] += prob;
  return out;
}

// Half the l1 distance between two laws on truncated tuples.
inline ExactRational tv_between(const Marginal& a, const Marginal& b) {
  ExactRational sum = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      sum += abs(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      sum += abs(ib->second);
      ++ib;
    } else {
      sum += abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return sum / 2;
}

inline ExactRational tv_distance(std::uint64_t q, int n, int r) {
  const auto x = build_distribution(q, n, LawKind::X);
  const auto y = build_distribution(q, n, LawKind::Y);
  return tv_between(marginal_from(x, r), marginal_from(y, r));
}

// P_{X_n}(m_i = lambda).
inline ExactRational tail_probability(std::uint64_t q, int n, int i, int lambda) {
  require(i >= 1 && lambda >= 0, "tail_probability: need i >= 1, lambda >= 0");
  if (static_cast<long long>(i) * lambda > n) return ExactRational(0);
  ExactRational out = 0;
  for (const auto& [ct, prob] : build_distribution(q, n, LawKind::X).entries)
    if (ct.count(i) == lambda) out += prob;
  return out;
}

// Sum of Y-weights over all partitions of x.
inline ExactRational cycle_weight_sum(int x) {
  ExactRational s = 0;
  for_each_partition(x, [&](const DegreeMultiset& ct) { s += exact_cycle_probability(ct); });
  return s;
}

}  // namespace randpoly
