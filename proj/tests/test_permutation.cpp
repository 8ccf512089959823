#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "randpoly/degree_multiset.hpp"
#include "randpoly/permutation.hpp"
#include "randpoly/random.hpp"

using namespace randpoly;

namespace {

DegreeMultiset parts(std::initializer_list<int> ps) {
  const std::vector<int> v(ps);
  return DegreeMultiset::from_parts(v);
}

std::vector<int> members(const DegreeSet& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != DegreeSet::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

// Partition numbers p(0..), from Euler's pentagonal recurrence.
long partition_number(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

// P(no cycle length in allowed) for a uniform permutation of n, via
// n a_n = sum_{k allowed, k <= n} a_{n-k} with a_0 = 1, applied to the
// complement set. Returns P(some cycle length in the set).
double exact_some_cycle_in(int n, const std::vector<bool>& in_set) {
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
  a[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double s = 0;
    for (int k = 1; k <= m; ++k)
      if (!in_set[static_cast<std::size_t>(k)]) s += a[static_cast<std::size_t>(m - k)];
    a[static_cast<std::size_t>(m)] = s / m;
  }
  return 1.0 - a[static_cast<std::size_t>(n)];
}

}  // namespace

TEST(Permutation, ValidatesBijection) {
  EXPECT_THROW(Permutation({0, 0}), UsageError);
  EXPECT_THROW(Permutation({1, 2}), UsageError);
  EXPECT_THROW(Permutation(std::vector<int>{}), UsageError);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Permutation, CycleTypeExamples) {
  EXPECT_EQ(cycle_type(Permutation::identity(4)), DegreeMultiset::from_counts({{1, 4}}));
  EXPECT_EQ(cycle_type(Permutation({1, 2, 0})), DegreeMultiset::from_counts({{3, 1}}));
  EXPECT_EQ(cycle_type(Permutation({1, 0, 3, 2, 4})), DegreeMultiset::from_counts({{1, 1}, {2, 2}}));
}

TEST(Permutation, SizeOneIsIdentity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = RandomStream(seed);
    EXPECT_EQ(sample_permutation(1, s).images(), std::vector<int>{0});
  }
}

TEST(Permutation, SamplingIsDeterministic) {
  auto a = RandomStream::for_trial(7, fnv1a64("x"), 3);
  auto b = RandomStream::for_trial(7, fnv1a64("x"), 3);
  EXPECT_EQ(sample_permutation(50, a).images(), sample_permutation(50, b).images());
}

TEST(Permutation, UniformOnS3) {
  constexpr int kDraws = 60000;
  std::map<std::vector<int>, int> hits;
  auto s = RandomStream(2024);
  for (int t = 0; t < kDraws; ++t) ++hits[sample_permutation(3, s).images()];
  ASSERT_EQ(hits.size(), 6u);
  const double sigma = std::sqrt(kDraws * (1.0 / 6) * (5.0 / 6));
  for (const auto& [perm, count] : hits) EXPECT_LE(std::abs(count - kDraws / 6.0), 4 * sigma);
}

TEST(Permutation, CycleWeightAlwaysN) {
  auto s = RandomStream(11);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(s.uniform_below(300));
    EXPECT_EQ(cycle_type(sample_permutation(n, s)).weight(), n);
  }
}

TEST(Permutation, CycleTypeFrequenciesAtTen) {
  constexpr int kDraws = 100000;
  std::map<DegreeMultiset, int> hits;
  auto s = RandomStream(77);
  for (int t = 0; t < kDraws; ++t) ++hits[cycle_type(sample_permutation(10, s))];
  for_each_partition(10, [&](const DegreeMultiset& ct) {
    const double p = exact_cycle_probability(ct).get_d();
    const double sigma = std::sqrt(kDraws * p * (1 - p));
    const double observed = hits.count(ct) ? hits[ct] : 0;
    EXPECT_LE(std::abs(observed - kDraws * p), 4 * sigma + 1) << ct.to_string();
  });
}

TEST(ExactCycleProbability, Examples) {
  EXPECT_EQ(exact_cycle_probability(parts({3})), ExactRational(1, 3));
  EXPECT_EQ(exact_cycle_probability(parts({1, 2})), ExactRational(1, 2));
  for (int n = 1; n <= 12; ++n)
    EXPECT_EQ(exact_cycle_probability(DegreeMultiset::from_counts({{1, n}})), make_rational(1, factorial(n)));
}

TEST(ExactCycleProbability, MatchesEnumerationOfS5) {
  std::vector<int> images{0, 1, 2, 3, 4};
  std::map<DegreeMultiset, int> counts;
  do {
    ++counts[cycle_type(Permutation(images))];
  } while (std::next_permutation(images.begin(), images.end()));
  EXPECT_EQ(counts.size(), 7u);
  for (const auto& [ct, c] : counts) EXPECT_EQ(exact_cycle_probability(ct), make_rational(c, 120));
}

TEST(Partitions, CanonicalOrderAndCounts) {
  const auto four = enumerate_partitions(4);
  ASSERT_EQ(four.size(), 5u);
  EXPECT_EQ(four[0], parts({4}));
  EXPECT_EQ(four[1], parts({3, 1}));
  EXPECT_EQ(four[2], parts({2, 2}));
  EXPECT_EQ(four[3], parts({2, 1, 1}));
  EXPECT_EQ(four[4], parts({1, 1, 1, 1}));

  const auto one = enumerate_partitions(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], parts({1}));

  for (int n = 1; n <= 30; ++n) {
    long count = 0;
    for_each_partition(n, [&](const DegreeMultiset& m) {
      EXPECT_EQ(m.weight(), n);
      ++count;
    });
    EXPECT_EQ(count, partition_number(n)) << n;
  }
}

TEST(Partitions, CapIsEnforced) {
  EXPECT_THROW(for_each_partition(91, [](const DegreeMultiset&) {}), CapacityError);
  EXPECT_THROW(for_each_partition(20, [](const DegreeMultiset&) {}, 10), CapacityError);
}

TEST(AchievableSums, Examples) {
  EXPECT_EQ(members(achievable_sums(parts({1, 1, 1}))), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(members(achievable_sums(parts({3}))), (std::vector<int>{0, 3}));
  EXPECT_EQ(members(achievable_sums(parts({2, 3}))), (std::vector<int>{0, 2, 3, 5}));
}

TEST(AchievableSums, MatchesBruteForceAndIsSymmetric) {
  auto s = RandomStream(3);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(s.uniform_below(14));
    const auto ct = cycle_type(sample_permutation(n, s));
    const auto sums = achievable_sums(ct);
    const auto lens = ct.parts();
    DegreeSet brute(static_cast<std::size_t>(n) + 1);
    for (unsigned mask = 0; mask < (1u << lens.size()); ++mask) {
      int total = 0;
      for (std::size_t i = 0; i < lens.size(); ++i)
        if (mask >> i & 1u) total += lens[i];
      brute.set(static_cast<std::size_t>(total));
    }
    EXPECT_EQ(sums, brute) << ct.to_string();
    for (int v = 0; v <= n; ++v)
      EXPECT_EQ(sums.test(static_cast<std::size_t>(v)), sums.test(static_cast<std::size_t>(n - v)));
  }
}

TEST(AchievableSums, LargeRepeatedParts) {
  const auto ct = DegreeMultiset::from_counts({{1, 1000}, {7, 300}});
  const auto sums = achievable_sums(ct);
  EXPECT_EQ(sums.count(), sums.size());  // 1s fill every gap
  const auto sevens = achievable_sums(DegreeMultiset::from_counts({{7, 300}}));
  EXPECT_EQ(sevens.count(), 301u);
  EXPECT_TRUE(sevens.test(7 * 123));
  EXPECT_FALSE(sevens.test(7 * 123 + 1));
}

TEST(DoubleDivisor, Examples) {
  EXPECT_TRUE(has_double_divisor(parts({6, 6}), 5));
  EXPECT_FALSE(has_double_divisor(parts({6, 6}), 6));
  EXPECT_TRUE(has_double_divisor(parts({4, 6}), 1));
  EXPECT_FALSE(has_double_divisor(parts({5, 7}), 1));
  EXPECT_THROW(has_double_divisor(parts({4}), 0), UsageError);
}

TEST(RoughCycle, Examples) {
  EXPECT_TRUE(has_rough_cycle(parts({11, 5}), 0.5, 1.0, 7));
  EXPECT_FALSE(has_rough_cycle(DegreeMultiset::from_counts({{1, 50}}), 0.1, 1.0, 0));
  EXPECT_FALSE(has_rough_cycle(parts({11, 5}), 0.5, 1.0, 11));
  EXPECT_THROW(has_rough_cycle(parts({4}), 0.6, 0.5, 1), UsageError);
}

// Monte Carlo frequency against the exact cycle-avoidance recurrence.
TEST(RoughCycle, FrequencyMatchesExactRecurrence) {
  constexpr int n = 10000;
  constexpr int kDraws = 10000;
  const double a = 0.25, b = 0.75;
  const int floor = log_cubed_floor(n);
  std::vector<bool> rough(n + 1, false);
  for (int l = 1; l <= n; ++l)
    rough[static_cast<std::size_t>(l)] =
        l >= std::pow(n, a) * (1 - 1e-12) && l <= std::pow(n, b) * (1 + 1e-12) && largest_prime_factor(l) > floor;
  const double exact = exact_some_cycle_in(n, rough);
  auto s = RandomStream(4242);
  int hits = 0;
  for (int t = 0; t < kDraws; ++t) hits += has_rough_cycle(cycle_type(sample_permutation(n, s)), a, b, floor);
  const double sigma = std::sqrt(kDraws * exact * (1 - exact));
  EXPECT_LE(std::abs(hits - kDraws * exact), 4 * sigma + 1) << "exact " << exact;
  EXPECT_GT(exact, 0.0);
}

TEST(WindowEvent, SinglePermutationFullSum) {
  auto s = RandomStream(8);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(s.uniform_below(50));
    const auto sums = achievable_sums(cycle_type(sample_permutation(n, s)));
    EXPECT_TRUE(sums.test(static_cast<std::size_t>(n)));
    // The window [n, 2n] clipped to n contains the full sum.
    EXPECT_TRUE(window_hit({sums}, n));
  }
}

// k = 1 at n = 4: the event needs some l in {1, 2} realized by all four
// permutations. Enumerate S_4 once and combine the per-l indicator counts
// by inclusion-exclusion over the two values of l.
TEST(WindowEvent, ExhaustiveS4ForKOne) {
  std::vector<int> images{0, 1, 2, 3};
  long has1 = 0, has2 = 0, has12 = 0;
  std::vector<DegreeSet> all;
  do {
    const auto sums = achievable_sums(cycle_type(Permutation(images)));
    all.push_back(sums);
    has1 += sums.test(1);
    has2 += sums.test(2);
    has12 += sums.test(1) && sums.test(2);
  } while (std::next_permutation(images.begin(), images.end()));
  ASSERT_EQ(all.size(), 24u);
  // |A1 u A2| over quadruples: a1^4 + a2^4 - a12^4 counts.
  const auto p4 = [](long v) { return v * v * v * v; };
  const ExactRational formula = make_rational(p4(has1) + p4(has2) - p4(has12), p4(24));

  long direct = 0;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        for (const auto& d : all) direct += window_hit({a, b, c, d}, 1);
  EXPECT_EQ(make_rational(direct, p4(24)), formula);
  // Hand counts by cycle type: 1^4 (1), 2 1^2 (6), 2^2 (3), 3 1 (8), 4 (6).
  EXPECT_EQ(has1, 15);
  EXPECT_EQ(has2, 10);
  EXPECT_EQ(has12, 7);
  EXPECT_EQ(formula, make_rational(58224, 331776));
}

TEST(WindowEvent, WidenShiftsUpward) {
  DegreeSet s(10);
  s.set(0);
  s.set(4);
  s.set(9);
  const auto w = widen(s, 2);
  EXPECT_EQ(members(w), (std::vector<int>{0, 1, 2, 4, 5, 6, 9}));
}
