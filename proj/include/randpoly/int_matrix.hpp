#pragma once

// Exact integer matrices, fraction-free (Bareiss) determinants, and the
// random {-1, 0, 1} matrix model: 0 w.p. 1/2, +1 and -1 w.p. 1/4 each.

#include <cstdint>
#include <utility>
#include <vector>

#include "randpoly/errors.hpp"
#include "randpoly/random.hpp"
#include "randpoly/rational.hpp"
#include "randpoly/stats.hpp"

namespace randpoly {

class IntMatrix {
 public:
  explicit IntMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    require(n >= 1, "IntMatrix: dimension must be >= 1");
  }

  IntMatrix(int n, std::vector<BigInt> row_major) : n_(n), entries_(std::move(row_major)) {
    require(n >= 1, "IntMatrix: dimension must be >= 1");
    require(entries_.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
            "IntMatrix: expected n*n entries");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  BigInt& operator()(int r, int c) { return entries_[index(r, c)]; }
  const BigInt& operator()(int r, int c) const { return entries_[index(r, c)]; }
  const std::vector<BigInt>& entries() const { return entries_; }

  void swap_rows(int a, int b) {
    for (int c = 0; c < n_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }

  int n_;
  std::vector<BigInt> entries_;
};

// Bareiss elimination; pivot is the first nonzero entry in the column, and
// every division is exact.
inline BigInt det_exact(IntMatrix m) {
  const int n = m.size();
  BigInt previous = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : BigInt(-m(n - 1, n - 1));
}

inline IntMatrix sample_matrix(int n, RandomStream& stream) {
  require(n >= 1, "sample_matrix: n must be >= 1");
  IntMatrix m(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      // Two fair bits: 0x -> 0, 10 -> +1, 11 -> -1.
      const unsigned two = stream.bits(2);
      m(r, c) = (two & 1u) == 0 ? 0 : ((two & 2u) == 0 ? 1 : -1);
    }
  }
  return m;
}

// 0 = 0^2 counts as a square.
inline bool is_perfect_square(const BigInt& v) { return mpz_perfect_square_p(v.get_mpz_t()) != 0; }

struct SquareFrequency {
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t squares = 0;
  std::uint64_t singular = 0;

  double frequency() const { return trials ? static_cast<double>(squares) / static_cast<double>(trials) : 0.0; }
  double non_square_frequency() const { return 1.0 - frequency(); }
  double ci_radius() const { return wald_radius(squares, trials); }
};

inline SquareFrequency square_probability(int n, std::uint64_t trials, RandomStream& stream) {
  require(trials >= 1, "square_probability: trials must be >= 1");
  SquareFrequency out{n, trials, 0, 0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const BigInt d = det_exact(sample_matrix(n, stream));
    if (d == 0) ++out.singular;
    if (is_perfect_square(d)) ++out.squares;
  }
  return out;
}

}  // namespace randpoly
