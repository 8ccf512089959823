#pragma once

// Exact irreducibility over Q for small degree by root recombination.
//
// Complex roots are found numerically (Aberth-Ehrlich), the exact Sturm
// count fixes which of them are real, and the remaining roots are paired
// into conjugates. Every conjugation-closed root subset of size <= n/2
// yields a real monic candidate; candidates whose coefficients respect the
// Mignotte bound and round to integers are confirmed or refuted by exact
// division over Z. A candidate that rounds cleanly but does not divide is a
// precision failure, and the search reruns at a wider float type.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "randpoly/errors.hpp"
#include "randpoly/int_poly.hpp"
#include "randpoly/rational.hpp"

namespace randpoly {

inline constexpr int kOracleMaxDegree = 12;

enum class OracleOutcome { Irreducible, Reducible, PrecisionFailure };

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::PrecisionFailure;
  // Degree of the smallest proper monic divisor found; 0 when irreducible.
  int smallest_divisor_degree = 0;
  IntPoly divisor;
  int precision_bits = 0;
};

namespace detail {

template <class Real>
struct Cx {
  Real re;
  Real im;
};

template <class Real>
Cx<Real> operator+(const Cx<Real>& a, const Cx<Real>& b) { return {a.re + b.re, a.im + b.im}; }
template <class Real>
Cx<Real> operator-(const Cx<Real>& a, const Cx<Real>& b) { return {a.re - b.re, a.im - b.im}; }
template <class Real>
Cx<Real> operator*(const Cx<Real>& a, const Cx<Real>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class Real>
Cx<Real> operator/(const Cx<Real>& a, const Cx<Real>& b) {
  const Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
template <class Real>
Real magnitude(const Cx<Real>& a) {
  using std::sqrt;
  return sqrt(a.re * a.re + a.im * a.im);
}

template <class Real>
Real to_real(const BigInt& v) {
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<Real>(std::stold(v.get_str()));
  } else {
    return Real(v.get_str());
  }
}

template <class Real>
Real epsilon() {
  return std::numeric_limits<Real>::epsilon();
}

template <class Real>
int mantissa_bits() {
  return std::numeric_limits<Real>::digits;
}

// Value and derivative of a monic real polynomial at a complex point.
template <class Real>
void horner(const std::vector<Real>& c, const Cx<Real>& z, Cx<Real>& value, Cx<Real>& slope) {
  value = {c.back(), Real(0)};
  slope = {Real(0), Real(0)};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    slope = slope * z + value;
    value = value * z + Cx<Real>{c[k], Real(0)};
  }
}

template <class Real>
struct RootApprox {
  std::vector<Cx<Real>> roots;
  std::vector<Real> error;  // a posteriori per-root error estimate
  bool converged = false;
};

template <class Real>
RootApprox<Real> aberth(const std::vector<Real>& c) {
  using std::abs;
  using std::cos;
  using std::pow;
  using std::sin;
  const int n = static_cast<int>(c.size()) - 1;
  RootApprox<Real> out;
  // Fujiwara bound on root moduli.
  Real radius(0);
  for (int k = 1; k <= n; ++k) {
    Real a = abs(c[static_cast<std::size_t>(n - k)]);
    if (a == 0) continue;
    Real r = pow(a, Real(1) / Real(k));
    if (r > radius) radius = r;
  }
  radius = radius == 0 ? Real(1) : radius;
  const Real tau = Real(6.283185307179586476925286766559);
  out.roots.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Real theta = tau * Real(k) / Real(n) + Real(0.4);
    out.roots[static_cast<std::size_t>(k)] = {radius * cos(theta), radius * sin(theta)};
  }
  using std::sqrt;
  const Real tol = sqrt(epsilon<Real>());
  for (int iter = 0; iter < 1000 && !out.converged; ++iter) {
    bool all_small = true;
    for (int k = 0; k < n; ++k) {
      auto& z = out.roots[static_cast<std::size_t>(k)];
      Cx<Real> value, slope;
      horner(c, z, value, slope);
      if (value.re == 0 && value.im == 0) continue;
      const Cx<Real> ratio = value / slope;
      Cx<Real> repulsion{Real(0), Real(0)};
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        repulsion = repulsion + Cx<Real>{Real(1), Real(0)} / (z - out.roots[static_cast<std::size_t>(j)]);
      }
      const Cx<Real> step = ratio / (Cx<Real>{Real(1), Real(0)} - ratio * repulsion);
      z = z - step;
      if (magnitude(step) > tol * (Real(1) + magnitude(z))) all_small = false;
    }
    out.converged = all_small;
  }
  // Two Newton polishing passes; a third step only estimates the error.
  out.error.assign(static_cast<std::size_t>(n), Real(0));
  for (int pass = 0; pass < 3; ++pass) {
    for (int k = 0; k < n; ++k) {
      auto& z = out.roots[static_cast<std::size_t>(k)];
      Cx<Real> value, slope;
      horner(c, z, value, slope);
      if (magnitude(slope) == 0) {
        out.converged = false;
        continue;
      }
      const Cx<Real> step = value / slope;
      if (pass < 2) z = z - step;
      out.error[static_cast<std::size_t>(k)] =
          Real(n) * magnitude(step) + Real(4) * epsilon<Real>() * (Real(1) + magnitude(z));
    }
  }
  return out;
}

// Items are real roots (weight 1) or conjugate pairs (weight 2); each item
// carries its real monic factor: x - r or x^2 - 2 Re(z) x + |z|^2.
template <class Real>
struct RootItem {
  int weight;
  std::vector<Real> factor;  // low to high
  Real error;
  Real modulus;
};

template <class Real>
std::vector<Real> multiply(const std::vector<Real>& a, const std::vector<Real>& b) {
  std::vector<Real> out(a.size() + b.size() - 1, Real(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

template <class Real>
long long round_to_ll(const Real& v) {
  using std::floor;
  const Real r = floor(v + Real(0.5));
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<long long>(r);
  } else {
    return r.template convert_to<long long>();
  }
}

template <class Real>
OracleResult recombine(const IntPoly& f, int real_count) {
  using std::abs;
  using std::cbrt;
  using std::sqrt;
  const int n = f.degree();
  OracleResult result;
  result.precision_bits = mantissa_bits<Real>();

  std::vector<Real> c;
  c.reserve(f.coeffs().size());
  Real norm2(0);
  for (const auto& v : f.coeffs()) {
    c.push_back(to_real<Real>(v));
    norm2 += c.back() * c.back();
  }
  const Real norm = sqrt(norm2);

  auto approx = aberth(c);
  if (!approx.converged) return result;

  // Classify using the exact real-root count.
  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return abs(approx.roots[a].im) < abs(approx.roots[b].im);
  });
  std::vector<RootItem<Real>> items;
  for (int k = 0; k < real_count; ++k) {
    const auto& z = approx.roots[order[static_cast<std::size_t>(k)]];
    items.push_back({1, {-z.re, Real(1)}, approx.error[order[static_cast<std::size_t>(k)]] + abs(z.im), abs(z.re)});
  }
  std::vector<std::size_t> upper, lower;
  for (int k = real_count; k < n; ++k) {
    const auto idx = order[static_cast<std::size_t>(k)];
    (approx.roots[idx].im > 0 ? upper : lower).push_back(idx);
  }
  if (upper.size() != lower.size()) return result;
  std::vector<char> used(lower.size(), 0);
  for (auto u : upper) {
    const auto& z = approx.roots[u];
    std::size_t best = lower.size();
    Real best_gap(0);
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      const auto& w = approx.roots[lower[j]];
      const Real gap = magnitude(Cx<Real>{z.re - w.re, z.im + w.im});
      if (best == lower.size() || gap < best_gap) {
        best = j;
        best_gap = gap;
      }
    }
    used[best] = 1;
    const Real err = approx.error[u] + approx.error[lower[best]];
    if (best_gap > Real(4) * err + epsilon<Real>()) return result;
    items.push_back({2, {z.re * z.re + z.im * z.im, Real(-2) * z.re, Real(1)}, err, magnitude(z)});
  }

  // d e_j / d z_k is an elementary symmetric function of the other roots,
  // bounded by prod (1 + |z|); this bounds every candidate's coefficient error.
  Real spread(1);
  Real total_error(0);
  for (const auto& it : items) {
    spread *= (Real(1) + it.modulus) * (it.weight == 2 ? (Real(1) + it.modulus) : Real(1));
    total_error += it.error;
  }
  const Real coefficient_error = total_error * spread;
  const Real accept = cbrt(epsilon<Real>());
  if (coefficient_error > accept / Real(16)) return result;

  // Subsets of items by ascending weight, up to n/2.
  const auto count = items.size();
  std::vector<std::pair<int, unsigned>> subsets;
  for (unsigned mask = 1; mask < (1u << count); ++mask) {
    int w = 0;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (1u << i)) w += items[i].weight;
    if (2 * w <= n) subsets.push_back({w, mask});
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  for (auto [w, mask] : subsets) {
    std::vector<Real> prod{Real(1)};
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (1u << i)) prod = multiply(prod, items[i].factor);
    bool plausible = true;
    bool near_integer = true;
    std::vector<BigInt> rounded(prod.size());
    for (std::size_t j = 0; j < prod.size() && plausible; ++j) {
      // Mignotte: |g_j| <= C(w, j) ||f||_2 for any integer divisor g.
      const Real bound = to_real<Real>(binomial(BigInt(w), static_cast<unsigned long>(j))) * norm + Real(1);
      if (abs(prod[j]) > bound) {
        plausible = false;
        break;
      }
      const long long r = round_to_ll(prod[j]);
      if (abs(prod[j] - Real(r)) > accept) near_integer = false;
      rounded[j] = static_cast<long>(r);
    }
    if (!plausible || !near_integer) continue;
    rounded.back() = 1;
    IntPoly candidate(std::move(rounded));
    if (zpoly::divide_by_monic(f, candidate)) {
      result.outcome = OracleOutcome::Reducible;
      result.smallest_divisor_degree = w;
      result.divisor = std::move(candidate);
      return result;
    }
    return result;  // rounded cleanly but does not divide: ambiguous
  }
  result.outcome = OracleOutcome::Irreducible;
  return result;
}

// Primitive gcd over Z via the primitive remainder sequence.
inline IntPoly primitive_gcd(IntPoly a, IntPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (!a.is_zero()) a = zpoly::divide_coeffs_exact(a, zpoly::content(a));
  if (!b.is_zero()) b = zpoly::divide_coeffs_exact(b, zpoly::content(b));
  while (!b.is_zero()) {
    IntPoly r = zpoly::pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : zpoly::divide_coeffs_exact(r, zpoly::content(r));
  }
  if (!a.is_zero() && a.lead() < 0) a = zpoly::scale(a, -1);
  return a;
}

inline double log2_mignotte(const IntPoly& f) {
  double norm2 = 0;
  for (const auto& v : f.coeffs()) norm2 += v.get_d() * v.get_d();
  const int half = f.degree() / 2;
  return std::log2(binomial(BigInt(half), static_cast<unsigned long>(half / 2)).get_d()) + 0.5 * std::log2(norm2) + 1;
}

using Float50 = boost::multiprecision::cpp_bin_float_50;
using Float100 = boost::multiprecision::cpp_bin_float_100;

// Squarefree monic input. Starts at the narrowest float whose mantissa holds
// twice the bit size of the coefficient bound, then widens on failure.
inline OracleResult search_squarefree(const IntPoly& f) {
  const int real_count = zpoly::real_root_count(f);
  const double needed = 2 * log2_mignotte(f);
  OracleResult r;
  if (needed <= mantissa_bits<long double>()) {
    r = recombine<long double>(f, real_count);
    if (r.outcome != OracleOutcome::PrecisionFailure) return r;
  }
  if (needed <= mantissa_bits<Float50>()) {
    r = recombine<Float50>(f, real_count);
    if (r.outcome != OracleOutcome::PrecisionFailure) return r;
  }
  return recombine<Float100>(f, real_count);
}

}  // namespace detail

// Full oracle result; a non-squarefree input is reducible, and its smallest
// divisor degree is found on the squarefree part.
inline OracleResult oracle_factor_search(const IntPoly& f) {
  require(f.is_monic(), "oracle: f must be monic");
  require(f.degree() >= 2, "oracle: degree must be >= 2");
  if (f.degree() > kOracleMaxDegree)
    throw CapacityError("oracle: degree " + std::to_string(f.degree()) + " exceeds " +
                        std::to_string(kOracleMaxDegree));
  if (zpoly::discriminant(f) != 0) return detail::search_squarefree(f);

  const IntPoly g = detail::primitive_gcd(f, zpoly::derivative(f));
  IntPoly part = *zpoly::divide_by_monic(f, zpoly::scale(g, g.lead() < 0 ? -1 : 1));
  OracleResult out;
  out.outcome = OracleOutcome::Reducible;
  if (part.degree() == 1) {
    out.smallest_divisor_degree = 1;
    out.divisor = part;
    return out;
  }
  OracleResult inner = detail::search_squarefree(part);
  if (inner.outcome == OracleOutcome::PrecisionFailure) return inner;
  out.precision_bits = inner.precision_bits;
  if (inner.outcome == OracleOutcome::Irreducible) {
    out.smallest_divisor_degree = part.degree();
    out.divisor = part;
  } else {
    out.smallest_divisor_degree = inner.smallest_divisor_degree;
    out.divisor = inner.divisor;
  }
  return out;
}

inline bool oracle_irreducible_small(const IntPoly& f) {
  const auto r = oracle_factor_search(f);
  if (r.outcome == OracleOutcome::PrecisionFailure)
    throw CapacityError("oracle: precision exhausted for " + f.to_text());
  return r.outcome == OracleOutcome::Irreducible;
}

// Degree of the smallest proper divisor, or nullopt when irreducible.
inline std::optional<int> oracle_smallest_divisor_degree(const IntPoly& f) {
  const auto r = oracle_factor_search(f);
  if (r.outcome == OracleOutcome::PrecisionFailure)
    throw CapacityError("oracle: precision exhausted for " + f.to_text());
  if (r.outcome == OracleOutcome::Irreducible) return std::nullopt;
  return r.smallest_divisor_degree;
}

}  // namespace randpoly
