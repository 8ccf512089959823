#pragma once

// Dense polynomials over a prime field F_p (p < 2^62) and factor-degree
// extraction: squarefree decomposition followed by distinct-degree
// factorization. No equal-degree splitting; only the degree multiset is
// ever needed.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "randpoly/degree_multiset.hpp"
#include "randpoly/errors.hpp"
#include "randpoly/rational.hpp"

namespace randpoly {

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic Miller-Rabin; these bases cover all 64-bit integers.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

using detail::is_prime_u64;

// A modulus that has been checked prime; FieldPoly only accepts these.
class PrimeModulus {
 public:
  static constexpr std::uint64_t kLimit = 1ULL << 62;

  explicit PrimeModulus(std::uint64_t p) : p_(p) {
    require(p < kLimit, "PrimeModulus: p must be < 2^62");
    require(is_prime_u64(p), "PrimeModulus: " + std::to_string(p) + " is not prime");
  }

  std::uint64_t value() const { return p_; }
  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint64_t p_;
};

class FieldPoly {
 public:
  using Coeffs = std::vector<std::uint64_t>;

  explicit FieldPoly(PrimeModulus p) : p_(p) {}

  // Coefficients low to high; reduced mod p and trimmed.
  FieldPoly(PrimeModulus p, Coeffs coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_.value();
    trim();
  }

  static FieldPoly monomial(PrimeModulus p, int degree, std::uint64_t coeff = 1) {
    Coeffs c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coeff;
    return FieldPoly(p, std::move(c));
  }

  PrimeModulus modulus() const { return p_; }
  std::uint64_t p() const { return p_.value(); }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  friend bool operator==(const FieldPoly&, const FieldPoly&) = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const auto v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      if (!out.empty()) out += " + ";
      if (v != 1 || i == 0) out += std::to_string(v);
      if (i >= 1) out += (v != 1 ? "*x" : "x");
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  PrimeModulus p_;
  Coeffs c_;
};

namespace ff {

namespace detail {

inline void check_same_field(const FieldPoly& a, const FieldPoly& b) {
  require(a.modulus() == b.modulus(), "FieldPoly: modulus mismatch");
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  ensure(a % p != 0, "FieldPoly: inverse of zero");
  return randpoly::detail::pow_mod(a, p - 2, p);
}

}  // namespace detail

inline FieldPoly add(const FieldPoly& a, const FieldPoly& b) {
  detail::check_same_field(a, b);
  const auto p = a.p();
  FieldPoly::Coeffs c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto s = a[i] + b[i];
    c[i] = s >= p ? s - p : s;
  }
  return FieldPoly(a.modulus(), std::move(c));
}

inline FieldPoly sub(const FieldPoly& a, const FieldPoly& b) {
  detail::check_same_field(a, b);
  const auto p = a.p();
  FieldPoly::Coeffs c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
  return FieldPoly(a.modulus(), std::move(c));
}

inline FieldPoly scale(const FieldPoly& a, std::uint64_t k) {
  FieldPoly::Coeffs c(a.coeffs());
  for (auto& v : c) v = randpoly::detail::mul_mod(v, k % a.p(), a.p());
  return FieldPoly(a.modulus(), std::move(c));
}

inline FieldPoly mul(const FieldPoly& a, const FieldPoly& b) {
  detail::check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FieldPoly(a.modulus());
  const auto p = a.p();
  FieldPoly::Coeffs c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = (c[i + j] + randpoly::detail::mul_mod(a[i], b[j], p)) % p;
    }
  }
  return FieldPoly(a.modulus(), std::move(c));
}

// (quotient, remainder) with a = q*b + r, deg r < deg b.
inline std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b) {
  detail::check_same_field(a, b);
  require(!b.is_zero(), "FieldPoly: division by zero polynomial");
  const auto p = a.p();
  if (a.degree() < b.degree()) return {FieldPoly(a.modulus()), a};
  const auto inv_lead = detail::inverse(b.lead(), p);
  FieldPoly::Coeffs r(a.coeffs());
  const auto db = static_cast<std::size_t>(b.degree());
  FieldPoly::Coeffs q(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    const auto factor = randpoly::detail::mul_mod(r[k], inv_lead, p);
    q[k - db] = factor;
    if (factor == 0) continue;
    const auto neg = p - factor;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k - db + j] = (r[k - db + j] + randpoly::detail::mul_mod(neg, b[j], p)) % p;
    }
  }
  r.resize(db);
  return {FieldPoly(a.modulus(), std::move(q)), FieldPoly(a.modulus(), std::move(r))};
}

inline FieldPoly rem(const FieldPoly& a, const FieldPoly& b) { return divmod(a, b).second; }

inline FieldPoly exact_quotient(const FieldPoly& a, const FieldPoly& b) {
  auto [q, r] = divmod(a, b);
  ensure(r.is_zero(), "FieldPoly: inexact division");
  return q;
}

inline FieldPoly monic(const FieldPoly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, detail::inverse(a.lead(), a.p()));
}

inline FieldPoly derivative(const FieldPoly& a) {
  if (a.degree() < 1) return FieldPoly(a.modulus());
  FieldPoly::Coeffs c(static_cast<std::size_t>(a.degree()), 0);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    c[i - 1] = randpoly::detail::mul_mod(a[i], i % a.p(), a.p());
  return FieldPoly(a.modulus(), std::move(c));
}

// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
inline FieldPoly gcd(FieldPoly a, FieldPoly b) {
  detail::check_same_field(a, b);
  while (!b.is_zero()) {
    FieldPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline FieldPoly mul_mod(const FieldPoly& a, const FieldPoly& b, const FieldPoly& m) {
  return rem(mul(a, b), m);
}

inline FieldPoly pow_mod(FieldPoly base, std::uint64_t exp, const FieldPoly& m) {
  FieldPoly result = rem(FieldPoly(m.modulus(), {1}), m);
  base = rem(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    exp >>= 1;
    if (exp > 0) base = mul_mod(base, base, m);
  }
  return result;
}

// g(x) with f(x) = g(x)^p, valid when f' = 0. In F_p every coefficient is
// its own p-th root, so only exponents are divided.
inline FieldPoly pth_root(const FieldPoly& f) {
  const auto p = f.p();
  FieldPoly::Coeffs c(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f[i] == 0) continue;
    ensure(i % p == 0, "pth_root: exponent not divisible by p");
    c[i / p] = f[i];
  }
  return FieldPoly(f.modulus(), std::move(c));
}

struct SquarefreeFactor {
  FieldPoly factor;
  int multiplicity;
};

// f = prod g_j^j with g_j monic, squarefree, pairwise coprime. Sorted by
// multiplicity.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const FieldPoly& f) {
  require(!f.is_zero() && f.is_monic(), "squarefree_decomposition: input must be monic");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  FieldPoly c = gcd(f, derivative(f));
  FieldPoly w = exact_quotient(f, c);
  int i = 1;
  while (!w.is_one()) {
    FieldPoly y = gcd(w, c);
    FieldPoly z = exact_quotient(w, y);
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = std::move(y);
    c = exact_quotient(c, w);
  }
  if (c.degree() > 0) {
    // Reaching this branch means p <= deg f, so p fits in an int.
    const auto p = static_cast<int>(f.p());
    for (auto& sub : squarefree_decomposition(pth_root(c))) out.push_back({sub.factor, sub.multiplicity * p});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

// Degrees of the irreducible factors of a squarefree monic polynomial.
// x^{p^d} mod g is advanced by one p-th power per degree step.
inline DegreeMultiset distinct_degree_factorization(FieldPoly g) {
  DegreeMultiset out;
  const auto p = g.p();
  const FieldPoly x = FieldPoly::monomial(g.modulus(), 1);
  FieldPoly frob = rem(x, g);
  for (int d = 1; g.degree() >= 2 * d; ++d) {
    frob = pow_mod(frob, p, g);
    FieldPoly t = gcd(g, sub(frob, x));
    if (t.degree() > 0) {
      out.add(d, t.degree() / d);
      g = exact_quotient(g, t);
      frob = rem(frob, g);
    }
  }
  if (g.degree() > 0) out.add(g.degree());
  return out;
}

// Factor degrees counted with multiplicity; the weight equals deg f.
inline DegreeMultiset factor_degree_multiset(const FieldPoly& f) {
  require(!f.is_zero(), "factor_degree_multiset: zero polynomial");
  require(f.is_monic() && f.degree() >= 1, "factor_degree_multiset: need monic, degree >= 1");
  DegreeMultiset out;
  for (const auto& [g, j] : squarefree_decomposition(f))
    out.merge(distinct_degree_factorization(g).scaled_multiplicity(j));
  ensure(out.weight() == f.degree(), "factor_degree_multiset: weight mismatch");
  return out;
}

inline bool is_irreducible(const FieldPoly& f) {
  require(f.is_monic() && f.degree() >= 1, "is_irreducible: need monic, degree >= 1");
  return factor_degree_multiset(f).count(f.degree()) == 1;
}

}  // namespace ff

inline int mobius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

// Number of monic irreducibles of degree i over F_p: (1/i) sum_{j|i} mu(i/j) p^j.
inline BigInt count_irreducibles(std::uint64_t p, int i) {
  require(i >= 1, "count_irreducibles: degree must be >= 1");
  const BigInt base(static_cast<unsigned long>(p));
  BigInt sum = 0;
  for (int j = 1; j <= i; ++j) {
    if (i % j != 0) continue;
    const int mu = mobius(i / j);
    if (mu == 0) continue;
    const BigInt term = pow(base, static_cast<unsigned long>(j));
    sum += mu > 0 ? term : BigInt(-term);
  }
  ensure(mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(i)) != 0,
         "count_irreducibles: Moebius sum not divisible by i");
  return sum / i;
}

// Probability that a uniform monic polynomial contributes exactly the chosen
// m unordered irreducibles of degree i: C(N+m-1, m) / p^{im}.
inline ExactRational alpha(std::uint64_t p, int i, int m) {
  require(i >= 1 && m >= 0, "alpha: need i >= 1, m >= 0");
  if (m == 0) return ExactRational(1);
  const BigInt n_irr = count_irreducibles(p, i);
  const BigInt num = binomial(n_irr + (m - 1), static_cast<unsigned long>(m));
  const BigInt den = pow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(i) * m);
  return make_rational(num, den);
}

}  // namespace randpoly
