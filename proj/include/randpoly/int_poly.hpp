#pragma once

// Integer polynomials of bounded height: sampling, reduction mod p, exact
// resultants and discriminants, real-root counting and 2-adic statistics.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "randpoly/errors.hpp"
#include "randpoly/field_poly.hpp"
#include "randpoly/int_matrix.hpp"
#include "randpoly/random.hpp"
#include "randpoly/rational.hpp"

namespace randpoly {

class IntPoly {
 public:
  IntPoly() = default;

  // Coefficients low to high; trailing zeros are dropped.
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly from_ints(std::initializer_list<long> coeffs) {
    std::vector<BigInt> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const BigInt& lead() const {
    ensure(!c_.empty(), "IntPoly: zero polynomial has no leading coefficient");
    return c_.back();
  }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : BigInt(0); }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // The batch text format: coefficients constant term first, space separated.
  std::string to_text() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ' ';
      out += c_[i].get_str();
    }
    return out.empty() ? "0" : out;
  }

  static IntPoly parse_text(const std::string& line) {
    std::istringstream in(line);
    std::vector<BigInt> c;
    std::string token;
    while (in >> token) {
      BigInt v;
      if (v.set_str(token, 10) != 0) throw UsageError("IntPoly: bad coefficient '" + token + "'");
      c.push_back(std::move(v));
    }
    return IntPoly(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

namespace zpoly {

inline IntPoly add(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPoly(std::move(c));
}

inline IntPoly sub(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPoly(std::move(c));
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return IntPoly(std::move(c));
}

inline IntPoly scale(const IntPoly& a, const BigInt& k) {
  std::vector<BigInt> c(a.coeffs());
  for (auto& v : c) v *= k;
  return IntPoly(std::move(c));
}

inline IntPoly derivative(const IntPoly& a) {
  if (a.degree() < 1) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(a.degree()));
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) c[i - 1] = a.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(c));
}

inline BigInt content(const IntPoly& a) {
  BigInt g = 0;
  for (const auto& v : a.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline IntPoly divide_coeffs_exact(const IntPoly& a, const BigInt& d) {
  std::vector<BigInt> c(a.coeffs());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(c));
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  require(!b.is_zero(), "pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r(a.coeffs());
  const int db = b.degree();
  const BigInt& lb = b.lead();
  int exponent = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    const BigInt top = r[static_cast<std::size_t>(k)];
    for (int i = 0; i <= k; ++i) r[static_cast<std::size_t>(i)] *= lb;
    if (top != 0)
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
    --exponent;
  }
  r.resize(static_cast<std::size_t>(db));
  IntPoly out(std::move(r));
  if (exponent > 0) out = scale(out, pow(lb, static_cast<unsigned long>(exponent)));
  return out;
}

// Quotient when a is divisible by the monic polynomial g over Z.
inline std::optional<IntPoly> divide_by_monic(const IntPoly& a, const IntPoly& g) {
  require(g.is_monic(), "divide_by_monic: divisor must be monic");
  if (a.degree() < g.degree()) return a.is_zero() ? std::optional<IntPoly>(IntPoly{}) : std::nullopt;
  std::vector<BigInt> r(a.coeffs());
  const int dg = g.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - dg + 1));
  for (int k = a.degree(); k >= dg; --k) {
    const BigInt factor = r[static_cast<std::size_t>(k)];
    q[static_cast<std::size_t>(k - dg)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(k - dg + j)] -= factor * g.coeffs()[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < dg; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

// Resultant by the subresultant pseudo-remainder sequence (Collins/Brown,
// with contents pulled out first).
inline BigInt resultant(IntPoly a, IntPoly b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  if (b.degree() == 0) return pow(b.lead(), static_cast<unsigned long>(a.degree())) * s;
  const BigInt ca = content(a);
  const BigInt cb = content(b);
  a = divide_coeffs_exact(a, ca);
  b = divide_coeffs_exact(b, cb);
  const BigInt t = pow(ca, static_cast<unsigned long>(b.degree())) * pow(cb, static_cast<unsigned long>(a.degree()));
  BigInt g = 1;
  BigInt h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    const BigInt divisor = g * pow(h, static_cast<unsigned long>(delta));
    b = divide_coeffs_exact(r, divisor);
    g = a.lead();
    // h <- g^delta / h^(delta-1), exact; unchanged when delta = 0.
    if (delta > 0) {
      BigInt num = pow(g, static_cast<unsigned long>(delta));
      BigInt den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  // h <- lc(b)^deg a / h^(deg a - 1)
  const int da = a.degree();
  BigInt num = pow(b.lead(), static_cast<unsigned long>(da));
  BigInt den = pow(h, static_cast<unsigned long>(da - 1));
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out * t * s;
}

// Rows: deg b shifted copies of a, then deg a shifted copies of b,
// coefficients from leading to constant.
inline IntMatrix sylvester_matrix(const IntPoly& a, const IntPoly& b) {
  const int m = a.degree();
  const int n = b.degree();
  require(m >= 1 && n >= 0 && m + n >= 1, "sylvester_matrix: degrees too small");
  const int size = m + n;
  IntMatrix s(size);
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j) s(row, row + j) = a.coeff(m - j);
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j) s(n + row, row + j) = b.coeff(n - j);
  return s;
}

inline BigInt resultant_sylvester(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (b.degree() == 0) return pow(b.lead(), static_cast<unsigned long>(a.degree()));
  if (a.degree() == 0) return pow(a.lead(), static_cast<unsigned long>(b.degree()));
  return det_exact(sylvester_matrix(a, b));
}

namespace detail {
inline BigInt disc_from_resultant(const IntPoly& f, const BigInt& res) {
  require(f.is_monic() && f.degree() >= 2, "discriminant: need monic f of degree >= 2");
  const long n = f.degree();
  return ((n * (n - 1) / 2) % 2 == 0) ? res : BigInt(-res);
}
}  // namespace detail

// (-1)^{n(n-1)/2} Res(f, f') for monic f.
inline BigInt discriminant(const IntPoly& f) {
  require(f.is_monic() && f.degree() >= 2, "discriminant: need monic f of degree >= 2");
  return detail::disc_from_resultant(f, resultant(f, derivative(f)));
}

inline BigInt discriminant_sylvester(const IntPoly& f) {
  require(f.is_monic() && f.degree() >= 2, "discriminant: need monic f of degree >= 2");
  return detail::disc_from_resultant(f, resultant_sylvester(f, derivative(f)));
}

inline int sign(const BigInt& v) { return sgn(v); }

// Number of distinct real roots via a Sturm chain of sign-corrected
// primitive pseudo-remainders.
inline int real_root_count(const IntPoly& f) {
  require(f.degree() >= 1, "real_root_count: degree must be >= 1");
  std::vector<IntPoly> chain{f, derivative(f)};
  while (chain.back().degree() > 0) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    const int delta = a.degree() - b.degree();
    // prem scales by lc(b)^(delta+1); undo its sign, then negate.
    int flip = -1;
    if (sign(b.lead()) < 0 && (delta + 1) % 2 == 1) flip = 1;
    r = divide_coeffs_exact(r, content(r));
    if (flip < 0) r = scale(r, -1);
    chain.push_back(std::move(r));
  }
  if (chain.back().degree() > 0) throw UsageError("real_root_count: polynomial is not squarefree");
  auto changes = [&](bool at_minus_infinity) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
      int s = sign(p.lead());
      if (at_minus_infinity && p.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return changes(true) - changes(false);
}

inline FieldPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
  const PrimeModulus mod(p);
  FieldPoly::Coeffs c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(p));
    c[i] = r.get_ui();
  }
  return FieldPoly(mod, std::move(c));
}

}  // namespace zpoly

struct UniformRange {
  long low = 1;
  long high = 210;
};
struct PlusMinusOne {};
struct ZeroOne {
  bool constant_term_one = true;
};

using CoefficientModel = std::variant<UniformRange, PlusMinusOne, ZeroOne>;

inline void validate(const CoefficientModel& model) {
  if (const auto* u = std::get_if<UniformRange>(&model)) require(u->low <= u->high, "UniformRange: low > high");
}

inline std::string describe(const CoefficientModel& model) {
  if (const auto* u = std::get_if<UniformRange>(&model))
    return "uniform[" + std::to_string(u->low) + "," + std::to_string(u->high) + "]";
  if (std::holds_alternative<PlusMinusOne>(model)) return "pm1";
  return std::get<ZeroOne>(model).constant_term_one ? "zero_one[c0=1]" : "zero_one";
}

// Monic, degree n, lower coefficients i.i.d. under the model. For the +-1
// model this fixes the sign of the leading term; negating every coefficient
// preserves the discriminant and the factorization pattern.
inline IntPoly sample_int_poly(int n, const CoefficientModel& model, RandomStream& stream) {
  require(n >= 1, "sample_int_poly: degree must be >= 1");
  validate(model);
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c.back() = 1;
  for (int i = 0; i < n; ++i) {
    auto& v = c[static_cast<std::size_t>(i)];
    if (const auto* u = std::get_if<UniformRange>(&model)) {
      v = stream.uniform_int(u->low, u->high);
    } else if (std::holds_alternative<PlusMinusOne>(model)) {
      v = stream.coin() ? 1 : -1;
    } else {
      const bool force = std::get<ZeroOne>(model).constant_term_one && i == 0;
      v = (force || stream.coin()) ? 1 : 0;
    }
  }
  return IntPoly(std::move(c));
}

struct DiscriminantReport {
  BigInt disc;
  std::optional<unsigned long> v2;  // nullopt encodes infinity (disc = 0)
  bool is_square = false;
  int sign = 0;
  std::optional<int> nonreal_count;

  bool degenerate() const { return disc == 0; }
};

inline unsigned long two_adic_valuation(const BigInt& v) {
  ensure(v != 0, "two_adic_valuation: zero");
  return mpz_scan1(v.get_mpz_t(), 0);
}

inline DiscriminantReport analyze_discriminant(const IntPoly& f, bool count_real_roots = true) {
  DiscriminantReport r;
  r.disc = zpoly::discriminant(f);
  r.sign = sgn(r.disc);
  r.is_square = is_perfect_square(r.disc);
  if (r.disc == 0) return r;
  r.v2 = two_adic_valuation(r.disc);
  if (count_real_roots) {
    const int nonreal = f.degree() - zpoly::real_root_count(f);
    r.nonreal_count = nonreal;
    ensure(nonreal % 2 == 0, "analyze_discriminant: odd number of non-real roots");
    const int expected = (nonreal / 2) % 2 == 0 ? 1 : -1;
    ensure(expected == r.sign, "analyze_discriminant: sign(disc) != (-1)^(nonreal/2)");
  }
  return r;
}

// deg psi in red_p(f) = phi * psi, phi squarefree and psi squarefull.
inline int squarefull_degree(const IntPoly& f, std::uint64_t p) {
  require(f.is_monic(), "squarefull_degree: f must be monic");
  int total = 0;
  for (const auto& [g, j] : ff::squarefree_decomposition(zpoly::reduce_mod(f, p)))
    if (j >= 2) total += g.degree() * j;
  return total;
}

}  // namespace randpoly
