#pragma once

#include <gmpxx.h>

#include <string>

namespace randpoly {

using BigInt = mpz_class;

// Always canonical (lowest terms, positive denominator) once produced by
// arithmetic; make_rational canonicalizes explicitly constructed values.
using ExactRational = mpq_class;

inline ExactRational make_rational(const BigInt& num, const BigInt& den) {
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

// "num/den", also for integers ("1/1", "0/1"), so every cell parses the same way.
inline std::string to_string(const ExactRational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

inline BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace randpoly
