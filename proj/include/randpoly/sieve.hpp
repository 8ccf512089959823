#pragma once

// Multi-prime degree sieve. A monic integer divisor of f of degree d
// reduces to a divisor of red_p(f) for every p, so d must be a subset sum
// of the mod-p factor degrees for each p. When the intersection of those
// sum sets is {0, n}, f is irreducible over Q.

#include <cstdint>
#include <string>
#include <vector>

#include "randpoly/degree_multiset.hpp"
#include "randpoly/errors.hpp"
#include "randpoly/field_poly.hpp"
#include "randpoly/int_poly.hpp"

namespace randpoly {

enum class SieveStatus { Irreducible, Unknown };

inline const char* to_string(SieveStatus s) { return s == SieveStatus::Irreducible ? "irreducible" : "unknown"; }

struct SieveVerdict {
  SieveStatus status = SieveStatus::Unknown;
  DegreeSet witness;
  std::vector<std::uint64_t> primes_used;

  // Witness degrees strictly between 0 and n.
  std::vector<int> candidate_degrees() const {
    std::vector<int> out;
    for (std::size_t d = 1; d + 1 < witness.size(); ++d)
      if (witness.test(d)) out.push_back(static_cast<int>(d));
    return out;
  }
};

inline const std::vector<std::uint64_t>& default_sieve_primes() {
  static const std::vector<std::uint64_t> primes{2, 3, 5, 7};
  return primes;
}

inline void validate_prime_set(const std::vector<std::uint64_t>& primes) {
  require(!primes.empty(), "prime set is empty");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    require(is_prime_u64(primes[i]), "prime set: " + std::to_string(primes[i]) + " is not prime");
    for (std::size_t j = 0; j < i; ++j) require(primes[i] != primes[j], "prime set: duplicate prime");
  }
}

inline SieveVerdict degree_sieve_certify(const IntPoly& f, const std::vector<std::uint64_t>& primes) {
  require(f.is_monic(), "degree_sieve_certify: f must be monic");
  require(f.degree() >= 2, "degree_sieve_certify: degree must be >= 2");
  validate_prime_set(primes);
  const auto n = static_cast<std::size_t>(f.degree());
  SieveVerdict v;
  v.witness = DegreeSet(n + 1);
  v.witness.set();
  for (auto p : primes) {
    v.witness &= achievable_sums(ff::factor_degree_multiset(zpoly::reduce_mod(f, p)));
    v.primes_used.push_back(p);
  }
  ensure(v.witness.test(0) && v.witness.test(n), "degree_sieve_certify: witness lost 0 or n");
  v.status = v.witness.count() == 2 ? SieveStatus::Irreducible : SieveStatus::Unknown;
  return v;
}

// Witness contains some degree in [1, d].
inline bool witness_has_small_degree(const SieveVerdict& v, int d) {
  for (int k = 1; k <= d && static_cast<std::size_t>(k) < v.witness.size(); ++k)
    if (v.witness.test(static_cast<std::size_t>(k))) return true;
  return false;
}

}  // namespace randpoly
