#pragma once

#include <map>
#include <utility>
#include <vector>

#include "slq/core.hpp"

namespace slq {

struct PrimePower {
  u64 p;
  unsigned m;
};

/// A positive integer q together with its prime factorization q = prod p^m_p.
/// Primes are stored strictly increasing with exponents >= 1. Factorization
/// is trial division plus deterministic Miller-Rabin; cofactors that survive
/// both (semiprimes with two huge factors) are outside desk scale and
/// rejected.
class Modulus {
 public:
  explicit Modulus(u64 q);

  u64 q() const { return q_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  bool divides(u64 a) const { return a % q_ == 0; }
  unsigned exponent_of(u64 p) const;  // m_p, or 0 if p does not divide q

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.q_ == b.q_;
  }

 private:
  u64 q_;
  std::vector<PrimePower> factors_;
};

bool is_prime(u64 n);

/// E_p(q) = v_p(q) / m_p for each prime p | q, with m_p taken from Q.
/// Throws NotADivisor unless q | Q. q = 1 gives the empty map.
std::map<u64, Rational> exponent_gauge(u64 q, const Modulus& Q);

/// w(q) = sum over p | q of m_p * log p (natural log, exponents from Q).
double weight(u64 q, const Modulus& Q);

/// (Q_s, Q_l): Q_s is the product of first powers of primes with m_p <= L,
/// Q_l the product of full prime powers with m_p > L.
std::pair<u64, u64> split_modulus(const Modulus& Q, unsigned L);

/// The exact divisor q of Q with q || a for a matrix with entry gcd g:
/// q = prod p^min(v_p(g), m_p). Throws ZeroInput when g = 0.
u64 exact_divisor_from_gcd(const Int& g, const Modulus& Q);

/// |SL_d(Z/qZ)|, multiplicative over prime powers, with
/// |SL_d(Z/p^m)| = p^((m-1)(d^2-1)) * p^(d(d-1)/2) * prod_{k=2..d} (p^k - 1).
Int group_order(int d, const Modulus& q);

}  // namespace slq
