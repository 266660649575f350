#pragma once

#include <Eigen/Dense>

#include "slq/core.hpp"
#include "slq/modulus.hpp"

namespace slq {

template <class Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// d x d matrix over Z with arbitrary-precision entries.
using IntMat = Dense<Int>;
using ResidueMat = Dense<u64>;

IntMat int_identity(int d);
bool int_eq(const IntMat& a, const IntMat& b);
IntMat int_mul(const IntMat& a, const IntMat& b);

/// Determinant by Laplace expansion; exact for any scalar ring, intended for
/// the small d used here.
Int det_exact(const IntMat& a);
IntMat adjugate_exact(const IntMat& a);
bool is_unimodular(const IntMat& a);

/// Inverse of a determinant-1 integer matrix (the adjugate).
IntMat int_inverse(const IntMat& a);

Int entry_gcd(const IntMat& a);
Int max_abs_entry(const IntMat& a);

/// d x d matrix over Z/qZ with entries kept in canonical range [0, q).
struct ModMat {
  Modulus mod;
  ResidueMat e;

  ModMat(const Modulus& m, ResidueMat entries);
  int d() const { return static_cast<int>(e.rows()); }
};

bool operator==(const ModMat& a, const ModMat& b);

ModMat mod_identity(int d, const Modulus& q);
ModMat mod_zero(int d, const Modulus& q);

/// Entrywise reduction; a ring homomorphism on matrices.
ModMat project(const IntMat& g, const Modulus& q);

/// Reduce to a divisor modulus q' | q.
ModMat mod_reduce(const ModMat& a, const Modulus& qp);

ModMat mod_mul(const ModMat& a, const ModMat& b);
ModMat mod_add(const ModMat& a, const ModMat& b);
ModMat mod_sub(const ModMat& a, const ModMat& b);
ModMat mod_scale(u64 c, const ModMat& a);
ModMat mod_neg(const ModMat& a);

u64 mod_det(const ModMat& a);
u64 mod_trace(const ModMat& a);
ModMat mod_adjugate(const ModMat& a);

/// Inverse via the adjugate; requires det = 1 (throws NotUnimodular).
ModMat mod_inv(const ModMat& a);

/// Inverse of any matrix with unit determinant: adjugate times det^-1.
ModMat mod_inv_unit(const ModMat& a);

u64 mod_entry_gcd(const ModMat& a);

/// The exact divisor q || a of Q for an integer matrix (gcd of entries,
/// valuations clamped at m_p so the result always divides Q).
u64 exact_divisor(const IntMat& a, const Modulus& Q);

/// Radix packing of the entries into a 128-bit key for hashing/indexing.
/// Requires q^(d^2) < 2^128; anything larger cannot be enumerated anyway.
u128 pack_key(const ModMat& a);
u128 pack_entries(const u64* e, int n, u64 q);

struct KeyHash {
  std::size_t operator()(u128 k) const {
    u64 lo = static_cast<u64>(k), hi = static_cast<u64>(k >> 64);
    u64 h = lo * 0x9e3779b97f4a7c15ull;
    h ^= hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace slq
