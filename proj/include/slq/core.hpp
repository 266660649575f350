#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace slq {

/// Arbitrary-precision integer. Word products in SL_d(Z) grow exponentially
/// in word length, so fixed-width entries are never used for them.
using Int = mpz_class;
/// Exact rational, always kept in canonical form by GMP arithmetic.
using Rational = mpq_class;

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotUnimodular : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct NotADivisor : Error { using Error::Error; };
struct NotInKernel : Error { using Error::Error; };
struct BadLevels : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct Mismatch : Error { using Error::Error; };
struct DomainEmpty : Error { using Error::Error; };
struct BadSet : Error { using Error::Error; };
struct SmallPrime : Error { using Error::Error; };
struct NoConjugatorFound : Error { using Error::Error; };
struct BadHypothesis : Error { using Error::Error; };
struct UnsupportedCharacteristic : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
/// Thrown when a quantitative covering threshold is met but the product set
/// fails to cover; this would contradict the Nikolov-Pyber bound, so the
/// run aborts instead of recording a result.
struct CoveringViolation : Error { using Error::Error; };

struct NoConvergence : Error {
  double best_estimate;
  NoConvergence(const std::string& msg, double best)
      : Error(msg), best_estimate(best) {}
};

/// Deterministic RNG wrapper. std::mt19937_64 output is fully specified by
/// the standard; the distributions are not, so sampling goes through the
/// rejection helpers below to keep runs byte-reproducible across platforms.
class Rng {
 public:
  explicit Rng(u64 seed) : eng_(seed) {}

  u64 next() { return eng_(); }

  /// Uniform integer in [0, n).
  u64 uniform(u64 n) {
    if (n == 0) throw Error("Rng::uniform: empty range");
    const u64 limit = UINT64_MAX - UINT64_MAX % n;
    u64 x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform double in (-1, 1), 53-bit resolution.
  double symmetric_unit() {
    const u64 x = eng_() >> 11;
    return static_cast<double>(x) * (2.0 / 9007199254740992.0) - 1.0;
  }

 private:
  std::mt19937_64 eng_;
};

inline u64 mulmod(u64 a, u64 b, u64 q) {
  return static_cast<u64>((static_cast<u128>(a) * b) % q);
}

inline u64 addmod(u64 a, u64 b, u64 q) {
  u128 s = static_cast<u128>(a) + b;
  return static_cast<u64>(s % q);
}

inline u64 submod(u64 a, u64 b, u64 q) { return (a + (q - b % q)) % q; }

inline u64 powmod(u64 base, u64 exp, u64 q) {
  u64 r = 1 % q;
  base %= q;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, q);
    base = mulmod(base, base, q);
    exp >>= 1;
  }
  return r;
}

/// Modular inverse of a unit; throws NotUnimodular if gcd(a, q) != 1.
u64 invmod(u64 a, u64 q);

/// p-adic valuation of n > 0.
unsigned valuation(u64 n, u64 p);
unsigned valuation(const Int& n, u64 p);

}  // namespace slq
