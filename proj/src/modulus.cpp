#include "slq/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slq {

u64 invmod(u64 a, u64 q) {
  a %= q;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(q), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw NotUnimodular("invmod: argument is not a unit");
  if (t < 0) t += static_cast<std::int64_t>(q);
  return static_cast<u64>(t);
}

unsigned valuation(u64 n, u64 p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

unsigned valuation(const Int& n, u64 p) {
  Int m = abs(n);
  Int pp(static_cast<unsigned long>(p));
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
    m /= pp;
    ++v;
  }
  return v;
}

namespace {

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr u64 kTrialLimit = 1u << 20;

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // deterministic witness set for n < 2^64
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

Modulus::Modulus(u64 q) : q_(q) {
  if (q == 0) throw ConfigError("Modulus: q must be positive");
  u64 n = q;
  auto push = [&](u64 p) {
    unsigned m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    if (m) factors_.push_back({p, m});
  };
  push(2);
  push(3);
  for (u64 p = 5; p <= kTrialLimit && p * p <= n; p += 6) {
    push(p);
    push(p + 2);
  }
  if (n > 1) {
    if (n <= kTrialLimit * kTrialLimit || is_prime(n)) {
      // either n has no divisor below its square root, or it passed the test
      if (!is_prime(n))
        throw TooLarge("Modulus: composite cofactor beyond trial range");
      factors_.push_back({n, 1});
    } else {
      throw TooLarge("Modulus: composite cofactor beyond trial range");
    }
  }
}

unsigned Modulus::exponent_of(u64 p) const {
  for (const auto& f : factors_)
    if (f.p == p) return f.m;
  return 0;
}

std::map<u64, Rational> exponent_gauge(u64 q, const Modulus& Q) {
  if (q == 0 || Q.q() % q != 0) throw NotADivisor("exponent_gauge: q does not divide Q");
  std::map<u64, Rational> gauge;
  for (const auto& f : Q.factors()) {
    unsigned v = valuation(q, f.p);
    if (v > 0) gauge[f.p] = Rational(v, f.m);
  }
  return gauge;
}

double weight(u64 q, const Modulus& Q) {
  if (q == 0 || Q.q() % q != 0) throw NotADivisor("weight: q does not divide Q");
  double w = 0.0;
  for (const auto& f : Q.factors())
    if (q % f.p == 0) w += f.m * std::log(static_cast<double>(f.p));
  return w;
}

std::pair<u64, u64> split_modulus(const Modulus& Q, unsigned L) {
  if (L < 1) throw ConfigError("split_modulus: L must be >= 1");
  u64 qs = 1, ql = 1;
  for (const auto& f : Q.factors()) {
    if (f.m <= L) {
      qs *= f.p;
    } else {
      for (unsigned i = 0; i < f.m; ++i) ql *= f.p;
    }
  }
  return {qs, ql};
}

u64 exact_divisor_from_gcd(const Int& g, const Modulus& Q) {
  if (g == 0) throw ZeroInput("exact_divisor: zero matrix");
  u64 q = 1;
  for (const auto& f : Q.factors()) {
    unsigned v = std::min(valuation(g, f.p), f.m);
    for (unsigned i = 0; i < v; ++i) q *= f.p;
  }
  return q;
}

Int group_order(int d, const Modulus& q) {
  if (d < 2) throw ConfigError("group_order: d must be >= 2");
  Int total = 1;
  for (const auto& f : q.factors()) {
    Int p(static_cast<unsigned long>(f.p));
    Int block;
    unsigned long d2 = static_cast<unsigned long>(d) * d;
    mpz_pow_ui(block.get_mpz_t(), p.get_mpz_t(),
               static_cast<unsigned long>(f.m - 1) * (d2 - 1));
    Int head;
    mpz_pow_ui(head.get_mpz_t(), p.get_mpz_t(),
               static_cast<unsigned long>(d) * (d - 1) / 2);
    block *= head;
    for (int k = 2; k <= d; ++k) {
      Int pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
      block *= pk - 1;
    }
    total *= block;
  }
  return total;
}

}  // namespace slq
