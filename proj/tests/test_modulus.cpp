#include <doctest.h>

#include <cmath>

#include "slq/matrix.hpp"
#include "slq/modulus.hpp"

using namespace slq;

namespace {

// independent oracle: count 2x2 (or 3x3) matrices over Z/q with det = 1 by
// direct enumeration of all entry tuples
u64 sl_order_bruteforce(int d, u64 q) {
  const int n = d * d;
  std::vector<u64> e(n, 0);
  u64 count = 0;
  for (;;) {
    ResidueMat m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = e[i * d + j];
    if (mod_det(ModMat(Modulus(q), m)) == 1 % q) ++count;
    int k = 0;
    while (k < n && ++e[k] == q) e[k++] = 0;
    if (k == n) break;
  }
  return count;
}

}  // namespace

TEST_CASE("modulus factorization") {
  Modulus m(36);
  REQUIRE(m.factors().size() == 2);
  CHECK(m.factors()[0].p == 2);
  CHECK(m.factors()[0].m == 2);
  CHECK(m.factors()[1].p == 3);
  CHECK(m.factors()[1].m == 2);
  CHECK(Modulus(1).factors().empty());
  Modulus big(9007199254740881ull);  // prime
  REQUIRE(big.factors().size() == 1);
  CHECK(big.factors()[0].m == 1);
  CHECK_THROWS_AS(Modulus(0), ConfigError);
}

TEST_CASE("exponent gauge and weight") {
  Modulus Q(72);  // 2^3 * 3^2
  auto gauge = exponent_gauge(12, Q);
  REQUIRE(gauge.size() == 2);
  CHECK(gauge[2] == Rational(2, 3));
  CHECK(gauge[3] == Rational(1, 2));
  CHECK(exponent_gauge(1, Q).empty());
  CHECK(weight(1, Q) == 0.0);
  const double w = weight(12, Q);
  CHECK(std::abs(w - (3 * std::log(2.0) + 2 * std::log(3.0))) < 1e-12);
  CHECK_THROWS_AS(exponent_gauge(5, Q), NotADivisor);
  CHECK_THROWS_AS(weight(7, Q), NotADivisor);
}

TEST_CASE("split modulus follows the factor-exponent rule") {
  // Q = 2^3 * 3 * 5^2: primes with m_p <= L stay square-free in Q_s
  Modulus Q(600);
  auto [qs, ql] = split_modulus(Q, 2);
  CHECK(qs == 15);  // 3 (m=1) and 5 (m=2) both have m_p <= 2
  CHECK(ql == 8);
  auto [qs1, ql1] = split_modulus(Modulus(30), 1);  // square-free
  CHECK(qs1 == 30);
  CHECK(ql1 == 1);
  auto [qs2, ql2] = split_modulus(Modulus(1024), 2);
  CHECK(qs2 == 1);
  CHECK(ql2 == 1024);
}

TEST_CASE("exact divisor") {
  Modulus Q(36);
  IntMat a(2, 2);
  a << 0, 6, 0, 0;
  CHECK(exact_divisor(a, Q) == 6);
  IntMat b(2, 2);
  b << 0, 12, 18, 0;
  CHECK(exact_divisor(b, Q) == 6);
  IntMat z = int_identity(2);
  z = IntMat(z - z);
  CHECK_THROWS_AS(exact_divisor(z, Q), ZeroInput);
  // clamped at m_p: gcd 24 has v_2 = 3 but Q only carries 2^2
  IntMat c(2, 2);
  c << 24, 0, 0, 24;
  CHECK(exact_divisor(c, Q) == 12);
}

TEST_CASE("group order matches brute-force enumeration") {
  CHECK(group_order(2, Modulus(2)) == 6);
  CHECK(group_order(2, Modulus(3)) == 24);
  CHECK(group_order(2, Modulus(9)) == 648);
  for (u64 q : {2ull, 3ull, 4ull, 5ull, 6ull, 9ull})
    CHECK(group_order(2, Modulus(q)) == Int(sl_order_bruteforce(2, q)));
  for (u64 q : {2ull, 3ull})
    CHECK(group_order(3, Modulus(q)) == Int(sl_order_bruteforce(3, q)));
}

TEST_CASE("group order is multiplicative over coprime moduli") {
  for (auto [a, b] : std::vector<std::pair<u64, u64>>{{3, 5}, {4, 9}, {7, 8}})
    CHECK(group_order(2, Modulus(a * b)) ==
          group_order(2, Modulus(a)) * group_order(2, Modulus(b)));
}

TEST_CASE("modular helpers") {
  CHECK(invmod(3, 7) == 5);
  CHECK_THROWS_AS(invmod(6, 9), NotUnimodular);
  CHECK(valuation(24, 2) == 3);
  CHECK(valuation(Int(486), 3) == 5);
  CHECK(powmod(2, 10, 1000) == 24);
  CHECK(is_prime(9007199254740881ull));
  CHECK_FALSE(is_prime(9007199254740991ull));
}
