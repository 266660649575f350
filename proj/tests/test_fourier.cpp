#include <doctest.h>

#include <cmath>

#include "slq/fourier.hpp"
#include "slq/suite.hpp"

using namespace slq;

namespace {

LieVec generic_v0(const Modulus& q) {
  return lie_sub(basis_offdiag(2, q, 0, 1), basis_offdiag(2, q, 1, 0));
}

}  // namespace

TEST_CASE("coordinate index round-trip") {
  Modulus five(5);
  for (u64 idx = 0; idx < 125; ++idx)
    CHECK(coord_index(vec_of_index(2, five, idx)) == idx);
}

TEST_CASE("pushforward basics") {
  Modulus five(5);
  GroupTable table(sanov_set(), five);
  LieVec v0 = generic_v0(five);
  LieDist zero = pushforward(table, 0, v0);
  CHECK(zero.support_size() == 1);
  CHECK(zero.mass_at(v0) == 1);
  LieDist six = pushforward(table, 6, v0);
  CHECK(six.total() == 1);

  // v0 divisible by a prime of q is rejected
  GroupTable t9(sanov_set(), Modulus(9));
  LieVec bad = lie_scale(3, basis_offdiag(2, Modulus(9), 0, 1));
  CHECK_THROWS_AS(pushforward(t9, 2, bad), ZeroInput);
}

TEST_CASE("pushforward support is conjugation-invariant once the walk fills the group") {
  Modulus five(5);
  GroupTable table(sanov_set(), five);
  Measure walk = walk_distribution(table, 6);
  bool full = true;
  for (u32 i = 0; i < table.size(); ++i)
    if (walk.mass[i] == 0) full = false;
  REQUIRE(full);
  LieDist dist = pushforward(table, 6, generic_v0(five));
  for (const ModMat& s : table.generators()) {
    for (const auto& [idx, c] : dist.num) {
      if (c == 0) continue;
      LieVec moved = conj_action(s, vec_of_index(2, five, idx));
      CHECK(dist.num.count(coord_index(moved)) == 1);
    }
  }
}

TEST_CASE("fourier coefficients") {
  Modulus five(5);
  GroupTable table(sanov_set(), five);
  LieDist dist = pushforward(table, 4, generic_v0(five));
  CHECK(std::abs(fourier_coeff(dist, {0, 0, 0}) - Complex(1.0, 0.0)) < 1e-12);

  // uniform distribution: all nontrivial coefficients vanish
  LieDist uniform{five, 2, Int(125), {}};
  for (u64 i = 0; i < 125; ++i) uniform.num[i] = 1;
  CHECK(std::abs(fourier_coeff(uniform, {1, 2, 3})) < 1e-12);
  CHECK(std::abs(fourier_coeff(uniform, {4, 0, 1})) < 1e-12);

  // point masses have unimodular transforms
  LieDist point = lie_delta(2, five, generic_v0(five));
  for (const std::vector<u64>& b :
       std::vector<std::vector<u64>>{{1, 0, 0}, {2, 3, 1}, {4, 4, 4}})
    CHECK(std::abs(std::abs(fourier_coeff(point, b)) - 1.0) < 1e-12);
}

TEST_CASE("dense transform agrees with the direct character sum") {
  Modulus three(3);
  GroupTable table(sanov_set(), three);
  LieDist dist = pushforward(table, 3, generic_v0(three));
  std::vector<Complex> hat = dft_full(to_dense(dist), 3, 3);
  for (u64 b = 0; b < 27; ++b) {
    std::vector<u64> freq{b % 3, (b / 3) % 3, (b / 9) % 3};
    CHECK(std::abs(hat[b] - fourier_coeff(dist, freq)) < 1e-12);
  }
}

TEST_CASE("additive convolution") {
  Modulus five(5);
  LieVec u = generic_v0(five);
  LieVec w = basis_diag(2, five, 0);
  LieDist du = lie_delta(2, five, u);
  LieDist dw = lie_delta(2, five, w);
  LieDist sum = additive_convolve(du, dw);
  CHECK(sum.support_size() == 1);
  CHECK(sum.mass_at(lie_add(u, w)) == 1);

  // convolution theorem on a real distribution
  GroupTable table(sanov_set(), five);
  LieDist dist = pushforward(table, 4, u);
  LieDist square = additive_convolve(dist, dist);
  std::vector<Complex> h1 = dft_full(to_dense(dist), 5, 3);
  std::vector<Complex> h2 = dft_full(to_dense(square), 5, 3);
  for (std::size_t i = 0; i < h1.size(); ++i)
    CHECK(std::abs(h2[i] - h1[i] * h1[i]) < 1e-10);

  // support growth and the Cauchy-Schwarz support bound
  CHECK(square.support_size() >= dist.support_size());
  CHECK(support_bound_holds(dist));
  CHECK(support_bound_holds(square));
  CHECK(square.total() == 1);
}

TEST_CASE("parseval identity") {
  Modulus five(5);
  GroupTable table(sanov_set(), five);
  for (int l : {2, 5}) {
    ParsevalCheck pc = parseval_check(pushforward(table, l, generic_v0(five)));
    CHECK(pc.equal);
  }
}

TEST_CASE("convolution against the reflected distribution squares the maxima") {
  Modulus five(5);
  GroupTable table(sanov_set(), five);
  LieDist dist = pushforward(table, 4, generic_v0(five));
  // reflection v -> -v
  LieDist reflected{five, 2, dist.den, {}};
  for (const auto& [idx, c] : dist.num) {
    LieVec v = vec_of_index(2, five, idx);
    reflected.num[coord_index(lie_neg(v))] += c;
  }
  LieDist sym = additive_convolve(dist, reflected);
  std::vector<Complex> h = dft_full(to_dense(dist), 5, 3);
  std::vector<Complex> hs = dft_full(to_dense(sym), 5, 3);
  double max_h = 0, max_hs = 0;
  for (std::size_t b = 1; b < h.size(); ++b) {
    max_h = std::max(max_h, std::abs(h[b]));
    max_hs = std::max(max_hs, std::abs(hs[b]));
    // the symmetrized transform is |h|^2 pointwise
    CHECK(std::abs(hs[b] - std::norm(h[b])) < 1e-10);
  }
  CHECK(max_hs <= max_h + 1e-12);
}

TEST_CASE("decay profile l=0 is a point mass") {
  Modulus five(5);
  GroupTable table(sanov_set(), five);
  std::vector<DecayRow> rows = decay_profile(table, generic_v0(five), {0});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].max_nontrivial == doctest::Approx(1.0));
  CHECK(rows[0].support == 1);
}

TEST_CASE("convolution power via transform matches the exact route") {
  Modulus three(3);
  GroupTable table(sanov_set(), three);
  LieDist dist = pushforward(table, 2, generic_v0(three));
  LieDist exact = additive_convolve(dist, dist);
  std::vector<double> via_dft = convolution_power_dense(dist, 2);
  std::vector<double> dense_exact = to_dense(exact);
  for (std::size_t i = 0; i < via_dft.size(); ++i)
    CHECK(std::abs(via_dft[i] - dense_exact[i]) < 1e-12);
}
