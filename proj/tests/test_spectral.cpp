#include <doctest.h>

#include <cmath>
#include <numbers>

#include "slq/spectral.hpp"
#include "slq/suite.hpp"
#include "slq/walks.hpp"

using namespace slq;

namespace {

ActionGraph cycle_graph(u32 n) {
  std::vector<u32> fwd(n), bwd(n);
  for (u32 i = 0; i < n; ++i) {
    fwd[i] = (i + 1) % n;
    bwd[i] = (i + n - 1) % n;
  }
  return ActionGraph::from_permutations(n, {fwd, bwd});
}

ActionGraph complete_graph(u32 n) {
  std::vector<std::vector<u32>> shifts;
  for (u32 s = 1; s < n; ++s) {
    std::vector<u32> perm(n);
    for (u32 i = 0; i < n; ++i) perm[i] = (i + s) % n;
    shifts.push_back(std::move(perm));
  }
  return ActionGraph::from_permutations(n, std::move(shifts));
}

}  // namespace

TEST_CASE("cycle and complete graph eigenvalues") {
  SpectralReport four = lambda2(cycle_graph(4));
  CHECK(four.bipartite);
  CHECK(std::abs(four.lambda2 - 0.0) < 1e-9);

  SpectralReport k6 = lambda2(complete_graph(6));
  CHECK_FALSE(k6.bipartite);
  CHECK(std::abs(k6.lambda2 - (-0.2)) < 1e-9);

  Eigen::VectorXd spec = dense_spectrum(cycle_graph(6));
  for (long i = 0; i < spec.size(); ++i) {
    double best = 1e9;
    for (int k = 0; k < 6; ++k)
      best = std::min(best, std::abs(spec[i] - std::cos(2 * std::numbers::pi * k / 6)));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("lambda2 matches the dense oracle on Sanov mod 5") {
  GroupTable table(sanov_set(), Modulus(5));
  ActionGraph g = ActionGraph::from_table(table);
  SpectralReport rep = lambda2(g);
  Eigen::VectorXd spec = dense_spectrum(g);
  // largest eigenvalue below the trivial one (bipartite would deflate more,
  // but SL_2(F_5) admits no index-2 subgroup)
  REQUIRE_FALSE(rep.bipartite);
  double second = spec[spec.size() - 2];
  CHECK(std::abs(rep.lambda2 - second) < 1e-8);
}

TEST_CASE("T is self-adjoint and fixes constants") {
  GroupTable table(sanov_set(), Modulus(7));
  ActionGraph g = ActionGraph::from_table(table);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    Eigen::VectorXd mu(g.n), nu(g.n);
    for (u32 i = 0; i < g.n; ++i) {
      mu[i] = rng.symmetric_unit();
      nu[i] = rng.symmetric_unit();
    }
    CHECK(std::abs(apply_T(g, mu).dot(nu) - mu.dot(apply_T(g, nu))) < 1e-12);
  }
  std::vector<Rational> uniform(g.n, Rational(1, g.n));
  std::vector<Rational> out = apply_T_exact(g, uniform);
  for (u32 i = 0; i < g.n; ++i) CHECK(out[i] == uniform[i]);
}

TEST_CASE("one step from the identity merges generator multiplicity") {
  GroupTable table(elementary_set(), Modulus(2));
  ActionGraph g = ActionGraph::from_table(table);
  std::vector<Rational> delta(g.n, Rational(0));
  delta[0] = 1;
  std::vector<Rational> step = apply_T_exact(g, delta);
  // four generator slots collapse onto two distinct images mod 2
  int half_count = 0, zero_count = 0;
  for (const Rational& m : step) {
    if (m == Rational(1, 2)) ++half_count;
    if (m == 0) ++zero_count;
  }
  CHECK(half_count == 2);
  CHECK(zero_count == 4);
}

TEST_CASE("trace identity") {
  GroupTable t3(sanov_set(), Modulus(3));
  for (int l : {1, 3}) {
    TraceIdentity t = trace_identity_check(t3, l);
    CHECK(t.equal);
  }
  IntMat id = int_identity(2);
  GroupTable trivial(GeneratorSet::make({id}, true), Modulus(5));
  TraceIdentity t = trace_identity_check(trivial, 2);
  CHECK(t.equal);
  CHECK(t.lhs == 1);
}

TEST_CASE("exact expansion") {
  CHECK_THROWS_AS(expansion_exact(ActionGraph::from_permutations(1, {{0}})),
                  DomainEmpty);
  CHECK(expansion_exact(cycle_graph(4)) == Rational(1));

  // SL_2(F_2) with elementary generators vs an independent subset recount
  GroupTable table(elementary_set(), Modulus(2));
  ActionGraph g = ActionGraph::from_table(table);
  Rational fast = expansion_exact(g);
  Rational best(1000000);
  for (u32 mask = 1; mask < 64; ++mask) {
    u32 size = __builtin_popcount(mask);
    if (size > 3) continue;
    u64 boundary = 0;
    for (u32 i = 0; i < 6; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (const auto& act : g.acts)
        if (!((mask >> act[i]) & 1)) ++boundary;
    }
    Rational ratio(boundary, size);
    if (ratio < best) best = ratio;
  }
  CHECK(fast == best);
  CHECK_THROWS_AS(expansion_exact(complete_graph(30)), TooLarge);
}

TEST_CASE("cheeger bounds") {
  SpectralReport rep;
  rep.degree = 2;
  rep.lambda2 = 1.0;
  auto [l0, u0] = cheeger_bounds(rep);
  CHECK(l0 == 0.0);
  CHECK(u0 == 0.0);
  rep.lambda2 = 0.0;
  auto [l1, u1] = cheeger_bounds(rep);
  CHECK(l1 == doctest::Approx(1.0));
  CHECK(u1 == doctest::Approx(2.0 * std::sqrt(2.0)));

  // 4-cycle: exact expansion c = 1 sits inside the sandwich
  ActionGraph four = cycle_graph(4);
  SpectralReport r4 = lambda2(four);
  auto [lo, hi] = cheeger_bounds(r4);
  const double c = expansion_exact(four).get_d();
  CHECK(c >= lo - 1e-9);
  CHECK(c <= hi + 1e-9);
}

TEST_CASE("spectrum inclusion") {
  InclusionReport same = spectrum_inclusion_check(sanov_set(), 3, 3, 1e-8);
  CHECK(same.ok);
  InclusionReport e26 = spectrum_inclusion_check(elementary_set(), 2, 6, 1e-8);
  CHECK(e26.ok);
  CHECK(e26.method == "dense");

  // the certificate route agrees with the dense route on a case where both run
  InclusionReport dense = spectrum_inclusion_check(sanov_set(), 3, 9, 1e-8);
  InclusionReport cert = spectrum_inclusion_check(sanov_set(), 3, 9, 1e-8, 100);
  CHECK(dense.ok);
  CHECK(cert.ok);
  CHECK(dense.method == "dense");
  CHECK(cert.method == "certificate");
}

TEST_CASE("power iteration: monotone Rayleigh quotient on the shifted operator") {
  GroupTable table(sanov_set(), Modulus(11));
  ActionGraph g = ActionGraph::from_table(table);
  Rng rng(41);
  Eigen::VectorXd v(g.n);
  for (u32 i = 0; i < g.n; ++i) v[i] = rng.symmetric_unit();
  Eigen::VectorXd ones = Eigen::VectorXd::Constant(g.n, 1.0 / std::sqrt(double(g.n)));
  v -= ones.dot(v) * ones;
  v /= v.norm();
  double prev = -1.0;
  for (int it = 0; it < 60; ++it) {
    Eigen::VectorXd m = 0.5 * (apply_T(g, v) + v);
    m -= ones.dot(m) * ones;
    double rayleigh = v.dot(m);
    CHECK(rayleigh >= prev - 1e-13);
    prev = rayleigh;
    v = m / m.norm();
  }
}

TEST_CASE("no convergence surfaces the best estimate") {
  Lambda2Options opt;
  opt.tol = 1e-16;
  opt.max_iterations = 2;
  try {
    lambda2(cycle_graph(10), opt);
    FAIL("expected NoConvergence");
  } catch (const NoConvergence& e) {
    CHECK(e.best_estimate <= 1.0);
    CHECK(e.best_estimate >= -1.0);
  }
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(ActionGraph::from_permutations(3, {{0, 0, 1}}), Mismatch);
  std::vector<u32> fwd{1, 2, 0};
  CHECK_FALSE(ActionGraph::from_permutations(3, {fwd}).is_symmetric());
  CHECK_THROWS_AS(lambda2(ActionGraph::from_permutations(3, {fwd})), Mismatch);
}
