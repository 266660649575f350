#include <doctest.h>

#include "slq/oracles.hpp"
#include "slq/suite.hpp"

using namespace slq;

TEST_CASE("bracket census at p=3, m=1") {
  BracketCensus census = bracket_census(3, 1);
  // nonzero class k=0: 24 pairs; zero element: 105 pairs
  CHECK(census.count_of({1, 0, 0}) == 24);
  CHECK(census.count_of({0, 1, 2}) == 24);
  CHECK(census.count_of({0, 0, 0}) == 105);
  CHECK(bracket_count_formula(3, 1, 0) == 24);
  CHECK(bracket_count_formula(3, 1, 1) == 105);
  // partition: 105 + 26 * 24 = 729 = 3^6
  Int total = 0;
  for (u32 c : census.counts) total += c;
  CHECK(total == 729);
}

TEST_CASE("count_bracket_pairs ties census to formula") {
  Modulus m9(9);
  LieVec v = sl2_from_coords(m9, {3, 6, 0});  // class k = 1 at p = 3, m = 2
  BracketCount bc = count_bracket_pairs(3, 2, v);
  CHECK(bc.k == 1);
  CHECK(bc.count == bc.formula_value);
  LieVec unit = sl2_from_coords(Modulus(5), {2, 0, 1});
  BracketCount b5 = count_bracket_pairs(5, 1, unit);
  CHECK(b5.k == 0);
  CHECK(b5.count == b5.formula_value);
  CHECK_THROWS_AS(bracket_census(2, 1), UnsupportedCharacteristic);
}

TEST_CASE("solution structure of the bracket equations") {
  // x = (1,0,0), a = 0: dependency holds, y2 and y3 are pinned, y1 free
  SolutionStructure s0 = solution_structure_check(5, 1, {1, 0, 0}, {0, 0, 0});
  CHECK(s0.x_unit);
  CHECK(s0.dependency_holds);
  CHECK(s0.solutions == 5);
  CHECK(s0.consistent);

  // dependency violated: no solutions
  SolutionStructure s1 = solution_structure_check(5, 1, {1, 0, 0}, {1, 0, 0});
  CHECK_FALSE(s1.dependency_holds);
  CHECK(s1.solutions == 0);
  CHECK(s1.consistent);

  // dependency satisfied with a != 0: exactly p solutions
  SolutionStructure s2 = solution_structure_check(5, 1, {1, 0, 0}, {0, 1, 1});
  CHECK(s2.dependency_holds);
  CHECK(s2.solutions == 5);
  CHECK(s2.consistent);

  // seeded sweep: consistency must hold across random instances
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    Sl2Coords x{rng.uniform(5), rng.uniform(5), rng.uniform(5)};
    Sl2Coords a{rng.uniform(5), rng.uniform(5), rng.uniform(5)};
    CHECK(solution_structure_check(5, 1, x, a).consistent);
  }
}

TEST_CASE("span certificate at p=11 pins the lambda witnesses") {
  Modulus p11(11);
  LieVec x = basis_offdiag(2, p11, 0, 1);
  LieVec target = lie_scale(7, basis_diag(2, p11, 0));
  SpanCertificate cert = span_certificate(11, 2, x, target);
  CHECK(verify_certificate(cert));
  // ascending search over triples mod 11 lands on (1,1,4):
  // 1 + 1 + 9 = 0 mod 11 while 1 + 1 + 16 = 7 != 0
  CHECK(cert.lambda_triple == std::array<u64, 3>{1, 1, 4});
  CHECK(cert.length() <= 400);
}

TEST_CASE("span certificate edge cases") {
  Modulus p13(13);
  LieVec x = basis_offdiag(2, p13, 1, 0);
  CHECK(span_certificate(13, 2, x, lie_zero(2, p13)).length() == 0);
  CHECK_THROWS_AS(span_certificate(13, 2, lie_zero(2, p13), x), ZeroInput);
  CHECK_THROWS_AS(span_certificate(7, 2, x, x), SmallPrime);
  CHECK_THROWS_AS(span_certificate(9, 2, x, x), ConfigError);
}

TEST_CASE("span certificate and linear solver agree on random instances") {
  for (auto [d, p] : std::vector<std::pair<int, u64>>{{2, 13}, {3, 13}}) {
    Modulus P(p);
    Rng rng(100 + p + d);
    for (int t = 0; t < 3; ++t) {
      std::vector<u64> xc(d * d - 1), tc(d * d - 1);
      for (auto& c : xc) c = rng.uniform(p);
      for (auto& c : tc) c = rng.uniform(p);
      LieVec x = lie_from_coords(d, P, xc);
      if (x.is_zero()) continue;
      LieVec target = lie_from_coords(d, P, tc);
      SpanCertificate cert = span_certificate(p, d, x, target);
      CHECK(verify_certificate(cert));
      CHECK(cert.length() <= static_cast<std::size_t>(100 * d * d));
      CHECK(span_solve_linear(p, d, x, target));
    }
  }
}

TEST_CASE("canonical section lifts into SL_2(Z/p^2)") {
  const u64 p = 5;
  GroupTable table(elementary_set(), Modulus(p));
  Modulus psq(p * p);
  for (u32 i = 0; i < table.size(); ++i) {
    ModMat lift = section_lift(table.element(i), psq);
    CHECK(mod_det(lift) == 1);
    CHECK(mod_reduce(lift, table.modulus()) == table.element(i));
  }
}

TEST_CASE("section multiplicativity statistic") {
  SectionStat p3 = section_multiplicativity_stat(3);
  CHECK(p3.exhaustive);
  CHECK(p3.total_pairs == 576);
  CHECK(p3.fraction > 0);
  CHECK(p3.fraction < 1);

  // the identity pair is always multiplicative
  GroupTable t3(elementary_set(), Modulus(3));
  Modulus psq(9);
  ModMat psi1 = section_lift(t3.element(0), psq);
  CHECK(mod_mul(psi1, psi1) == psi1);

  // sampled mode is seeded and deterministic
  SectionStat a = section_multiplicativity_stat(5, 500, 42);
  SectionStat b = section_multiplicativity_stat(5, 500, 42);
  CHECK(a.multiplicative_pairs == b.multiplicative_pairs);

  // pair-map invariance only holds when the section commutes with
  // inversion; record the applicable branch instead of asserting blindly
  if (section_commutes_with_inversion(3)) {
    GroupTable table = t3;
    table.mult_cache();
    u64 forward = 0, reflected = 0;
    for (u32 x = 0; x < table.size(); ++x)
      for (u32 y = 0; y < table.size(); ++y) {
        ModMat px = section_lift(table.element(x), psq);
        ModMat py = section_lift(table.element(y), psq);
        if (mod_mul(px, py) == section_lift(table.element(table.mult(x, y)), psq))
          ++forward;
        u32 xi = table.inverse(y), yi = table.inverse(x);
        ModMat pxi = section_lift(table.element(xi), psq);
        ModMat pyi = section_lift(table.element(yi), psq);
        if (mod_mul(pxi, pyi) ==
            section_lift(table.element(table.mult(xi, yi)), psq))
          ++reflected;
      }
    CHECK(forward == reflected);
  } else {
    MESSAGE("canonical section does not commute with inversion; "
            "pair-map invariance test skipped by design");
  }
}

TEST_CASE("dinai hypothesis failure is loud") {
  GroupTable table(elementary_set(), Modulus(27));
  SubsetHandle just_identity = subset_of(table, {0});
  CHECK_THROWS_AS(
      dinai_lift_check(table, 3, 1, 1, 1, just_identity, just_identity, 0, 5),
      BadHypothesis);
}

TEST_CASE("dinai lifting in SL_2(Z/27)") {
  GroupTable table(elementary_set(), Modulus(27));
  std::vector<ModMat> reps = congruence_cosets(2, 3, 9, Modulus(27));
  std::vector<u32> idx;
  for (const ModMat& r : reps) idx.push_back(table.index_of(r));
  SubsetHandle a1 = subset_of(table, idx);
  DinaiReport rep = dinai_lift_check(table, 3, 1, 1, 1, a1, a1, 7, 10);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.covers);
  CHECK(rep.well_defined_ok);
}
