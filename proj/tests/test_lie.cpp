#include <doctest.h>

#include <set>

#include "slq/group.hpp"
#include "slq/lie.hpp"
#include "slq/suite.hpp"

using namespace slq;

namespace {

LieVec random_vec(int d, const Modulus& q, Rng& rng) {
  std::vector<u64> c(d * d - 1);
  for (auto& x : c) x = rng.uniform(q.q());
  return lie_from_coords(d, q, c);
}

}  // namespace

TEST_CASE("bracket basics") {
  Modulus seven(7);
  LieVec e12 = basis_offdiag(2, seven, 0, 1);
  LieVec e21 = basis_offdiag(2, seven, 1, 0);
  CHECK(bracket(e12, e21) == basis_diag(2, seven, 0));
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    LieVec u = random_vec(2, seven, rng);
    CHECK(bracket(u, u).is_zero());
  }
}

TEST_CASE("Jacobi identity on random triples mod 7") {
  Modulus seven(7);
  Rng rng(5);
  for (int t = 0; t < 1000; ++t) {
    LieVec u = random_vec(2, seven, rng);
    LieVec v = random_vec(2, seven, rng);
    LieVec w = random_vec(2, seven, rng);
    LieVec jac = lie_add(lie_add(bracket(bracket(u, v), w),
                                 bracket(bracket(v, w), u)),
                         bracket(bracket(w, u), v));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("psi on integer lifts") {
  IntMat x = int_identity(2);
  CHECK(psi(CongruenceElement(x, 3), 9).is_zero());
  x(0, 1) = 3;  // 1 + 3*E12
  LieVec img = psi(CongruenceElement(x, 3), 9);
  CHECK(img == basis_offdiag(2, Modulus(3), 0, 1));
  CHECK_THROWS_AS(psi(CongruenceElement(int_identity(2), 3), 27), BadLevels);
  IntMat bad = int_identity(2);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(CongruenceElement(bad, 3), NotInKernel);
}

TEST_CASE("psi is a bijection on congruence quotients") {
  // oracle: the kernel coset extracted from the enumerated group table
  for (auto [q1, q2] : std::vector<std::pair<u64, u64>>{{2, 4}, {3, 9}, {4, 16}, {5, 25}}) {
    GroupTable table(elementary_set(), Modulus(q2));
    std::vector<u32> kernel = kernel_coset(table, q1);
    const u64 qr = q2 / q1;
    const u64 expected = qr * qr * qr;  // |sl_2(Z/qr)|
    REQUIRE(kernel.size() == expected);
    std::set<std::vector<u64>> images;
    for (u32 idx : kernel) {
      LieVec img = psi_mod(table.element(idx), q1);
      images.insert(lie_coords(img));
    }
    CHECK(images.size() == expected);  // distinct and exhaustive
  }
}

TEST_CASE("coset representatives invert psi") {
  for (auto [q1, q2] : std::vector<std::pair<u64, u64>>{{2, 4}, {3, 9}, {5, 25}}) {
    Modulus target(q2);
    for (const LieVec& w : all_lie_vecs(2, Modulus(q2 / q1))) {
      ModMat rep = coset_rep(w, q1, target);
      CHECK(mod_det(rep) == 1);
      CHECK(psi_mod(rep, q1) == w);
    }
  }
}

TEST_CASE("psi sum identity, exhaustive at (3,9)") {
  std::vector<ModMat> cosets = congruence_cosets(2, 3, 9, Modulus(9));
  REQUIRE(cosets.size() == 27);
  int checked = 0;
  for (const ModMat& x : cosets)
    for (const ModMat& y : cosets) {
      CHECK(psi_sum_identity(x, y, 3));
      ++checked;
    }
  CHECK(checked == 729);
}

TEST_CASE("psi bracket identity against an exact integer commutator") {
  // x = 1 + 3 E12, y = 1 + 3 E21: the commutator word evaluates over Z
  IntMat x = int_identity(2), y = int_identity(2);
  x(0, 1) = 3;
  y(1, 0) = 3;
  IntMat comm = int_mul(int_mul(x, y), int_mul(int_inverse(x), int_inverse(y)));
  LieVec lhs = psi(CongruenceElement(comm, 9), 27);
  Modulus three(3);
  LieVec rhs = bracket(basis_offdiag(2, three, 0, 1), basis_offdiag(2, three, 1, 0));
  CHECK(lhs == rhs);

  // the residue-class route agrees
  Modulus m27(27);
  CHECK(psi_bracket_identity(project(x, m27), project(y, m27), 3, 3, 3));
}

TEST_CASE("conjugation action") {
  Modulus five(5);
  LieVec e12 = basis_offdiag(2, five, 0, 1);
  CHECK(conj_action(mod_identity(2, five), e12) == e12);
  ResidueMat de(2, 2);
  de << 2, 0, 0, 3;  // diag(2, 2^-1) mod 5
  ModMat g(five, de);
  CHECK(conj_action(g, e12) == lie_scale(4, e12));  // lambda^2 = 4

  // exhaustive orbit under SL_2(Z/5): trace stays 0, content stays a unit
  GroupTable table(elementary_set(), five);
  REQUIRE(is_full(table, 2));
  for (u32 i = 0; i < table.size(); ++i) {
    LieVec v = conj_action(table.element(i), e12);
    CHECK(mod_entry_gcd(v.as_mat()) % 5 != 0);
  }
}

TEST_CASE("conjugation is a Lie algebra automorphism") {
  Modulus seven(7);
  GroupTable table(sanov_set(), seven);
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    LieVec u = random_vec(2, seven, rng);
    LieVec v = random_vec(2, seven, rng);
    ModMat g = table.element(static_cast<u32>(rng.uniform(table.size())));
    CHECK(conj_action(g, bracket(u, v)) ==
          bracket(conj_action(g, u), conj_action(g, v)));
  }
}

TEST_CASE("coordinates round-trip and the basis spans") {
  Modulus three(3);
  for (const LieVec& v : all_lie_vecs(2, three))
    CHECK(lie_from_coords(2, three, lie_coords(v)) == v);
  Modulus five(5);
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    LieVec v = random_vec(3, five, rng);
    CHECK(lie_from_coords(3, five, lie_coords(v)) == v);
  }
  CHECK(sl_basis(3, five).size() == 8);
}

TEST_CASE("lie vec rejects nonzero trace") {
  ResidueMat e(2, 2);
  e << 1, 0, 0, 1;
  CHECK_THROWS_AS(LieVec(Modulus(5), e), Error);
}
