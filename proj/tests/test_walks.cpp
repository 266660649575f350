#include <doctest.h>

#include "slq/suite.hpp"
#include "slq/walks.hpp"

using namespace slq;

TEST_CASE("convolution of point masses") {
  GroupTable table(sanov_set(), Modulus(5));
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    u32 i = static_cast<u32>(rng.uniform(table.size()));
    u32 j = static_cast<u32>(rng.uniform(table.size()));
    Measure conv = convolve(delta_measure(table, i), delta_measure(table, j));
    CHECK(conv.mass[table.mult(i, j)] == 1);
    CHECK(conv.is_probability());
  }
}

TEST_CASE("uniform absorbs convolution") {
  GroupTable table(sanov_set(), Modulus(3));
  Measure uniform = uniform_measure(table);
  Measure nu = walk_distribution(table, 3);
  Measure conv = convolve(uniform, nu);
  for (u32 i = 0; i < table.size(); ++i) CHECK(conv.mass[i] == uniform.mass[i]);
}

TEST_CASE("two-step return mass counts inverse pairs") {
  GroupTable table(sanov_set(), Modulus(5));
  Measure chi = generator_measure(table);
  Measure two = convolve(chi, chi);
  // (chi * chi)(1) = #{(s, s') : s s' = 1} / |S|^2 = 4/16 for the Sanov set
  CHECK(two.mass[0] == Rational(4, 16));
}

TEST_CASE("reverse is an involution and fixes symmetric walks") {
  GroupTable table(sanov_set(), Modulus(7));
  CHECK(reverse(delta_measure(table, 0)).mass[0] == 1);
  Measure walk = walk_distribution(table, 3);
  Measure rev = reverse(walk);
  for (u32 i = 0; i < table.size(); ++i) {
    CHECK(rev.mass[i] == walk.mass[i]);  // chi^(3) is reverse-invariant
    CHECK(walk.mass[table.inverse(i)] == walk.mass[i]);
  }
  Rng rng(2);
  Measure random{&table, std::vector<Rational>(table.size(), Rational(0))};
  for (int t = 0; t < 10; ++t)
    random.mass[rng.uniform(table.size())] += Rational(1, 10);
  Measure twice = reverse(reverse(random));
  for (u32 i = 0; i < table.size(); ++i) CHECK(twice.mass[i] == random.mass[i]);
}

TEST_CASE("walk distribution basics") {
  GroupTable table(sanov_set(), Modulus(11));
  Measure zero = walk_distribution(table, 0);
  CHECK(zero.mass[0] == 1);
  Measure one = walk_distribution(table, 1);
  Measure gen = generator_measure(table);
  for (u32 i = 0; i < table.size(); ++i) CHECK(one.mass[i] == gen.mass[i]);

  // norms are non-increasing in l
  Rational prev = l2_norm_sq(zero);
  for (int l = 1; l <= 12; ++l) {
    Rational cur = l2_norm_sq(walk_distribution(table, l));
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("walk splits as convolution of shorter walks") {
  GroupTable table(sanov_set(), Modulus(5));
  Measure left = walk_distribution(table, 2);
  Measure right = walk_distribution(table, 3);
  Measure joined = convolve(left, right);
  Measure direct = walk_distribution(table, 5);
  for (u32 i = 0; i < table.size(); ++i) CHECK(joined.mass[i] == direct.mass[i]);
}

TEST_CASE("convolution contracts the l2 norm") {
  GroupTable table(sanov_set(), Modulus(5));
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    Measure mu{&table, std::vector<Rational>(table.size(), Rational(0))};
    Measure nu{&table, std::vector<Rational>(table.size(), Rational(0))};
    for (int s = 0; s < 8; ++s) {
      mu.mass[rng.uniform(table.size())] += Rational(1, 8);
      nu.mass[rng.uniform(table.size())] += Rational(1, 8);
    }
    CHECK(l2_norm_sq(convolve(mu, nu)) <= l2_norm_sq(nu));
  }
}

TEST_CASE("free group return counts by the tree recursion") {
  CHECK(free_group_return_count(4, 0) == 1);
  CHECK(free_group_return_count(4, 1) == 4);
  CHECK(free_group_return_count(4, 2) == 28);
  CHECK(free_group_return_count(4, 3) == 232);
}

TEST_CASE("kesten check") {
  GeneratorSet S = sanov_set();
  KestenReport l0_zero = kesten_check(S, 1000, 0);
  CHECK(l0_zero.return_mass == 1);
  CHECK(l0_zero.bound == 1);
  CHECK(l0_zero.ok);

  KestenReport one = kesten_check(S, 101, 1);
  CHECK(one.bound == Rational(12, 16));
  CHECK(one.return_mass == Rational(4, 16));
  CHECK(one.injective);
  CHECK(one.ok);

  Int b3 = word_entry_bound(S, 6);
  KestenReport three = kesten_check(S, 2 * b3.get_ui() + 1, 3);
  CHECK(three.injective);
  CHECK(three.return_mass == Rational(232, 4096));
  CHECK(three.return_mass == three.tree_mass);
  CHECK(three.ok);

  // a tiny modulus breaks injectivity; the report is vacuous, not wrong
  KestenReport tiny = kesten_check(S, 3, 2);
  CHECK_FALSE(tiny.injective);
  CHECK(tiny.vacuous);
}

TEST_CASE("flattening profile") {
  GroupTable table(sanov_set(), Modulus(5));
  std::vector<FlatteningRow> rows = flattening_profile(table, 3);
  REQUIRE(rows.size() == 3);
  Rational floor(1, table.size());  // |G|^-1 lower bound for the squared norm
  for (const FlatteningRow& r : rows) {
    CHECK(r.norm_2l_sq >= floor);
    CHECK(r.norm_4l_sq >= floor);
    CHECK(r.norm_4l_sq <= r.norm_2l_sq);
    CHECK(r.delta >= 0.0);
  }

  // stationary walk reports a zero exponent
  IntMat id = int_identity(2);
  GroupTable trivial(GeneratorSet::make({id}, true), Modulus(7));
  std::vector<FlatteningRow> flat = flattening_profile(trivial, 2);
  for (const FlatteningRow& r : flat) CHECK(r.delta == 0.0);
}

TEST_CASE("mass conservation everywhere") {
  GroupTable table(sanov_set(), Modulus(7));
  Measure walk = walk_distribution(table, 6);
  CHECK(walk.is_probability());
  CHECK(convolve(walk, walk).is_probability());
  CHECK(reverse(walk).is_probability());
}
