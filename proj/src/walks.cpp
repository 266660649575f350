#include "slq/walks.hpp"

#include <cmath>

namespace slq {

Rational Measure::total() const {
  Rational t(0);
  for (const Rational& m : mass) t += m;
  return t;
}

bool Measure::is_probability() const {
  for (const Rational& m : mass)
    if (m < 0) return false;
  return total() == 1;
}

Measure delta_measure(const GroupTable& t, u32 index) {
  Measure mu{&t, std::vector<Rational>(t.size(), Rational(0))};
  mu.mass[index] = 1;
  return mu;
}

Measure uniform_measure(const GroupTable& t) {
  Measure mu{&t, std::vector<Rational>(t.size(), Rational(1, t.size()))};
  return mu;
}

Measure generator_measure(const GroupTable& t) {
  Measure mu{&t, std::vector<Rational>(t.size(), Rational(0))};
  Rational w(1, static_cast<unsigned long>(t.degree()));
  for (int s = 0; s < t.degree(); ++s)
    mu.mass[t.index_of(t.generators()[s])] += w;
  return mu;
}

Measure convolve(const Measure& mu, const Measure& nu) {
  if (mu.table != nu.table) throw Mismatch("convolve: measures on different tables");
  const GroupTable& t = *mu.table;
  Measure out{&t, std::vector<Rational>(t.size(), Rational(0))};
  for (u32 j = 0; j < t.size(); ++j) {
    if (nu.mass[j] == 0) continue;
    for (u32 i = 0; i < t.size(); ++i) {
      if (mu.mass[i] == 0) continue;
      out.mass[t.mult(i, j)] += mu.mass[i] * nu.mass[j];
    }
  }
  return out;
}

Measure reverse(const Measure& mu) {
  const GroupTable& t = *mu.table;
  Measure out{&t, std::vector<Rational>(t.size(), Rational(0))};
  for (u32 i = 0; i < t.size(); ++i) out.mass[t.inverse(i)] = mu.mass[i];
  return out;
}

Measure walk_distribution(const GroupTable& t, int l) {
  if (l < 0) throw ConfigError("walk_distribution: negative length");
  const u32 n = t.size();
  const int k = t.degree();
  // numerators over the common denominator k^l
  std::vector<Int> cur(n, Int(0)), next(n);
  cur[0] = 1;
  for (int step = 0; step < l; ++step) {
    std::fill(next.begin(), next.end(), Int(0));
    for (int s = 0; s < k; ++s) {
      const auto& act = t.left_action(s);
      for (u32 i = 0; i < n; ++i) next[i] += cur[act[i]];
    }
    std::swap(cur, next);
  }
  Int den, kk(static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), kk.get_mpz_t(), static_cast<unsigned long>(l));
  Measure out{&t, std::vector<Rational>(n)};
  for (u32 i = 0; i < n; ++i) {
    out.mass[i] = Rational(cur[i], den);
    out.mass[i].canonicalize();
  }
  return out;
}

Rational l2_norm_sq(const Measure& mu) {
  Rational acc(0);
  for (const Rational& m : mu.mass) acc += m * m;
  return acc;
}

double l2_norm(const Measure& mu) {
  return std::sqrt(l2_norm_sq(mu).get_d());
}

Int free_group_return_count(int k, int n) {
  if (k < 2) throw ConfigError("free_group_return_count: degree must be >= 2");
  if (n == 0) return 1;
  // P[m][j] = walks of length m on the distance chain from 1 to j staying >= 1
  // F_{2t} = k * P[2t-2][1]; W by the first-return recursion.
  const int len = 2 * n;
  std::vector<std::vector<Int>> P(len, std::vector<Int>(len + 2, Int(0)));
  P[0][1] = 1;
  for (int m = 1; m < len; ++m)
    for (int j = 1; j <= m + 1; ++j) {
      Int acc = 0;
      if (j >= 2) acc += P[m - 1][j - 1] * (k - 1);  // step out
      acc += P[m - 1][j + 1];                        // step back
      P[m][j] = acc;
    }
  std::vector<Int> F(n + 1), W(n + 1);
  for (int t = 1; t <= n; ++t) F[t] = Int(k) * P[2 * t - 2][1];
  W[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Int acc = 0;
    for (int t = 1; t <= m; ++t) acc += F[t] * W[m - t];
    W[m] = acc;
  }
  return W[n];
}

KestenReport kesten_check(const GeneratorSet& S, u64 q, int l0) {
  if (l0 < 0) throw ConfigError("kesten_check: negative l0");
  const int k = static_cast<int>(S.gens.size());
  KestenReport rep;

  rep.entry_bound = word_entry_bound(S, 2 * l0);
  rep.injective = (rep.entry_bound * 2 < Int(static_cast<unsigned long>(q)));

  WordDistribution dist = word_distribution(S, 2 * l0);
  Modulus mod(q);
  ModMat id = mod_identity(S.d, mod);
  Int hits = 0;
  for (std::size_t i = 0; i < dist.values.size(); ++i)
    if (project(dist.values[i], mod) == id) hits += dist.counts[i];
  rep.return_mass = Rational(hits, dist.total);
  rep.return_mass.canonicalize();

  Rational base(4 * k - 4, static_cast<unsigned long>(k) * k);
  base.canonicalize();
  rep.bound = 1;
  for (int i = 0; i < l0; ++i) rep.bound *= base;

  rep.tree_mass = Rational(free_group_return_count(k, l0), dist.total);
  rep.tree_mass.canonicalize();

  rep.vacuous = !rep.injective;
  rep.ok = rep.vacuous ||
           (rep.return_mass <= rep.bound && rep.return_mass == rep.tree_mass);
  return rep;
}

std::vector<FlatteningRow> flattening_profile(const GroupTable& t, int l_max) {
  if (l_max < 1) throw ConfigError("flattening_profile: l_max must be >= 1");
  const u32 n = t.size();
  const int k = t.degree();
  std::vector<Int> cur(n, Int(0)), next(n);
  cur[0] = 1;
  // norm_sq[j] = ||chi^(j)||_2^2 for even j up to 4*l_max
  std::vector<Rational> norm_sq(4 * l_max + 1);
  Int den_sq, kk(static_cast<unsigned long>(k));
  for (int j = 0; j <= 4 * l_max; ++j) {
    if (j % 2 == 0) {
      Int acc = 0;
      for (u32 i = 0; i < n; ++i) acc += cur[i] * cur[i];
      mpz_pow_ui(den_sq.get_mpz_t(), kk.get_mpz_t(), static_cast<unsigned long>(2 * j));
      norm_sq[j] = Rational(acc, den_sq);
      norm_sq[j].canonicalize();
    }
    if (j == 4 * l_max) break;
    std::fill(next.begin(), next.end(), Int(0));
    for (int s = 0; s < k; ++s) {
      const auto& act = t.left_action(s);
      for (u32 i = 0; i < n; ++i) next[i] += cur[act[i]];
    }
    std::swap(cur, next);
  }
  std::vector<FlatteningRow> rows;
  for (int l = 1; l <= l_max; ++l) {
    FlatteningRow row;
    row.l = l;
    row.norm_2l_sq = norm_sq[2 * l];
    row.norm_4l_sq = norm_sq[4 * l];
    if (row.norm_2l_sq == row.norm_4l_sq) {
      row.delta = 0.0;  // walk already stationary (or still a point mass)
    } else {
      const double log2l = std::log(row.norm_2l_sq.get_d()) / 2.0;
      const double log4l = std::log(row.norm_4l_sq.get_d()) / 2.0;
      row.delta = log4l / log2l - 1.0;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace slq
