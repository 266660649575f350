#include "slq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "slq/walks.hpp"

namespace slq {

ActionGraph ActionGraph::from_table(const GroupTable& t) {
  ActionGraph g;
  g.n = t.size();
  for (int s = 0; s < t.degree(); ++s) g.acts.push_back(t.left_action(s));
  return g;
}

ActionGraph ActionGraph::from_permutations(u32 n,
                                           std::vector<std::vector<u32>> perms) {
  ActionGraph g;
  g.n = n;
  g.acts = std::move(perms);
  g.validate();
  return g;
}

void ActionGraph::validate() const {
  for (const auto& a : acts) {
    if (a.size() != n) throw Mismatch("ActionGraph: permutation length != n");
    std::vector<bool> seen(n, false);
    for (u32 v : a) {
      if (v >= n || seen[v]) throw Mismatch("ActionGraph: not a permutation");
      seen[v] = true;
    }
  }
}

bool ActionGraph::is_symmetric() const {
  // multiset of permutations closed under inverse
  std::vector<int> used(acts.size(), 0);
  for (std::size_t s = 0; s < acts.size(); ++s) {
    bool found = false;
    for (std::size_t t = 0; t < acts.size(); ++t) {
      if (used[t]) continue;
      bool inv = true;
      for (u32 i = 0; i < n && inv; ++i) inv = (acts[t][acts[s][i]] == i);
      if (inv) {
        used[t] = 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool ActionGraph::is_bipartite() const {
  std::vector<int> color(n, -1);
  std::deque<u32> queue;
  for (u32 root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      u32 v = queue.front();
      queue.pop_front();
      for (const auto& a : acts) {
        u32 w = a[v];
        if (w == v) return false;  // self-loop
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Eigen::VectorXd apply_T(const ActionGraph& g, const Eigen::VectorXd& mu) {
  if (mu.size() != static_cast<long>(g.n))
    throw Mismatch("apply_T: vector length != vertex count");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(g.n);
  for (const auto& a : g.acts)
    for (u32 i = 0; i < g.n; ++i) out[i] += mu[a[i]];
  out /= static_cast<double>(g.degree());
  return out;
}

std::vector<Rational> apply_T_exact(const ActionGraph& g,
                                    const std::vector<Rational>& mu) {
  if (mu.size() != g.n) throw Mismatch("apply_T_exact: vector length != vertex count");
  std::vector<Rational> out(g.n, Rational(0));
  for (const auto& a : g.acts)
    for (u32 i = 0; i < g.n; ++i) out[i] += mu[a[i]];
  Rational k(1, static_cast<unsigned long>(g.degree()));
  for (auto& v : out) v *= k;
  return out;
}

namespace {

void project_out(Eigen::VectorXd& v, const std::vector<Eigen::VectorXd>& dirs) {
  for (const auto& d : dirs) v -= d.dot(v) * d;
}

}  // namespace

SpectralReport lambda2(const ActionGraph& g, const Lambda2Options& opt) {
  g.validate();
  if (!g.is_symmetric())
    throw Mismatch("lambda2: permutation multiset not closed under inverse");
  const u32 n = g.n;
  SpectralReport rep;
  rep.group_order = n;
  rep.degree = g.degree();
  rep.bipartite = g.is_bipartite();

  std::vector<Eigen::VectorXd> deflate;
  deflate.push_back(Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n))));
  if (rep.bipartite) {
    // the two-coloring vector spans the -1 eigenspace component that the
    // expansion statements do not concern
    std::vector<int> color(n, -1);
    std::deque<u32> queue;
    for (u32 root = 0; root < n; ++root) {
      if (color[root] >= 0) continue;
      color[root] = 0;
      queue.push_back(root);
      while (!queue.empty()) {
        u32 v = queue.front();
        queue.pop_front();
        for (const auto& a : g.acts) {
          u32 w = a[v];
          if (color[w] < 0) {
            color[w] = 1 - color[v];
            queue.push_back(w);
          }
        }
      }
    }
    Eigen::VectorXd chi(n);
    for (u32 i = 0; i < n; ++i) chi[i] = color[i] ? -1.0 : 1.0;
    chi /= chi.norm();
    deflate.push_back(chi);
  }
  if (n <= deflate.size())
    throw DomainEmpty("lambda2: no spectrum outside the deflated space");

  Rng rng(opt.seed);
  Eigen::VectorXd v(n);
  for (;;) {
    for (u32 i = 0; i < n; ++i) v[i] = rng.symmetric_unit();
    project_out(v, deflate);
    double norm = v.norm();
    if (norm > 1e-8) {
      v /= norm;
      break;
    }
  }

  double rayleigh = 0.0, residual = 0.0;
  u64 it = 0;
  for (it = 1; it <= opt.max_iterations; ++it) {
    Eigen::VectorXd tv = apply_T(g, v);
    project_out(tv, deflate);
    rayleigh = v.dot(tv);
    residual = (tv - rayleigh * v).norm();
    if (residual <= opt.tol) break;
    // shift to (T+1)/2: spectrum in [0,1], so the iteration converges to the
    // largest signed eigenvalue on the complement
    Eigen::VectorXd next = 0.5 * (tv + v);
    double norm = next.norm();
    if (norm < 1e-300) {
      // complement spectrum concentrated at -1; the limit is degenerate
      rayleigh = -1.0;
      residual = 0.0;
      break;
    }
    v = next / norm;
  }
  if (it > opt.max_iterations)
    throw NoConvergence("lambda2: power iteration did not converge", rayleigh);

  rep.q = 0;
  rep.lambda2 = rayleigh;
  rep.iterations = it;
  rep.residual = residual;
  return rep;
}

Eigen::VectorXd dense_spectrum(const ActionGraph& g, u32 cap) {
  g.validate();
  if (g.n > cap) throw TooLarge("dense_spectrum: vertex count above dense cap");
  const u32 n = g.n;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  const double w = 1.0 / g.degree();
  for (const auto& a : g.acts)
    for (u32 i = 0; i < n; ++i) T(i, a[i]) += w;
  if (!T.isApprox(T.transpose(), 0.0))
    throw Mismatch("dense_spectrum: operator not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(T, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

TraceIdentity trace_identity_check(const GroupTable& table, int l) {
  if (l < 1) throw ConfigError("trace_identity_check: l must be >= 1");
  const u32 n = table.size();
  const int k = table.degree();

  // lhs: Tr(T^{2l}) summed over the delta basis, numerators over k^{2l}
  std::vector<Int> cur(n), next(n);
  Int lhs_num = 0;
  for (u32 g = 0; g < n; ++g) {
    std::fill(cur.begin(), cur.end(), Int(0));
    cur[g] = 1;
    for (int step = 0; step < 2 * l; ++step) {
      std::fill(next.begin(), next.end(), Int(0));
      for (int s = 0; s < k; ++s) {
        const auto& act = table.left_action(s);
        for (u32 i = 0; i < n; ++i) next[i] += cur[act[i]];
      }
      std::swap(cur, next);
    }
    lhs_num += cur[g];
  }
  Int kpow;
  Int kk(static_cast<unsigned long>(k));
  mpz_pow_ui(kpow.get_mpz_t(), kk.get_mpz_t(), static_cast<unsigned long>(2 * l));
  TraceIdentity out{Rational(lhs_num) / Rational(kpow), Rational(0), false};

  // rhs: |G| * ||chi_S^(l)||_2^2 through the measure pipeline
  Measure walk = walk_distribution(table, l);
  out.rhs = Rational(static_cast<unsigned long>(n)) * l2_norm_sq(walk);
  out.equal = (out.lhs == out.rhs);
  return out;
}

Rational expansion_exact(const ActionGraph& g, u32 cap) {
  g.validate();
  if (g.n <= 1)
    throw DomainEmpty("expansion_exact: no admissible vertex subset");
  if (g.n > cap) throw TooLarge("expansion_exact: use cheeger_bounds instead");
  const u32 n = g.n;
  const u32 half = n / 2;
  u64 best_boundary = 0, best_size = 0;  // fraction best_boundary/best_size
  bool have = false;
  const u64 full = (n >= 64) ? ~0ull : ((1ull << n) - 1);
  for (u64 mask = 1; mask <= full; ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size == 0 || static_cast<u32>(size) > half) continue;
    u64 boundary = 0;
    u64 m = mask;
    while (m) {
      const u32 i = static_cast<u32>(__builtin_ctzll(m));
      m &= m - 1;
      for (const auto& a : g.acts)
        if (!((mask >> a[i]) & 1)) ++boundary;
    }
    if (!have || boundary * best_size < best_boundary * static_cast<u64>(size)) {
      best_boundary = boundary;
      best_size = static_cast<u64>(size);
      have = true;
    }
  }
  if (!have) throw DomainEmpty("expansion_exact: no admissible vertex subset");
  return Rational(best_boundary, best_size);
}

std::pair<double, double> cheeger_bounds(const SpectralReport& report) {
  const double gap = std::max(0.0, 1.0 - report.lambda2);
  const double k = report.degree;
  return {k * gap / 2.0, k * std::sqrt(2.0 * gap)};
}

InclusionReport spectrum_inclusion_check(const GeneratorSet& S, u64 q1, u64 q2,
                                         double tol, u32 dense_cap) {
  if (q2 % q1 != 0) throw NotADivisor("spectrum_inclusion_check: q1 must divide q2");
  GroupTable t1(S, Modulus(q1));
  GroupTable t2(S, Modulus(q2));
  ActionGraph g1 = ActionGraph::from_table(t1);
  ActionGraph g2 = ActionGraph::from_table(t2);
  InclusionReport rep;

  if (t2.size() <= dense_cap) {
    Eigen::VectorXd s1 = dense_spectrum(g1, dense_cap);
    Eigen::VectorXd s2 = dense_spectrum(g2, dense_cap);
    double worst = 0.0;
    for (long i = 0; i < s1.size(); ++i) {
      // binary search in the sorted q2 spectrum
      const double x = s1[i];
      long lo = std::lower_bound(s2.data(), s2.data() + s2.size(), x) - s2.data();
      double dist = std::numeric_limits<double>::infinity();
      if (lo < s2.size()) dist = std::min(dist, std::abs(s2[lo] - x));
      if (lo > 0) dist = std::min(dist, std::abs(s2[lo - 1] - x));
      worst = std::max(worst, dist);
    }
    rep.max_defect = worst;
    rep.method = "dense";
    rep.ok = worst <= tol;
    return rep;
  }

  // Certificate mode: eigenvectors of T_{q1} lift exactly along the
  // projection pi: G mod q2 -> G mod q1 (the walk projects), so the lifted
  // residual bounds the distance to the T_{q2} spectrum from above.
  if (t1.size() > dense_cap)
    throw TooLarge("spectrum_inclusion_check: q1 group above dense cap");
  Eigen::MatrixXd T1 = Eigen::MatrixXd::Zero(t1.size(), t1.size());
  const double w = 1.0 / g1.degree();
  for (const auto& a : g1.acts)
    for (u32 i = 0; i < g1.n; ++i) T1(i, a[i]) += w;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(T1);
  const Eigen::VectorXd& vals = solver.eigenvalues();
  const Eigen::MatrixXd& vecs = solver.eigenvectors();

  Modulus m1(q1);
  std::vector<u32> down(t2.size());
  for (u32 i = 0; i < t2.size(); ++i)
    down[i] = t1.index_of(mod_reduce(t2.element(i), m1));

  double worst = 0.0;
  Eigen::VectorXd lift(t2.size());
  for (long e = 0; e < vals.size(); ++e) {
    for (u32 i = 0; i < t2.size(); ++i) lift[i] = vecs(down[i], e);
    const double norm = lift.norm();
    Eigen::VectorXd r = apply_T(g2, lift) - vals[e] * lift;
    worst = std::max(worst, r.norm() / norm);
  }
  rep.max_defect = worst;
  rep.method = "certificate";
  rep.ok = worst <= tol;
  return rep;
}

}  // namespace slq
