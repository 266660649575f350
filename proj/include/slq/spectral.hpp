#pragma once

#include <Eigen/Dense>

#include <string>

#include "slq/group.hpp"

namespace slq {

/// A regular (multi)graph given as a vertex count and a list of
/// permutations: vertex x is adjacent to pi_s(x) for every s. A GroupTable
/// yields one through its left actions; the generic entry point accepts any
/// permutation family (cycles, complete graphs, ...). The convolution
/// operator T averages mu over the permutation images; it is self-adjoint
/// exactly when the permutation multiset is closed under inverse.
struct ActionGraph {
  u32 n = 0;
  std::vector<std::vector<u32>> acts;

  static ActionGraph from_table(const GroupTable& t);
  static ActionGraph from_permutations(u32 n, std::vector<std::vector<u32>> perms);

  int degree() const { return static_cast<int>(acts.size()); }
  void validate() const;          // each action must be a permutation
  bool is_symmetric() const;      // multiset closed under inverse
  bool is_bipartite() const;      // self-loops and odd cycles both disqualify
};

/// (T mu)(x) = (1/|S|) sum_s mu(s^-1 x), evaluated through the action arrays.
Eigen::VectorXd apply_T(const ActionGraph& g, const Eigen::VectorXd& mu);
std::vector<Rational> apply_T_exact(const ActionGraph& g,
                                    const std::vector<Rational>& mu);

struct SpectralReport {
  u64 q = 0;
  u64 group_order = 0;
  int degree = 0;
  double lambda2 = 0.0;
  u64 iterations = 0;
  double residual = 0.0;
  bool bipartite = false;
};

struct Lambda2Options {
  double tol = 1e-10;
  u64 max_iterations = 1'000'000;
  u64 seed = 0;
};

/// Largest eigenvalue of T on the orthogonal complement of the constants
/// (and of the two-coloring vector when the graph is bipartite), by power
/// iteration on (T+1)/2 with explicit deflation. Deterministic given the
/// seed. Throws NoConvergence with the best estimate on iteration blowup.
SpectralReport lambda2(const ActionGraph& g, const Lambda2Options& opt = {});

constexpr u32 kDenseSpectrumCap = 3000;

/// Full spectrum of T, ascending, via dense symmetric eigendecomposition;
/// the slow-but-sure oracle for everything spectral.
Eigen::VectorXd dense_spectrum(const ActionGraph& g,
                               u32 cap = kDenseSpectrumCap);

struct TraceIdentity {
  Rational lhs;  // Tr(T^{2l}), summed over the delta basis
  Rational rhs;  // |G| * ||pi_q[chi_S^(l)]||_2^2
  bool equal;
};

/// Tr(T^{2l}) = |G| * ||chi_S^(l)||_2^2, both sides exact rationals
/// computed along different routes.
TraceIdentity trace_identity_check(const GroupTable& table, int l);

constexpr u32 kExhaustiveExpansionCap = 24;

/// Exact edge expansion c(G) = min over nonempty X, |X| <= |V|/2, of
/// |boundary X| / |X|, boundary edges counted with generator multiplicity
/// (self-loops contribute none). Exhaustive over subsets; capped.
Rational expansion_exact(const ActionGraph& g,
                         u32 cap = kExhaustiveExpansionCap);

/// Discrete Cheeger sandwich (k(1-lambda2)/2, k*sqrt(2(1-lambda2))).
std::pair<double, double> cheeger_bounds(const SpectralReport& report);

struct InclusionReport {
  bool ok = false;
  /// dense-dense mode: largest distance from a T_q1 eigenvalue to the
  /// T_q2 spectrum; certificate mode: largest lifted-eigenvector residual
  double max_defect = 0.0;
  /// "dense" or "certificate"
  std::string method;
};

/// Checks that every eigenvalue of T_{q1} is within tol of an eigenvalue of
/// T_{q2} (q1 | q2). Uses dense spectra on both sides when both groups fit
/// the cap; otherwise certifies via exact eigenvector lifts along the
/// projection and the symmetric residual bound.
InclusionReport spectrum_inclusion_check(const GeneratorSet& S, u64 q1,
                                         u64 q2, double tol,
                                         u32 dense_cap = kDenseSpectrumCap);

}  // namespace slq
