#pragma once

#include <vector>

#include "slq/group.hpp"

namespace slq {

/// Exact probability measure on a GroupTable: nonnegative rationals summing
/// to 1. Immutable by convention; every operation returns a fresh measure.
struct Measure {
  const GroupTable* table = nullptr;
  std::vector<Rational> mass;

  Rational total() const;
  bool is_probability() const;
};

Measure delta_measure(const GroupTable& t, u32 index);
Measure uniform_measure(const GroupTable& t);
/// chi_{pi_q(S)}: each generator slot contributes 1/|S|, coinciding images
/// merge their mass.
Measure generator_measure(const GroupTable& t);

/// (mu * nu)(g) = sum_h mu(g h^-1) nu(h).
Measure convolve(const Measure& mu, const Measure& nu);

/// mu~(g) = mu(g^-1).
Measure reverse(const Measure& mu);

/// chi_S^(l) pushed to the group table; l = 0 gives delta_identity.
Measure walk_distribution(const GroupTable& t, int l);

Rational l2_norm_sq(const Measure& mu);
double l2_norm(const Measure& mu);

/// Number of length-2n words over a free symmetric alphabet of size k that
/// reduce to the identity, via the first-return convolution recursion
/// W_{2n} = sum_t F_{2t} W_{2n-2t}; F is counted by walking the distance
/// chain of the k-regular tree. Independent of the group-table pipeline.
Int free_group_return_count(int k, int n);

struct KestenReport {
  Rational return_mass;  // pi_q[chi_S^(2 l0)](1)
  Rational bound;        // ((4|S|-4)/|S|^2)^(l0)
  Rational tree_mass;    // free-group oracle W_{2 l0} / |S|^(2 l0)
  Int entry_bound;       // max |entry| over words of length 2 l0
  bool injective;        // entry_bound < q/2, certifying injectivity
  bool ok;               // bound and oracle both hold; vacuous when not injective
  bool vacuous;
};

/// Kesten return-probability check for a free symmetric generating set.
KestenReport kesten_check(const GeneratorSet& S, u64 q, int l0);

struct FlatteningRow {
  int l;
  Rational norm_2l_sq;  // ||chi_S^(2l)||_2^2
  Rational norm_4l_sq;
  double delta;         // realized flattening exponent
};

/// Exact l2 norms of chi_S^(2l) and chi_S^(4l) and the realized exponent
/// delta_l = log||chi^(4l)|| / log||chi^(2l)|| - 1 for l = 1..l_max.
std::vector<FlatteningRow> flattening_profile(const GroupTable& t, int l_max);

}  // namespace slq
