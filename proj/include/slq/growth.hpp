#pragma once

#include <boost/dynamic_bitset.hpp>

#include "slq/group.hpp"

namespace slq {

/// Subset of a GroupTable as a bitset over element indices.
struct SubsetHandle {
  const GroupTable* table = nullptr;
  boost::dynamic_bitset<> bits;

  u64 size() const { return bits.count(); }
  bool contains(u32 i) const { return bits.test(i); }
};

SubsetHandle subset_empty(const GroupTable& t);
SubsetHandle subset_full(const GroupTable& t);
SubsetHandle subset_of(const GroupTable& t, const std::vector<u32>& indices);
/// Seeded uniform sample of the given size, without replacement.
SubsetHandle subset_random(const GroupTable& t, u64 size, Rng& rng);

std::vector<u32> subset_indices(const SubsetHandle& a);

bool subset_symmetric(const SubsetHandle& a);
SubsetHandle subset_inverse(const SubsetHandle& a);

/// A.B = {gh : g in A, h in B}.
SubsetHandle product_set(const SubsetHandle& a, const SubsetHandle& b);

/// Realized tripling exponent log|A.A.A| / log|A| - 1; zero exactly for
/// subgroups. Requires |A| >= 2.
double tripling_exponent(const SubsetHandle& a);

struct IterationBound {
  Int lhs;       // |prod_l A|
  Rational rhs;  // (|AAA|/|A|)^(l-2) * |A|
  bool ok;       // lhs <= rhs, compared exactly
};

/// |prod_l A| <= (|A.A.A|/|A|)^(l-2) |A| for symmetric A containing 1,
/// l >= 3; both sides exact.
IterationBound iteration_bound_check(const SubsetHandle& a, int l);

struct GowersReport {
  bool covers = false;
  bool threshold_met = false;
  Int lhs;  // k * |B1| * |B2| * |B3|
  Int rhs;  // |G|^3
};

/// Quasirandom covering: with k a lower bound for the minimal nontrivial
/// representation dimension, |B1||B2||B3| >= |G|^3 / k forces
/// B1.B2.B3 = G. A met threshold without covering contradicts the theorem
/// and aborts by throwing CoveringViolation.
GowersReport gowers_cover_check(const SubsetHandle& b1, const SubsetHandle& b2,
                                const SubsetHandle& b3, const Int& k);

/// Minimal-dimension lower bound used by default: (p-1)/2, valid for
/// SL_2(F_p) and, by restriction to an SL_2 subgroup, any SL_d(F_p).
Int gowers_rep_dim_lower(u64 p);

}  // namespace slq
