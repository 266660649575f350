#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "slq/matrix.hpp"

namespace slq {

/// Finite generating set S in SL_d(Z). When symmetrized, inverses are
/// appended and exact duplicates removed, so S = S~ as a set; the list
/// order is the BFS order contract.
struct GeneratorSet {
  int d = 0;
  std::vector<IntMat> gens;
  bool symmetrized = false;

  static GeneratorSet make(std::vector<IntMat> gens, bool symmetrize);
};

constexpr u64 kDefaultEnumCap = 5'000'000;

/// pi_q(<S>) as an indexed list of elements with per-generator action
/// permutations: the Cayley graph in implicit adjacency form. Index 0 is
/// the identity; indices are deterministic given the generator order.
class GroupTable {
 public:
  GroupTable(const GeneratorSet& S, const Modulus& q,
             u64 cap = kDefaultEnumCap);

  const Modulus& modulus() const { return q_; }
  int d() const { return d_; }
  u32 size() const { return static_cast<u32>(n_); }
  int degree() const { return static_cast<int>(gens_.size()); }

  ModMat element(u32 i) const;
  const u64* raw(u32 i) const { return elems_.data() + static_cast<std::size_t>(i) * d_ * d_; }
  std::optional<u32> find(const ModMat& m) const;
  u32 index_of(const ModMat& m) const;

  const std::vector<ModMat>& generators() const { return gens_; }

  /// index of elem_i * gen_s
  u32 right(u32 i, int s) const { return right_act_[s][i]; }
  /// index of gen_s * elem_i
  u32 left(u32 i, int s) const { return left_act_[s][i]; }
  const std::vector<u32>& left_action(int s) const { return left_act_[s]; }
  u32 inverse(u32 i) const { return inv_idx_[i]; }

  /// index of elem_i * elem_j (through the element hash)
  u32 mult(u32 i, u32 j) const;

  /// Flat n x n multiplication table, built on first use when n^2 fits the
  /// cap; repeated product-set computations need it.
  const std::vector<u32>* mult_cache(u64 cap = 100'000'000) const;

 private:
  Modulus q_;
  int d_;
  std::size_t n_ = 0;
  std::vector<ModMat> gens_;
  std::vector<u64> elems_;  // row-major, stride d^2
  std::unordered_map<u128, u32, KeyHash> index_;
  std::vector<std::vector<u32>> right_act_, left_act_;
  std::vector<u32> inv_idx_;
  mutable std::vector<u32> mult_cache_;
};

/// True iff the table is all of SL_d(Z/qZ).
bool is_full(const GroupTable& table, int d);

/// Indices of elements congruent to the identity mod q' (q' | q); the
/// congruence filtration Gamma_{q'}/Gamma_q inside the table.
std::vector<u32> kernel_coset(const GroupTable& table, u64 qp);

/// Exact maximum absolute entry over all products of exactly `length`
/// generators, by breadth-first search over the (deduplicated) set of word
/// values with arbitrary-precision entries. If the result is < q/2,
/// distinct word values stay distinct mod q.
Int word_entry_bound(const GeneratorSet& S, int length, u64 cap = 2'000'000);

/// Word-value distribution after `length` steps: the multiset of products
/// of `length` generators, collected as value -> number of words.
struct WordDistribution {
  /// parallel arrays: distinct word values and their word counts
  std::vector<IntMat> values;
  std::vector<Int> counts;
  Int total;  // |S|^length
};

WordDistribution word_distribution(const GeneratorSet& S, int length,
                                   u64 cap = 2'000'000);

}  // namespace slq
