#pragma once

#include <array>

#include "slq/growth.hpp"
#include "slq/lie.hpp"

namespace slq {

/// Coordinates (x1, x2, x3) of x1*(E11-E22) + x2*E12 + x3*E21 in
/// sl_2(Z/p^m).
using Sl2Coords = std::array<u64, 3>;

Sl2Coords sl2_coords(const LieVec& v);
LieVec sl2_from_coords(const Modulus& q, const Sl2Coords& c);

/// Exhaustive census of bracket pairs in sl_2(Z/p^m): counts[v] is the
/// number of pairs (u1, u2) with [u1, u2] = v. One pass over all p^{6m}
/// pairs; p odd.
struct BracketCensus {
  u64 p;
  unsigned m;
  u64 pm;                        // p^m
  std::vector<u32> counts;       // indexed by radix p^m over (a1, a2, a3)

  u64 index_of(const Sl2Coords& v) const {
    return (v[0] * pm + v[1]) * pm + v[2];
  }
  u32 count_of(const Sl2Coords& v) const { return counts[index_of(v)]; }
};

BracketCensus bracket_census(u64 p, unsigned m);

/// Divisibility class: the k with p^k || v (clamped to m; v = 0 gives m).
unsigned divisibility_class(u64 p, unsigned m, const Sl2Coords& v);

/// |A_m(v)| from the closed formulas, by class:
/// p^{3m+k} + p^{3m+k-1} - p^{3m-1} - p^{3m-2} for k < m, and
/// p^{4m} + p^{4m-1} + p^{4m-2} - p^{3m-1} - p^{3m-2} for v = 0.
Int bracket_count_formula(u64 p, unsigned m, unsigned k);

struct BracketCount {
  u64 p;
  unsigned m;
  unsigned k;
  Int count;
  Int formula_value;
};

/// Exhaustive count of bracket representations of one v against the
/// formula. Runs a full census; use bracket_census directly for sweeps.
BracketCount count_bracket_pairs(u64 p, unsigned m, const LieVec& v);

struct SolutionStructure {
  u64 solutions;          // number of (y1,y2,y3) with [u1,u2] = v for fixed x
  bool dependency_holds;  // 2*x1*a1 + x3*a2 + x2*a3 = 0
  bool x_unit;            // p does not divide (x1,x2,x3)
  bool consistent;        // solutions = p^m iff dependency (when x_unit)
};

/// Exhaustive y-loop for the linear system behind the bracket count.
SolutionStructure solution_structure_check(u64 p, unsigned m,
                                           const Sl2Coords& x,
                                           const Sl2Coords& a);

struct SpanAtom {
  int sign;  // +1 or -1
  ModMat g;  // conjugator
};

/// Certificate that target = sum sign_t * g_t x g_t^-1 in sl_d(F_p),
/// following the constructive conjugate-sum chain with recorded lambda
/// witnesses. Length is bounded by 100 d^2.
struct SpanCertificate {
  LieVec base;
  LieVec target;
  std::vector<SpanAtom> atoms;
  u64 lambda1 = 0;                    // lambda^d != +-1
  std::array<u64, 3> lambda_triple{}; // sum of inverse squares = 0, squares != 0

  std::size_t length() const { return atoms.size(); }
};

SpanCertificate span_certificate(u64 p, int d, const LieVec& x,
                                 const LieVec& target);

/// Re-evaluates the certificate sum exactly.
bool verify_certificate(const SpanCertificate& cert);

/// Independent route: expresses the target in a spanning set of conjugates
/// by Gaussian elimination mod p and re-evaluates. Cross-checks the
/// constructive certificate without sharing its code path.
bool span_solve_linear(u64 p, int d, const LieVec& x, const LieVec& target);

struct SectionStat {
  u64 multiplicative_pairs;
  u64 total_pairs;
  Rational fraction;
  bool exhaustive;
};

/// Probability that the canonical section psi: SL_2(F_p) -> SL_2(Z/p^2)
/// (least-residue lift, first row scaled by (1 - p t) where
/// det(lift) = 1 + p t) is multiplicative on a uniform pair.
/// samples = 0 runs the exhaustive double loop.
SectionStat section_multiplicativity_stat(u64 p, u64 samples = 0,
                                          u64 seed = 0);

/// The canonical section itself (exposed for tests).
ModMat section_lift(const ModMat& x, const Modulus& psq);

/// Whether the canonical section commutes with inversion on all of
/// SL_2(F_p); decides if the pair-map invariance property is assertable.
bool section_commutes_with_inversion(u64 p);

struct DinaiReport {
  bool hypothesis_ok;   // A1, A2 cover the required congruence quotients
  bool covers;          // 2-fold product of commutators covers the target
  bool well_defined_ok; // commutator classes depend only on the stated data
  u64 commutator_count;
};

/// Dinai lifting step in SL_2(Z/p^{i+j+k}): with A1 covering
/// Gamma_{p^i}/Gamma_{p^{i+k}} and A2 covering Gamma_{p^j}/Gamma_{p^{j+k}},
/// the 2-fold product of {[a1, a2]} covers Gamma_{p^{i+j}} modulo
/// p^{i+j+k}. Also verifies well-definedness on seeded lift pairs.
DinaiReport dinai_lift_check(const GroupTable& table, u64 p, unsigned i,
                             unsigned j, unsigned k, const SubsetHandle& a1,
                             const SubsetHandle& a2, u64 seed,
                             int well_defined_trials = 50);

}  // namespace slq
