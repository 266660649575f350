#pragma once

#include <vector>

#include "slq/matrix.hpp"

namespace slq {

/// Trace-zero d x d matrix over Z/qZ. Construction checks the trace; a
/// violation coming out of psi would indicate a genuine counterexample to
/// the trace-zero claim and is surfaced, never normalized away.
struct LieVec {
  Modulus mod;
  ResidueMat e;

  LieVec(const Modulus& m, ResidueMat entries);
  int d() const { return static_cast<int>(e.rows()); }
  ModMat as_mat() const { return ModMat(mod, e); }
  bool is_zero() const;
};

bool operator==(const LieVec& a, const LieVec& b);

LieVec lie_zero(int d, const Modulus& q);
LieVec lie_from_mat(const ModMat& m);

/// [u, v] = uv - vu.
LieVec bracket(const LieVec& u, const LieVec& v);
LieVec lie_add(const LieVec& u, const LieVec& v);
LieVec lie_sub(const LieVec& u, const LieVec& v);
LieVec lie_neg(const LieVec& u);
LieVec lie_scale(u64 c, const LieVec& u);

/// g v g^-1 for g with det = 1 mod q.
LieVec conj_action(const ModMat& g, const LieVec& v);

/// Basis element E_{i,j} (i != j) of sl_d.
LieVec basis_offdiag(int d, const Modulus& q, int i, int j);
/// Basis element E_{i,i} - E_{i+1,i+1}.
LieVec basis_diag(int d, const Modulus& q, int i);

/// The standard basis {E_{i,j} : i != j} followed by the d-1 diagonal
/// differences; every LieVec decomposes uniquely in it.
std::vector<LieVec> sl_basis(int d, const Modulus& q);

/// Coordinates in the standard basis, length d^2 - 1: off-diagonal entries
/// row by row, then the partial sums of the diagonal.
std::vector<u64> lie_coords(const LieVec& v);
LieVec lie_from_coords(int d, const Modulus& q, const std::vector<u64>& c);

/// An integer matrix congruent to the identity mod `level`.
struct CongruenceElement {
  IntMat g;
  u64 level;

  CongruenceElement(IntMat mat, u64 q1);
  int d() const { return static_cast<int>(g.rows()); }
};

/// Psi_{q1}^{q2}(g) = ((g - 1) / q1 mod q2/q1), defined for q1 | q2.
/// For q2 | q1^2 this is a bijection Gamma_{q1}/Gamma_{q2} -> sl_d(Z/(q2/q1)).
LieVec psi(const CongruenceElement& x, u64 q2);

/// Same map evaluated on a residue class: x is given mod q2 with
/// x = 1 mod q1.
LieVec psi_mod(const ModMat& x, u64 q1);

/// Identity (2): Psi(xy) = Psi(x) + Psi(y), for q1 | q2 | q1^2.
bool psi_sum_identity(const ModMat& x, const ModMat& y, u64 q1);
/// Identity (3): Psi(g x g^-1) = pi(g) Psi(x) pi(g)^-1.
bool psi_adjoint_identity(const ModMat& x, const ModMat& g, u64 q1);
/// Identity (4): Psi_{q1q2}^{q1q2q3}(x y x^-1 y^-1) =
/// [Psi_{q1}^{q1q3}(x), Psi_{q2}^{q2q3}(y)], for q3 | q1 and q3 | q2.
/// x and y are residue classes mod q1*q2*q3 with x = 1 mod q1, y = 1 mod q2.
bool psi_bracket_identity(const ModMat& x, const ModMat& y, u64 q1, u64 q2,
                          u64 q3);

enum class PsiIdentity { kSum, kAdjoint, kBracket };

struct PsiWitness {
  ModMat x;
  ModMat y;  // kSum/kBracket; for kAdjoint this is the conjugator g
  u64 q1 = 0, q2 = 0, q3 = 0;
};

bool psi_identity_check(PsiIdentity kind, const PsiWitness& w);

/// Representative of the coset Psi^-1(w) in Gamma_{q1}/Gamma_{q1 * w.mod},
/// returned as a residue class modulo M with determinant 1 mod M
/// (M must be a multiple of q1 * w.mod). Inverting Psi this way avoids BFS
/// in congruence quotients.
ModMat coset_rep(const LieVec& w, u64 q1, const Modulus& M);

/// All of Gamma_{q1}/Gamma_{q2} (q1 | q2 | q1^2) as residue classes mod M,
/// enumerated through Psi^-1 over sl_d(Z/(q2/q1)) in coordinate order.
std::vector<ModMat> congruence_cosets(int d, u64 q1, u64 q2, const Modulus& M);

/// All elements of sl_d(Z/qZ) in coordinate order (q^(d^2-1) of them).
std::vector<LieVec> all_lie_vecs(int d, const Modulus& q);

}  // namespace slq
