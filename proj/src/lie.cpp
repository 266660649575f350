#include "slq/lie.hpp"

namespace slq {

LieVec::LieVec(const Modulus& m, ResidueMat entries) : mod(m), e(std::move(entries)) {
  const u64 q = mod.q();
  u64 tr = 0;
  for (int i = 0; i < e.rows(); ++i) {
    for (int j = 0; j < e.cols(); ++j)
      if (e(i, j) >= q) e(i, j) %= q;
    tr = addmod(tr, e(i, i), q);
  }
  if (tr != 0) throw Error("LieVec: trace is nonzero mod q");
}

bool LieVec::is_zero() const {
  for (int i = 0; i < e.rows(); ++i)
    for (int j = 0; j < e.cols(); ++j)
      if (e(i, j) != 0) return false;
  return true;
}

bool operator==(const LieVec& a, const LieVec& b) {
  return a.mod == b.mod && a.e == b.e;
}

LieVec lie_zero(int d, const Modulus& q) {
  return LieVec(q, ResidueMat::Zero(d, d));
}

LieVec lie_from_mat(const ModMat& m) { return LieVec(m.mod, m.e); }

LieVec bracket(const LieVec& u, const LieVec& v) {
  if (!(u.mod == v.mod) || u.d() != v.d())
    throw Mismatch("bracket: modulus or dimension mismatch");
  ModMat a = u.as_mat(), b = v.as_mat();
  return lie_from_mat(mod_sub(mod_mul(a, b), mod_mul(b, a)));
}

LieVec lie_add(const LieVec& u, const LieVec& v) {
  return lie_from_mat(mod_add(u.as_mat(), v.as_mat()));
}

LieVec lie_sub(const LieVec& u, const LieVec& v) {
  return lie_from_mat(mod_sub(u.as_mat(), v.as_mat()));
}

LieVec lie_neg(const LieVec& u) { return lie_from_mat(mod_neg(u.as_mat())); }

LieVec lie_scale(u64 c, const LieVec& u) {
  return lie_from_mat(mod_scale(c, u.as_mat()));
}

LieVec conj_action(const ModMat& g, const LieVec& v) {
  if (!(g.mod == v.mod) || g.d() != v.d())
    throw Mismatch("conj_action: modulus or dimension mismatch");
  return lie_from_mat(mod_mul(mod_mul(g, v.as_mat()), mod_inv_unit(g)));
}

LieVec basis_offdiag(int d, const Modulus& q, int i, int j) {
  ResidueMat e = ResidueMat::Zero(d, d);
  e(i, j) = 1 % q.q();
  return LieVec(q, std::move(e));
}

LieVec basis_diag(int d, const Modulus& q, int i) {
  ResidueMat e = ResidueMat::Zero(d, d);
  e(i, i) = 1 % q.q();
  e(i + 1, i + 1) = (q.q() - 1) % q.q();
  return LieVec(q, std::move(e));
}

std::vector<LieVec> sl_basis(int d, const Modulus& q) {
  std::vector<LieVec> basis;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) basis.push_back(basis_offdiag(d, q, i, j));
  for (int i = 0; i + 1 < d; ++i) basis.push_back(basis_diag(d, q, i));
  return basis;
}

std::vector<u64> lie_coords(const LieVec& v) {
  const int d = v.d();
  const u64 q = v.mod.q();
  std::vector<u64> c;
  c.reserve(d * d - 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) c.push_back(v.e(i, j));
  // diagonal = sum of coeff_i * (E_ii - E_{i+1,i+1}); coeff_i is the i-th
  // partial sum of the diagonal entries
  u64 acc = 0;
  for (int i = 0; i + 1 < d; ++i) {
    acc = addmod(acc, v.e(i, i), q);
    c.push_back(acc);
  }
  return c;
}

LieVec lie_from_coords(int d, const Modulus& q, const std::vector<u64>& c) {
  if (static_cast<int>(c.size()) != d * d - 1)
    throw Mismatch("lie_from_coords: wrong coordinate count");
  ResidueMat e = ResidueMat::Zero(d, d);
  int k = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) e(i, j) = c[k++] % q.q();
  u64 prev = 0;
  for (int i = 0; i + 1 < d; ++i) {
    u64 cur = c[k++] % q.q();
    e(i, i) = submod(cur, prev, q.q());
    prev = cur;
  }
  e(d - 1, d - 1) = submod(0, prev, q.q());
  return LieVec(q, std::move(e));
}

CongruenceElement::CongruenceElement(IntMat mat, u64 q1) : g(std::move(mat)), level(q1) {
  if (level == 0) throw BadLevels("CongruenceElement: level must be positive");
  Int qq(static_cast<unsigned long>(q1));
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      Int diff = g(i, j) - ((i == j) ? 1 : 0);
      if (!mpz_divisible_p(diff.get_mpz_t(), qq.get_mpz_t()))
        throw NotInKernel("CongruenceElement: g != 1 mod level");
    }
}

LieVec psi(const CongruenceElement& x, u64 q2) {
  const u64 q1 = x.level;
  if (q2 % q1 != 0 || static_cast<u128>(q1) * q1 % q2 != 0)
    throw BadLevels("psi: need q1 | q2 | q1^2");
  const u64 qr = q2 / q1;
  const int d = x.d();
  ResidueMat e(d, d);
  Int q1z(static_cast<unsigned long>(q1)), qrz(static_cast<unsigned long>(qr)), t, r;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      t = x.g(i, j) - ((i == j) ? 1 : 0);
      t /= q1z;  // exact by the kernel condition
      mpz_mod(r.get_mpz_t(), t.get_mpz_t(), qrz.get_mpz_t());
      e(i, j) = r.get_ui();
    }
  return LieVec(Modulus(qr), std::move(e));
}

LieVec psi_mod(const ModMat& x, u64 q1) {
  const u64 q2 = x.mod.q();
  if (q2 % q1 != 0) throw BadLevels("psi_mod: q1 must divide the modulus");
  const u64 qr = q2 / q1;
  const int d = x.d();
  ResidueMat e(d, d);
  const u64 one = 1 % q2;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      u64 v = (i == j) ? submod(x.e(i, j), one, q2) : x.e(i, j);
      if (v % q1 != 0) throw NotInKernel("psi_mod: x != 1 mod q1");
      e(i, j) = (v / q1) % qr;
    }
  return LieVec(Modulus(qr), std::move(e));
}

bool psi_sum_identity(const ModMat& x, const ModMat& y, u64 q1) {
  LieVec lhs = psi_mod(mod_mul(x, y), q1);
  LieVec rhs = lie_add(psi_mod(x, q1), psi_mod(y, q1));
  return lhs == rhs;
}

bool psi_adjoint_identity(const ModMat& x, const ModMat& g, u64 q1) {
  const u64 q2 = x.mod.q();
  LieVec lhs = psi_mod(mod_mul(mod_mul(g, x), mod_inv_unit(g)), q1);
  Modulus qr(q2 / q1);
  ModMat gr = mod_reduce(g, qr);
  LieVec rhs = conj_action(gr, psi_mod(x, q1));
  return lhs == rhs;
}

bool psi_bracket_identity(const ModMat& x, const ModMat& y, u64 q1, u64 q2,
                          u64 q3) {
  if (q1 % q3 != 0 || q2 % q3 != 0)
    throw BadLevels("psi_bracket_identity: need q3 | q1 and q3 | q2");
  const u64 M = x.mod.q();
  if (!(x.mod == y.mod) || M % (q1 * q2 * q3) != 0)
    throw BadLevels("psi_bracket_identity: witnesses must live mod q1*q2*q3");
  ModMat comm = mod_mul(mod_mul(x, y), mod_mul(mod_inv_unit(x), mod_inv_unit(y)));
  Modulus level(q1 * q2 * q3);
  LieVec lhs = psi_mod(mod_reduce(comm, level), q1 * q2);
  LieVec px = psi_mod(mod_reduce(x, Modulus(q1 * q3)), q1);
  LieVec py = psi_mod(mod_reduce(y, Modulus(q2 * q3)), q2);
  return lhs == bracket(px, py);
}

bool psi_identity_check(PsiIdentity kind, const PsiWitness& w) {
  switch (kind) {
    case PsiIdentity::kSum:
      return psi_sum_identity(w.x, w.y, w.q1);
    case PsiIdentity::kAdjoint:
      return psi_adjoint_identity(w.x, w.y, w.q1);
    case PsiIdentity::kBracket:
      return psi_bracket_identity(w.x, w.y, w.q1, w.q2, w.q3);
  }
  throw Error("psi_identity_check: unknown kind");
}

ModMat coset_rep(const LieVec& w, u64 q1, const Modulus& M) {
  const u64 q2 = q1 * w.mod.q();
  if (M.q() % q2 != 0) throw BadLevels("coset_rep: M must be a multiple of q1 * (q2/q1)");
  const int d = w.d();
  ResidueMat e = ResidueMat::Zero(d, d);
  const u64 m = M.q();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      u64 v = mulmod(q1 % m, w.e(i, j) % m, m);
      if (i == j) v = addmod(v, 1 % m, m);
      e(i, j) = v;
    }
  ModMat g(M, std::move(e));
  // det(1 + q1*w) = 1 mod q1*(q2/q1) since tr(w) = 0; correct the residual
  // determinant mod M by scaling the first column with det^-1, which is
  // = 1 mod q2 and so does not move the coset.
  const u64 det = mod_det(g);
  if (det != 1 % m) {
    const u64 dinv = invmod(det, m);
    for (int i = 0; i < d; ++i) g.e(i, 0) = mulmod(g.e(i, 0), dinv, m);
    if (mod_det(g) != 1 % m) throw Error("coset_rep: determinant correction failed");
  }
  return g;
}

std::vector<LieVec> all_lie_vecs(int d, const Modulus& q) {
  const int dim = d * d - 1;
  const u64 qq = q.q();
  double total = std::pow(static_cast<double>(qq), dim);
  if (total > 5e7) throw TooLarge("all_lie_vecs: q^(d^2-1) too large");
  std::vector<LieVec> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<u64> c(dim, 0);
  for (;;) {
    out.push_back(lie_from_coords(d, q, c));
    int k = 0;
    while (k < dim && ++c[k] == qq) c[k++] = 0;
    if (k == dim) break;
  }
  return out;
}

std::vector<ModMat> congruence_cosets(int d, u64 q1, u64 q2, const Modulus& M) {
  if (q2 % q1 != 0 || static_cast<u128>(q1) * q1 % q2 != 0)
    throw BadLevels("congruence_cosets: need q1 | q2 | q1^2");
  std::vector<ModMat> reps;
  for (const LieVec& w : all_lie_vecs(d, Modulus(q2 / q1)))
    reps.push_back(coset_rep(w, q1, M));
  return reps;
}

}  // namespace slq
