#include "slq/matrix.hpp"

#include <cmath>

namespace slq {

IntMat int_identity(int d) {
  IntMat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = (i == j) ? 1 : 0;
  return m;
}

bool int_eq(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  const int d = static_cast<int>(a.rows());
  IntMat c(d, d);
  Int acc;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      acc = 0;
      for (int k = 0; k < d; ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

namespace {

Int det_minor(const IntMat& a, std::vector<int>& rows, int col0) {
  const int n = static_cast<int>(rows.size());
  if (n == 1) return a(rows[0], col0);
  Int acc = 0;
  for (int i = 0; i < n; ++i) {
    int r = rows[i];
    rows.erase(rows.begin() + i);
    Int sub = det_minor(a, rows, col0 + 1);
    rows.insert(rows.begin() + i, r);
    Int term = a(r, col0) * sub;
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace

Int det_exact(const IntMat& a) {
  const int d = static_cast<int>(a.rows());
  if (d != a.cols()) throw Mismatch("det_exact: matrix not square");
  std::vector<int> rows(d);
  for (int i = 0; i < d; ++i) rows[i] = i;
  return det_minor(a, rows, 0);
}

IntMat adjugate_exact(const IntMat& a) {
  const int d = static_cast<int>(a.rows());
  IntMat adj(d, d);
  if (d == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      IntMat minor(d - 1, d - 1);
      for (int r = 0, rr = 0; r < d; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < d; ++c) {
          if (c == j) continue;
          minor(rr, cc) = a(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det_exact(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj(j, i) = cof;  // transpose of the cofactor matrix
    }
  return adj;
}

bool is_unimodular(const IntMat& a) { return det_exact(a) == 1; }

IntMat int_inverse(const IntMat& a) {
  if (!is_unimodular(a)) throw NotUnimodular("int_inverse: det != 1");
  return adjugate_exact(a);
}

Int entry_gcd(const IntMat& a) {
  Int g = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      Int v = abs(a(i, j));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  return g;
}

Int max_abs_entry(const IntMat& a) {
  Int m = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      Int v = abs(a(i, j));
      if (v > m) m = v;
    }
  return m;
}

ModMat::ModMat(const Modulus& m, ResidueMat entries) : mod(m), e(std::move(entries)) {
  const u64 q = mod.q();
  for (int i = 0; i < e.rows(); ++i)
    for (int j = 0; j < e.cols(); ++j)
      if (e(i, j) >= q) e(i, j) %= q;
}

bool operator==(const ModMat& a, const ModMat& b) {
  return a.mod == b.mod && a.e == b.e;
}

ModMat mod_identity(int d, const Modulus& q) {
  ResidueMat e = ResidueMat::Zero(d, d);
  const u64 one = 1 % q.q();
  for (int i = 0; i < d; ++i) e(i, i) = one;
  return ModMat(q, std::move(e));
}

ModMat mod_zero(int d, const Modulus& q) {
  return ModMat(q, ResidueMat::Zero(d, d));
}

ModMat project(const IntMat& g, const Modulus& q) {
  const int d = static_cast<int>(g.rows());
  ResidueMat e(d, g.cols());
  Int r;
  Int qq(static_cast<unsigned long>(q.q()));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < g.cols(); ++j) {
      mpz_mod(r.get_mpz_t(), g(i, j).get_mpz_t(), qq.get_mpz_t());
      e(i, j) = r.get_ui();
    }
  return ModMat(q, std::move(e));
}

ModMat mod_reduce(const ModMat& a, const Modulus& qp) {
  if (a.mod.q() % qp.q() != 0)
    throw NotADivisor("mod_reduce: target modulus does not divide source");
  ResidueMat e = a.e;
  const u64 q = qp.q();
  for (int i = 0; i < e.rows(); ++i)
    for (int j = 0; j < e.cols(); ++j) e(i, j) %= q;
  return ModMat(qp, std::move(e));
}

namespace {

void require_same(const ModMat& a, const ModMat& b, const char* who) {
  if (!(a.mod == b.mod) || a.e.rows() != b.e.rows())
    throw Mismatch(std::string(who) + ": modulus or dimension mismatch");
}

}  // namespace

ModMat mod_mul(const ModMat& a, const ModMat& b) {
  require_same(a, b, "mod_mul");
  const int d = a.d();
  const u64 q = a.mod.q();
  ResidueMat c(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      u128 acc = 0;
      for (int k = 0; k < d; ++k)
        acc += static_cast<u128>(a.e(i, k)) * b.e(k, j);
      c(i, j) = static_cast<u64>(acc % q);
    }
  return ModMat(a.mod, std::move(c));
}

ModMat mod_add(const ModMat& a, const ModMat& b) {
  require_same(a, b, "mod_add");
  ResidueMat c(a.d(), a.d());
  const u64 q = a.mod.q();
  for (int i = 0; i < a.d(); ++i)
    for (int j = 0; j < a.d(); ++j) c(i, j) = addmod(a.e(i, j), b.e(i, j), q);
  return ModMat(a.mod, std::move(c));
}

ModMat mod_sub(const ModMat& a, const ModMat& b) {
  require_same(a, b, "mod_sub");
  ResidueMat c(a.d(), a.d());
  const u64 q = a.mod.q();
  for (int i = 0; i < a.d(); ++i)
    for (int j = 0; j < a.d(); ++j) c(i, j) = submod(a.e(i, j), b.e(i, j), q);
  return ModMat(a.mod, std::move(c));
}

ModMat mod_scale(u64 c, const ModMat& a) {
  ResidueMat e(a.d(), a.d());
  const u64 q = a.mod.q();
  c %= q;
  for (int i = 0; i < a.d(); ++i)
    for (int j = 0; j < a.d(); ++j) e(i, j) = mulmod(c, a.e(i, j), q);
  return ModMat(a.mod, std::move(e));
}

ModMat mod_neg(const ModMat& a) {
  ResidueMat e(a.d(), a.d());
  const u64 q = a.mod.q();
  for (int i = 0; i < a.d(); ++i)
    for (int j = 0; j < a.d(); ++j) e(i, j) = a.e(i, j) ? q - a.e(i, j) : 0;
  return ModMat(a.mod, std::move(e));
}

namespace {

u64 mod_det_minor(const ModMat& a, std::vector<int>& rows, int col0) {
  const u64 q = a.mod.q();
  const int n = static_cast<int>(rows.size());
  if (n == 1) return a.e(rows[0], col0);
  u64 acc = 0;
  for (int i = 0; i < n; ++i) {
    int r = rows[i];
    rows.erase(rows.begin() + i);
    u64 sub = mod_det_minor(a, rows, col0 + 1);
    rows.insert(rows.begin() + i, r);
    u64 term = mulmod(a.e(r, col0), sub, q);
    acc = (i % 2 == 0) ? addmod(acc, term, q) : submod(acc, term, q);
  }
  return acc;
}

}  // namespace

u64 mod_det(const ModMat& a) {
  std::vector<int> rows(a.d());
  for (int i = 0; i < a.d(); ++i) rows[i] = i;
  return mod_det_minor(a, rows, 0);
}

u64 mod_trace(const ModMat& a) {
  u64 t = 0;
  for (int i = 0; i < a.d(); ++i) t = addmod(t, a.e(i, i), a.mod.q());
  return t;
}

ModMat mod_adjugate(const ModMat& a) {
  const int d = a.d();
  const u64 q = a.mod.q();
  ResidueMat adj(d, d);
  if (d == 1) {
    adj(0, 0) = 1 % q;
    return ModMat(a.mod, std::move(adj));
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ResidueMat minor(d - 1, d - 1);
      for (int r = 0, rr = 0; r < d; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < d; ++c) {
          if (c == j) continue;
          minor(rr, cc) = a.e(r, c);
          ++cc;
        }
        ++rr;
      }
      u64 cof = mod_det(ModMat(a.mod, std::move(minor)));
      if ((i + j) % 2 != 0) cof = cof ? q - cof : 0;
      adj(j, i) = cof;
    }
  return ModMat(a.mod, std::move(adj));
}

ModMat mod_inv(const ModMat& a) {
  if (mod_det(a) != 1 % a.mod.q())
    throw NotUnimodular("mod_inv: det != 1 mod q");
  return mod_adjugate(a);
}

ModMat mod_inv_unit(const ModMat& a) {
  const u64 det = mod_det(a);
  const u64 dinv = invmod(det, a.mod.q());
  return mod_scale(dinv, mod_adjugate(a));
}

u64 mod_entry_gcd(const ModMat& a) {
  u64 g = 0;
  for (int i = 0; i < a.d(); ++i)
    for (int j = 0; j < a.d(); ++j) g = std::gcd(g, a.e(i, j));
  return g;
}

u64 exact_divisor(const IntMat& a, const Modulus& Q) {
  return exact_divisor_from_gcd(entry_gcd(a), Q);
}

u128 pack_entries(const u64* e, int n, u64 q) {
  // requires q^n < 2^128
  u128 key = 0;
  for (int i = n - 1; i >= 0; --i) key = key * q + e[i];
  return key;
}

u128 pack_key(const ModMat& a) {
  const int n = a.d() * a.d();
  const u64 q = a.mod.q();
  // bit budget check: n * ceil(log2 q) <= 128
  int bits = 64 - __builtin_clzll(q | 1);
  if (static_cast<long>(bits) * n > 127)
    throw TooLarge("pack_key: q^(d^2) exceeds 128-bit key space");
  u128 key = 0;
  for (int i = a.d() - 1; i >= 0; --i)
    for (int j = a.d() - 1; j >= 0; --j) key = key * q + a.e(i, j);
  return key;
}

}  // namespace slq
