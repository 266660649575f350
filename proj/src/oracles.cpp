#include "slq/oracles.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace slq {

Sl2Coords sl2_coords(const LieVec& v) {
  if (v.d() != 2) throw Mismatch("sl2_coords: d must be 2");
  return {v.e(0, 0), v.e(0, 1), v.e(1, 0)};
}

LieVec sl2_from_coords(const Modulus& q, const Sl2Coords& c) {
  ResidueMat e(2, 2);
  e(0, 0) = c[0] % q.q();
  e(0, 1) = c[1] % q.q();
  e(1, 0) = c[2] % q.q();
  e(1, 1) = (q.q() - c[0] % q.q()) % q.q();
  return LieVec(q, std::move(e));
}

namespace {

u64 pow_u64(u64 base, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

void require_odd_prime(u64 p) {
  if (p == 2) throw UnsupportedCharacteristic("p = 2 is out of scope");
  if (!is_prime(p)) throw ConfigError("expected an odd prime");
}

}  // namespace

BracketCensus bracket_census(u64 p, unsigned m) {
  require_odd_prime(p);
  const u64 pm = pow_u64(p, m);
  if (pm > 40)
    throw TooLarge("bracket_census: p^m too large for the exhaustive loop");
  BracketCensus census{p, m, pm, std::vector<u32>(pm * pm * pm, 0)};

  // [u1,u2] coordinates: a1 = x2 y3 - x3 y2, a2 = 2(x1 y2 - x2 y1),
  // a3 = 2(x3 y1 - x1 y3), everything mod p^m; small lookup tables keep the
  // p^{6m} loop out of the integer divider
  const u32 n = static_cast<u32>(pm);
  std::vector<u32> mul(n * n), sub(n * n), dbl(n);
  for (u32 a = 0; a < n; ++a) {
    dbl[a] = (2 * a) % n;
    for (u32 b = 0; b < n; ++b) {
      mul[a * n + b] = (a * b) % n;
      sub[a * n + b] = (a + n - b) % n;
    }
  }
  for (u32 x1 = 0; x1 < n; ++x1)
    for (u32 x2 = 0; x2 < n; ++x2)
      for (u32 x3 = 0; x3 < n; ++x3)
        for (u32 y1 = 0; y1 < n; ++y1) {
          const u32 x2y1 = mul[x2 * n + y1];
          const u32 x3y1 = mul[x3 * n + y1];
          const u32 base2 = dbl[x2y1];  // to subtract
          const u32 base3 = dbl[x3y1];
          for (u32 y2 = 0; y2 < n; ++y2) {
            const u32 x3y2 = mul[x3 * n + y2];
            const u32 a2 = sub[dbl[mul[x1 * n + y2]] * n + base2];
            u32* row = census.counts.data();
            for (u32 y3 = 0; y3 < n; ++y3) {
              const u32 a1 = sub[mul[x2 * n + y3] * n + x3y2];
              const u32 a3 = sub[base3 * n + dbl[mul[x1 * n + y3]]];
              ++row[(static_cast<u64>(a1) * n + a2) * n + a3];
            }
          }
        }
  return census;
}

unsigned divisibility_class(u64 p, unsigned m, const Sl2Coords& v) {
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) return m;
  unsigned k = m;
  for (u64 c : v)
    if (c != 0) k = std::min(k, valuation(c, p));
  return k;
}

Int bracket_count_formula(u64 p, unsigned m, unsigned k) {
  Int P(static_cast<unsigned long>(p));
  auto pw = [&](unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), P.get_mpz_t(), e);
    return r;
  };
  if (k >= m)  // v = 0
    return pw(4 * m) + pw(4 * m - 1) + pw(4 * m - 2) - pw(3 * m - 1) - pw(3 * m - 2);
  return pw(3 * m + k) + pw(3 * m + k - 1) - pw(3 * m - 1) - pw(3 * m - 2);
}

BracketCount count_bracket_pairs(u64 p, unsigned m, const LieVec& v) {
  if (v.mod.q() != pow_u64(p, m))
    throw Mismatch("count_bracket_pairs: v not over Z/p^m");
  BracketCensus census = bracket_census(p, m);
  Sl2Coords c = sl2_coords(v);
  const unsigned k = divisibility_class(p, m, c);
  return {p, m, k, Int(census.count_of(c)), bracket_count_formula(p, m, k)};
}

SolutionStructure solution_structure_check(u64 p, unsigned m,
                                           const Sl2Coords& x,
                                           const Sl2Coords& a) {
  require_odd_prime(p);
  const u64 pm = pow_u64(p, m);
  SolutionStructure out{};
  const u64 x1 = x[0] % pm, x2 = x[1] % pm, x3 = x[2] % pm;
  const u64 a1 = a[0] % pm, a2 = a[1] % pm, a3 = a[2] % pm;
  out.x_unit = ((x1 % p) != 0 || (x2 % p) != 0 || (x3 % p) != 0);
  out.dependency_holds =
      (2 * (x1 * a1 % pm) + (x3 * a2 % pm) + (x2 * a3 % pm)) % pm == 0;
  u64 solutions = 0;
  for (u64 y1 = 0; y1 < pm; ++y1)
    for (u64 y2 = 0; y2 < pm; ++y2)
      for (u64 y3 = 0; y3 < pm; ++y3) {
        const u64 b1 = (x2 * y3 + (pm - 1) * (x3 * y2 % pm)) % pm;
        const u64 b2 = (2 * (x1 * y2 % pm) + 2 * (pm - 1) * (x2 * y1 % pm)) % pm;
        const u64 b3 = (2 * (x3 * y1 % pm) + 2 * (pm - 1) * (x1 * y3 % pm)) % pm;
        if (b1 == a1 && b2 == a2 && b3 == a3) ++solutions;
      }
  out.solutions = solutions;
  if (out.x_unit)
    out.consistent = out.dependency_holds ? (solutions == pm) : (solutions == 0);
  else
    out.consistent = true;  // the claim quantifies over p-unit x only
  return out;
}

namespace {

ModMat diag_matrix(const Modulus& P, const std::vector<u64>& diag) {
  const int d = static_cast<int>(diag.size());
  ResidueMat e = ResidueMat::Zero(d, d);
  for (int i = 0; i < d; ++i) e(i, i) = diag[i] % P.q();
  return ModMat(P, std::move(e));
}

std::vector<ModMat> shear_generators(int d, const Modulus& P) {
  std::vector<ModMat> gens;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      ResidueMat plus = mod_identity(d, P).e;
      plus(i, j) = 1;
      gens.emplace_back(P, plus);
      ResidueMat minus = mod_identity(d, P).e;
      minus(i, j) = P.q() - 1;
      gens.emplace_back(P, minus);
    }
  return gens;
}

/// Smallest-conjugator BFS making the (1,2) entry nonzero.
ModMat find_offdiag_conjugator(const LieVec& x) {
  const Modulus& P = x.mod;
  const int d = x.d();
  ModMat id = mod_identity(d, P);
  if (x.e(0, 1) != 0) return id;
  std::vector<ModMat> gens = shear_generators(d, P);
  std::unordered_set<u128, KeyHash> seen;
  std::deque<std::pair<LieVec, ModMat>> queue;
  seen.insert(pack_key(x.as_mat()));
  queue.emplace_back(x, id);
  u64 visited = 0;
  while (!queue.empty()) {
    auto [y, c] = queue.front();
    queue.pop_front();
    if (++visited > 200'000)
      throw NoConjugatorFound("find_offdiag_conjugator: search cap exceeded");
    for (const ModMat& s : gens) {
      LieVec y2 = conj_action(s, y);
      if (!seen.insert(pack_key(y2.as_mat())).second) continue;
      ModMat c2 = mod_mul(s, c);
      if (y2.e(0, 1) != 0) return c2;
      queue.emplace_back(std::move(y2), std::move(c2));
    }
  }
  // impossible for nonzero x when p > d: the conjugation orbit spans sl_d
  throw NoConjugatorFound("find_offdiag_conjugator: orbit exhausted");
}

std::vector<SpanAtom> conj_atoms(const ModMat& w,
                                 const std::vector<SpanAtom>& atoms) {
  std::vector<SpanAtom> out;
  out.reserve(atoms.size());
  for (const SpanAtom& a : atoms) out.push_back({a.sign, mod_mul(w, a.g)});
  return out;
}

LieVec eval_atoms(const LieVec& base, const std::vector<SpanAtom>& atoms) {
  LieVec acc = lie_zero(base.d(), base.mod);
  for (const SpanAtom& a : atoms) {
    LieVec term = conj_action(a.g, base);
    acc = (a.sign > 0) ? lie_add(acc, term) : lie_sub(acc, term);
  }
  return acc;
}

/// Ascending scan for lambda with lambda^d != +-1.
u64 find_lambda1(u64 p, int d) {
  for (u64 l = 2; l < p; ++l) {
    const u64 t = powmod(l, static_cast<u64>(d), p);
    if (t != 1 && t != p - 1) return l;
  }
  throw SmallPrime("span_certificate: no lambda with lambda^d != +-1");
}

/// Ascending triple with sum of inverse squares 0 and sum of squares != 0.
std::array<u64, 3> find_lambda_triple(u64 p) {
  for (u64 a = 1; a < p; ++a)
    for (u64 b = a; b < p; ++b)
      for (u64 c = b; c < p; ++c) {
        const u64 ia = invmod(a, p), ib = invmod(b, p), ic = invmod(c, p);
        const u64 inv_sq =
            (mulmod(ia, ia, p) + mulmod(ib, ib, p) + mulmod(ic, ic, p)) % p;
        if (inv_sq != 0) continue;
        const u64 sq = (mulmod(a, a, p) + mulmod(b, b, p) + mulmod(c, c, p)) % p;
        if (sq != 0) return {a, b, c};
      }
  throw SmallPrime("span_certificate: no admissible lambda triple");
}

/// Ascending triple with sum of squares = goal (nonzero).
std::array<u64, 3> find_square_sum_triple(u64 p, u64 goal) {
  for (u64 a = 1; a < p; ++a)
    for (u64 b = a; b < p; ++b)
      for (u64 c = b; c < p; ++c)
        if ((mulmod(a, a, p) + mulmod(b, b, p) + mulmod(c, c, p)) % p == goal)
          return {a, b, c};
  throw SmallPrime("span_certificate: no square-sum triple for coefficient");
}

/// w in SL_d with w E_{12} w^-1 = s E_{i+1,j+1} (0-based i, j); returns
/// (w, s in {+1,-1}), s read off by direct evaluation.
std::pair<ModMat, int> basis_change(const Modulus& P, int d, int i, int j) {
  std::vector<int> sigma(d, -1);
  sigma[0] = i;
  sigma[1] = j;
  int next = 0;
  for (int k = 2; k < d; ++k) {
    while (next == i || next == j) ++next;
    sigma[k] = next++;
  }
  ResidueMat e = ResidueMat::Zero(d, d);
  for (int k = 0; k < d; ++k) e(sigma[k], k) = 1;
  ModMat w(P, std::move(e));
  if (mod_det(w) != 1) {
    const int fix = (d >= 3) ? 2 : 1;  // negate one column to land in SL_d
    for (int r = 0; r < d; ++r)
      if (w.e(r, fix) != 0) w.e(r, fix) = P.q() - w.e(r, fix);
  }
  LieVec image = conj_action(w, basis_offdiag(d, P, 0, 1));
  int s;
  if (image.e(i, j) == 1)
    s = 1;
  else if (image.e(i, j) == P.q() - 1)
    s = -1;
  else
    throw Error("basis_change: unexpected conjugate of E12");
  return {w, s};
}

}  // namespace

SpanCertificate span_certificate(u64 p, int d, const LieVec& x,
                                 const LieVec& target) {
  require_odd_prime(p);
  if (p <= static_cast<u64>(d))
    throw SmallPrime("span_certificate: need p > d");
  if (x.mod.q() != p || target.mod.q() != p || x.d() != d || target.d() != d)
    throw Mismatch("span_certificate: inconsistent dimensions or moduli");
  if (x.is_zero()) throw ZeroInput("span_certificate: x must be nonzero");

  SpanCertificate cert;
  cert.base = x;
  cert.target = target;
  if (target.is_zero()) return cert;

  const Modulus& P = x.mod;
  ModMat c0 = find_offdiag_conjugator(x);

  cert.lambda1 = find_lambda1(p, d);
  std::vector<u64> d1(d, cert.lambda1);
  d1[0] = powmod(invmod(cert.lambda1, p), static_cast<u64>(d - 1), p);
  ModMat g1 = diag_matrix(P, d1);
  std::vector<SpanAtom> atoms1{{+1, mod_mul(g1, c0)},
                               {-1, mod_mul(mod_inv_unit(g1), c0)}};

  std::vector<u64> d2(d, 1);
  d2[0] = p - 1;
  d2[1] = p - 1;
  ModMat g2 = diag_matrix(P, d2);
  std::vector<SpanAtom> atoms2 = atoms1;
  for (const SpanAtom& a : conj_atoms(g2, atoms1)) atoms2.push_back(a);

  cert.lambda_triple = find_lambda_triple(p);
  std::vector<SpanAtom> atoms3;
  for (u64 l : cert.lambda_triple) {
    std::vector<u64> dl(d, 1);
    dl[0] = l;
    dl[1] = invmod(l, p);
    for (const SpanAtom& a : conj_atoms(diag_matrix(P, dl), atoms2))
      atoms3.push_back(a);
  }

  LieVec x3 = eval_atoms(x, atoms3);
  const u64 a3 = x3.e(0, 1);
  {
    LieVec expect = lie_scale(a3, basis_offdiag(d, P, 0, 1));
    if (a3 == 0 || !(x3 == expect))
      throw Error("span_certificate: stage-three collapse failed");
  }
  const u64 a3_inv = invmod(a3, p);

  // 36 atoms summing to coeff * E12
  auto recipe = [&](u64 coeff) {
    std::array<u64, 3> triple =
        find_square_sum_triple(p, mulmod(coeff, a3_inv, p));
    std::vector<SpanAtom> out;
    for (u64 l : triple) {
      std::vector<u64> dl(d, 1);
      dl[0] = l;
      dl[1] = invmod(l, p);
      for (const SpanAtom& a : conj_atoms(diag_matrix(P, dl), atoms3))
        out.push_back(a);
    }
    return out;
  };

  auto extend = [&](const std::vector<SpanAtom>& more) {
    for (const SpanAtom& a : more) cert.atoms.push_back(a);
  };

  // off-diagonal coefficients
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      const u64 t = target.e(i, j);
      if (t == 0) continue;
      if (i == 0 && j == 1) {
        extend(recipe(t));
      } else {
        auto [w, s] = basis_change(P, d, i, j);
        extend(conj_atoms(w, recipe(s > 0 ? t : p - t)));
      }
    }

  // diagonal: coefficient of E_{ii} - E_{i+1,i+1} is the i-th partial sum;
  // c (E11 - E22) = h (c E12) h^-1 - c E12 + c E21 with h = 1 - E21
  ResidueMat he = mod_identity(d, P).e;
  he(1, 0) = p - 1;
  ModMat h(P, std::move(he));
  auto [w21, s21] = basis_change(P, d, 1, 0);
  u64 partial = 0;
  for (int i = 0; i + 1 < d; ++i) {
    partial = addmod(partial, target.e(i, i), p);
    const u64 c = partial;
    if (c == 0) continue;
    std::vector<SpanAtom> pieces = conj_atoms(h, recipe(c));
    for (const SpanAtom& a : recipe(p - c)) pieces.push_back(a);
    for (const SpanAtom& a : conj_atoms(w21, recipe(s21 > 0 ? c : p - c)))
      pieces.push_back(a);
    if (i == 0) {
      extend(pieces);
    } else {
      auto [wi, si] = basis_change(P, d, i, i + 1);
      (void)si;  // diagonal differences conjugate without sign
      extend(conj_atoms(wi, pieces));
    }
  }

  if (cert.length() > static_cast<std::size_t>(100 * d * d))
    throw Error("span_certificate: length bound exceeded");
  if (!verify_certificate(cert))
    throw Error("span_certificate: certificate does not evaluate to target");
  return cert;
}

bool verify_certificate(const SpanCertificate& cert) {
  return eval_atoms(cert.base, cert.atoms) == cert.target;
}

bool span_solve_linear(u64 p, int d, const LieVec& x, const LieVec& target) {
  require_odd_prime(p);
  if (x.is_zero()) throw ZeroInput("span_solve_linear: x must be nonzero");
  const Modulus& P = x.mod;
  const int dim = d * d - 1;

  // gather conjugates under a deterministic shear BFS until they span
  std::vector<ModMat> gens = shear_generators(d, P);
  std::vector<LieVec> pool;
  std::vector<ModMat> conjugators;
  std::unordered_set<u128, KeyHash> seen;
  std::deque<std::pair<LieVec, ModMat>> queue;
  queue.emplace_back(x, mod_identity(d, P));
  seen.insert(pack_key(x.as_mat()));
  while (!queue.empty() && pool.size() < static_cast<std::size_t>(4 * dim)) {
    auto [y, c] = queue.front();
    queue.pop_front();
    pool.push_back(y);
    conjugators.push_back(c);
    for (const ModMat& s : gens) {
      LieVec y2 = conj_action(s, y);
      if (seen.insert(pack_key(y2.as_mat())).second)
        queue.emplace_back(std::move(y2), mod_mul(s, c));
    }
  }

  // Gaussian elimination mod p on the coordinate matrix [pool | target]
  const int cols = static_cast<int>(pool.size());
  std::vector<std::vector<u64>> A(dim, std::vector<u64>(cols + 1, 0));
  for (int c = 0; c < cols; ++c) {
    std::vector<u64> coords = lie_coords(pool[c]);
    for (int r = 0; r < dim; ++r) A[r][c] = coords[r];
  }
  std::vector<u64> tc = lie_coords(target);
  for (int r = 0; r < dim; ++r) A[r][cols] = tc[r];

  std::vector<int> pivot_col(dim, -1);
  int row = 0;
  for (int col = 0; col < cols && row < dim; ++col) {
    int pr = -1;
    for (int r = row; r < dim; ++r)
      if (A[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(A[row], A[pr]);
    const u64 inv = invmod(A[row][col], p);
    for (int c = col; c <= cols; ++c) A[row][c] = mulmod(A[row][c], inv, p);
    for (int r = 0; r < dim; ++r) {
      if (r == row || A[r][col] == 0) continue;
      const u64 f = A[r][col];
      for (int c = col; c <= cols; ++c)
        A[r][c] = submod(A[r][c], mulmod(f, A[row][c], p), p);
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int r = row; r < dim; ++r)
    if (A[r][cols] != 0) return false;  // inconsistent: conjugates do not span

  // read off the combination and re-evaluate it
  LieVec acc = lie_zero(d, P);
  for (int r = 0; r < row; ++r) {
    const u64 coeff = A[r][cols];
    if (coeff == 0) continue;
    acc = lie_add(acc, lie_scale(coeff, conj_action(conjugators[pivot_col[r]], x)));
  }
  return acc == target;
}

ModMat section_lift(const ModMat& x, const Modulus& psq) {
  const u64 p2 = psq.q();
  const u64 p = x.mod.q();
  if (p * p != p2) throw BadLevels("section_lift: target modulus must be p^2");
  ResidueMat e(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) e(i, j) = x.e(i, j);
  ModMat lift(psq, std::move(e));
  const u64 det = mod_det(lift);  // = 1 + p t mod p^2
  const u64 t = (det - 1) / p;
  const u64 scale = submod(1, mulmod(p, t, p2), p2);
  for (int j = 0; j < 2; ++j) lift.e(0, j) = mulmod(lift.e(0, j), scale, p2);
  if (mod_det(lift) != 1) throw Error("section_lift: determinant correction failed");
  return lift;
}

namespace {

struct Flat2 {
  u64 a, b, c, d;
  bool operator==(const Flat2&) const = default;
};

Flat2 flat_of(const ModMat& m) { return {m.e(0, 0), m.e(0, 1), m.e(1, 0), m.e(1, 1)}; }

Flat2 mul2(const Flat2& x, const Flat2& y, u64 q) {
  return {(x.a * y.a + x.b * y.c) % q, (x.a * y.b + x.b * y.d) % q,
          (x.c * y.a + x.d * y.c) % q, (x.c * y.b + x.d * y.d) % q};
}

GroupTable sl2_table(u64 p) {
  IntMat e1(2, 2), e2(2, 2);
  e1 << 1, 1, 0, 1;
  e2 << 1, 0, 1, 1;
  GeneratorSet S = GeneratorSet::make({e1, e2}, true);
  return GroupTable(S, Modulus(p));
}

}  // namespace

SectionStat section_multiplicativity_stat(u64 p, u64 samples, u64 seed) {
  require_odd_prime(p);
  GroupTable table = sl2_table(p);
  const u32 n = table.size();
  Modulus psq(p * p);
  std::vector<Flat2> lift(n);
  for (u32 i = 0; i < n; ++i)
    lift[i] = flat_of(section_lift(table.element(i), psq));

  const u64 q2 = p * p;
  u64 hits = 0;
  SectionStat out{};
  if (samples == 0) {
    table.mult_cache();
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j)
        if (mul2(lift[i], lift[j], q2) == lift[table.mult(i, j)]) ++hits;
    out.total_pairs = static_cast<u64>(n) * n;
    out.exhaustive = true;
  } else {
    Rng rng(seed);
    for (u64 s = 0; s < samples; ++s) {
      const u32 i = static_cast<u32>(rng.uniform(n));
      const u32 j = static_cast<u32>(rng.uniform(n));
      if (mul2(lift[i], lift[j], q2) == lift[table.mult(i, j)]) ++hits;
    }
    out.total_pairs = samples;
    out.exhaustive = false;
  }
  out.multiplicative_pairs = hits;
  out.fraction = Rational(hits, out.total_pairs);
  out.fraction.canonicalize();
  return out;
}

bool section_commutes_with_inversion(u64 p) {
  GroupTable table = sl2_table(p);
  Modulus psq(p * p);
  for (u32 i = 0; i < table.size(); ++i) {
    ModMat lift = section_lift(table.element(i), psq);
    ModMat lift_inv = section_lift(table.element(table.inverse(i)), psq);
    if (!(mod_inv(lift) == lift_inv)) return false;
  }
  return true;
}

DinaiReport dinai_lift_check(const GroupTable& table, u64 p, unsigned i,
                             unsigned j, unsigned k, const SubsetHandle& a1,
                             const SubsetHandle& a2, u64 seed,
                             int well_defined_trials) {
  const u64 level = pow_u64(p, i + j + k);
  if (table.modulus().q() != level)
    throw BadLevels("dinai_lift_check: table must live mod p^(i+j+k)");

  // hypothesis: reductions of A1 mod p^(i+k) must be exactly
  // Gamma_{p^i}/Gamma_{p^(i+k)}, and likewise for A2
  auto covers_quotient = [&](const SubsetHandle& a, unsigned lo, unsigned hi) {
    Modulus down(pow_u64(p, hi));
    std::unordered_set<u128, KeyHash> reduced;
    for (u32 idx : subset_indices(a))
      reduced.insert(pack_key(mod_reduce(table.element(idx), down)));
    std::unordered_set<u128, KeyHash> expected;
    for (u32 idx : kernel_coset(table, pow_u64(p, lo)))
      expected.insert(pack_key(mod_reduce(table.element(idx), down)));
    return reduced == expected;
  };

  DinaiReport rep{};
  rep.hypothesis_ok =
      covers_quotient(a1, i, i + k) && covers_quotient(a2, j, j + k);
  if (!rep.hypothesis_ok)
    throw BadHypothesis("dinai_lift_check: covering hypothesis fails");

  auto commutator = [&](u32 x, u32 y) {
    return table.mult(table.mult(x, y),
                      table.mult(table.inverse(x), table.inverse(y)));
  };

  std::vector<u32> idx1 = subset_indices(a1), idx2 = subset_indices(a2);
  boost::dynamic_bitset<> comm(table.size());
  for (u32 x : idx1)
    for (u32 y : idx2) comm.set(commutator(x, y));
  SubsetHandle C{&table, comm};
  rep.commutator_count = C.size();

  SubsetHandle CC = product_set(C, C);
  std::vector<u32> goal = kernel_coset(table, pow_u64(p, i + j));
  SubsetHandle target = subset_of(table, goal);
  rep.covers = (CC.bits == target.bits);

  // well-definedness: [a1 h, a2] = [a1, a2] mod p^(i+j+k) whenever
  // h = 1 mod p^(i+k), and symmetrically in a2
  Rng rng(seed);
  std::vector<u32> ker1 = kernel_coset(table, pow_u64(p, i + k));
  std::vector<u32> ker2 = kernel_coset(table, pow_u64(p, j + k));
  rep.well_defined_ok = true;
  for (int t = 0; t < well_defined_trials; ++t) {
    const u32 x = idx1[rng.uniform(idx1.size())];
    const u32 y = idx2[rng.uniform(idx2.size())];
    const u32 h1 = ker1[rng.uniform(ker1.size())];
    const u32 h2 = ker2[rng.uniform(ker2.size())];
    if (commutator(table.mult(x, h1), y) != commutator(x, y) ||
        commutator(x, table.mult(y, h2)) != commutator(x, y)) {
      rep.well_defined_ok = false;
      break;
    }
  }
  return rep;
}

}  // namespace slq
