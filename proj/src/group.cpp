#include "slq/group.hpp"

#include <algorithm>
#include <map>

namespace slq {

GeneratorSet GeneratorSet::make(std::vector<IntMat> gens, bool symmetrize) {
  if (gens.empty()) throw ConfigError("GeneratorSet: no generators");
  GeneratorSet S;
  S.d = static_cast<int>(gens[0].rows());
  for (const IntMat& g : gens) {
    if (g.rows() != S.d || g.cols() != S.d)
      throw ConfigError("GeneratorSet: inconsistent dimensions");
    if (!is_unimodular(g))
      throw ConfigError("GeneratorSet: generator with det != 1");
  }
  S.gens = std::move(gens);
  if (symmetrize) {
    std::vector<IntMat> closed = S.gens;
    for (const IntMat& g : S.gens) {
      IntMat inv = int_inverse(g);
      bool dup = false;
      for (const IntMat& h : closed)
        if (int_eq(h, inv)) {
          dup = true;
          break;
        }
      if (!dup) closed.push_back(std::move(inv));
    }
    S.gens = std::move(closed);
    S.symmetrized = true;
  }
  return S;
}

GroupTable::GroupTable(const GeneratorSet& S, const Modulus& q, u64 cap)
    : q_(q), d_(S.d) {
  for (const IntMat& g : S.gens) gens_.push_back(project(g, q_));
  const int k = degree();
  const int dd = d_ * d_;

  // distinct projected generators drive the BFS; duplicate slots share the
  // action arrays afterwards
  std::vector<int> rep_slot(k);
  std::vector<int> distinct;
  for (int s = 0; s < k; ++s) {
    rep_slot[s] = -1;
    for (int t : distinct)
      if (gens_[t] == gens_[s]) {
        rep_slot[s] = t;
        break;
      }
    if (rep_slot[s] < 0) {
      rep_slot[s] = s;
      distinct.push_back(s);
    }
  }

  auto append = [&](const ModMat& m) {
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) elems_.push_back(m.e(i, j));
    ++n_;
  };

  ModMat id = mod_identity(d_, q_);
  index_.emplace(pack_key(id), 0);
  append(id);

  // BFS over right multiplication; heads are processed in index order, so
  // each distinct generator's action array grows one entry per head
  right_act_.assign(k, {});
  for (u32 head = 0; head < n_; ++head) {
    ModMat cur = element(head);
    for (int s : distinct) {
      ModMat next = mod_mul(cur, gens_[s]);
      auto [it, inserted] = index_.emplace(pack_key(next), static_cast<u32>(n_));
      if (inserted) {
        if (n_ >= cap) throw TooLarge("GroupTable: enumeration cap exceeded");
        append(next);
      }
      right_act_[s].push_back(it->second);
    }
  }
  for (int t = 0; t < k; ++t)
    if (rep_slot[t] != t) right_act_[t] = right_act_[rep_slot[t]];

  // inverses via the adjugate (group elements have det = 1)
  inv_idx_.resize(n_);
  for (u32 i = 0; i < n_; ++i) inv_idx_[i] = index_of(mod_inv(element(i)));

  // left actions via lookup
  left_act_.assign(k, std::vector<u32>(n_));
  for (int s : distinct) {
    for (u32 i = 0; i < n_; ++i)
      left_act_[s][i] = index_of(mod_mul(gens_[s], element(i)));
    for (int t = 0; t < k; ++t)
      if (t != s && rep_slot[t] == s) left_act_[t] = left_act_[s];
  }
}

ModMat GroupTable::element(u32 i) const {
  ResidueMat e(d_, d_);
  const u64* p = raw(i);
  for (int r = 0; r < d_; ++r)
    for (int c = 0; c < d_; ++c) e(r, c) = p[r * d_ + c];
  return ModMat(q_, std::move(e));
}

std::optional<u32> GroupTable::find(const ModMat& m) const {
  auto it = index_.find(pack_key(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

u32 GroupTable::index_of(const ModMat& m) const {
  auto idx = find(m);
  if (!idx) throw Error("GroupTable: element not in table");
  return *idx;
}

u32 GroupTable::mult(u32 i, u32 j) const {
  if (!mult_cache_.empty())
    return mult_cache_[static_cast<std::size_t>(i) * n_ + j];
  return index_of(mod_mul(element(i), element(j)));
}

const std::vector<u32>* GroupTable::mult_cache(u64 cap) const {
  if (!mult_cache_.empty()) return &mult_cache_;
  const u64 need = static_cast<u64>(n_) * n_;
  if (need > cap) return nullptr;
  mult_cache_.resize(need);
  for (u32 i = 0; i < n_; ++i) {
    ModMat a = element(i);
    for (u32 j = 0; j < n_; ++j)
      mult_cache_[static_cast<std::size_t>(i) * n_ + j] =
          index_of(mod_mul(a, element(j)));
  }
  return &mult_cache_;
}

bool is_full(const GroupTable& table, int d) {
  return Int(table.size()) == group_order(d, table.modulus());
}

std::vector<u32> kernel_coset(const GroupTable& table, u64 qp) {
  if (table.modulus().q() % qp != 0)
    throw NotADivisor("kernel_coset: q' does not divide q");
  Modulus sub(qp);
  ModMat id = mod_identity(table.d(), sub);
  std::vector<u32> out;
  for (u32 i = 0; i < table.size(); ++i)
    if (mod_reduce(table.element(i), sub) == id) out.push_back(i);
  return out;
}

namespace {

struct IntMatLess {
  bool operator()(const IntMat& a, const IntMat& b) const {
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) {
        int c = cmp(a(i, j), b(i, j));
        if (c != 0) return c < 0;
      }
    return false;
  }
};

}  // namespace

Int word_entry_bound(const GeneratorSet& S, int length, u64 cap) {
  if (length < 0) throw ConfigError("word_entry_bound: negative length");
  std::vector<IntMat> level{int_identity(S.d)};
  for (int step = 0; step < length; ++step) {
    std::map<IntMat, bool, IntMatLess> next;
    for (const IntMat& m : level)
      for (const IntMat& g : S.gens) next.emplace(int_mul(m, g), true);
    if (next.size() > cap) throw TooLarge("word_entry_bound: word set cap exceeded");
    level.clear();
    for (auto& kv : next) level.push_back(kv.first);
  }
  Int best = 0;
  for (const IntMat& m : level) {
    Int v = max_abs_entry(m);
    if (v > best) best = v;
  }
  return best;
}

WordDistribution word_distribution(const GeneratorSet& S, int length, u64 cap) {
  if (length < 0) throw ConfigError("word_distribution: negative length");
  std::map<IntMat, Int, IntMatLess> cur;
  cur.emplace(int_identity(S.d), 1);
  for (int step = 0; step < length; ++step) {
    std::map<IntMat, Int, IntMatLess> next;
    for (const auto& [m, c] : cur)
      for (const IntMat& g : S.gens) next[int_mul(m, g)] += c;
    if (next.size() > cap) throw TooLarge("word_distribution: word set cap exceeded");
    cur = std::move(next);
  }
  WordDistribution out;
  out.total = 1;
  Int k(static_cast<unsigned long>(S.gens.size()));
  mpz_pow_ui(out.total.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(length));
  for (auto& [m, c] : cur) {
    out.values.push_back(m);
    out.counts.push_back(c);
  }
  return out;
}

}  // namespace slq
