#include "slq/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slq {

SubsetHandle subset_empty(const GroupTable& t) {
  return {&t, boost::dynamic_bitset<>(t.size())};
}

SubsetHandle subset_full(const GroupTable& t) {
  SubsetHandle s{&t, boost::dynamic_bitset<>(t.size())};
  s.bits.set();
  return s;
}

SubsetHandle subset_of(const GroupTable& t, const std::vector<u32>& indices) {
  SubsetHandle s{&t, boost::dynamic_bitset<>(t.size())};
  for (u32 i : indices) {
    if (i >= t.size()) throw Mismatch("subset_of: index out of range");
    s.bits.set(i);
  }
  return s;
}

SubsetHandle subset_random(const GroupTable& t, u64 size, Rng& rng) {
  if (size > t.size()) throw Mismatch("subset_random: size exceeds group order");
  std::vector<u32> pool(t.size());
  std::iota(pool.begin(), pool.end(), 0u);
  SubsetHandle s{&t, boost::dynamic_bitset<>(t.size())};
  for (u64 i = 0; i < size; ++i) {
    u64 j = i + rng.uniform(pool.size() - i);
    std::swap(pool[i], pool[j]);
    s.bits.set(pool[i]);
  }
  return s;
}

std::vector<u32> subset_indices(const SubsetHandle& a) {
  std::vector<u32> out;
  for (auto i = a.bits.find_first(); i != boost::dynamic_bitset<>::npos;
       i = a.bits.find_next(i))
    out.push_back(static_cast<u32>(i));
  return out;
}

bool subset_symmetric(const SubsetHandle& a) {
  for (auto i = a.bits.find_first(); i != boost::dynamic_bitset<>::npos;
       i = a.bits.find_next(i))
    if (!a.bits.test(a.table->inverse(static_cast<u32>(i)))) return false;
  return true;
}

SubsetHandle subset_inverse(const SubsetHandle& a) {
  SubsetHandle out{a.table, boost::dynamic_bitset<>(a.table->size())};
  for (auto i = a.bits.find_first(); i != boost::dynamic_bitset<>::npos;
       i = a.bits.find_next(i))
    out.bits.set(a.table->inverse(static_cast<u32>(i)));
  return out;
}

SubsetHandle product_set(const SubsetHandle& a, const SubsetHandle& b) {
  if (a.table != b.table) throw Mismatch("product_set: different tables");
  const GroupTable& t = *a.table;
  t.mult_cache();  // no-op when the table is too large to cache
  SubsetHandle out{&t, boost::dynamic_bitset<>(t.size())};
  for (auto i = a.bits.find_first(); i != boost::dynamic_bitset<>::npos;
       i = a.bits.find_next(i))
    for (auto j = b.bits.find_first(); j != boost::dynamic_bitset<>::npos;
         j = b.bits.find_next(j))
      out.bits.set(t.mult(static_cast<u32>(i), static_cast<u32>(j)));
  return out;
}

double tripling_exponent(const SubsetHandle& a) {
  const u64 n = a.size();
  if (n < 2) throw BadSet("tripling_exponent: |A| must be >= 2");
  SubsetHandle aaa = product_set(product_set(a, a), a);
  return std::log(static_cast<double>(aaa.size())) /
             std::log(static_cast<double>(n)) -
         1.0;
}

IterationBound iteration_bound_check(const SubsetHandle& a, int l) {
  if (l < 3) throw BadSet("iteration_bound_check: l must be >= 3");
  if (!a.bits.test(0) || !subset_symmetric(a))
    throw BadSet("iteration_bound_check: A must be symmetric and contain 1");
  SubsetHandle prod = a;
  SubsetHandle aa = product_set(a, a);
  SubsetHandle aaa = product_set(aa, a);
  prod = aaa;
  for (int i = 3; i < l; ++i) prod = product_set(prod, a);

  IterationBound out;
  out.lhs = Int(static_cast<unsigned long>(prod.size()));
  Rational ratio(static_cast<unsigned long>(aaa.size()),
                 static_cast<unsigned long>(a.size()));
  ratio.canonicalize();
  out.rhs = Rational(static_cast<unsigned long>(a.size()));
  for (int i = 0; i < l - 2; ++i) out.rhs *= ratio;
  out.ok = Rational(out.lhs) <= out.rhs;
  return out;
}

GowersReport gowers_cover_check(const SubsetHandle& b1, const SubsetHandle& b2,
                                const SubsetHandle& b3, const Int& k) {
  if (b1.table != b2.table || b1.table != b3.table)
    throw Mismatch("gowers_cover_check: different tables");
  const GroupTable& t = *b1.table;
  GowersReport rep;
  rep.lhs = k * Int(static_cast<unsigned long>(b1.size())) *
            Int(static_cast<unsigned long>(b2.size())) *
            Int(static_cast<unsigned long>(b3.size()));
  Int order(static_cast<unsigned long>(t.size()));
  rep.rhs = order * order * order;
  rep.threshold_met = rep.lhs >= rep.rhs;
  SubsetHandle prod = product_set(product_set(b1, b2), b3);
  rep.covers = (prod.size() == t.size());
  if (rep.threshold_met && !rep.covers)
    throw CoveringViolation(
        "gowers_cover_check: threshold met but product does not cover");
  return rep;
}

Int gowers_rep_dim_lower(u64 p) { return Int(static_cast<unsigned long>((p - 1) / 2)); }

}  // namespace slq
