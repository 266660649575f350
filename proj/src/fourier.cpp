#include "slq/fourier.hpp"

#include <cmath>
#include <numbers>

namespace slq {

namespace {

u64 pow_u64_checked(u64 base, int e, u64 cap) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / base) throw TooLarge("coordinate space exceeds cap");
    r *= base;
  }
  return r;
}

}  // namespace

u64 LieDist::space_size() const {
  return pow_u64_checked(q.q(), d * d - 1, UINT64_MAX / 2);
}

u64 LieDist::support_size() const {
  u64 n = 0;
  for (const auto& [idx, c] : num)
    if (c != 0) ++n;
  return n;
}

Rational LieDist::mass_at(const LieVec& v) const {
  auto it = num.find(coord_index(v));
  if (it == num.end()) return Rational(0);
  Rational r(it->second, den);
  r.canonicalize();
  return r;
}

Rational LieDist::total() const {
  Int acc = 0;
  for (const auto& [idx, c] : num) acc += c;
  Rational r(acc, den);
  r.canonicalize();
  return r;
}

Rational LieDist::l2_norm_sq() const {
  Int acc = 0;
  for (const auto& [idx, c] : num) acc += c * c;
  Rational r(acc, den * den);
  r.canonicalize();
  return r;
}

u64 coord_index(const LieVec& v) {
  const u64 q = v.mod.q();
  std::vector<u64> c = lie_coords(v);
  u64 idx = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) idx = idx * q + *it;
  return idx;
}

LieVec vec_of_index(int d, const Modulus& q, u64 index) {
  const int dim = d * d - 1;
  std::vector<u64> c(dim);
  for (int i = 0; i < dim; ++i) {
    c[i] = index % q.q();
    index /= q.q();
  }
  return lie_from_coords(d, q, c);
}

LieDist lie_delta(int d, const Modulus& q, const LieVec& v) {
  LieDist dist{q, d, Int(1), {}};
  dist.num[coord_index(v)] = 1;
  return dist;
}

LieDist pushforward(const GroupTable& table, int l, const LieVec& v0) {
  if (!(v0.mod == table.modulus()) || v0.d() != table.d())
    throw Mismatch("pushforward: v0 modulus or dimension mismatch");
  for (const auto& f : table.modulus().factors())
    if (mod_entry_gcd(v0.as_mat()) % f.p == 0)
      throw ZeroInput("pushforward: v0 divisible by a prime of q");

  Measure walk = walk_distribution(table, l);
  LieDist dist{table.modulus(), table.d(), Int(1), {}};
  Int kpow(static_cast<unsigned long>(table.degree()));
  mpz_pow_ui(dist.den.get_mpz_t(), kpow.get_mpz_t(), static_cast<unsigned long>(l));
  for (u32 i = 0; i < table.size(); ++i) {
    if (walk.mass[i] == 0) continue;
    // walk masses share the denominator k^l; recover the numerator
    Int numer = walk.mass[i].get_num() * (dist.den / walk.mass[i].get_den());
    LieVec image = conj_action(table.element(i), v0);
    dist.num[coord_index(image)] += numer;
  }
  return dist;
}

Complex fourier_coeff(const LieDist& dist, const std::vector<u64>& b) {
  const u64 q = dist.q.q();
  const int dim = dist.d * dist.d - 1;
  if (static_cast<int>(b.size()) != dim)
    throw Mismatch("fourier_coeff: frequency has wrong dimension");
  const double den = dist.den.get_d();
  Complex acc(0.0, 0.0);
  for (const auto& [idx, c] : dist.num) {
    u64 rest = idx;
    u64 phase = 0;
    for (int i = 0; i < dim; ++i) {
      phase = (phase + (rest % q) * (b[i] % q)) % q;
      rest /= q;
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) /
                         static_cast<double>(q);
    acc += (c.get_d() / den) * Complex(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::vector<double> to_dense(const LieDist& dist, u64 cap) {
  const u64 size = dist.space_size();
  if (size > cap) throw TooLarge("to_dense: coordinate space exceeds cap");
  std::vector<double> dense(size, 0.0);
  const double den = dist.den.get_d();
  for (const auto& [idx, c] : dist.num) dense[idx] += c.get_d() / den;
  return dense;
}

std::vector<Complex> dft_full(const std::vector<Complex>& data, u64 q, int dim,
                              bool inverse) {
  const u64 n = data.size();
  std::vector<Complex> cur = data;
  std::vector<Complex> roots(q);
  const double sign = inverse ? -1.0 : 1.0;
  for (u64 r = 0; r < q; ++r) {
    const double angle =
        sign * 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
    roots[r] = Complex(std::cos(angle), std::sin(angle));
  }
  std::vector<Complex> slab(q), out(q);
  u64 stride = 1;
  for (int axis = 0; axis < dim; ++axis) {
    const u64 block = stride * q;
    for (u64 base = 0; base < n; base += block) {
      for (u64 off = 0; off < stride; ++off) {
        for (u64 t = 0; t < q; ++t) slab[t] = cur[base + off + t * stride];
        for (u64 f = 0; f < q; ++f) {
          Complex acc(0.0, 0.0);
          u64 ft = 0;
          for (u64 t = 0; t < q; ++t) {
            acc += slab[t] * roots[ft];
            ft += f;
            if (ft >= q) ft -= q;
          }
          out[f] = acc;
        }
        for (u64 f = 0; f < q; ++f) cur[base + off + f * stride] = out[f];
      }
    }
    stride *= q;
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (Complex& c : cur) c *= scale;
  }
  return cur;
}

std::vector<Complex> dft_full(const std::vector<double>& dense, u64 q, int dim) {
  std::vector<Complex> data(dense.begin(), dense.end());
  return dft_full(data, q, dim, false);
}

std::vector<DecayRow> decay_profile(const GroupTable& table, const LieVec& v0,
                                    const std::vector<int>& l_list) {
  const u64 q = table.modulus().q();
  const int dim = table.d() * table.d() - 1;
  std::vector<DecayRow> rows;
  for (int l : l_list) {
    LieDist dist = pushforward(table, l, v0);
    std::vector<Complex> hat = dft_full(to_dense(dist), q, dim);
    double max_nontrivial = 0.0;
    for (std::size_t b = 1; b < hat.size(); ++b)
      max_nontrivial = std::max(max_nontrivial, std::abs(hat[b]));
    rows.push_back({l, max_nontrivial, std::sqrt(dist.l2_norm_sq().get_d()),
                    dist.support_size()});
  }
  return rows;
}

LieDist additive_convolve(const LieDist& a, const LieDist& b, u64 work_cap) {
  if (!(a.q == b.q) || a.d != b.d)
    throw Mismatch("additive_convolve: distributions over different spaces");
  const u64 work = static_cast<u64>(a.num.size()) * b.num.size();
  if (work > work_cap)
    throw TooLarge("additive_convolve: use convolution_power_dense instead");
  const u64 q = a.q.q();
  const int dim = a.d * a.d - 1;
  LieDist out{a.q, a.d, a.den * b.den, {}};
  for (const auto& [ia, ca] : a.num)
    for (const auto& [ib, cb] : b.num) {
      // coordinatewise addition in radix q
      u64 ra = ia, rb = ib, idx = 0, mult = 1;
      for (int i = 0; i < dim; ++i) {
        idx += ((ra % q) + (rb % q)) % q * mult;
        mult *= q;
        ra /= q;
        rb /= q;
      }
      out.num[idx] += ca * cb;
    }
  return out;
}

std::vector<double> convolution_power_dense(const LieDist& dist, int c, u64 cap) {
  if (c < 1) throw ConfigError("convolution_power_dense: c must be >= 1");
  const u64 q = dist.q.q();
  const int dim = dist.d * dist.d - 1;
  std::vector<Complex> hat = dft_full(to_dense(dist, cap), q, dim);
  for (Complex& h : hat) h = std::pow(h, c);
  std::vector<Complex> back = dft_full(hat, q, dim, true);
  std::vector<double> out(back.size());
  for (std::size_t i = 0; i < back.size(); ++i) out[i] = back[i].real();
  return out;
}

ParsevalCheck parseval_check(const LieDist& dist) {
  const u64 q = dist.q.q();
  const int dim = dist.d * dist.d - 1;
  std::vector<Complex> hat = dft_full(to_dense(dist), q, dim);
  double rhs = 0.0;
  for (const Complex& h : hat) rhs += std::norm(h);
  rhs /= static_cast<double>(dist.space_size());
  const double lhs = dist.l2_norm_sq().get_d();
  return {lhs, rhs, std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, lhs)};
}

bool support_bound_holds(const LieDist& dist) {
  return Rational(static_cast<unsigned long>(dist.support_size())) *
             dist.l2_norm_sq() >=
         1;
}

}  // namespace slq
