#pragma once

#include <complex>
#include <unordered_map>

#include "slq/lie.hpp"
#include "slq/walks.hpp"

namespace slq {

using Complex = std::complex<double>;

/// Probability distribution on sl_d(Z/qZ), kept as exact rational masses
/// over a common denominator (sparse, indexed by radix-q coordinates) with
/// a dense double view materialized for transforms.
struct LieDist {
  Modulus q;
  int d;
  Int den;
  std::unordered_map<u64, Int> num;  // coordinate index -> numerator

  u64 space_size() const;  // q^(d^2-1)
  u64 support_size() const;
  Rational mass_at(const LieVec& v) const;
  Rational total() const;
  Rational l2_norm_sq() const;
};

u64 coord_index(const LieVec& v);
LieVec vec_of_index(int d, const Modulus& q, u64 index);

LieDist lie_delta(int d, const Modulus& q, const LieVec& v);

/// Push-forward of the l-step walk through g -> g v0 g^-1.
/// Requires p not dividing v0 for every prime p | q.
LieDist pushforward(const GroupTable& table, int l, const LieVec& v0);

/// nu^(b) = sum_v mass(v) e(<v, b> / q) with the coordinate pairing.
Complex fourier_coeff(const LieDist& dist, const std::vector<u64>& b);

constexpr u64 kDenseTransformCap = 4'000'000;

std::vector<double> to_dense(const LieDist& dist, u64 cap = kDenseTransformCap);

/// Full transform over (Z/q)^(d^2-1), axis by axis (naive per-axis DFT).
std::vector<Complex> dft_full(const std::vector<double>& dense, u64 q, int dim);
std::vector<Complex> dft_full(const std::vector<Complex>& data, u64 q, int dim,
                              bool inverse);

struct DecayRow {
  int l;
  double max_nontrivial;  // max_{b != 0} |nu^(b)|
  double l2_norm;
  u64 support;
};

std::vector<DecayRow> decay_profile(const GroupTable& table, const LieVec& v0,
                                    const std::vector<int>& l_list);

/// Exact additive convolution (a [+] b)(v) = sum_w a(v - w) b(w); sparse,
/// capped by the product of support sizes.
LieDist additive_convolve(const LieDist& a, const LieDist& b,
                          u64 work_cap = 20'000'000);

/// C-fold additive self-convolution through the transform (pointwise power,
/// inverse transform); floating-point, for sizes where the exact route is
/// out of reach.
std::vector<double> convolution_power_dense(const LieDist& dist, int c,
                                            u64 cap = kDenseTransformCap);

struct ParsevalCheck {
  double lhs;  // sum of squared masses
  double rhs;  // q^-(d^2-1) * sum |nu^|^2
  bool equal;  // to 1e-10
};

ParsevalCheck parseval_check(const LieDist& dist);

/// |supp(mu)| * ||mu||_2^2 >= 1, exactly (the Cauchy-Schwarz support bound).
bool support_bound_holds(const LieDist& dist);

}  // namespace slq
