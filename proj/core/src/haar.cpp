/*
   Copyright 2026 The qeccov Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qeccov/haar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "qeccov/qec.hpp"

namespace qeccov {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline std::array<std::uint32_t, 4> philox_round(const std::array<std::uint32_t, 4>& c,
                                                 const std::array<std::uint32_t, 2>& k) {
  std::uint32_t hi0, lo0, hi1, lo1;
  mulhilo(kPhiloxM0, c[0], hi0, lo0);
  mulhilo(kPhiloxM1, c[2], hi1, lo1);
  return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(const std::array<std::uint32_t, 4>& counter,
                                               const std::array<std::uint32_t, 2>& key) {
  std::array<std::uint32_t, 4> c = counter;
  std::array<std::uint32_t, 2> k = key;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kPhiloxW0;
      k[1] += kPhiloxW1;
    }
    c = philox_round(c, k);
  }
  return c;
}

Philox4x32::Philox4x32(std::uint64_t key, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)},
      stream_(stream),
      block_(0),
      cursor_(4) {}

void Philox4x32::refill() {
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
  buffer_ = block(counter, key_);
  ++block_;
  cursor_ = 0;
}

Philox4x32::result_type Philox4x32::operator()() {
  // Two 32-bit words per draw; a block holds exactly two draws.
  if (cursor_ > 2) refill();
  const std::uint32_t lo = buffer_[cursor_];
  const std::uint32_t hi = buffer_[cursor_ + 1];
  cursor_ += 2;
  return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

Philox4x32 sample_stream(std::uint64_t seed, std::uint64_t sample_index) {
  return Philox4x32(seed, sample_index);
}

Matrix haar_unitary(Index d, Philox4x32& rng) {
  if (d < 1) throw dimension_error("haar_unitary: d must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix u = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    u.col(j) *= mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
  }
  return u;
}

SeededEnsemble::SeededEnsemble(Index d_L_, Index d_A_, std::uint64_t seed_, long samples_)
    : d_L(d_L_), d_A(d_A_), d_S(d_L_ * d_A_), seed(seed_), samples(samples_) {
  if (d_L < 1 || d_A < 1) throw dimension_error("SeededEnsemble: dims must be >= 1");
  if (samples < 1) throw dimension_error("SeededEnsemble: samples must be >= 1");
}

Isometry code_from_unitary(const Matrix& u, Index d_L, Index d_A) {
  const Index d_s = d_L * d_A;
  if (u.rows() != d_s || u.cols() != d_s)
    throw dimension_error("code_from_unitary: U must be d_S x d_S with d_S = d_L*d_A");
  Matrix w(d_s, d_L);
  for (Index l = 0; l < d_L; ++l) w.col(l) = u.col(l * d_A);
  return Isometry(std::move(w));
}

Isometry random_code(const SeededEnsemble& ens, long index) {
  if (index < 0 || index >= ens.samples)
    throw dimension_error("random_code: sample index out of range");
  Philox4x32 rng = sample_stream(ens.seed, static_cast<std::uint64_t>(index));
  return code_from_unitary(haar_unitary(ens.d_S, rng), ens.d_L, ens.d_A);
}

Matrix haar_moment_1(const Matrix& a, Index d) {
  if (a.rows() != d || a.cols() != d)
    throw dimension_error("haar_moment_1: A must be d x d");
  return (a.trace() / static_cast<double>(d)) * identity(d);
}

Matrix haar_moment_partial(const Matrix& x_ab, Index d_A) {
  if (d_A < 1 || x_ab.rows() != x_ab.cols() || x_ab.rows() % d_A != 0)
    throw dimension_error("haar_moment_partial: dim of X must be a multiple of d_A");
  const Index d_B = x_ab.rows() / d_A;
  const Matrix tr_a = partial_trace(x_ab, {d_A, d_B}, {1});
  return kron(identity(d_A) / static_cast<double>(d_A), tr_a);
}

Matrix haar_moment_uu(const Matrix& a, Index d) {
  if (d < 2) throw dimension_error("haar_moment_uu: needs d >= 2");
  if (a.rows() != d * d || a.cols() != d * d)
    throw dimension_error("haar_moment_uu: A must be d^2 x d^2");
  const Matrix f = swap_operator(d);
  const double dd = static_cast<double>(d);
  const double den = dd * dd - 1.0;
  const Complex tr_a = a.trace();
  const Complex tr_af = (a * f).trace();
  const Complex c1 = tr_a / den - tr_af / (dd * den);
  const Complex cf = tr_af / den - tr_a / (dd * den);
  return c1 * identity(d * d) + cf * f;
}

Matrix haar_moment_sandwich(const Matrix& a, const Matrix& b, const Matrix& x, Index d) {
  if (d < 2) throw dimension_error("haar_moment_sandwich: needs d >= 2");
  if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d || x.rows() != d ||
      x.cols() != d)
    throw dimension_error("haar_moment_sandwich: operands must be d x d");
  const double dd = static_cast<double>(d);
  const double den = dd * (dd * dd - 1.0);
  const Complex tr_ab = (a * b).trace();
  const Complex tr_a = a.trace();
  const Complex tr_b = b.trace();
  const Complex c1 = (dd * tr_ab - tr_a * tr_b) / den * x.trace();
  const Complex cx = (dd * tr_a * tr_b - tr_ab) / den;
  return c1 * identity(d) + cx * x;
}

double avg_infidelity_analytic(const KrausChannel& noise, Index d_L, Index d_S) {
  if (noise.d_in() != d_S || noise.d_out() != d_S)
    throw dimension_error("avg_infidelity_analytic: noise must act on d_S");
  if (d_S < 2) throw dimension_error("avg_infidelity_analytic: needs d_S >= 2");
  const double n = static_cast<double>(noise.size());
  const double dl = static_cast<double>(d_L);
  const double ds = static_cast<double>(d_S);
  double sum = 0.0;
  for (Index i = 0; i < noise.size(); ++i)
    for (Index j = 0; j < noise.size(); ++j) {
      const Matrix mij = noise[i].adjoint() * noise[j];
      sum += (mij * mij.adjoint()).trace().real() - std::norm(mij.trace()) / ds;
    }
  const double value = n * (dl * dl - 1.0) / (4.0 * dl * (ds * ds - 1.0)) * sum;
  return value < 0.0 && value > -1e-12 ? 0.0 : value;
}

double avg_noncovariance_analytic(const HermitianOperator& h_L,
                                  const HermitianOperator& h_S, Index d_L, Index d_S) {
  if (h_L.dim() != d_L || h_S.dim() != d_S)
    throw dimension_error("avg_noncovariance_analytic: Hamiltonian dims must match");
  if (d_S < 2) throw dimension_error("avg_noncovariance_analytic: needs d_S >= 2");
  const double dl = static_cast<double>(d_L);
  const double ds = static_cast<double>(d_S);
  const double tr_hl = h_L.matrix().trace().real();
  const double tr_hl2 = (h_L.matrix() * h_L.matrix()).trace().real();
  const double tr_hs = h_S.matrix().trace().real();
  const double tr_hs2 = (h_S.matrix() * h_S.matrix()).trace().real();
  const double logical_part = (dl * tr_hl2 - tr_hl * tr_hl) / (dl * dl);
  const double physical_part =
      ((dl * ds * ds - ds) * tr_hs2 - (dl * ds - 1.0) * tr_hs * tr_hs) /
      (dl * ds * (ds * ds - 1.0));
  const double value = logical_part + physical_part;
  return value < 0.0 && value > -1e-12 ? 0.0 : value;
}

namespace {

// Entrywise MC accumulator for matrix-valued twirls.
struct EntryStats {
  Eigen::ArrayXXd sum_re, sum_im, sq_re, sq_im;
  long n = 0;

  explicit EntryStats(Index d)
      : sum_re(Eigen::ArrayXXd::Zero(d, d)),
        sum_im(Eigen::ArrayXXd::Zero(d, d)),
        sq_re(Eigen::ArrayXXd::Zero(d, d)),
        sq_im(Eigen::ArrayXXd::Zero(d, d)) {}

  void add(const Matrix& m) {
    sum_re += m.real().array();
    sum_im += m.imag().array();
    sq_re += m.real().array().square();
    sq_im += m.imag().array().square();
    ++n;
  }

  double max_z(const Matrix& exact) const {
    double worst = 0.0;
    const double dn = static_cast<double>(n);
    for (Index i = 0; i < exact.rows(); ++i)
      for (Index j = 0; j < exact.cols(); ++j) {
        const double mre = sum_re(i, j) / dn;
        const double mim = sum_im(i, j) / dn;
        const double vre = std::max(0.0, (sq_re(i, j) - dn * mre * mre) / (dn - 1.0));
        const double vim = std::max(0.0, (sq_im(i, j) - dn * mim * mim) / (dn - 1.0));
        const double se_re = std::sqrt(vre / dn);
        const double se_im = std::sqrt(vim / dn);
        const double dre = std::abs(mre - exact(i, j).real());
        const double dim = std::abs(mim - exact(i, j).imag());
        worst = std::max(worst, se_re > 0.0 ? dre / se_re : (dre > 1e-12 ? 1e12 : 0.0));
        worst = std::max(worst, se_im > 0.0 ? dim / se_im : (dim > 1e-12 ? 1e12 : 0.0));
      }
    return worst;
  }
};

// Ginibre draw local to the moment check so the operands are reproducible
// from the seed alone.
Matrix moment_operand(Index rows, Index cols, Philox4x32& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

}  // namespace

std::vector<MomentCheck> haar_moment_mc_check(const std::vector<Index>& dims, long samples,
                                              std::uint64_t seed) {
  if (samples < 2) throw dimension_error("haar_moment_mc_check: needs samples >= 2");
  std::vector<MomentCheck> out;
  std::uint64_t stream = 0;
  for (Index d : dims) {
    if (d < 2) throw dimension_error("haar_moment_mc_check: needs d >= 2");
    auto oprng = sample_stream(seed ^ 0x9e3779b97f4a7c15ull, stream++);
    const Matrix a = moment_operand(d, d, oprng);
    const Matrix b = moment_operand(d, d, oprng);
    const Matrix x = moment_operand(d, d, oprng);
    const Index d_b = 2;
    const Matrix x_ab = moment_operand(d * d_b, d * d_b, oprng);
    const Matrix a_uu = moment_operand(d * d, d * d, oprng);

    EntryStats st1(d), st2(d * d_b), st3(d * d), st4(d);
    const Matrix eye_b = identity(d_b);
    for (long i = 0; i < samples; ++i) {
      auto rng = sample_stream(seed, stream + static_cast<std::uint64_t>(i));
      const Matrix u = haar_unitary(d, rng);
      const Matrix udag = u.adjoint();
      st1.add(u * a * udag);
      const Matrix ub = kron(u, eye_b);
      st2.add(ub * x_ab * ub.adjoint());
      const Matrix uu = kron(u, u);
      st3.add(uu * a_uu * uu.adjoint());
      st4.add(u * a * udag * x * u * b * udag);
    }
    stream += static_cast<std::uint64_t>(samples);

    out.push_back(MomentCheck{1, d, samples, st1.max_z(haar_moment_1(a, d))});
    out.push_back(MomentCheck{2, d, samples, st2.max_z(haar_moment_partial(x_ab, d))});
    out.push_back(MomentCheck{3, d, samples, st3.max_z(haar_moment_uu(a_uu, d))});
    out.push_back(MomentCheck{4, d, samples, st4.max_z(haar_moment_sandwich(a, b, x, d))});
  }
  return out;
}

double pairwise_sum(const double* xs, long n) {
  if (n <= 8) {
    double acc = 0.0;
    for (long i = 0; i < n; ++i) acc += xs[i];
    return acc;
  }
  const long half = n / 2;
  return pairwise_sum(xs, half) + pairwise_sum(xs + half, n - half);
}

MCEstimate mc_average(McQuantity quantity, const SeededEnsemble& ens,
                      const McContext& context, int workers) {
  double analytic = 0.0;
  if (quantity == McQuantity::infidelity_sq) {
    if (!context.noise) throw dimension_error("mc_average: infidelity_sq needs a noise channel");
    analytic = avg_infidelity_analytic(*context.noise, ens.d_L, ens.d_S);
  } else {
    if (!context.u1) throw dimension_error("mc_average: noncovariance needs a U(1) pair");
    if (context.u1->d_L() != ens.d_L || context.u1->d_S() != ens.d_S)
      throw dimension_error("mc_average: U(1) dims must match the ensemble");
    analytic = avg_noncovariance_analytic(context.u1->h_L(), context.u1->h_S(), ens.d_L,
                                          ens.d_S);
  }

  const long n = ens.samples;
  std::vector<double> values(static_cast<size_t>(n));
  auto evaluate = [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      const Isometry w = random_code(ens, i);
      if (quantity == McQuantity::infidelity_sq) {
        values[static_cast<size_t>(i)] =
            infidelity_closed_form(CodeNoisePair(w, *context.noise)).epsilon_sq;
      } else {
        values[static_cast<size_t>(i)] = noncovariance(w.channel(), *context.u1);
      }
    }
  };

  if (workers <= 1) {
    evaluate(0, n);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (n + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
      const long begin = t * chunk;
      const long end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(evaluate, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  const double mean = pairwise_sum(values.data(), n) / static_cast<double>(n);
  double std_error = 0.0;
  if (n > 1) {
    std::vector<double> sq(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
      const double dev = values[static_cast<size_t>(i)] - mean;
      sq[static_cast<size_t>(i)] = dev * dev;
    }
    const double var = pairwise_sum(sq.data(), n) / static_cast<double>(n - 1);
    std_error = std::sqrt(var / static_cast<double>(n));
  }

  double z = 0.0;
  if (std_error > 0.0) {
    z = (mean - analytic) / std_error;
  } else if (std::abs(mean - analytic) > 1e-12) {
    z = std::copysign(std::numeric_limits<double>::infinity(), mean - analytic);
  }
  return MCEstimate{mean, std_error, n, analytic, z};
}

}  // namespace qeccov
