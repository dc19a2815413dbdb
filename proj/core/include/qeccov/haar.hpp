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

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>

#include "qeccov/channels.hpp"
#include "qeccov/covariance.hpp"

namespace qeccov {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11 constants).
/// A (key, stream) pair addresses an independent 2^64-block stream, so
/// per-sample streams can be derived without any sequential jumping; usable
/// as a std uniform random bit generator.
class Philox4x32 {
 public:
  using result_type = std::uint64_t;

  explicit Philox4x32(std::uint64_t key, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// One raw 10-round block; exposed for known-answer tests.
  static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                            const std::array<std::uint32_t, 2>& key);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_;
  std::array<std::uint32_t, 4> buffer_;
  int cursor_;
};

/// Independent stream for one Monte Carlo sample: chunking work across any
/// number of workers cannot change the draws.
Philox4x32 sample_stream(std::uint64_t seed, std::uint64_t sample_index);

/// Haar-distributed unitary: complex Ginibre matrix, QR factorization, then
/// the R-diagonal phase correction (plain QR alone is biased).
Matrix haar_unitary(Index d, Philox4x32& rng);

/// Random-code ensemble on S = L (x) A: W = U (1_L (x) |0>_A) with U Haar
/// on d_S = d_L * d_A.
struct SeededEnsemble {
  Index d_L;
  Index d_A;
  Index d_S;  // = d_L * d_A
  std::uint64_t seed;
  long samples;

  SeededEnsemble(Index d_L, Index d_A, std::uint64_t seed, long samples);
};

/// W = U (1_L (x) |0>_A): columns l*d_A of U.
Isometry code_from_unitary(const Matrix& u, Index d_L, Index d_A);

/// Deterministic function of (ens.seed, index).
Isometry random_code(const SeededEnsemble& ens, long index);

// Closed forms of the first and second Haar moments. Items 3 and 4 need
// d >= 2 (the d^2 - 1 denominators).
Matrix haar_moment_1(const Matrix& a, Index d);
Matrix haar_moment_partial(const Matrix& x_ab, Index d_A);
Matrix haar_moment_uu(const Matrix& a, Index d);
Matrix haar_moment_sandwich(const Matrix& a, const Matrix& b, const Matrix& x, Index d);

/// Haar average of the squared infidelity over the random-code ensemble.
double avg_infidelity_analytic(const KrausChannel& noise, Index d_L, Index d_S);

/// Haar average of the U(1) noncovariance over the random-code ensemble.
double avg_noncovariance_analytic(const HermitianOperator& h_L,
                                  const HermitianOperator& h_S, Index d_L, Index d_S);

enum class McQuantity { infidelity_sq, noncovariance };

struct MCEstimate {
  double mean;
  double std_error;  // sample standard deviation / sqrt(samples)
  long samples;
  double analytic;
  double z_score;  // (mean - analytic)/std_error when std_error > 0
};

struct McContext {
  std::optional<KrausChannel> noise;  // for infidelity_sq
  std::optional<U1Spec> u1;           // for noncovariance
};

/// Monte Carlo estimate of the chosen quantity over the ensemble, compared
/// against the matching analytic average. Per-sample Philox streams plus a
/// pairwise reduction in sample-index order make the result independent of
/// the worker count.
MCEstimate mc_average(McQuantity quantity, const SeededEnsemble& ens,
                      const McContext& context, int workers = 1);

/// Pairwise (cascade) sum; deterministic and low-drift.
double pairwise_sum(const double* xs, long n);

struct MomentCheck {
  int item;  // 1..4, matching the four closed forms above
  Index d;
  long samples;
  double max_z;  // worst entrywise z-score, real and imaginary parts separately
};

/// Monte Carlo cross-check of all four moment closed forms on random
/// operands: samples the twirls with per-sample streams and reports the
/// worst entrywise z-score per (item, d).
std::vector<MomentCheck> haar_moment_mc_check(const std::vector<Index>& dims, long samples,
                                              std::uint64_t seed);

}  // namespace qeccov
