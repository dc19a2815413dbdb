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

#include "qeccov/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include "qeccov/io.hpp"
#include "qeccov/qec.hpp"
#include "qeccov/random_inputs.hpp"
#include "qeccov/skew.hpp"

namespace qeccov {

namespace {

struct Suite {
  std::uint64_t seed;
  double scale;
  std::uint64_t stream_counter = 0;
  std::vector<CheckResult> results;

  Philox4x32 stream() { return sample_stream(seed, stream_counter++); }

  void record(const std::string& name, bool pass, const std::string& detail) {
    results.push_back(CheckResult{name, pass, detail});
  }
};

std::string deviation_detail(long count, double worst, double allowed) {
  std::ostringstream os;
  os << count << " instances, worst deviation " << worst << " (allowed " << allowed << ")";
  return os.str();
}

double rel_dev(double a, double b) {
  const double denom = std::max({std::abs(a), std::abs(b), 1e-15});
  if (std::abs(a) < 1e-12 && std::abs(b) < 1e-12) return 0.0;
  return std::abs(a - b) / denom;
}

// ---------------------------------------------------------------------- linalg

void check_psd_sqrt_roundtrip(Suite& s) {
  const double allowed = 1e-9 * s.scale;
  double worst = 0.0;
  long count = 0;
  for (Index d = 2; d <= 6; ++d) {
    auto rng = s.stream();
    for (int i = 0; i < 40; ++i) {
      const DensityMatrix rho = random_density(d, rng);
      const Matrix root = psd_sqrt(rho);
      worst = std::max(worst, max_abs(Matrix(root * root) - rho.matrix()));
      ++count;
    }
  }
  s.record("linalg/psd-sqrt-roundtrip", worst <= allowed, deviation_detail(count, worst, allowed));
}

void check_norm_order(Suite& s) {
  const double allowed = 1e-9 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  for (int i = 0; i < 200; ++i) {
    const Index d = 2 + static_cast<Index>(rng() % 5);
    Matrix m = random_ginibre(d, d, rng);
    if (i % 3 == 0) {
      // rank-deficient case
      const Vector u = random_pure(d, rng).amplitudes();
      const Vector v = random_pure(d, rng).amplitudes();
      m = u * v.adjoint();
    }
    const double n1 = one_norm(m);
    const double n2 = two_norm(m);
    Eigen::JacobiSVD<Matrix> svd(m);
    long rank = 0;
    for (Index k = 0; k < svd.singularValues().size(); ++k)
      if (svd.singularValues()(k) > 1e-10) ++rank;
    worst = std::max(worst, n2 - n1);
    worst = std::max(worst, n1 - std::sqrt(static_cast<double>(rank)) * n2);
    ++count;
  }
  s.record("linalg/norm-order", worst <= allowed, deviation_detail(count, worst, allowed));
}

void check_fidelity_trace_chain(Suite& s) {
  const double slack = 1e-9 * s.scale;
  double worst = 0.0;
  long count = 0;
  for (Index d = 2; d <= 6; ++d) {
    auto rng = s.stream();
    for (int i = 0; i < 200; ++i) {
      const DensityMatrix rho = random_density(d, rng);
      const DensityMatrix sigma = random_density(d, rng);
      const TraceFidelityGap g = trace_distance_fidelity_gap(rho, sigma);
      worst = std::max(worst, (1.0 - g.trace_distance) - g.fid);
      worst = std::max(worst,
                       g.fid - std::sqrt(std::max(0.0, 1.0 - g.trace_distance * g.trace_distance)));
      ++count;
    }
  }
  s.record("linalg/fidelity-trace-chain", worst <= slack, deviation_detail(count, worst, slack));
}

void check_partial_trace(Suite& s) {
  const double allowed = 1e-12 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  for (int i = 0; i < 60; ++i) {
    const Index da = 2 + static_cast<Index>(rng() % 2);
    const Index db = 2 + static_cast<Index>(rng() % 3);
    const Matrix a = random_ginibre(da, da, rng);
    const Matrix b = random_ginibre(db, db, rng);
    const Matrix ab = kron(a, b);
    worst = std::max(worst, max_abs(partial_trace(ab, {da, db}, {0}) - Matrix(a * b.trace())));
    worst = std::max(worst, std::abs(partial_trace(ab, {da, db}, {1}).trace() - ab.trace()));
    const Matrix three = kron(ab, a);
    worst = std::max(worst,
                     std::abs(partial_trace(three, {da, db, da}, {1}).trace() - three.trace()));
    ++count;
  }
  s.record("linalg/partial-trace", worst <= allowed, deviation_detail(count, worst, allowed));
}

// -------------------------------------------------------------------- channels

void check_choi_roundtrip(Suite& s) {
  const double allowed = 1e-8 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  for (int i = 0; i < 100; ++i) {
    const Index d_in = 2 + static_cast<Index>(rng() % 2);
    const Index d_out = 2 + static_cast<Index>(rng() % 2);
    const Index n = 1 + static_cast<Index>(rng() % 4);
    const KrausChannel chan = random_cptp(d_in, d_out, n, rng);
    const KrausChannel back = channel_of(choi_of(chan));
    for (int k = 0; k < 3; ++k) {
      const DensityMatrix rho = random_density(d_in, rng);
      worst = std::max(worst, max_abs(apply(chan, rho).matrix() - apply(back, rho).matrix()));
    }
    ++count;
  }
  s.record("channels/choi-roundtrip", worst <= allowed, deviation_detail(count, worst, allowed));
}

void check_stinespring_builtins(Suite& s) {
  const double allowed = 1e-10 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  std::vector<KrausChannel> gallery;
  gallery.push_back(builtin_channel("identity", {{"d", 2}}));
  gallery.push_back(builtin_channel("identity", {{"d", 3}}));
  gallery.push_back(builtin_channel("dephasing", {{"p", 0.3}}));
  gallery.push_back(builtin_channel("bit_flip", {{"p", 0.4}}));
  gallery.push_back(builtin_channel("depolarizing", {{"p", 0.2}}));
  gallery.push_back(builtin_channel("amplitude_damping", {{"gamma", 0.5}}));
  gallery.push_back(single_site_channel("bit_flip", {{"p", 0.25}}, 1, 2));
  for (const KrausChannel& chan : gallery) {
    const Stinespring dil = stinespring(chan);
    for (int k = 0; k < 3; ++k) {
      const DensityMatrix rho = random_density(chan.d_in(), rng);
      const Matrix big = dil.v.matrix() * rho.matrix() * dil.v.matrix().adjoint();
      const Matrix traced = partial_trace(big, {chan.d_out(), dil.d_E}, {0});
      worst = std::max(worst, max_abs(traced - apply(chan, rho).matrix()));
    }
    ++count;
  }
  s.record("channels/stinespring-builtins", worst <= allowed,
           deviation_detail(count, worst, allowed));
}

void check_compose_associativity(Suite& s) {
  const double allowed = 1e-10 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  for (int i = 0; i < 50; ++i) {
    const Index d = 2 + static_cast<Index>(rng() % 2);
    const KrausChannel a = random_cptp(d, d, 2, rng);
    const KrausChannel b = random_cptp(d, d, 2, rng);
    const KrausChannel c = random_cptp(d, d, 2, rng);
    const KrausChannel left = compose(compose(a, b), c);
    const KrausChannel right = compose(a, compose(b, c));
    const DensityMatrix rho = random_density(d, rng);
    worst = std::max(worst, max_abs(apply(left, rho).matrix() - apply(right, rho).matrix()));
    ++count;
  }
  s.record("channels/compose-associativity", worst <= allowed,
           deviation_detail(count, worst, allowed));
}

// ------------------------------------------------------------------------ skew

void check_skew_le_variance(Suite& s) {
  const double allowed = 1e-10 * s.scale;
  const double pure_allowed = 1e-9 * s.scale;
  double worst = 0.0, worst_pure = 0.0;
  long count = 0;
  for (Index d = 2; d <= 5; ++d) {
    auto rng = s.stream();
    for (int i = 0; i < 250; ++i) {
      const DensityMatrix rho = random_density(d, rng);
      const HermitianOperator h = random_hermitian(d, rng);
      worst = std::max(worst, skew_information(rho, h) - variance(rho, h));
      ++count;
    }
    for (int i = 0; i < 25; ++i) {
      const DensityMatrix rho = random_pure(d, rng).density();
      const HermitianOperator h = random_hermitian(d, rng);
      worst_pure = std::max(worst_pure,
                            std::abs(skew_information(rho, h) - variance(rho, h)));
    }
  }
  std::ostringstream os;
  os << count << " mixed instances (worst " << worst << "), 100 pure (worst " << worst_pure
     << ")";
  s.record("skew/skew-le-variance", worst <= allowed && worst_pure <= pure_allowed, os.str());
}

void check_sum_uncertainty(Suite& s) {
  const double allowed = 1e-10 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  for (int i = 0; i < 200; ++i) {
    const Index d = 2 + static_cast<Index>(rng() % 4);
    const int n_ops = 1 + static_cast<int>(rng() % 4);
    const DensityMatrix rho = random_density(d, rng);
    std::vector<Matrix> ks;
    for (int k = 0; k < n_ops; ++k) ks.push_back(random_ginibre(d, d, rng));
    const SumUncertainty r = sum_uncertainty_check(rho, ks);
    worst = std::max(worst, r.rhs - r.lhs);
    ++count;
  }
  s.record("skew/sum-uncertainty", worst <= allowed, deviation_detail(count, worst, allowed));
}

LieAlgebraBasis qubit_su2_basis() {
  const double c = 1.0 / std::sqrt(2.0);
  std::vector<HermitianOperator> gens;
  gens.emplace_back(Matrix(c * pauli_x()));
  gens.emplace_back(Matrix(c * pauli_y()));
  gens.emplace_back(Matrix(c * pauli_z()));
  return LieAlgebraBasis("su2", std::move(gens));
}

void check_asymmetry_unitary_invariance(Suite& s) {
  const double allowed = 1e-9 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  const LieAlgebraBasis basis = qubit_su2_basis();
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho = random_density(2, rng);
    const double theta =
        2.0 * M_PI * static_cast<double>(rng()) / static_cast<double>(Philox4x32::max());
    const auto& gen = basis.generators()[static_cast<size_t>(rng() % 3)];
    const Matrix u = hermitian_exp(gen, theta);
    const DensityMatrix rotated(hermitize(u * rho.matrix() * u.adjoint()));
    worst = std::max(worst,
                     std::abs(asymmetry_measure(rho, basis) - asymmetry_measure(rotated, basis)));
    ++count;
  }
  s.record("skew/asymmetry-unitary-invariance", worst <= allowed,
           deviation_detail(count, worst, allowed));
}

void check_asymmetry_convexity(Suite& s) {
  const double allowed = 1e-9 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  const LieAlgebraBasis basis = qubit_su2_basis();
  for (int i = 0; i < 50; ++i) {
    const int parts = 2 + static_cast<int>(rng() % 2);
    std::vector<DensityMatrix> rhos;
    std::vector<double> weights;
    double total = 0.0;
    for (int k = 0; k < parts; ++k) {
      rhos.push_back(random_density(2, rng));
      const double w = 0.1 + static_cast<double>(rng() % 1000);
      weights.push_back(w);
      total += w;
    }
    Matrix mix = Matrix::Zero(2, 2);
    double rhs = 0.0;
    for (int k = 0; k < parts; ++k) {
      const double lam = weights[static_cast<size_t>(k)] / total;
      mix += lam * rhos[static_cast<size_t>(k)].matrix();
      rhs += lam * asymmetry_measure(rhos[static_cast<size_t>(k)], basis);
    }
    const double lhs = asymmetry_measure(DensityMatrix(hermitize(mix)), basis);
    worst = std::max(worst, lhs - rhs);
    ++count;
  }
  s.record("skew/asymmetry-convexity", worst <= allowed, deviation_detail(count, worst, allowed));
}

void check_basis_rotation_invariance(Suite& s) {
  const double allowed = 1e-9 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  const LieAlgebraBasis basis = qubit_su2_basis();
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    // random real orthogonal O from QR of a Gaussian matrix
    Eigen::MatrixXd g(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) g(r, c) = normal(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd o = qr.householderQ() * Eigen::MatrixXd::Identity(3, 3);

    std::vector<HermitianOperator> rotated;
    for (int p = 0; p < 3; ++p) {
      Matrix acc = Matrix::Zero(2, 2);
      for (int q = 0; q < 3; ++q)
        acc += o(p, q) * basis.generators()[static_cast<size_t>(q)].matrix();
      rotated.emplace_back(hermitize(acc));
    }
    const LieAlgebraBasis rotated_basis("su2-rotated", std::move(rotated));
    const DensityMatrix rho = random_density(2, rng);
    worst = std::max(worst, std::abs(asymmetry_measure(rho, basis) -
                                     asymmetry_measure(rho, rotated_basis)));
    ++count;
  }
  s.record("skew/basis-rotation-invariance", worst <= allowed,
           deviation_detail(count, worst, allowed));
}

// ------------------------------------------------------------------------- qec

struct QecSweepStats {
  double worst_rel = 0.0;
  double worst_chain = 0.0;
  double worst_marginal = 0.0;
  double worst_bound = 0.0;
  long count = 0;
};

QecSweepStats qec_sweep(Suite& s, int instances) {
  QecSweepStats st;
  auto rng = s.stream();
  for (int i = 0; i < instances; ++i) {
    const Index d_l = 2 + static_cast<Index>(rng() % 2);
    const Index d_a = 1 + static_cast<Index>(rng() % 2);
    const Index d_s = d_l * d_a;
    const Index m = 1 + static_cast<Index>(rng() % 3);
    const Index n = 1 + static_cast<Index>(rng() % 4);
    const CodeNoisePair pair(random_cptp(d_l, d_s, m, rng), random_cptp(d_s, d_s, n, rng));

    const ClosedFormInfidelity cf = infidelity_closed_form(pair);
    const ComplementaryQuantities cq = complementary_quantities(pair);
    const double oracle =
        std::sqrt(static_cast<double>(pair.d_L() * cq.d_E)) / 2.0 * cq.diff_2norm;

    st.worst_rel = std::max(st.worst_rel, rel_dev(cf.epsilon, oracle));
    st.worst_chain = std::max(st.worst_chain, (1.0 - cq.fid_product) - 0.5 * cq.diff_1norm);
    st.worst_chain = std::max(st.worst_chain, 0.5 * cq.diff_1norm - oracle);
    st.worst_marginal = std::max(
        st.worst_marginal,
        max_abs(cq.rho_R.matrix() - identity(pair.d_L()) / static_cast<double>(pair.d_L())));
    st.worst_bound = std::max(st.worst_bound, (1.0 - cq.fid_product) - cf.epsilon);
    ++st.count;
  }
  return st;
}

void check_qec_sweep(Suite& s) {
  const QecSweepStats st = qec_sweep(s, 50);
  const double rel_allowed = 1e-9 * s.scale;
  const double slack = 1e-9 * s.scale;
  s.record("qec/infidelity-2norm-oracle", st.worst_rel <= rel_allowed,
           deviation_detail(st.count, st.worst_rel, rel_allowed));
  s.record("qec/lemma-chain", st.worst_chain <= slack,
           deviation_detail(st.count, st.worst_chain, slack));
  s.record("qec/reference-marginal", st.worst_marginal <= slack,
           deviation_detail(st.count, st.worst_marginal, slack));
  s.record("qec/fidelity-bound", st.worst_bound <= slack,
           deviation_detail(st.count, st.worst_bound, slack));
}

void check_kl_zero_infidelity(Suite& s) {
  const double allowed = 1e-9 * s.scale;
  std::ostringstream os;
  bool pass = true;

  const Isometry rep = repetition_code_3();
  const KrausChannel noise = repetition_bitflip_noise();
  const KnillLaflamme kl = knill_laflamme(rep.code_projector(), noise);
  const double eps = infidelity_closed_form(CodeNoisePair(rep, noise)).epsilon;
  const double alpha_dev =
      max_abs(kl.alpha - Matrix(identity(4) / 4.0));
  pass = pass && kl.ok && alpha_dev < 1e-9 && eps < allowed;
  os << "repetition+bitflips: residual " << kl.residual << ", eps " << eps;

  // correctable weighted single-site flip
  std::vector<Matrix> weighted;
  weighted.push_back(std::sqrt(0.7) * identity(8));
  weighted.push_back(std::sqrt(0.3) *
                     single_site_channel("bit_flip", {{"p", 1.0}}, 0, 3).kraus()[1]);
  const KrausChannel weighted_noise(8, 8, std::move(weighted));
  const KnillLaflamme kl2 = knill_laflamme(rep.code_projector(), weighted_noise);
  const double eps2 = infidelity_closed_form(CodeNoisePair(rep, weighted_noise)).epsilon;
  pass = pass && kl2.ok && eps2 < allowed;

  // trivial code under dephasing is not correctable
  const KnillLaflamme kl3 =
      knill_laflamme(identity(2), builtin_channel("dephasing", {{"p", 1.0}}));
  pass = pass && !kl3.ok && kl3.residual > 1e-3;
  os << "; trivial+dephasing residual " << kl3.residual;

  s.record("qec/kl-zero-infidelity", pass, os.str());
}

void check_isometric_skew_identity(Suite& s) {
  const double allowed = 1e-9 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  for (int i = 0; i < 100; ++i) {
    const Index d_l = 2 + static_cast<Index>(rng() % 2);
    const Index d_a = 1 + static_cast<Index>(rng() % 2);
    const Isometry w = code_from_unitary(haar_unitary(d_l * d_a, rng), d_l, d_a);
    const Index n = 1 + static_cast<Index>(rng() % 3);
    const KrausChannel noise = random_cptp(d_l * d_a, d_l * d_a, n, rng);
    const IsometricSkewIdentity id = isometric_infidelity_via_skew(w, noise);
    const double lhs = 4.0 * static_cast<double>(d_l) * id.epsilon_sq /
                       static_cast<double>(noise.size());
    worst = std::max(worst, std::abs(lhs - static_cast<double>(d_l) * id.skew_sum));
    ++count;
  }
  s.record("qec/isometric-skew-identity", worst <= allowed,
           deviation_detail(count, worst, allowed));
}

// ------------------------------------------------------------------ covariance

void check_no_go(Suite& s) {
  const double cov_allowed = 1e-9 * s.scale;
  bool pass = true;
  double min_eps = 1e300, worst_noncov = 0.0;
  const auto family = no_go_fixture_family();
  for (const NoGoCase& c : family) {
    const HksResult hks = hks_check(c.noise, c.u1.h_S());
    const double noncov = noncovariance(c.code.channel(), c.u1);
    const double eps = infidelity_closed_form(CodeNoisePair(c.code, c.noise)).epsilon;
    min_eps = std::min(min_eps, eps);
    worst_noncov = std::max(worst_noncov, noncov);
    if (!hks.ok || noncov >= cov_allowed || eps <= 1e-6) pass = false;
  }
  std::ostringstream os;
  os << family.size() << " combinations, min eps " << min_eps << ", max noncovariance "
     << worst_noncov;
  s.record("covariance/no-go", pass && family.size() >= 10, os.str());
}

void check_tradeoff_slack(Suite& s) {
  const double allowed = 1e-9 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  const char* qubit_noises[] = {"dephasing", "bit_flip", "depolarizing", "amplitude_damping"};
  for (int i = 0; i < 200; ++i) {
    const Index d_a = 1 + static_cast<Index>(rng() % 2);
    const Index d_s = 2 * d_a;
    const Isometry w = code_from_unitary(haar_unitary(d_s, rng), 2, d_a);
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
    const std::string name = qubit_noises[rng() % 4];
    const std::string param = name == "amplitude_damping" ? "gamma" : "p";
    const KrausChannel noise =
        d_a == 1 ? builtin_channel(name, {{param, p}})
                 : single_site_channel(name, {{param, p}}, static_cast<int>(rng() % 2), 2);
    const U1Spec u1(random_hermitian(2, rng), random_hermitian(d_s, rng));
    const TradeoffReport rep = tradeoff(w, noise, u1);
    worst = std::max(worst, -rep.slack);
    ++count;
  }
  s.record("covariance/tradeoff-slack", worst <= allowed,
           deviation_detail(count, worst, allowed));
}

void check_detector_consistency(Suite& s) {
  bool pass = true;
  long count = 0;
  auto rng = s.stream();
  for (const NoGoCase& c : no_go_fixture_family()) {
    const double noncov = noncovariance(c.code.channel(), c.u1);
    const bool check = covariance_check(c.code.channel(), c.u1);
    if ((noncov < 1e-9) != check) pass = false;
    ++count;
    // a random physical Hamiltonian should break covariance, and both
    // detectors should say so
    const U1Spec off(c.u1.h_L(), random_hermitian(c.u1.d_S(), rng));
    const double noncov_off = noncovariance(c.code.channel(), off);
    const bool check_off = covariance_check(c.code.channel(), off);
    if ((noncov_off < 1e-9) != check_off) pass = false;
    ++count;
  }
  std::ostringstream os;
  os << count << " instances, detectors agree";
  s.record("covariance/detector-consistency", pass, os.str());
}

void check_conjugation_invariance(Suite& s) {
  const double allowed = 1e-9 * s.scale;
  double worst = 0.0;
  long count = 0;
  auto rng = s.stream();
  for (int i = 0; i < 20; ++i) {
    const KrausChannel chan = random_cptp(2, 2, 2, rng);
    const U1Spec u1(random_hermitian(2, rng), random_hermitian(2, rng));
    const ChoiState phi = choi_of(chan);
    const double before = generalized_skew_information(phi.state(), u1.h_combined().matrix());
    const double theta =
        2.0 * M_PI * static_cast<double>(rng()) / static_cast<double>(Philox4x32::max());
    const Matrix u = hermitian_exp(u1.h_combined(), theta);
    const DensityMatrix rotated(hermitize(u * phi.state().matrix() * u.adjoint()));
    const double after = generalized_skew_information(rotated, u1.h_combined().matrix());
    worst = std::max(worst, std::abs(before - after));
    ++count;
  }
  s.record("covariance/conjugation-invariance", worst <= allowed,
           deviation_detail(count, worst, allowed));
}

// ------------------------------------------------------------------------ haar

void check_sampler_unitarity(Suite& s) {
  const double allowed = 1e-10 * s.scale;
  double worst = 0.0;
  auto rng = s.stream();
  for (int i = 0; i < 50; ++i) {
    const Matrix u = haar_unitary(6, rng);
    worst = std::max(worst, two_norm(Matrix(u.adjoint() * u) - identity(6)));
  }
  auto rng1 = s.stream();
  const Matrix u1 = haar_unitary(1, rng1);
  worst = std::max(worst, std::abs(std::abs(u1(0, 0)) - 1.0));
  s.record("haar/sampler-unitarity", worst <= allowed, deviation_detail(51, worst, allowed));
}

void check_left_invariance(Suite& s) {
  const int samples = 10000;
  const Index d = 3;
  auto vrng = s.stream();
  const Matrix v = haar_unitary(d, vrng);

  struct Stats {
    double sum = 0.0, sumsq = 0.0;
    void add(double x) {
      sum += x;
      sumsq += x * x;
    }
    double mean(int n) const { return sum / n; }
    double se(int n) const {
      const double m = mean(n);
      return std::sqrt(std::max(0.0, (sumsq - n * m * m) / (n - 1)) / n);
    }
  };
  Stats plain_re, plain_im, plain_abs2, mult_re, mult_im, mult_abs2;
  for (int i = 0; i < samples; ++i) {
    auto rng = s.stream();
    const Matrix u = haar_unitary(d, rng);
    const Complex t = u.trace();
    const Complex tv = (v * u).trace();
    plain_re.add(t.real());
    plain_im.add(t.imag());
    plain_abs2.add(std::norm(t));
    mult_re.add(tv.real());
    mult_im.add(tv.imag());
    mult_abs2.add(std::norm(tv));
  }
  auto zval = [&](const Stats& a, const Stats& b) {
    const double se = std::sqrt(a.se(samples) * a.se(samples) + b.se(samples) * b.se(samples));
    return se > 0.0 ? std::abs(a.mean(samples) - b.mean(samples)) / se : 0.0;
  };
  const double worst =
      std::max({zval(plain_re, mult_re), zval(plain_im, mult_im), zval(plain_abs2, mult_abs2)});
  std::ostringstream os;
  os << samples << " samples, max |z| = " << worst << " (allowed 4)";
  s.record("haar/left-invariance", worst < 4.0, os.str());
}

void check_moments_vs_mc(Suite& s) {
  const auto checks = haar_moment_mc_check({2, 3, 4}, 10000, s.seed ^ 0x40ce);
  double worst = 0.0;
  std::ostringstream os;
  for (const MomentCheck& c : checks) {
    worst = std::max(worst, c.max_z);
    os << "item" << c.item << "/d" << c.d << " z=" << c.max_z << " ";
  }
  os << "(allowed 5)";
  s.record("haar/moments-vs-mc", worst < 5.0, os.str());
}

void check_mc_determinism(Suite& s) {
  const SeededEnsemble ens(2, 2, s.seed ^ 0xabcdef, 500);
  McContext ctx;
  ctx.noise = single_site_channel("dephasing", {{"p", 1.0}}, 0, 2);
  const MCEstimate serial = mc_average(McQuantity::infidelity_sq, ens, ctx, 1);
  const MCEstimate parallel = mc_average(McQuantity::infidelity_sq, ens, ctx, 4);
  const bool pass = serial.mean == parallel.mean && serial.std_error == parallel.std_error;
  std::ostringstream os;
  os << "workers 1 vs 4: mean " << format_g17(serial.mean) << " / " << format_g17(parallel.mean);
  s.record("haar/mc-determinism", pass, os.str());
}

void check_unique_code_consistency(Suite& s) {
  auto rng = s.stream();
  const KrausChannel noise = random_cptp(3, 3, 2, rng);
  const SeededEnsemble ens(3, 1, s.seed ^ 0x77, 100);
  McContext ctx;
  ctx.noise = noise;
  const MCEstimate est = mc_average(McQuantity::infidelity_sq, ens, ctx, 1);
  const bool pass = est.std_error <= 1e-12 && std::abs(est.mean - est.analytic) <= 1e-12;
  std::ostringstream os;
  os << "d_A=1: mean " << est.mean << ", analytic " << est.analytic << ", stderr "
     << est.std_error;
  s.record("haar/unique-code-consistency", pass, os.str());
}

void check_avg_infidelity_decreasing(Suite& s) {
  std::vector<double> values;
  for (int nq : {2, 3, 4}) {
    const Index d_s = Index{1} << nq;
    const KrausChannel noise = single_site_channel("dephasing", {{"p", 1.0}}, 0, nq);
    values.push_back(avg_infidelity_analytic(noise, 2, d_s));
  }
  const bool pass = values[0] > values[1] && values[1] > values[2];
  std::ostringstream os;
  os << "d_S in {4,8,16}: " << values[0] << " > " << values[1] << " > " << values[2];
  s.record("haar/avg-infidelity-decreasing", pass, os.str());
}

// -------------------------------------------------------------------------- io

void check_report_determinism(Suite& s) {
  auto build = [] {
    JsonWriter w;
    w.begin_object();
    w.field("command", std::string("random-avg"));
    w.field("mean", 0.1000000000000000055511151231257827);
    w.field("stderr", 1.0 / 3.0);
    w.field("z_score", -0.25);
    w.field("pass", true);
    w.end_object();
    return w.str();
  };
  bool pass = build() == build();
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -0.0, 29.0 / 15.0}) {
    const std::string repr = format_g17(x);
    if (std::strtod(repr.c_str(), nullptr) != x) pass = false;
    const std::string shortest = format_shortest(x);
    if (std::strtod(shortest.c_str(), nullptr) != x) pass = false;
  }
  s.record("io/report-determinism", pass, "byte-stable writer, 17-digit round trip");
}

}  // namespace

Isometry repetition_code_3() {
  Matrix w = Matrix::Zero(8, 2);
  w(0, 0) = 1.0;  // |000>
  w(7, 1) = 1.0;  // |111>
  return Isometry(std::move(w));
}

KrausChannel repetition_bitflip_noise() {
  std::vector<Matrix> ops;
  ops.push_back(0.5 * identity(8));
  for (int site = 0; site < 3; ++site)
    ops.push_back(0.5 * single_site_channel("bit_flip", {{"p", 1.0}}, site, 3).kraus()[1]);
  return KrausChannel(8, 8, std::move(ops));
}

std::vector<NoGoCase> no_go_fixture_family() {
  std::vector<NoGoCase> cases;
  const HermitianOperator h_z{pauli_z()};
  const Matrix z0_2q = kron(pauli_z(), identity(2));
  const Matrix x0_2q = kron(pauli_x(), identity(2));

  auto add = [&](std::string name, const HermitianOperator& h_l, const HermitianOperator& h_s,
                 const std::vector<int>& assignment, double lambda, KrausChannel noise) {
    Isometry code = covariant_isometry(h_l, h_s, assignment, lambda);
    cases.push_back(NoGoCase{std::move(name), std::move(code), std::move(noise),
                             U1Spec(h_l, h_s)});
  };

  const HermitianOperator h_z0{z0_2q};
  add("z/dephasing(0.3) on 2q", h_z, h_z0, {0, 2}, 0.0,
      single_site_channel("dephasing", {{"p", 0.3}}, 0, 2));
  add("z/dephasing(0.7) on 2q", h_z, h_z0, {1, 3}, 0.0,
      single_site_channel("dephasing", {{"p", 0.7}}, 0, 2));
  add("z/amplitude_damping(0.2) on 2q", h_z, h_z0, {0, 2}, 0.0,
      single_site_channel("amplitude_damping", {{"gamma", 0.2}}, 0, 2));
  add("z/amplitude_damping(0.5) on 2q", h_z, h_z0, {1, 2}, 0.0,
      single_site_channel("amplitude_damping", {{"gamma", 0.5}}, 0, 2));

  const HermitianOperator h_x0{x0_2q};
  add("x/bit_flip(0.25) on 2q", h_z, h_x0, {0, 2}, 0.0,
      single_site_channel("bit_flip", {{"p", 0.25}}, 0, 2));
  add("x/bit_flip(0.6) on 2q", h_z, h_x0, {1, 3}, 0.0,
      single_site_channel("bit_flip", {{"p", 0.6}}, 0, 2));

  add("z/dephasing(0.3) on 1q", h_z, h_z, {0, 1}, 0.0,
      builtin_channel("dephasing", {{"p", 0.3}}));
  add("z/amplitude_damping(0.4) on 1q", h_z, h_z, {0, 1}, 0.0,
      builtin_channel("amplitude_damping", {{"gamma", 0.4}}));

  {
    // two-site dephasing against the total-Z Hamiltonian
    const HermitianOperator h_2z{Matrix(2.0 * pauli_z())};
    const HermitianOperator h_zz{Matrix(kron(pauli_z(), identity(2)) +
                                        kron(identity(2), pauli_z()))};
    const double p = 0.5;
    std::vector<Matrix> ops;
    ops.push_back(std::sqrt(1.0 - p) * identity(4));
    ops.push_back(std::sqrt(p / 2.0) * kron(pauli_z(), identity(2)));
    ops.push_back(std::sqrt(p / 2.0) * kron(identity(2), pauli_z()));
    add("2z/two-site dephasing", h_2z, h_zz, {0, 3}, 0.0,
        KrausChannel(4, 4, std::move(ops)));
  }

  {
    // shifted physical spectrum, matched by a nonzero offset
    const HermitianOperator h_shift{Matrix(z0_2q + identity(4))};
    add("z/offset dephasing(0.4)", h_z, h_shift, {0, 2}, 1.0,
        single_site_channel("dephasing", {{"p", 0.4}}, 0, 2));
  }

  {
    // qutrit logical space with projector dephasing on the first factor
    Matrix hl3 = Matrix::Zero(3, 3);
    hl3(0, 0) = 1.0;
    hl3(2, 2) = -1.0;
    const HermitianOperator h_l3{hl3};
    const HermitianOperator h_s6{Matrix(kron(hl3, identity(2)))};
    std::vector<Matrix> ops;
    for (int k = 0; k < 3; ++k) {
      Matrix p = Matrix::Zero(3, 3);
      p(k, k) = 1.0;
      ops.push_back(kron(p, identity(2)));
    }
    const KrausChannel noise(6, 6, std::move(ops));
    add("qutrit/projector dephasing", h_l3, h_s6, {0, 2, 4}, 0.0, noise);
    add("qutrit/projector dephasing alt", h_l3, h_s6, {1, 3, 5}, 0.0, noise);
  }

  return cases;
}

std::vector<CheckResult> run_verification_suite(std::uint64_t seed, double slack_scale) {
  Suite s{seed, slack_scale};
  check_psd_sqrt_roundtrip(s);
  check_norm_order(s);
  check_fidelity_trace_chain(s);
  check_partial_trace(s);
  check_choi_roundtrip(s);
  check_stinespring_builtins(s);
  check_compose_associativity(s);
  check_skew_le_variance(s);
  check_sum_uncertainty(s);
  check_asymmetry_unitary_invariance(s);
  check_asymmetry_convexity(s);
  check_basis_rotation_invariance(s);
  check_qec_sweep(s);
  check_kl_zero_infidelity(s);
  check_isometric_skew_identity(s);
  check_no_go(s);
  check_tradeoff_slack(s);
  check_detector_consistency(s);
  check_conjugation_invariance(s);
  check_sampler_unitarity(s);
  check_left_invariance(s);
  check_moments_vs_mc(s);
  check_mc_determinism(s);
  check_unique_code_consistency(s);
  check_avg_infidelity_decreasing(s);
  check_report_determinism(s);
  return s.results;
}

}  // namespace qeccov
