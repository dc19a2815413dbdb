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

#include "qeccov/choi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace qeccov {

ChoiState::ChoiState(Index d_L, Index d_S, DensityMatrix state)
    : d_L_(d_L), d_S_(d_S), state_(std::move(state)) {
  if (d_L_ <= 0 || d_S_ <= 0) throw dimension_error("ChoiState: dimensions must be positive");
  if (state_.dim() != d_L_ * d_S_) {
    std::ostringstream os;
    os << "ChoiState: state dim " << state_.dim() << " != d_L*d_S = " << d_L_ * d_S_;
    throw dimension_error(os.str());
  }
  const Matrix marginal = partial_trace(state_.matrix(), {d_L_, d_S_}, {0});
  const double dev =
      max_abs(marginal - identity(d_L_) / static_cast<double>(d_L_));
  if (dev > tols().choi_marginal) {
    std::ostringstream os;
    os << "ChoiState: |tr_S(Phi) - 1/d_L| = " << dev << " exceeds "
       << tols().choi_marginal << " (channel not trace preserving)";
    throw invariant_error(os.str());
  }
}

ChoiState choi_of(const KrausChannel& channel) {
  const Index d_l = channel.d_in();
  const Index d_s = channel.d_out();
  Matrix phi = Matrix::Zero(d_l * d_s, d_l * d_s);
  // Phi = sum_e |a_e><a_e| with a_e[k*d_S + s] = K_e[s, k]/sqrt(d_L).
  const double c = 1.0 / std::sqrt(static_cast<double>(d_l));
  for (const Matrix& k : channel.kraus()) {
    Vector a(d_l * d_s);
    for (Index col = 0; col < d_l; ++col)
      for (Index s = 0; s < d_s; ++s) a(col * d_s + s) = c * k(s, col);
    phi += a * a.adjoint();
  }
  return ChoiState(d_l, d_s, DensityMatrix(hermitize(phi)));
}

namespace {

// Multiply by a global phase so the first entry with |v_i| > 1e-12 becomes
// real positive.
Vector phase_canonicalized(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      const Complex phase = v(i) / std::abs(v(i));
      return v * std::conj(phase);
    }
  }
  return v;
}

bool lex_less(const Vector& a, const Vector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

}  // namespace

KrausChannel channel_of(const ChoiState& choi) {
  const Index d_l = choi.d_L();
  const Index d_s = choi.d_S();
  Eigen::SelfAdjointEigenSolver<Matrix> es(choi.state().matrix());
  if (es.info() != Eigen::Success)
    throw invariant_error("channel_of: eigensolver did not converge");
  if (es.eigenvalues().minCoeff() < -tols().psd_clamp)
    throw invariant_error("channel_of: Choi state is not PSD");

  std::vector<std::pair<double, Vector>> modes;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam > tols().kraus_cutoff)
      modes.emplace_back(lam, phase_canonicalized(es.eigenvectors().col(i)));
  }
  if (modes.empty()) throw invariant_error("channel_of: Choi state has no spectral weight");
  std::sort(modes.begin(), modes.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return lex_less(a.second, b.second);
  });

  std::vector<Matrix> ops;
  ops.reserve(modes.size());
  const double scale = std::sqrt(static_cast<double>(d_l));
  for (const auto& [lam, v] : modes) {
    Matrix k(d_s, d_l);
    const double w = scale * std::sqrt(lam);
    for (Index col = 0; col < d_l; ++col)
      for (Index s = 0; s < d_s; ++s) k(s, col) = w * v(col * d_s + s);
    ops.push_back(std::move(k));
  }
  return KrausChannel(d_l, d_s, std::move(ops));
}

}  // namespace qeccov
