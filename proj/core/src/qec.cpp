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

#include "qeccov/qec.hpp"

#include <cmath>
#include <sstream>

#include "qeccov/skew.hpp"

namespace qeccov {

CodeNoisePair::CodeNoisePair(KrausChannel encoding, KrausChannel noise)
    : encoding_(std::move(encoding)), noise_(std::move(noise)) {
  if (noise_.d_in() != noise_.d_out())
    throw dimension_error("CodeNoisePair: noise must map S to S");
  if (encoding_.d_out() != noise_.d_in()) {
    std::ostringstream os;
    os << "CodeNoisePair: encoding d_out " << encoding_.d_out() << " != noise dim "
       << noise_.d_in();
    throw dimension_error(os.str());
  }
}

CodeNoisePair::CodeNoisePair(const Isometry& encoding, KrausChannel noise)
    : CodeNoisePair(encoding.channel(), std::move(noise)) {}

KnillLaflamme knill_laflamme(const Matrix& projector, const KrausChannel& noise,
                             double tol) {
  if (projector.rows() != projector.cols() || projector.rows() != noise.d_in())
    throw dimension_error("knill_laflamme: projector dim must match the noise");
  const double herm_dev = herm_deviation(projector);
  const double idem_dev = max_abs(Matrix(projector * projector) - projector);
  if (herm_dev > 1e-9 || idem_dev > 1e-9) {
    std::ostringstream os;
    os << "knill_laflamme: P is not a projector (|P-P†| = " << herm_dev
       << ", |P^2-P| = " << idem_dev << ")";
    throw invariant_error(os.str());
  }
  const double tr_p = projector.trace().real();
  if (tr_p < 0.5) throw invariant_error("knill_laflamme: projector has zero rank");

  const Index n = noise.size();
  Matrix alpha(n, n);
  double residual = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Matrix pap = projector * noise[i].adjoint() * noise[j] * projector;
      const Complex a = pap.trace() / tr_p;
      alpha(i, j) = a;
      residual = std::max(residual, two_norm(pap - a * projector));
    }
  }
  return KnillLaflamme{residual < tol, std::move(alpha), residual};
}

ClosedFormInfidelity infidelity_closed_form(const CodeNoisePair& pair) {
  const auto& enc = pair.encoding().kraus();
  const auto& noi = pair.noise().kraus();
  const Index d_l = pair.d_L();
  const Index d_s = pair.d_S();
  const Index m = pair.m();
  const Index n = pair.n();

  Matrix o = Matrix::Zero(d_s, d_s);
  for (const Matrix& e : enc) o += e * e.adjoint();

  // M_ij = A_i†A_j, C_ij = M_ij O; term_O = sum_ij tr(C_ij C_ji).
  std::vector<Matrix> prod(static_cast<size_t>(n * n));
  std::vector<Matrix> prod_o(static_cast<size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Matrix mij = noi[static_cast<size_t>(i)].adjoint() * noi[static_cast<size_t>(j)];
      prod_o[static_cast<size_t>(i * n + j)] = mij * o;
      prod[static_cast<size_t>(i * n + j)] = std::move(mij);
    }
  double term_o = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      term_o += (prod_o[static_cast<size_t>(i * n + j)] * prod_o[static_cast<size_t>(j * n + i)])
                    .trace()
                    .real();

  double term_cross = 0.0;
  for (Index s = 0; s < m; ++s)
    for (Index t = 0; t < m; ++t) {
      const Matrix ets = enc[static_cast<size_t>(t)] * enc[static_cast<size_t>(s)].adjoint();
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
          const Complex tr = (prod[static_cast<size_t>(i * n + j)] * ets).trace();
          term_cross += std::norm(tr);
        }
    }

  double radicand = term_o - term_cross / static_cast<double>(d_l);
  if (radicand < -tols().radicand_floor) {
    std::ostringstream os;
    os << "infidelity: radicand " << radicand << " below -" << tols().radicand_floor
       << ", internal consistency failure";
    throw invariant_error(os.str());
  }
  if (radicand < 0.0) radicand = 0.0;
  const double eps_sq =
      static_cast<double>(m * n) / (4.0 * static_cast<double>(d_l)) * radicand;
  return ClosedFormInfidelity{std::sqrt(eps_sq), eps_sq, term_o, term_cross};
}

ComplementaryQuantities complementary_quantities(const CodeNoisePair& pair) {
  const Index d_l = pair.d_L();
  const Index d_e = pair.m() * pair.n();
  const Index d_s = pair.d_S();
  if (static_cast<long>(d_l) * d_e * d_s > tols().complementary_cap) {
    std::ostringstream os;
    os << "complementary_quantities: d_L*d_E*d_S = " << d_l * d_e * d_s
       << " exceeds cap " << tols().complementary_cap;
    throw dimension_error(os.str());
  }

  // Composite Kraus list {A_i E_s} with environment index e = i*m + s.
  const KrausChannel composite = compose(pair.noise(), pair.encoding());

  // rho_RE[(k,e),(l,f)] = <l| C_f† C_e |k> / d_L.
  std::vector<Matrix> gram(static_cast<size_t>(d_e * d_e));
  for (Index f = 0; f < d_e; ++f)
    for (Index e = 0; e < d_e; ++e)
      gram[static_cast<size_t>(f * d_e + e)] = composite[f].adjoint() * composite[e];

  Matrix rho_re(d_l * d_e, d_l * d_e);
  const double inv_dl = 1.0 / static_cast<double>(d_l);
  for (Index k = 0; k < d_l; ++k)
    for (Index e = 0; e < d_e; ++e)
      for (Index l = 0; l < d_l; ++l)
        for (Index f = 0; f < d_e; ++f)
          rho_re(k * d_e + e, l * d_e + f) =
              inv_dl * gram[static_cast<size_t>(f * d_e + e)](l, k);

  DensityMatrix rho_re_dm(hermitize(rho_re));
  const Matrix r_marginal = partial_trace(rho_re_dm.matrix(), {d_l, d_e}, {0});
  const double r_dev = max_abs(r_marginal - identity(d_l) * inv_dl);
  if (r_dev > 1e-9) {
    std::ostringstream os;
    os << "complementary_quantities: |rho_R - 1/d_L| = " << r_dev
       << ", channel pair is not trace preserving";
    throw invariant_error(os.str());
  }
  DensityMatrix rho_r(hermitize(r_marginal));
  DensityMatrix rho_e(hermitize(partial_trace(rho_re_dm.matrix(), {d_l, d_e}, {1})));

  const Matrix product = kron(rho_r.matrix(), rho_e.matrix());
  const Matrix diff = rho_re_dm.matrix() - product;
  const double diff2 = two_norm(diff);
  const double diff1 = one_norm(diff);
  const double fid = fidelity(rho_re_dm, DensityMatrix(hermitize(product)));
  return ComplementaryQuantities{std::move(rho_re_dm), std::move(rho_r),
                                 std::move(rho_e),     d_e,
                                 diff2,                diff1,
                                 fid};
}

InfidelityReport infidelity(const CodeNoisePair& pair) {
  const ClosedFormInfidelity cf = infidelity_closed_form(pair);
  const ComplementaryQuantities cq = complementary_quantities(pair);
  const double scale =
      std::sqrt(static_cast<double>(pair.d_L() * cq.d_E)) / 2.0;
  const double oracle = scale * cq.diff_2norm;
  const double slack = tols().chain_slack;
  LemmaChain chain;
  chain.one_minus_fid = 1.0 - cq.fid_product;
  chain.half_1norm = 0.5 * cq.diff_1norm;
  chain.scaled_2norm = oracle;
  chain.fid_le_1norm = chain.one_minus_fid <= chain.half_1norm + slack;
  chain.norm_le_2norm = chain.half_1norm <= chain.scaled_2norm + slack;
  return InfidelityReport{cf.epsilon,   cf.term_O,     cf.term_cross,
                          1.0 - cf.epsilon, oracle,    cq.diff_1norm,
                          cq.diff_2norm, cq.fid_product, chain};
}

PureState encoded_entangled_state(const Isometry& w) {
  const Index d_l = w.d_L();
  const Index d_s = w.d_S();
  Vector amp(d_l * d_s);
  const double c = 1.0 / std::sqrt(static_cast<double>(d_l));
  for (Index k = 0; k < d_l; ++k)
    for (Index s = 0; s < d_s; ++s) amp(k * d_s + s) = c * w.matrix()(s, k);
  return PureState(std::move(amp));
}

IsometricSkewIdentity isometric_infidelity_via_skew(const Isometry& w,
                                                    const KrausChannel& noise) {
  if (noise.d_in() != w.d_S() || noise.d_out() != w.d_S())
    throw dimension_error("isometric_infidelity_via_skew: noise must act on d_S");
  const CodeNoisePair pair(w, noise);
  const double eps_sq = infidelity_closed_form(pair).epsilon_sq;

  const Matrix p = w.code_projector();
  const DensityMatrix psi = encoded_entangled_state(w).density();
  const Matrix sqrt_psi = psd_sqrt(psi);
  const Matrix eye_l = identity(w.d_L());

  double skew_sum = 0.0;
  for (Index i = 0; i < noise.size(); ++i)
    for (Index j = 0; j < noise.size(); ++j) {
      const Matrix kij = p * noise[i].adjoint() * noise[j] * p;
      skew_sum += generalized_skew_information_with_sqrt(sqrt_psi, kron(eye_l, kij));
    }

  const double d_l = static_cast<double>(w.d_L());
  const double n = static_cast<double>(noise.size());
  const bool match = std::abs(4.0 * d_l * eps_sq / n - d_l * skew_sum) < 1e-9;
  return IsometricSkewIdentity{eps_sq, skew_sum, match};
}

}  // namespace qeccov
