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

#include "qeccov/channels.hpp"
#include "qeccov/linalg.hpp"

namespace qeccov {

/// Encoding channel L -> S paired with noise S -> S.
class CodeNoisePair {
 public:
  CodeNoisePair(KrausChannel encoding, KrausChannel noise);
  CodeNoisePair(const Isometry& encoding, KrausChannel noise);

  const KrausChannel& encoding() const { return encoding_; }
  const KrausChannel& noise() const { return noise_; }
  Index d_L() const { return encoding_.d_in(); }
  Index d_S() const { return encoding_.d_out(); }
  Index m() const { return encoding_.size(); }
  Index n() const { return noise_.size(); }

 private:
  KrausChannel encoding_;
  KrausChannel noise_;
};

struct KnillLaflamme {
  bool ok;
  Matrix alpha;     // alpha_ij = tr(P A_i†A_j P)/tr(P)
  double residual;  // max_ij |P A_i†A_j P - alpha_ij P|_2
};

/// Exact-correctability check P A_i†A_j P = alpha_ij P for the code-space
/// projector P and the noise Kraus set.
KnillLaflamme knill_laflamme(const Matrix& projector, const KrausChannel& noise,
                             double tol = tols().kl_default);

struct LemmaChain {
  double one_minus_fid;  // 1 - F(rho_RE, rho_R (x) rho_E)
  double half_1norm;     // (1/2)|rho_RE - rho_R (x) rho_E|_1
  double scaled_2norm;   // (sqrt(d_L d_E)/2)|...|_2
  bool fid_le_1norm;
  bool norm_le_2norm;
};

/// Reference/environment quantities of the composite channel's dilation.
/// rho_RE lives on R (x) E with R major; the environment index e = i*m + s
/// follows the composite Kraus order {A_i E_s}, noise index major. rho_RE
/// is assembled directly from its matrix elements; the full output vector
/// on R (x) S (x) E is never materialized.
struct ComplementaryQuantities {
  DensityMatrix rho_RE;
  DensityMatrix rho_R;  // always 1/d_L for trace-preserving inputs
  DensityMatrix rho_E;
  Index d_E;
  double diff_2norm;   // |rho_RE - rho_R (x) rho_E|_2
  double diff_1norm;   // |rho_RE - rho_R (x) rho_E|_1
  double fid_product;  // F(rho_RE, rho_R (x) rho_E)
};

ComplementaryQuantities complementary_quantities(const CodeNoisePair& pair);

struct ClosedFormInfidelity {
  double epsilon;
  double epsilon_sq;
  double term_O;      // sum_ij tr(A_i†A_j O A_j†A_i O), O = sum_s E_s E_s†
  double term_cross;  // sum_ijst |tr(A_i†A_j E_t E_s†)|^2
};

/// epsilon = sqrt(m n / (4 d_L)) * sqrt(term_O - term_cross/d_L), with the
/// radicand clamped to 0 when it lands in [-tols().radicand_floor, 0) and
/// rejected below that.
ClosedFormInfidelity infidelity_closed_form(const CodeNoisePair& pair);

struct InfidelityReport {
  double epsilon;
  double term_O;
  double term_cross;
  double lower_bound_fe;  // 1 - epsilon
  double oracle_2norm;    // sqrt(d_L d_E)/2 * |rho_RE - rho_R (x) rho_E|_2
  double diff_1norm;
  double diff_2norm;
  double fid_product;
  LemmaChain chain;
};

/// Closed-form infidelity together with the complementary-state route that
/// evaluates the same quantity independently, and the fidelity/1-norm/
/// 2-norm chain.
InfidelityReport infidelity(const CodeNoisePair& pair);

struct IsometricSkewIdentity {
  double epsilon_sq;
  double skew_sum;  // sum_ij I(|psi~><psi~|, 1_L (x) K_ij), K_ij = P A_i†A_j P
  bool match;       // |4 d_L eps^2 / n - d_L * skew_sum| < 1e-9
};

/// For an isometric encoding, the infidelity is a sum of generalized skew
/// informations of the encoded maximally entangled state.
IsometricSkewIdentity isometric_infidelity_via_skew(const Isometry& w,
                                                    const KrausChannel& noise);

/// |psi~> = (1_L (x) W)|psi> on L (x) S.
PureState encoded_entangled_state(const Isometry& w);

}  // namespace qeccov
