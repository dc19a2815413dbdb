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

#include <vector>

#include "qeccov/choi.hpp"
#include "qeccov/qec.hpp"
#include "qeccov/skew.hpp"

namespace qeccov {

struct GeneratorPair {
  HermitianOperator on_logical;   // acts on L
  HermitianOperator on_physical;  // acts on S
};

/// Generators {G_L^p (x) 1 + 1 (x) G_S^p} of the product representation on
/// L (x) S, as supplied by the caller (no renormalization). The combined
/// set must be pairwise orthogonal with equal norms; is_normalized() tells
/// whether it is also unit-normalized.
class ProductRepBasis {
 public:
  ProductRepBasis(Index d_L, Index d_S, std::vector<GeneratorPair> pairs);

  Index d_L() const { return d_L_; }
  Index d_S() const { return d_S_; }
  Index d_G() const { return combined_.d_G(); }
  const std::vector<GeneratorPair>& pairs() const { return pairs_; }
  const LieAlgebraBasis& combined() const { return combined_; }
  bool is_normalized() const { return combined_.is_normalized(); }

 private:
  Index d_L_;
  Index d_S_;
  std::vector<GeneratorPair> pairs_;
  LieAlgebraBasis combined_;
};

/// U(1) pair of Hamiltonians (H_L, H_S). The group acts on the Choi state
/// through the conjugate representation on the logical side, so the
/// combined generator carries a minus sign there:
///   H = 1_L (x) H_S - H_L (x) 1_S.
/// The sign lives here and nowhere else.
class U1Spec {
 public:
  U1Spec(HermitianOperator h_logical, HermitianOperator h_physical);

  const HermitianOperator& h_L() const { return h_l_; }
  const HermitianOperator& h_S() const { return h_s_; }
  const HermitianOperator& h_combined() const { return h_combined_; }
  Index d_L() const { return h_l_.dim(); }
  Index d_S() const { return h_s_.dim(); }

  /// Single-pair product basis (-H_L, H_S).
  ProductRepBasis product_basis() const;

 private:
  HermitianOperator h_l_;
  HermitianOperator h_s_;
  HermitianOperator h_combined_;
};

/// Noncovariance N_G(E) = N_G(Phi_E): the asymmetry of the Choi state
/// under the combined generators. Zero iff the channel is covariant.
double noncovariance(const KrausChannel& channel, const ProductRepBasis& basis);
double noncovariance(const KrausChannel& channel, const U1Spec& u1);

/// Covariance detector: max_p |[Phi_E, G_L^p (x) 1 + 1 (x) G_S^p]|_2 < tol.
bool covariance_check(const KrausChannel& channel, const ProductRepBasis& basis,
                      double tol = tols().covariance_default);
bool covariance_check(const KrausChannel& channel, const U1Spec& u1,
                      double tol = tols().covariance_default);

struct HksResult {
  bool ok;
  double residual;      // |H_S - sum_ij alpha_ij A_i†A_j|_2 at the least-squares optimum
  Matrix coefficients;  // alpha, n x n, noise index i major
};

/// Hamiltonian-in-Kraus-span test: least-squares fit of H_S onto
/// span{A_i†A_j}.
HksResult hks_check(const KrausChannel& noise, const HermitianOperator& h_S,
                    double tol = tols().hks_default);

struct TradeoffReport {
  double epsilon;
  double noncov;
  double lhs;    // 4 eps^2 / n + N_G
  double rhs;    // I(|psi~><psi~|, K) / (n^2 + d_G)
  double slack;  // lhs - rhs
};

/// Trade-off between infidelity and noncovariance for an isometric code:
/// lhs >= rhs with K = sum_ij 1 (x) K_ij + sum_p (G_L^p (x) 1 + 1 (x) G_S^p).
TradeoffReport tradeoff(const Isometry& w, const KrausChannel& noise,
                        const ProductRepBasis& basis);
TradeoffReport tradeoff(const Isometry& w, const KrausChannel& noise, const U1Spec& u1);

/// Builds a U(1)-covariant isometry from spectral data: column a of the
/// result maps the a-th eigenvector of H_L^T (ascending eigenvalue order)
/// to the assigned eigenvector of H_S. Requires
/// eigenvalue(H_S, assignment[a]) = eigenvalue(H_L^T, a) + lambda_offset
/// within tols().eigenvalue_match, and an injective assignment. The
/// resulting channel has noncovariance 0 for U1Spec(H_L, H_S).
Isometry covariant_isometry(const HermitianOperator& h_L, const HermitianOperator& h_S,
                            const std::vector<int>& assignment, double lambda_offset);

}  // namespace qeccov
