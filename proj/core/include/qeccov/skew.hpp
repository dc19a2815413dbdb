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

#include <string>
#include <vector>

#include "qeccov/linalg.hpp"
#include "qeccov/states.hpp"

namespace qeccov {

/// V(rho, H) = tr(rho H^2) - (tr rho H)^2, clamped at 0.
double variance(const DensityMatrix& rho, const HermitianOperator& h);

/// Wigner-Yanase skew information I(rho, H) = (1/2)|[sqrt(rho), H]|_2^2.
/// Coincides with the variance on pure states and never exceeds it.
double skew_information(const DensityMatrix& rho, const HermitianOperator& h);

/// Generalization to arbitrary square K: I(rho, K) = (1/2)|[sqrt(rho), K]|_2^2.
/// Satisfies I(rho, K) = I(rho, K†) = I(rho, Re K) + I(rho, Im K), and for a
/// pure |phi> equals (1/2)<KK† + K†K> - |<K>|^2.
double generalized_skew_information(const DensityMatrix& rho, const Matrix& k);

/// Same, with sqrt(rho) already computed (hot loops).
double generalized_skew_information_with_sqrt(const Matrix& sqrt_rho, const Matrix& k);

struct SumUncertainty {
  double lhs;  // sum_j I(rho, K_j)
  double rhs;  // I(rho, sum_j K_j) / N
  bool ok;     // lhs >= rhs - 1e-10
};

/// Sum uncertainty relation for the generalized skew information.
SumUncertainty sum_uncertainty_check(const DensityMatrix& rho,
                                     const std::vector<Matrix>& ks);

/// Generator set {H_p} for a Lie-algebra representation. Construction
/// requires pairwise Hilbert-Schmidt orthogonality and equal norms within
/// tols().basis_orthonormal; a uniform rescaling away from tr(H_p H_q) =
/// delta_pq is allowed and only reflected in is_normalized() (asymmetry
/// values scale with the generators, so callers report the normalization).
class LieAlgebraBasis {
 public:
  LieAlgebraBasis(std::string label, std::vector<HermitianOperator> generators);

  static LieAlgebraBasis u1(HermitianOperator h, std::string label = "u1");

  Index d_G() const { return static_cast<Index>(generators_.size()); }
  Index dim() const { return generators_.front().dim(); }
  const std::vector<HermitianOperator>& generators() const { return generators_; }
  const std::string& label() const { return label_; }

  /// True when tr(H_p H_q) = delta_pq within tolerance.
  bool is_normalized() const { return normalized_; }

  /// Common squared Hilbert-Schmidt norm tr(H_p^2) of the generators.
  double generator_norm_sq() const { return norm_sq_; }

 private:
  std::string label_;
  std::vector<HermitianOperator> generators_;
  bool normalized_;
  double norm_sq_;
};

/// N_G(rho) = sum_p I(rho, H_p). Zero iff rho commutes with every
/// generator.
double asymmetry_measure(const DensityMatrix& rho, const LieAlgebraBasis& basis);

/// max_p |[rho, H_p]| < tol, the commutation side of the zero-asymmetry
/// equivalence.
bool commutes_with_generators(const DensityMatrix& rho, const LieAlgebraBasis& basis,
                              double tol = 1e-9);

}  // namespace qeccov
