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

#include "qeccov/matrix.hpp"
#include "qeccov/states.hpp"

namespace qeccov {

struct EigenSystem {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns, unitary
};

/// Spectral decomposition H = V diag(lambda) V†.
EigenSystem hermitian_eigen(const HermitianOperator& h);

/// Hermitian PSD square root M with M*M = rho. Eigenvalues in
/// [-clamp, 0) are treated as exact zeros; anything lower throws.
Matrix psd_sqrt(const DensityMatrix& rho);
Matrix psd_sqrt(const Matrix& herm, double clamp);

/// Schatten p-norm for p in {1, 2}. p = 2 is the plain Frobenius sum
/// (no factorization); p = 1 is the sum of singular values.
double schatten_norm(const Matrix& m, int p);
double one_norm(const Matrix& m);
double two_norm(const Matrix& m);

/// Uhlmann fidelity F(rho, sigma) = tr sqrt(sqrt(rho) sigma sqrt(rho)),
/// clamped into [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

struct TraceFidelityGap {
  double trace_distance;  // (1/2)|rho - sigma|_1
  double fid;
  bool chain_ok;  // 1 - t <= F <= sqrt(1 - t^2) within tols().chain_slack
};

/// Trace distance, fidelity, and whether the standard two-sided bound
/// between them holds.
TraceFidelityGap trace_distance_fidelity_gap(const DensityMatrix& rho,
                                             const DensityMatrix& sigma);

/// exp(-i theta H) via the spectral decomposition.
Matrix hermitian_exp(const HermitianOperator& h, double theta);

}  // namespace qeccov
