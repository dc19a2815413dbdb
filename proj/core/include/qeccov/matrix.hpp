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

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qeccov/errors.hpp"
#include "qeccov/tolerances.hpp"

namespace qeccov {

using Complex = std::complex<double>;

/// Dense complex matrix with explicit row-major storage. A composite space
/// A(x)B uses the row-major composite index k = k_A * d_B + k_B everywhere
/// in this library; transposition and conjugation are always taken in this
/// fixed basis.
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

Matrix identity(Index d);

/// Largest |entry|.
double max_abs(const Matrix& m);

bool all_finite(const Matrix& m);

/// max-abs of M - M†.
double herm_deviation(const Matrix& m);

/// (M + M†)/2.
Matrix hermitize(const Matrix& m);

/// Kronecker product, row-major composite index (first factor major).
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron_vec(const Vector& a, const Vector& b);

/// [A, B] = AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

/// F with F|a>|b> = |b>|a> on d(x)d. Satisfies F.kron(A,B).F = kron(B,A).
Matrix swap_operator(Index d);

/// Partial trace over the factors of a multipartite space. `dims` are the
/// factor dimensions in major-to-minor order (their product must equal the
/// matrix dimension); `keep` lists the factor indices to retain, strictly
/// ascending. The result is ordered by the kept factors in their original
/// order.
Matrix partial_trace(const Matrix& m, const std::vector<Index>& dims,
                     const std::vector<int>& keep);

// Single-qubit constants and basis kets, used by the builtin channel
// gallery, fixtures, and tests.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Vector basis_ket(Index d, Index k);

}  // namespace qeccov
