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

#include "qeccov/states.hpp"

#include <cmath>
#include <sstream>

namespace qeccov {

namespace {

void require_finite_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << who << ": matrix must be square, got " << m.rows() << "x" << m.cols();
    throw dimension_error(os.str());
  }
  if (m.rows() == 0) throw dimension_error(std::string(who) + ": dimension must be positive");
  if (!all_finite(m)) throw invariant_error(std::string(who) + ": entries must be finite");
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix m) : mat_(std::move(m)) {
  require_finite_square(mat_, "HermitianOperator");
  const double dev = herm_deviation(mat_);
  if (dev > tols().herm) {
    std::ostringstream os;
    os << "HermitianOperator: |M - M†| = " << dev << " exceeds " << tols().herm;
    throw invariant_error(os.str());
  }
}

DensityMatrix::DensityMatrix(Matrix m) : mat_(std::move(m)) {
  require_finite_square(mat_, "DensityMatrix");
  const double dev = herm_deviation(mat_);
  if (dev > tols().herm) {
    std::ostringstream os;
    os << "DensityMatrix: |rho - rho†| = " << dev << " exceeds " << tols().herm;
    throw invariant_error(os.str());
  }
  const double tr_dev = std::abs(mat_.trace() - Complex(1.0, 0.0));
  if (tr_dev > tols().trace_one) {
    std::ostringstream os;
    os << "DensityMatrix: |tr(rho) - 1| = " << tr_dev << " exceeds " << tols().trace_one;
    throw invariant_error(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(mat_), Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tols().psd_clamp) {
    std::ostringstream os;
    os << "DensityMatrix: smallest eigenvalue " << min_eig << " below -" << tols().psd_clamp;
    throw invariant_error(os.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(Index d) {
  return DensityMatrix(Matrix(identity(d) / static_cast<double>(d)));
}

PureState::PureState(Vector amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() == 0) throw dimension_error("PureState: dimension must be positive");
  for (Index i = 0; i < amp_.size(); ++i)
    if (!std::isfinite(amp_(i).real()) || !std::isfinite(amp_(i).imag()))
      throw invariant_error("PureState: amplitudes must be finite");
  const double dev = std::abs(amp_.norm() - 1.0);
  if (dev > tols().pure_norm) {
    std::ostringstream os;
    os << "PureState: | ||psi|| - 1 | = " << dev << " exceeds " << tols().pure_norm;
    throw invariant_error(os.str());
  }
}

DensityMatrix PureState::density() const {
  Matrix rho = amp_ * amp_.adjoint();
  return DensityMatrix(std::move(rho));
}

}  // namespace qeccov
