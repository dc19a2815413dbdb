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

#include "qeccov/linalg.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace qeccov {

EigenSystem hermitian_eigen(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  if (es.info() != Eigen::Success)
    throw invariant_error("hermitian_eigen: eigensolver did not converge");
  return EigenSystem{es.eigenvalues(), es.eigenvectors()};
}

Matrix psd_sqrt(const Matrix& herm, double clamp) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  if (es.info() != Eigen::Success)
    throw invariant_error("psd_sqrt: eigensolver did not converge");
  RealVector lam = es.eigenvalues();
  for (Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < -clamp) {
      std::ostringstream os;
      os << "psd_sqrt: eigenvalue " << lam(i) << " below -" << clamp << ", input is not PSD";
      throw invariant_error(os.str());
    }
    lam(i) = lam(i) < 0.0 ? 0.0 : std::sqrt(lam(i));
  }
  const Matrix& v = es.eigenvectors();
  return v * lam.cast<Complex>().asDiagonal() * v.adjoint();
}

Matrix psd_sqrt(const DensityMatrix& rho) {
  return psd_sqrt(hermitize(rho.matrix()), tols().psd_clamp);
}

double two_norm(const Matrix& m) { return m.norm(); }

double one_norm(const Matrix& m) {
  // Singular values, not eigenvalues of an assumed-Hermitian input: the
  // Hermitian case agrees and the general case stays correct.
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double schatten_norm(const Matrix& m, int p) {
  if (!all_finite(m)) throw invariant_error("schatten_norm: entries must be finite");
  if (p == 1) return one_norm(m);
  if (p == 2) return two_norm(m);
  throw dimension_error("schatten_norm: p must be 1 or 2");
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream os;
    os << "fidelity: dimension mismatch " << rho.dim() << " vs " << sigma.dim();
    throw dimension_error(os.str());
  }
  const Matrix sr = psd_sqrt(rho);
  const Matrix inner = hermitize(sr * sigma.matrix() * sr);
  Eigen::SelfAdjointEigenSolver<Matrix> es(inner, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw invariant_error("fidelity: eigensolver did not converge");
  double f = 0.0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam > 0.0) f += std::sqrt(lam);
  }
  return std::clamp(f, 0.0, 1.0);
}

TraceFidelityGap trace_distance_fidelity_gap(const DensityMatrix& rho,
                                             const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw dimension_error("trace_distance_fidelity_gap: dimension mismatch");
  const double t = 0.5 * one_norm(rho.matrix() - sigma.matrix());
  const double f = fidelity(rho, sigma);
  const double slack = tols().chain_slack;
  const bool lower = 1.0 - t <= f + slack;
  const bool upper = f <= std::sqrt(std::max(0.0, 1.0 - t * t)) + slack;
  return TraceFidelityGap{t, f, lower && upper};
}

Matrix hermitian_exp(const HermitianOperator& h, double theta) {
  const EigenSystem es = hermitian_eigen(h);
  Vector phases(es.eigenvalues.size());
  for (Index i = 0; i < es.eigenvalues.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -theta * es.eigenvalues(i)));
  return es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
}

}  // namespace qeccov
