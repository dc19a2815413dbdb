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

#include "qeccov/skew.hpp"

#include <cmath>
#include <sstream>

namespace qeccov {

double variance(const DensityMatrix& rho, const HermitianOperator& h) {
  if (rho.dim() != h.dim()) {
    std::ostringstream os;
    os << "variance: state dim " << rho.dim() << " != observable dim " << h.dim();
    throw dimension_error(os.str());
  }
  const Matrix& m = h.matrix();
  const double second = (rho.matrix() * m * m).trace().real();
  const double first = (rho.matrix() * m).trace().real();
  const double v = second - first * first;
  return v < 0.0 ? 0.0 : v;
}

double generalized_skew_information_with_sqrt(const Matrix& sqrt_rho, const Matrix& k) {
  if (k.rows() != k.cols()) throw dimension_error("skew information: K must be square");
  if (k.rows() != sqrt_rho.rows())
    throw dimension_error("skew information: dimension mismatch");
  const Matrix c = commutator(sqrt_rho, k);
  return 0.5 * c.squaredNorm();
}

double generalized_skew_information(const DensityMatrix& rho, const Matrix& k) {
  if (k.rows() != k.cols()) throw dimension_error("skew information: K must be square");
  if (k.rows() != rho.dim()) {
    std::ostringstream os;
    os << "skew information: state dim " << rho.dim() << " != operator dim " << k.rows();
    throw dimension_error(os.str());
  }
  return generalized_skew_information_with_sqrt(psd_sqrt(rho), k);
}

double skew_information(const DensityMatrix& rho, const HermitianOperator& h) {
  return generalized_skew_information(rho, h.matrix());
}

SumUncertainty sum_uncertainty_check(const DensityMatrix& rho,
                                     const std::vector<Matrix>& ks) {
  if (ks.empty()) throw dimension_error("sum_uncertainty_check: operator list is empty");
  const Matrix sqrt_rho = psd_sqrt(rho);
  double lhs = 0.0;
  Matrix total = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& k : ks) {
    lhs += generalized_skew_information_with_sqrt(sqrt_rho, k);
    total += k;
  }
  const double rhs = generalized_skew_information_with_sqrt(sqrt_rho, total) /
                     static_cast<double>(ks.size());
  return SumUncertainty{lhs, rhs, lhs >= rhs - 1e-10};
}

LieAlgebraBasis::LieAlgebraBasis(std::string label, std::vector<HermitianOperator> generators)
    : label_(std::move(label)), generators_(std::move(generators)) {
  if (generators_.empty())
    throw dimension_error("LieAlgebraBasis: generator list must be nonempty");
  const Index d = generators_.front().dim();
  for (const auto& g : generators_)
    if (g.dim() != d)
      throw dimension_error("LieAlgebraBasis: generators must share one dimension");

  const Index n = d_G();
  Eigen::MatrixXd gram(n, n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q)
      gram(p, q) = (generators_[static_cast<size_t>(p)].matrix() *
                    generators_[static_cast<size_t>(q)].matrix())
                       .trace()
                       .real();
  norm_sq_ = gram.diagonal().mean();
  const double tol = tols().basis_orthonormal * std::max(1.0, norm_sq_);
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      const double want = p == q ? norm_sq_ : 0.0;
      if (std::abs(gram(p, q) - want) > tol) {
        std::ostringstream os;
        os << "LieAlgebraBasis: generators are not orthogonal with equal norms; "
           << "tr(H_" << p << " H_" << q << ") = " << gram(p, q) << ", expected " << want;
        throw invariant_error(os.str());
      }
    }
  }
  normalized_ = std::abs(norm_sq_ - 1.0) <= tols().basis_orthonormal;
}

LieAlgebraBasis LieAlgebraBasis::u1(HermitianOperator h, std::string label) {
  std::vector<HermitianOperator> gens;
  gens.push_back(std::move(h));
  return LieAlgebraBasis(std::move(label), std::move(gens));
}

double asymmetry_measure(const DensityMatrix& rho, const LieAlgebraBasis& basis) {
  if (rho.dim() != basis.dim()) {
    std::ostringstream os;
    os << "asymmetry_measure: state dim " << rho.dim() << " != generator dim " << basis.dim();
    throw dimension_error(os.str());
  }
  const Matrix sqrt_rho = psd_sqrt(rho);
  double total = 0.0;
  for (const auto& g : basis.generators())
    total += generalized_skew_information_with_sqrt(sqrt_rho, g.matrix());
  return total;
}

bool commutes_with_generators(const DensityMatrix& rho, const LieAlgebraBasis& basis,
                              double tol) {
  if (rho.dim() != basis.dim())
    throw dimension_error("commutes_with_generators: dimension mismatch");
  for (const auto& g : basis.generators())
    if (max_abs(commutator(rho.matrix(), g.matrix())) >= tol) return false;
  return true;
}

}  // namespace qeccov
