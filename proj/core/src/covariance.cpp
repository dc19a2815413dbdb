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

#include "qeccov/covariance.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace qeccov {

namespace {

std::vector<HermitianOperator> combine_pairs(Index d_L, Index d_S,
                                             const std::vector<GeneratorPair>& pairs) {
  std::vector<HermitianOperator> out;
  out.reserve(pairs.size());
  const Matrix eye_l = identity(d_L);
  const Matrix eye_s = identity(d_S);
  for (const auto& pr : pairs) {
    if (pr.on_logical.dim() != d_L || pr.on_physical.dim() != d_S)
      throw dimension_error("ProductRepBasis: generator pair dims must match (d_L, d_S)");
    out.emplace_back(Matrix(kron(pr.on_logical.matrix(), eye_s) +
                            kron(eye_l, pr.on_physical.matrix())));
  }
  return out;
}

}  // namespace

ProductRepBasis::ProductRepBasis(Index d_L, Index d_S, std::vector<GeneratorPair> pairs)
    : d_L_(d_L),
      d_S_(d_S),
      pairs_(std::move(pairs)),
      combined_("product_rep", combine_pairs(d_L, d_S, pairs_)) {}

U1Spec::U1Spec(HermitianOperator h_logical, HermitianOperator h_physical)
    : h_l_(std::move(h_logical)),
      h_s_(std::move(h_physical)),
      h_combined_(Matrix(kron(identity(h_l_.dim()), h_s_.matrix()) -
                         kron(h_l_.matrix(), identity(h_s_.dim())))) {}

ProductRepBasis U1Spec::product_basis() const {
  std::vector<GeneratorPair> pairs;
  pairs.push_back(GeneratorPair{HermitianOperator(Matrix(-h_l_.matrix())), h_s_});
  return ProductRepBasis(d_L(), d_S(), std::move(pairs));
}

namespace {

void require_channel_dims(const KrausChannel& channel, Index d_L, Index d_S,
                          const char* who) {
  if (channel.d_in() != d_L || channel.d_out() != d_S) {
    std::ostringstream os;
    os << who << ": channel is " << channel.d_in() << " -> " << channel.d_out()
       << " but generators expect " << d_L << " -> " << d_S;
    throw dimension_error(os.str());
  }
}

}  // namespace

double noncovariance(const KrausChannel& channel, const ProductRepBasis& basis) {
  require_channel_dims(channel, basis.d_L(), basis.d_S(), "noncovariance");
  const ChoiState phi = choi_of(channel);
  return asymmetry_measure(phi.state(), basis.combined());
}

double noncovariance(const KrausChannel& channel, const U1Spec& u1) {
  require_channel_dims(channel, u1.d_L(), u1.d_S(), "noncovariance");
  const ChoiState phi = choi_of(channel);
  return generalized_skew_information(phi.state(), u1.h_combined().matrix());
}

bool covariance_check(const KrausChannel& channel, const ProductRepBasis& basis,
                      double tol) {
  require_channel_dims(channel, basis.d_L(), basis.d_S(), "covariance_check");
  const ChoiState phi = choi_of(channel);
  for (const auto& g : basis.combined().generators())
    if (two_norm(commutator(phi.state().matrix(), g.matrix())) >= tol) return false;
  return true;
}

bool covariance_check(const KrausChannel& channel, const U1Spec& u1, double tol) {
  require_channel_dims(channel, u1.d_L(), u1.d_S(), "covariance_check");
  const ChoiState phi = choi_of(channel);
  return two_norm(commutator(phi.state().matrix(), u1.h_combined().matrix())) < tol;
}

HksResult hks_check(const KrausChannel& noise, const HermitianOperator& h_S, double tol) {
  if (noise.d_in() != noise.d_out())
    throw dimension_error("hks_check: noise must map S to S");
  if (h_S.dim() != noise.d_in())
    throw dimension_error("hks_check: Hamiltonian dim must match the noise");
  const Index d = noise.d_in();
  const Index n = noise.size();

  // Columns of B are vec(A_i†A_j), i major; b = vec(H_S).
  Eigen::MatrixXcd basis(d * d, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Matrix prod = noise[i].adjoint() * noise[j];
      for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c) basis(r * d + c, i * n + j) = prod(r, c);
    }
  Eigen::VectorXcd target(d * d);
  for (Index r = 0; r < d; ++r)
    for (Index c = 0; c < d; ++c) target(r * d + c) = h_S.matrix()(r, c);

  const Eigen::VectorXcd alpha =
      basis.completeOrthogonalDecomposition().solve(target);
  const double residual = (basis * alpha - target).norm();

  Matrix coeff(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) coeff(i, j) = alpha(i * n + j);
  return HksResult{residual < tol, residual, std::move(coeff)};
}

TradeoffReport tradeoff(const Isometry& w, const KrausChannel& noise,
                        const ProductRepBasis& basis) {
  if (noise.d_in() != w.d_S() || noise.d_out() != w.d_S())
    throw dimension_error("tradeoff: noise must act on d_S");
  if (basis.d_L() != w.d_L() || basis.d_S() != w.d_S())
    throw dimension_error("tradeoff: generator dims must match the code");

  const CodeNoisePair pair(w, noise);
  const double eps_sq = infidelity_closed_form(pair).epsilon_sq;
  const double n = static_cast<double>(noise.size());

  const KrausChannel enc = w.channel();
  const double noncov = noncovariance(enc, basis);
  const double lhs = 4.0 * eps_sq / n + noncov;

  // K = sum_ij 1 (x) K_ij + sum_p (G_L^p (x) 1 + 1 (x) G_S^p), generators
  // exactly as supplied.
  const Matrix p = w.code_projector();
  const Matrix eye_l = identity(w.d_L());
  Matrix k_total = Matrix::Zero(w.d_L() * w.d_S(), w.d_L() * w.d_S());
  for (Index i = 0; i < noise.size(); ++i)
    for (Index j = 0; j < noise.size(); ++j)
      k_total += kron(eye_l, Matrix(p * noise[i].adjoint() * noise[j] * p));
  for (const auto& g : basis.combined().generators()) k_total += g.matrix();

  const DensityMatrix psi = encoded_entangled_state(w).density();
  const double d_g = static_cast<double>(basis.d_G());
  const double rhs =
      generalized_skew_information(psi, k_total) / (n * n + d_g);
  return TradeoffReport{std::sqrt(eps_sq), noncov, lhs, rhs, lhs - rhs};
}

TradeoffReport tradeoff(const Isometry& w, const KrausChannel& noise, const U1Spec& u1) {
  return tradeoff(w, noise, u1.product_basis());
}

Isometry covariant_isometry(const HermitianOperator& h_L, const HermitianOperator& h_S,
                            const std::vector<int>& assignment, double lambda_offset) {
  const Index d_l = h_L.dim();
  const Index d_s = h_S.dim();
  if (static_cast<Index>(assignment.size()) != d_l)
    throw dimension_error("covariant_isometry: assignment must cover every logical index");

  std::set<int> seen;
  for (int t : assignment) {
    if (t < 0 || t >= d_s)
      throw dimension_error("covariant_isometry: physical eigenindex out of range");
    if (!seen.insert(t).second)
      throw invariant_error("covariant_isometry: assignment must be injective");
  }

  const EigenSystem logical =
      hermitian_eigen(HermitianOperator(Matrix(h_L.matrix().transpose())));
  const EigenSystem physical = hermitian_eigen(h_S);

  for (Index a = 0; a < d_l; ++a) {
    const double want = logical.eigenvalues(a) + lambda_offset;
    const double got = physical.eigenvalues(assignment[static_cast<size_t>(a)]);
    if (std::abs(got - want) > tols().eigenvalue_match) {
      std::ostringstream os;
      os << "covariant_isometry: eigenvalue mismatch at logical index " << a << ": "
         << got << " != " << logical.eigenvalues(a) << " + " << lambda_offset;
      throw invariant_error(os.str());
    }
  }

  Matrix w = Matrix::Zero(d_s, d_l);
  for (Index a = 0; a < d_l; ++a)
    w += physical.eigenvectors.col(assignment[static_cast<size_t>(a)]) *
         logical.eigenvectors.col(a).adjoint();
  return Isometry(std::move(w));
}

}  // namespace qeccov
