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

#include "qeccov/random_inputs.hpp"

#include <random>

namespace qeccov {

Matrix random_ginibre(Index rows, Index cols, Philox4x32& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

HermitianOperator random_hermitian(Index d, Philox4x32& rng) {
  const Matrix g = random_ginibre(d, d, rng);
  return HermitianOperator(hermitize(g));
}

DensityMatrix random_density(Index d, Philox4x32& rng) {
  const Matrix g = random_ginibre(d, d, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(hermitize(rho));
}

PureState random_pure(Index d, Philox4x32& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(d);
  for (Index i = 0; i < d; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  v.normalize();
  return PureState(std::move(v));
}

KrausChannel random_cptp(Index d_in, Index d_out, Index n_kraus, Philox4x32& rng) {
  if (d_out * n_kraus < d_in)
    throw dimension_error("random_cptp: need d_out * n_kraus >= d_in");
  const Matrix u = haar_unitary(d_out * n_kraus, rng);
  std::vector<Matrix> ops(static_cast<size_t>(n_kraus), Matrix(d_out, d_in));
  // V = first d_in columns of U; K_e[s, k] = V[s*n_kraus + e, k].
  for (Index e = 0; e < n_kraus; ++e)
    for (Index s = 0; s < d_out; ++s)
      for (Index k = 0; k < d_in; ++k)
        ops[static_cast<size_t>(e)](s, k) = u(s * n_kraus + e, k);
  return KrausChannel(d_in, d_out, std::move(ops));
}

}  // namespace qeccov
