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

#include "qeccov/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qeccov {

Matrix identity(Index d) { return Matrix::Identity(d, d); }

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

double herm_deviation(const Matrix& m) {
  if (m.rows() != m.cols())
    throw dimension_error("herm_deviation: matrix is not square");
  return max_abs(m - m.adjoint());
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint().eval()); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw dimension_error("commutator: operands must be square and equal-dimensional");
  return a * b - b * a;
}

Matrix swap_operator(Index d) {
  Matrix f = Matrix::Zero(d * d, d * d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) f(b * d + a, a * d + b) = 1.0;
  return f;
}

Matrix partial_trace(const Matrix& m, const std::vector<Index>& dims,
                     const std::vector<int>& keep) {
  if (m.rows() != m.cols()) throw dimension_error("partial_trace: matrix is not square");
  Index total = 1;
  for (Index d : dims) {
    if (d <= 0) throw dimension_error("partial_trace: factor dimensions must be positive");
    total *= d;
  }
  if (total != m.rows()) {
    std::ostringstream os;
    os << "partial_trace: product of factor dims " << total
       << " does not match matrix dim " << m.rows();
    throw dimension_error(os.str());
  }
  const int nf = static_cast<int>(dims.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= nf)
      throw dimension_error("partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw dimension_error("partial_trace: keep indices must be strictly ascending");
  }

  std::vector<int> traced;
  for (int f = 0; f < nf; ++f)
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);

  // Row-major strides: factor f advances the composite index by
  // prod(dims[g] for g > f).
  std::vector<Index> stride(nf, 1);
  for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

  Index dim_keep = 1, dim_traced = 1;
  for (int f : keep) dim_keep *= dims[f];
  for (int f : traced) dim_traced *= dims[f];

  // Offset of the a-th kept multi-index, enumerated row-major over the kept
  // factors in their original order (and likewise for traced).
  auto offsets = [&](const std::vector<int>& factors, Index count) {
    std::vector<Index> off(count, 0);
    for (Index idx = 0; idx < count; ++idx) {
      Index rem = idx;
      for (int p = static_cast<int>(factors.size()) - 1; p >= 0; --p) {
        const int f = factors[p];
        off[idx] += (rem % dims[f]) * stride[f];
        rem /= dims[f];
      }
    }
    return off;
  };
  const std::vector<Index> keep_off = offsets(keep, dim_keep);
  const std::vector<Index> traced_off = offsets(traced, dim_traced);

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  for (Index a = 0; a < dim_keep; ++a)
    for (Index b = 0; b < dim_keep; ++b) {
      Complex acc = 0.0;
      for (Index t = 0; t < dim_traced; ++t)
        acc += m(keep_off[a] + traced_off[t], keep_off[b] + traced_off[t]);
      out(a, b) = acc;
    }
  return out;
}

Matrix pauli_x() {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

Matrix pauli_y() {
  Matrix y(2, 2);
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return y;
}

Matrix pauli_z() {
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

Vector basis_ket(Index d, Index k) {
  if (k < 0 || k >= d) throw dimension_error("basis_ket: index out of range");
  Vector v = Vector::Zero(d);
  v(k) = 1.0;
  return v;
}

}  // namespace qeccov
