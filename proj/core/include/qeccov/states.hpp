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

namespace qeccov {

/// Observable. Construction validates finiteness and M = M† within
/// tols().herm (max-abs entry difference).
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m);

  Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }

 private:
  Matrix mat_;
};

/// State: Hermitian within tols().herm, unit trace within tols().trace_one,
/// smallest eigenvalue >= -tols().psd_clamp.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);
  static DensityMatrix maximally_mixed(Index d);

  Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }

 private:
  Matrix mat_;
};

/// Unit-norm state vector, norm 1 within tols().pure_norm.
class PureState {
 public:
  explicit PureState(Vector amplitudes);

  Index dim() const { return amp_.size(); }
  const Vector& amplitudes() const { return amp_; }

  /// |psi><psi|.
  DensityMatrix density() const;

 private:
  Vector amp_;
};

}  // namespace qeccov
