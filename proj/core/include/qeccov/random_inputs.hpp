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

#include "qeccov/haar.hpp"

namespace qeccov {

/// Ginibre matrix, entries N(0,1) + i N(0,1).
Matrix random_ginibre(Index rows, Index cols, Philox4x32& rng);

/// GUE-style random Hermitian, (G + G†)/2.
HermitianOperator random_hermitian(Index d, Philox4x32& rng);

/// Random full-rank state G G† / tr(G G†).
DensityMatrix random_density(Index d, Philox4x32& rng);

PureState random_pure(Index d, Philox4x32& rng);

/// Random CPTP channel with `n_kraus` operators, obtained from a Haar
/// isometry into d_out (x) environment; needs d_out * n_kraus >= d_in.
KrausChannel random_cptp(Index d_in, Index d_out, Index n_kraus, Philox4x32& rng);

}  // namespace qeccov
