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

#include "qeccov/channels.hpp"

namespace qeccov {

/// Choi state of a trace-preserving channel L -> S, in the trace-1 ("state")
/// normalization: Phi = (I_L (x) E)(|psi><psi|) for the maximally entangled
/// |psi> on L(x)L. Lives on L(x)S with L major; the reduced state on L must
/// be 1/d_L (within tols().choi_marginal).
class ChoiState {
 public:
  ChoiState(Index d_L, Index d_S, DensityMatrix state);

  Index d_L() const { return d_L_; }
  Index d_S() const { return d_S_; }
  const DensityMatrix& state() const { return state_; }

 private:
  Index d_L_;
  Index d_S_;
  DensityMatrix state_;
};

ChoiState choi_of(const KrausChannel& channel);

/// Kraus operators from the spectral decomposition of the Choi state.
/// Eigenvalues below tols().kraus_cutoff are dropped, so the Kraus rank is
/// the number of surviving eigenvalues. Operators are ordered by
/// descending eigenvalue; ties are broken by phase-canonicalized
/// lexicographic order of the eigenvectors, which makes the output
/// deterministic.
KrausChannel channel_of(const ChoiState& choi);

}  // namespace qeccov
