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

#include <map>
#include <string>
#include <vector>

#include "qeccov/states.hpp"

namespace qeccov {

/// Channel in Kraus form, rho -> sum_i K_i rho K_i†. Each operator is
/// d_out x d_in; completeness sum K_i†K_i = 1 is enforced at construction
/// within tols().completeness.
class KrausChannel {
 public:
  KrausChannel(Index d_in, Index d_out, std::vector<Matrix> kraus);

  Index d_in() const { return d_in_; }
  Index d_out() const { return d_out_; }
  Index size() const { return static_cast<Index>(kraus_.size()); }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  const Matrix& operator[](Index i) const { return kraus_[static_cast<size_t>(i)]; }

 private:
  Index d_in_;
  Index d_out_;
  std::vector<Matrix> kraus_;
};

/// Isometric encoder W: L -> S with W†W = 1_L (within tols().isometry) and
/// d_S >= d_L.
class Isometry {
 public:
  explicit Isometry(Matrix w);  // d_S x d_L

  Index d_L() const { return w_.cols(); }
  Index d_S() const { return w_.rows(); }
  const Matrix& matrix() const { return w_; }

  /// Single-Kraus lift {W}.
  KrausChannel channel() const;

  /// Code-space projector P = W W†.
  Matrix code_projector() const;

 private:
  Matrix w_;
};

/// rho -> sum_i K_i rho K_i†.
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

/// Composite channel outer∘inner with the ordered Kraus list
/// {A_i E_s} indexed (i, s), outer index major.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

struct Stinespring {
  /// V: d_in -> d_out * d_E with the composite output index s*d_E + e
  /// (system major); the environment basis index e follows the Kraus list
  /// order.
  Isometry v;
  Index d_E;
};

/// Dilation V|phi> = sum_e K_e|phi> (x) |e>_E with d_E = number of Kraus
/// operators. Tracing out E recovers the channel.
Stinespring stinespring(const KrausChannel& channel);

/// |psi> = (1/sqrt(d)) sum_k |k>|k>.
PureState maximally_entangled(Index d);

/// Named channel gallery. Kraus conventions, pinned here:
///   identity:           {1_d}                params: d (default 2)
///   dephasing:          {sqrt(1-p/2) 1, sqrt(p/2) Z}        params: p
///   bit_flip:           {sqrt(1-p) 1, sqrt(p) X}            params: p
///   depolarizing:       {sqrt(1-3p/4) 1, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}
///   amplitude_damping:  {|0><0| + sqrt(1-g)|1><1|, sqrt(g)|0><1|}  params: gamma
/// Probability parameters must lie in [0, 1]; unknown names throw.
KrausChannel builtin_channel(const std::string& name,
                             const std::map<std::string, double>& params);

/// Qubit channel `name` (with its own params) lifted to one site of an
/// n-qubit register. Site 0 is the most significant tensor factor.
KrausChannel single_site_channel(const std::string& name,
                                 const std::map<std::string, double>& params,
                                 int site, int n_qubits);

}  // namespace qeccov
