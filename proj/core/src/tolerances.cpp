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

#include "qeccov/tolerances.hpp"

namespace qeccov {

namespace {
Tolerances g_active{};
}

Tolerances Tolerances::scaled(double factor) const {
  Tolerances t = *this;
  t.herm *= factor;
  t.trace_one *= factor;
  t.psd_clamp *= factor;
  t.pure_norm *= factor;
  t.completeness *= factor;
  t.isometry *= factor;
  t.choi_marginal *= factor;
  t.basis_orthonormal *= factor;
  t.kraus_cutoff *= factor;
  t.kl_default *= factor;
  t.hks_default *= factor;
  t.covariance_default *= factor;
  t.radicand_floor *= factor;
  t.eigenvalue_match *= factor;
  t.chain_slack *= factor;
  return t;
}

const Tolerances& tols() { return g_active; }

void set_tolerances(const Tolerances& t) { g_active = t; }

}  // namespace qeccov
