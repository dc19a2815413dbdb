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

namespace qeccov {

/// Every numerical tolerance used by the library, named, in one place.
/// Values are absolute max-abs deviations unless noted. A uniformly scaled
/// copy can be produced with scaled() (the CLI wires QECCOV_TOL_SCALE to
/// it); individual fields may also be overridden from a config file.
struct Tolerances {
  double herm = 1e-10;              // |M - M†| for Hermitian inputs
  double trace_one = 1e-10;         // |tr(rho) - 1|
  double psd_clamp = 1e-10;         // eigenvalues in [-psd_clamp, 0) clamp to 0
  double pure_norm = 1e-12;         // | ||psi|| - 1 |
  double completeness = 1e-9;       // |sum K†K - 1| for Kraus lists
  double isometry = 1e-9;           // |W†W - 1|
  double choi_marginal = 1e-9;      // |tr_S(Phi) - 1/d_L|
  double basis_orthonormal = 1e-8;  // Gram-matrix deviation for generator sets
  double kraus_cutoff = 1e-10;      // Choi eigenvalue below which a Kraus op is dropped
  double kl_default = 1e-8;         // knill_laflamme residual threshold
  double hks_default = 1e-8;        // hks_check residual threshold
  double covariance_default = 1e-9; // covariance_check commutator threshold
  double radicand_floor = 1e-10;    // infidelity radicand below -floor aborts
  double eigenvalue_match = 1e-8;   // covariant_isometry spectral matching
  double chain_slack = 1e-9;        // slack for fidelity/1-norm/2-norm chains
  long complementary_cap = 4096;    // max d_L*d_E*d_S for complementary quantities

  /// All floating tolerances multiplied by `factor`; the dimension cap is
  /// left untouched.
  Tolerances scaled(double factor) const;
};

/// Active tolerance set. Defaults unless replaced by set_tolerances().
const Tolerances& tols();

/// Replace the process-wide tolerance set. Call once at startup, before
/// any values are constructed; the library never mutates it afterwards.
void set_tolerances(const Tolerances& t);

}  // namespace qeccov
