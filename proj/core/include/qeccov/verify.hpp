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

#include <cstdint>
#include <string>
#include <vector>

#include "qeccov/covariance.hpp"

namespace qeccov {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Runs the full library invariant suite (randomized sweeps with the given
/// seed) and returns one result per invariant. `slack_scale` multiplies the
/// check tolerances; 1.0 is the contract, other values exist for debugging.
std::vector<CheckResult> run_verification_suite(std::uint64_t seed = 0x5eedba5e,
                                                double slack_scale = 1.0);

/// One covariant-code / HKS-noise combination with a nontrivial logical
/// Hamiltonian. Every entry of the family has noncovariance ~ 0 and must
/// show strictly positive infidelity.
struct NoGoCase {
  std::string name;
  Isometry code;
  KrausChannel noise;
  U1Spec u1;
};

/// The fixture family behind the covariant no-go sweep (>= 10 combinations).
std::vector<NoGoCase> no_go_fixture_family();

/// The 3-qubit repetition code |0> -> |000>, |1> -> |111>.
Isometry repetition_code_3();

/// The correctable single-bit-flip Kraus set {1, X_0, X_1, X_2}/2 on three
/// qubits.
KrausChannel repetition_bitflip_noise();

}  // namespace qeccov
