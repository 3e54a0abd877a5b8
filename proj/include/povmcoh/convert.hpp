// Copyright 2026 The povmcoh authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POVMCOH_CONVERT_HPP
#define POVMCOH_CONVERT_HPP

#include "povmcoh/coherence.hpp"
#include "povmcoh/measurement.hpp"

namespace povmcoh {

struct ConversionResult {
  DensityMatrix output_state;     // on system ⊗ target ancilla
  int system_dim = 0;
  int target_dim = 0;
  Matrix unitary;                 // the entangling unitary that was applied
  double negativity = 0.0;        // across the system : ancilla cut
  double rel_ent_entanglement = 0.0;
  double coherence_input = 0.0;   // block coherence of the input state
};

// Bounds used when pinning down the relative entropy of entanglement of a
// converted state: the ancilla-marginal entropy gap from below and the
// relative entropy to the matching separable state from above.
struct SandwichReport {
  double coherence = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

// Controlled block-shift on system ⊗ C^target_dim: outcome block i of the
// measurement advances ancilla levels j < n to (i + j) mod n, where n is
// the number of outcomes, and levels j >= n are left alone. target_dim must
// be at least n (TargetTooSmall).
Matrix build_entangling_unitary(const ProjectiveMeasurement& p, int target_dim);

// Apply the entangling unitary to rho ⊗ |0><0| and report the entanglement
// generated across the system : ancilla cut.
ConversionResult convert(const DensityMatrix& rho, const ProjectiveMeasurement& p,
                         int target_dim);

// Negativity (||rho^{T_B}||_1 - 1) / 2 across a dim_a : dim_b cut.
double negativity(const DensityMatrix& rho, int dim_a, int dim_b);

// Lower and upper bounds pinning the relative entropy of entanglement of
// the converted state; both collapse onto the block coherence of the input.
SandwichReport conversion_entanglement_bounds(const DensityMatrix& rho,
                                              const ProjectiveMeasurement& p);

// Relative entropy of entanglement of the converted state. Throws
// SandwichViolation if either bound strays from the block coherence by more
// than 1e-6.
double rel_ent_entanglement_converted(const DensityMatrix& rho,
                                      const ProjectiveMeasurement& p);

struct EquivalenceReport {
  double coherence = 0.0;
  double negativity = 0.0;
  double rel_ent_entanglement = 0.0;
  bool coherent = false;    // coherence > 1e-9
  bool entangled = false;   // negativity > 1e-9
  bool passed = false;      // coherent == entangled and the entropies agree
};

// One-shot check that conversion turns block coherence into entanglement:
// the output is entangled exactly when the input is coherent, and the
// relative entropy of entanglement equals the block coherence within 1e-8.
EquivalenceReport equivalence_check(const DensityMatrix& rho, const ProjectiveMeasurement& p,
                              int target_dim);

}  // namespace povmcoh

#endif  // POVMCOH_CONVERT_HPP
