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

#ifndef POVMCOH_FAMILIES_HPP
#define POVMCOH_FAMILIES_HPP

#include "povmcoh/measurement.hpp"
#include "povmcoh/naimark.hpp"

namespace povmcoh {

// |k><k| on C^dim.
DensityMatrix basis_state(int dim, int k);

// Equatorial qubit state cos(t)|0> + i sin(t)|1>.
DensityMatrix phase_state(double t);

// The n-outcome qubit POVM {(2/n)|phi_k><phi_k|} over equatorial states
// phi_k = (|0> + e^{2 pi i k/n}|1>)/sqrt(2), for n >= 3.
POVM phase_covariant_povm(int outcomes);

// Three symmetric equatorial directions: phase_covariant_povm(3).
POVM qubit_trine_povm();

// Two diagonal effects {diag(a, 1-a), diag(1-a, a)} for a in [0, 1]. Not
// projective unless a is 0 or 1, yet every state is a fixed point of its
// projective parts.
POVM diagonal_two_outcome_povm(double a);

// Rank-one extension of phase_covariant_povm(4) onto C^2 ⊗ C^2 with a qubit
// ancilla prepared in |reference_index>. Extracting the family gives the
// four-outcome phase POVM at ancilla level 0 and a second, unitarily
// related qubit POVM at level 1.
NaimarkExtension four_element_extension(int reference_index = 0);

}  // namespace povmcoh

#endif  // POVMCOH_FAMILIES_HPP
