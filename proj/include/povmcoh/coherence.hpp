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

#ifndef POVMCOH_COHERENCE_HPP
#define POVMCOH_COHERENCE_HPP

#include <vector>

#include "povmcoh/measurement.hpp"
#include "povmcoh/naimark.hpp"

namespace povmcoh {

// Breakdown of a relative-entropy coherence evaluation.
struct CoherenceReport {
  double value = 0.0;
  std::vector<double> probabilities;                // p_i = tr(E_i rho)
  std::vector<double> post_measurement_entropies;   // S(A_i rho A_i† / p_i); 0 when p_i ~ 0
  double state_entropy = 0.0;                       // S(rho)
};

// Relative entropy of block coherence S(Δ[rho]) - S(rho), where Δ is the
// pinching over the given projective blocks. Zero iff rho is block diagonal.
double block_coherence(const DensityMatrix& rho, const ProjectiveMeasurement& p);

// Coherence with respect to a general POVM:
//   H[{p_i}] + sum_i p_i S(rho_i) - S(rho),
// with p_i = tr(E_i rho) and rho_i the normalised post-measurement state for
// the canonical operators A_i = sqrt(E_i). Outcomes with p_i below
// kProbFloor contribute nothing.
CoherenceReport povm_coherence(const DensityMatrix& rho, const POVM& povm);

// Same quantity computed as the block coherence of the embedded state with
// respect to the extension's projective measurement. Cross-checks against
// the direct formula and throws InconsistentExtension when the two routes
// disagree by more than 1e-6.
double povm_coherence_via_naimark(const DensityMatrix& rho, const POVM& povm,
                                  const NaimarkExtension& ext);

// Whether rho is a fixed point of conjugation by the projective parts of
// the effects: sum_i Ē_i rho Ē_i = rho within 1e-9 in Frobenius norm.
bool is_povm_incoherent(const DensityMatrix& rho, const POVM& povm);

}  // namespace povmcoh

#endif  // POVMCOH_COHERENCE_HPP
