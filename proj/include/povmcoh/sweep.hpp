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

#ifndef POVMCOH_SWEEP_HPP
#define POVMCOH_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "povmcoh/convert.hpp"
#include "povmcoh/families.hpp"

namespace povmcoh {

// One evaluation of the two extracted four-outcome qubit POVMs on the
// equatorial state with phase t: coherence with respect to each, plus the
// entanglement actually produced by converting with the better ancilla
// preparation.
struct SweepRow {
  double t = 0.0;
  double coherence_e0 = 0.0;
  double coherence_e1 = 0.0;
  double entanglement_selected = 0.0;
  int ancilla_choice = 0;  // which family won (ties go to 0)
};

SweepRow phase_sweep_row(double t);

// Rows at t = k * pi / grid for k = 0 .. grid-1.
std::vector<SweepRow> phase_sweep(int grid);

// Randomised end-to-end conversion checks in a fixed dimension. Every
// fourth trial feeds the dephased (hence incoherent) state through instead,
// so both directions of the coherence/entanglement equivalence get
// exercised. Each trial reseeds from master_seed and the trial index, so a
// failure can be replayed in isolation.
struct EquivalenceSweep {
  int dim = 0;
  int trials = 0;
  int failures = 0;
  double worst_entropy_gap = 0.0;   // max |rel-ent entanglement - coherence|
  int first_failure_trial = -1;
  std::uint64_t first_failure_seed = 0;
};

std::uint64_t trial_seed(std::uint64_t master_seed, int trial);

EquivalenceSweep run_equivalence_sweep(int dim, int trials, std::uint64_t master_seed);

// The inputs a single sweep trial uses; lets a failing trial be reprinted.
struct EquivalenceTrial {
  DensityMatrix state;
  ProjectiveMeasurement measurement;
  EquivalenceReport report;
};

EquivalenceTrial run_equivalence_trial(int dim, std::uint64_t seed, bool dephase_input);

}  // namespace povmcoh

#endif  // POVMCOH_SWEEP_HPP
