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

#include "povmcoh/sweep.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace povmcoh {

SweepRow phase_sweep_row(double t) {
  const DensityMatrix rho = phase_state(t);
  const NaimarkExtension ext0 = four_element_extension(0);
  const std::vector<POVM> family = extract_povm_family(ext0);

  SweepRow row;
  row.t = t;
  row.coherence_e0 = povm_coherence(rho, family[0]).value;
  row.coherence_e1 = povm_coherence(rho, family[1]).value;
  row.ancilla_choice = row.coherence_e1 > row.coherence_e0 ? 1 : 0;

  // Convert with the winning ancilla preparation and measure what came out.
  const NaimarkExtension chosen = four_element_extension(row.ancilla_choice);
  const DensityMatrix lifted = embed_state(rho, chosen);
  row.entanglement_selected = rel_ent_entanglement_converted(lifted, chosen.measurement);
  return row;
}

std::vector<SweepRow> phase_sweep(int grid) {
  if (grid < 1) throw DimensionMismatch("phase_sweep: grid must be positive");
  std::vector<SweepRow> rows;
  rows.reserve(grid);
  for (int k = 0; k < grid; ++k) {
    rows.push_back(phase_sweep_row(k * std::numbers::pi / grid));
  }
  return rows;
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial) {
  // splitmix64 step keeps per-trial streams well separated.
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

EquivalenceTrial run_equivalence_trial(int dim, std::uint64_t seed, bool dephase_input) {
  Rng rng(seed);
  ProjectiveMeasurement p = random_projective(dim, rng);
  DensityMatrix rho = random_state(dim, rng);
  if (dephase_input) rho = block_dephase(rho, p);
  EquivalenceReport report = equivalence_check(rho, p, p.outcomes());
  return EquivalenceTrial{std::move(rho), std::move(p), report};
}

EquivalenceSweep run_equivalence_sweep(int dim, int trials, std::uint64_t master_seed) {
  if (dim < 2) throw DimensionMismatch("run_equivalence_sweep: dim must be at least 2");
  if (trials < 0) throw DimensionMismatch("run_equivalence_sweep: negative trial count");

  EquivalenceSweep sweep;
  sweep.dim = dim;
  sweep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = trial_seed(master_seed, t);
    const EquivalenceTrial trial = run_equivalence_trial(dim, seed, t % 4 == 3);
    sweep.worst_entropy_gap =
        std::max(sweep.worst_entropy_gap,
                 std::abs(trial.report.rel_ent_entanglement - trial.report.coherence));
    if (!trial.report.passed) {
      ++sweep.failures;
      if (sweep.first_failure_trial < 0) {
        sweep.first_failure_trial = t;
        sweep.first_failure_seed = seed;
      }
    }
  }
  return sweep;
}

}  // namespace povmcoh
