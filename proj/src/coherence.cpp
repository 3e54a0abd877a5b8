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

#include "povmcoh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace povmcoh {

double block_coherence(const DensityMatrix& rho, const ProjectiveMeasurement& p) {
  const DensityMatrix dephased = block_dephase(rho, p);
  return std::max(0.0, von_neumann_entropy(dephased) - von_neumann_entropy(rho));
}

CoherenceReport povm_coherence(const DensityMatrix& rho, const POVM& povm) {
  if (rho.dim() != povm.dim()) {
    throw DimensionMismatch("povm_coherence: state dim " + std::to_string(rho.dim()) +
                            " vs POVM dim " + std::to_string(povm.dim()));
  }
  const std::vector<Matrix> roots = measurement_operators(povm);

  CoherenceReport report;
  report.state_entropy = von_neumann_entropy(rho);
  report.probabilities.reserve(povm.outcomes());
  report.post_measurement_entropies.reserve(povm.outcomes());

  double weighted_entropy = 0.0;
  for (int i = 0; i < povm.outcomes(); ++i) {
    const Matrix post = roots[i] * rho.matrix() * roots[i].adjoint();
    const double p = std::max(0.0, post.trace().real());
    report.probabilities.push_back(p);
    if (p < kProbFloor) {
      report.post_measurement_entropies.push_back(0.0);
      continue;
    }
    const double entropy = eigenvalue_entropy((0.5 / p) * (post + post.adjoint()));
    report.post_measurement_entropies.push_back(entropy);
    weighted_entropy += p * entropy;
  }

  report.value = std::max(0.0, shannon_entropy(report.probabilities) + weighted_entropy -
                                   report.state_entropy);
  return report;
}

double povm_coherence_via_naimark(const DensityMatrix& rho, const POVM& povm,
                                  const NaimarkExtension& ext) {
  if (rho.dim() != povm.dim()) {
    throw DimensionMismatch("povm_coherence_via_naimark: state dim " +
                            std::to_string(rho.dim()) + " vs POVM dim " +
                            std::to_string(povm.dim()));
  }
  if (povm.outcomes() != ext.measurement.outcomes()) {
    throw DimensionMismatch("povm_coherence_via_naimark: POVM has " +
                            std::to_string(povm.outcomes()) + " outcomes, the extension " +
                            std::to_string(ext.measurement.outcomes()));
  }
  const double via_extension = block_coherence(embed_state(rho, ext), ext.measurement);
  const double direct = povm_coherence(rho, povm).value;
  if (std::abs(via_extension - direct) > 1e-6) {
    throw InconsistentExtension(
        "povm_coherence_via_naimark: extension route gives " + std::to_string(via_extension) +
        ", direct formula gives " + std::to_string(direct));
  }
  return via_extension;
}

bool is_povm_incoherent(const DensityMatrix& rho, const POVM& povm) {
  if (rho.dim() != povm.dim()) {
    throw DimensionMismatch("is_povm_incoherent: state dim " + std::to_string(rho.dim()) +
                            " vs POVM dim " + std::to_string(povm.dim()));
  }
  Matrix pinched = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& effect : povm.effects()) {
    const Matrix bar = projective_part(effect);
    pinched += bar * rho.matrix() * bar;
  }
  return (pinched - rho.matrix()).norm() < 1e-9;
}

}  // namespace povmcoh
