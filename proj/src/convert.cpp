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

#include "povmcoh/convert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace povmcoh {

namespace {

// sum_{i,j} P_i rho P_j ⊗ |i><j| when full is true, the diagonal i = j part
// otherwise. This is what the entangling unitary produces from rho ⊗ |0><0|
// on a minimal ancilla (full), respectively its ancilla-dephased separable
// companion (diagonal only).
Matrix correlated_blocks(const DensityMatrix& rho, const ProjectiveMeasurement& p,
                         bool full) {
  const int ds = p.dim();
  const int n = p.outcomes();
  Matrix out = Matrix::Zero(static_cast<long>(ds) * n, static_cast<long>(ds) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!full && i != j) continue;
      const Matrix block = p.projector(i) * rho.matrix() * p.projector(j);
      for (int k = 0; k < ds; ++k)
        for (int l = 0; l < ds; ++l) out(k * n + i, l * n + j) = block(k, l);
    }
  }
  return 0.5 * (out + out.adjoint());
}

}  // namespace

Matrix build_entangling_unitary(const ProjectiveMeasurement& p, int target_dim) {
  const int n = p.outcomes();
  const int ds = p.dim();
  if (target_dim < n) {
    throw TargetTooSmall("build_entangling_unitary: target dim " +
                         std::to_string(target_dim) + " cannot index " + std::to_string(n) +
                         " measurement outcomes");
  }
  const long total = static_cast<long>(ds) * target_dim;
  Matrix u = Matrix::Zero(total, total);
  // Outcome block i shifts ancilla level j to (i + j) mod n ...
  for (int i = 0; i < n; ++i) {
    Matrix shift = Matrix::Zero(target_dim, target_dim);
    for (int j = 0; j < n; ++j) shift((i + j) % n, j) = 1.0;
    u += tensor_product(p.projector(i), shift);
  }
  // ... and ancilla levels beyond the outcome range ride along untouched.
  if (target_dim > n) {
    Matrix rest = Matrix::Zero(target_dim, target_dim);
    for (int j = n; j < target_dim; ++j) rest(j, j) = 1.0;
    u += tensor_product(Matrix::Identity(ds, ds), rest);
  }
  return u;
}

SandwichReport conversion_entanglement_bounds(const DensityMatrix& rho,
                                              const ProjectiveMeasurement& p) {
  if (rho.dim() != p.dim()) {
    throw DimensionMismatch("conversion_entanglement_bounds: state dim " +
                            std::to_string(rho.dim()) + " vs measurement dim " +
                            std::to_string(p.dim()));
  }
  const Matrix sigma = correlated_blocks(rho, p, true);
  const Matrix tau = correlated_blocks(rho, p, false);

  SandwichReport report;
  report.coherence = block_coherence(rho, p);
  // Hashing-type bound from below: entropy of the ancilla-traced marginal
  // minus the total entropy.
  const Matrix marginal = partial_trace(sigma, {p.dim(), p.outcomes()}, {0});
  report.lower = eigenvalue_entropy(marginal) - eigenvalue_entropy(sigma);
  // Distance to the ancilla-dephased separable state from above.
  report.upper = quantum_relative_entropy(DensityMatrix(sigma), DensityMatrix(tau));
  return report;
}

double rel_ent_entanglement_converted(const DensityMatrix& rho,
                                      const ProjectiveMeasurement& p) {
  const SandwichReport bounds = conversion_entanglement_bounds(rho, p);
  if (std::abs(bounds.lower - bounds.coherence) > 1e-6 ||
      std::abs(bounds.upper - bounds.coherence) > 1e-6) {
    throw SandwichViolation("rel_ent_entanglement_converted: bounds [" +
                            std::to_string(bounds.lower) + ", " + std::to_string(bounds.upper) +
                            "] fail to pin the block coherence " +
                            std::to_string(bounds.coherence));
  }
  return bounds.lower;
}

double negativity(const DensityMatrix& rho, int dim_a, int dim_b) {
  return std::max(0.0, 0.5 * (trace_norm(partial_transpose(rho.matrix(), dim_a, dim_b)) - 1.0));
}

ConversionResult convert(const DensityMatrix& rho, const ProjectiveMeasurement& p,
                         int target_dim) {
  if (rho.dim() != p.dim()) {
    throw DimensionMismatch("convert: state dim " + std::to_string(rho.dim()) +
                            " vs measurement dim " + std::to_string(p.dim()));
  }
  Matrix u = build_entangling_unitary(p, target_dim);

  Matrix ancilla = Matrix::Zero(target_dim, target_dim);
  ancilla(0, 0) = 1.0;
  const Matrix joint = tensor_product(rho.matrix(), ancilla);
  Matrix out = u * joint * u.adjoint();
  out = 0.5 * (out + out.adjoint());

  DensityMatrix output(out);
  const double neg = negativity(output, rho.dim(), target_dim);
  const double rel_ent = rel_ent_entanglement_converted(rho, p);
  const double coherence = block_coherence(rho, p);
  return ConversionResult{std::move(output), rho.dim(), target_dim,
                          std::move(u),      neg,       rel_ent,
                          coherence};
}

EquivalenceReport equivalence_check(const DensityMatrix& rho, const ProjectiveMeasurement& p,
                              int target_dim) {
  const ConversionResult res = convert(rho, p, target_dim);
  EquivalenceReport report;
  report.coherence = res.coherence_input;
  report.negativity = res.negativity;
  report.rel_ent_entanglement = res.rel_ent_entanglement;
  report.coherent = res.coherence_input > 1e-9;
  report.entangled = res.negativity > 1e-9;
  report.passed = (report.coherent == report.entangled) &&
                  std::abs(res.rel_ent_entanglement - res.coherence_input) <= 1e-8;
  return report;
}

}  // namespace povmcoh
