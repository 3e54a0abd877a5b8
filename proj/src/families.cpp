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

#include "povmcoh/families.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace povmcoh {

DensityMatrix basis_state(int dim, int k) {
  if (dim < 1 || k < 0 || k >= dim) {
    throw DimensionMismatch("basis_state: index " + std::to_string(k) + " outside [0, " +
                            std::to_string(dim) + ")");
  }
  Matrix m = Matrix::Zero(dim, dim);
  m(k, k) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix phase_state(double t) {
  Vector psi(2);
  psi(0) = std::cos(t);
  psi(1) = Complex(0.0, std::sin(t));
  return DensityMatrix(psi * psi.adjoint());
}

POVM phase_covariant_povm(int outcomes) {
  if (outcomes < 3) {
    throw DimensionMismatch("phase_covariant_povm: needs at least 3 outcomes, got " +
                            std::to_string(outcomes));
  }
  std::vector<Matrix> effects;
  effects.reserve(outcomes);
  for (int k = 0; k < outcomes; ++k) {
    Vector phi(2);
    phi(0) = 1.0 / std::sqrt(2.0);
    phi(1) = std::polar(1.0 / std::sqrt(2.0), 2.0 * std::numbers::pi * k / outcomes);
    Matrix e = (2.0 / outcomes) * (phi * phi.adjoint());
    effects.push_back(0.5 * (e + e.adjoint()));
  }
  return POVM(std::move(effects));
}

POVM qubit_trine_povm() { return phase_covariant_povm(3); }

POVM diagonal_two_outcome_povm(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw NotPSD("diagonal_two_outcome_povm: parameter " + std::to_string(a) +
                 " outside [0, 1]");
  }
  Matrix e0 = Matrix::Zero(2, 2);
  e0(0, 0) = a;
  e0(1, 1) = 1.0 - a;
  Matrix e1 = Matrix::Zero(2, 2);
  e1(0, 0) = 1.0 - a;
  e1(1, 1) = a;
  return POVM({e0, e1});
}

NaimarkExtension four_element_extension(int reference_index) {
  if (reference_index < 0 || reference_index > 1) {
    throw DimensionMismatch("four_element_extension: reference index must be 0 or 1");
  }
  // Four orthonormal vectors on C^2 ⊗ C^2 with the composite index ordered
  // system-major, (s, a) = 2s + a. Restricted to ancilla level 0 they are
  // proportional to the four equatorial states of phase_covariant_povm(4).
  const double h = 0.5;
  const Complex i(0.0, 1.0);
  const Complex q1 = std::polar(1.0, std::numbers::pi / 4.0);        // e^{i pi/4}
  const Complex q3 = std::polar(1.0, 3.0 * std::numbers::pi / 4.0);  // e^{3 i pi/4}
  const double s2 = std::sqrt(2.0);

  Matrix vecs(4, 4);
  vecs.col(0) << h, h * s2, h, 0.0;
  vecs.col(1) << h, -h * q1, h * i, h * q1;
  vecs.col(2) << h, 0.0, -h, -h * i * s2;
  vecs.col(3) << h, -h * std::conj(q1), -h * i, h * q3;

  std::vector<Matrix> projectors;
  projectors.reserve(4);
  for (int k = 0; k < 4; ++k) {
    Matrix p = vecs.col(k) * vecs.col(k).adjoint();
    projectors.push_back(0.5 * (p + p.adjoint()));
  }
  return NaimarkExtension{ProjectiveMeasurement(std::move(projectors)),
                          AncillaEmbedding{2, reference_index}, 2};
}

}  // namespace povmcoh
