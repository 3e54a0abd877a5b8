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

#ifndef POVMCOH_MEASUREMENT_HPP
#define POVMCOH_MEASUREMENT_HPP

#include <vector>

#include "povmcoh/linalg.hpp"

namespace povmcoh {

// A quantum state. The constructor validates (square, finite, Hermitian
// within kHermTol, eigenvalues >= -kEigClip, trace 1 within kSumTol) and
// stores the symmetrised matrix (M + M†)/2.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  const Matrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  Matrix mat_;
};

// A general measurement: effects E_i that are Hermitian PSD and sum to the
// identity. Validation throws NotPSD(index) for a non-Hermitian or
// indefinite effect and NotComplete if the sum misses the identity by more
// than kSumTol in any entry.
class POVM {
 public:
  explicit POVM(std::vector<Matrix> effects);

  const std::vector<Matrix>& effects() const { return effects_; }
  const Matrix& effect(int i) const { return effects_.at(i); }
  int dim() const { return static_cast<int>(effects_.front().rows()); }
  int outcomes() const { return static_cast<int>(effects_.size()); }

 private:
  std::vector<Matrix> effects_;
};

// A projective measurement of arbitrary rank: Hermitian projectors that are
// idempotent (NotIdempotent), mutually orthogonal (NotOrthogonal) and
// complete (NotComplete), all within kSumTol.
class ProjectiveMeasurement {
 public:
  explicit ProjectiveMeasurement(std::vector<Matrix> projectors);

  const std::vector<Matrix>& projectors() const { return projectors_; }
  const Matrix& projector(int i) const { return projectors_.at(i); }
  int dim() const { return static_cast<int>(projectors_.front().rows()); }
  int outcomes() const { return static_cast<int>(projectors_.size()); }

 private:
  std::vector<Matrix> projectors_;
};

// Pinching map sum_i P_i rho P_i. Kills all coherences between the blocks
// and is idempotent.
DensityMatrix block_dephase(const DensityMatrix& rho, const ProjectiveMeasurement& p);

// Projector onto the range of a Hermitian PSD operator (eigenvectors with
// eigenvalue > kEigClip).
Matrix projective_part(const Matrix& effect);

// Canonical measurement operators A_i = sqrt(E_i), so sum_i A_i†A_i = I.
std::vector<Matrix> measurement_operators(const POVM& povm);

// S(rho) = -tr(rho log2 rho).
double von_neumann_entropy(const DensityMatrix& rho);

// S(rho || sigma) = tr(rho log2 rho) - tr(rho log2 sigma), in bits.
// Returns +infinity when rho puts more than 1e-9 of its mass outside the
// support of sigma. Never returns a negative number.
double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace povmcoh

#endif  // POVMCOH_MEASUREMENT_HPP
