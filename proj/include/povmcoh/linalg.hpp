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

#ifndef POVMCOH_LINALG_HPP
#define POVMCOH_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "povmcoh/errors.hpp"

namespace povmcoh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Shared tolerances. Validation thresholds are deliberately looser than
// machine epsilon so that states assembled from other floating-point
// computations still pass, and tighter than anything a genuinely wrong
// input could sneak under.
inline constexpr double kHermTol = 1e-10;    // max |M - M†| entry
inline constexpr double kEigClip = 1e-10;    // eigenvalues in [-kEigClip, 0) clip to 0
inline constexpr double kProbClip = 1e-12;   // probabilities in [-kProbClip, 0) clip to 0
inline constexpr double kProbFloor = 1e-12;  // outcomes below this carry no entropy term
inline constexpr double kSumTol = 1e-9;      // |sum - 1| for traces, distributions, POVMs

// Eigendecomposition of a Hermitian matrix with a fixed output convention.
struct Spectrum {
  RealVector eigenvalues;  // sorted descending
  Matrix eigenvectors;     // column k pairs with eigenvalues(k); orthonormal
};

bool is_hermitian(const Matrix& m, double tol = kHermTol);

// Throws DimensionMismatch / NotFinite / NonHermitian on bad input and
// NoConvergence if the solver gives up. Eigenvalues come out descending and
// each eigenvector is rescaled so its first component of magnitude > 1e-8
// is real and positive, which makes repeated runs byte-identical.
Spectrum hermitian_eig(const Matrix& m);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-kEigClip, 0) are treated as 0; anything more negative throws NotPSD.
Matrix matrix_sqrt_psd(const Matrix& m);

// Shannon entropy in bits of a probability vector. Entries in [-1e-12, 0)
// clip to 0, 0 log 0 counts as 0, and the entries must sum to 1 within
// kSumTol (NotDistribution otherwise).
double shannon_entropy(const std::vector<double>& p);

// Entropy in bits of the spectrum of a Hermitian PSD matrix, without any
// trace normalisation. von_neumann_entropy in measurement.hpp wraps this
// for validated density matrices.
double eigenvalue_entropy(const Matrix& m);

// Kronecker product with composite index i_a * dim_b + i_b.
Matrix tensor_product(const Matrix& a, const Matrix& b);

// Trace out every subsystem not listed in `keep`. `dims` are the factor
// dimensions in tensor order; their product must equal the matrix size.
// `keep` holds distinct in-range subsystem indices (BadSubsystemIndex
// otherwise) and the result orders the kept factors as in `dims`.
Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& keep);

// Transpose the second factor of a dim_a x dim_b bipartite operator.
Matrix partial_transpose(const Matrix& m, int dim_a, int dim_b);

// Sum of singular values.
double trace_norm(const Matrix& m);

}  // namespace povmcoh

#endif  // POVMCOH_LINALG_HPP
