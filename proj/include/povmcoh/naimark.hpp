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

#ifndef POVMCOH_NAIMARK_HPP
#define POVMCOH_NAIMARK_HPP

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "povmcoh/measurement.hpp"
#include "povmcoh/random.hpp"

namespace povmcoh {

// How source states sit inside the extended space.

// Pad with zeros: a d-dimensional state becomes the top-left block of a
// target_dim-dimensional one.
struct DirectSumEmbedding {
  int target_dim;
};

// Tensor a fixed ancilla basis state on the right: rho -> rho ⊗ |a><a| with
// a = reference_index in an ancilla_dim-dimensional ancilla.
struct AncillaEmbedding {
  int ancilla_dim;
  int reference_index = 0;
};

using Embedding = std::variant<DirectSumEmbedding, AncillaEmbedding>;

// A projective measurement on a larger space that reproduces a POVM's
// statistics on embedded source states.
struct NaimarkExtension {
  ProjectiveMeasurement measurement;
  Embedding embedding;
  int source_dim;
};

// The measurement-operator blocks of the canonical dilation isometry:
// ops[i][a] is the source_dim x source_dim block pairing outcome i with
// ancilla level a, and ops[i][0] = sqrt(E_i).
struct KrausBlock {
  std::vector<std::vector<Matrix>> ops;
};

struct VerificationReport {
  int trials = 0;
  double max_deviation = 0.0;
  bool passed = false;
};

// Dimension of the extended space an embedding maps into.
int embedded_dim(const Embedding& embedding, int source_dim);

// Lift a source state into the extension space. Throws DimensionMismatch if
// the state does not match ext.source_dim or the embedding does not land in
// the measurement's space.
DensityMatrix embed_state(const DensityMatrix& rho, const NaimarkExtension& ext);

// Complete the orthonormal columns of `isometry` to a full unitary by
// modified Gram-Schmidt over standard basis vectors taken in index order,
// dropping candidates whose residual falls below 1e-8. Deterministic.
// Throws CompletionFailure if the basis sweep cannot fill every column.
Matrix complete_isometry(const Matrix& isometry);

// Canonical ancilla dilation of an n-outcome POVM on C^d: extend the
// isometry V|psi> = sum_i sqrt(E_i)|psi> ⊗ |i> to a unitary on C^d ⊗ C^n
// and pull back the projectors P_i = V†(I ⊗ |i><i|)V. Works for any POVM.
std::pair<NaimarkExtension, KrausBlock> canonical_extension(const POVM& povm);

// Minimal extension for rank-one POVMs {c_k |phi_k><phi_k|} with n outcomes:
// complete the n x d isometry sum_k sqrt(c_k)|k><phi_k| to a unitary V~ on
// C^n and take P_k = V~†|k><k|V~. Throws NotRankOne if any effect has rank
// other than one.
NaimarkExtension minimal_rank_one_extension(const POVM& povm);

// For prime d >= 3, the d-outcome qubit POVM {(2/d)|phi_k><phi_k|} built
// from equatorial states phi_k = (|0> + w^k |1>)/sqrt(2), w = exp(2 pi i/d),
// together with its rank-one extension onto the discrete Fourier basis of
// C^d. Throws NotPrime otherwise.
std::pair<POVM, NaimarkExtension> fourier_family_extension(int d);

// Monte Carlo check that tr(E_i rho) = tr(P_i Phi[rho]) on random source
// states; passes when the worst deviation stays below 1e-9.
VerificationReport verify_extension(const POVM& povm, const NaimarkExtension& ext,
                                    int trials, std::uint64_t seed);

// Slice an ancilla-embedded extension back into one POVM per ancilla level:
// family[a].effect(i) is the (a, a) source-space block of P_i. Throws
// NotAncillaStructured unless the embedding is an ancilla embedding whose
// dimensions factor the measurement space.
std::vector<POVM> extract_povm_family(const NaimarkExtension& ext);

}  // namespace povmcoh

#endif  // POVMCOH_NAIMARK_HPP
