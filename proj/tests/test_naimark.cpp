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

#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "povmcoh/families.hpp"
#include "povmcoh/naimark.hpp"
#include "povmcoh/random.hpp"
#include "test_helpers.hpp"

using namespace povmcoh;
using test::max_diff;

namespace {

POVM computational_povm() {
  Matrix e0 = Matrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  Matrix e1 = Matrix::Zero(2, 2);
  e1(1, 1) = 1.0;
  return POVM({e0, e1});
}

// The second qubit POVM hiding at ancilla level 1 of the four-outcome phase
// extension: effects (1/2)|v_k><v_k| over the frozen vectors below.
std::vector<Matrix> second_family_effects() {
  const Complex i(0.0, 1.0);
  const Complex q1 = std::polar(1.0, std::numbers::pi / 4.0);
  const Complex q3 = std::polar(1.0, 3.0 * std::numbers::pi / 4.0);
  const double isq = 1.0 / std::sqrt(2.0);

  std::vector<Vector> vecs(4, Vector(2));
  vecs[0] << 1.0, 0.0;
  vecs[1] << -isq * q1, isq * q1;
  vecs[2] << 0.0, -i;
  vecs[3] << -isq * std::conj(q1), isq * q3;

  std::vector<Matrix> effects;
  for (const Vector& v : vecs) effects.push_back(0.5 * (v * v.adjoint()));
  return effects;
}

}  // namespace

TEST_SUITE("naimark") {

TEST_CASE("complete_isometry fills columns deterministically") {
  Matrix start(3, 1);
  start << 1.0, 0.0, 0.0;
  const Matrix u = complete_isometry(start);
  CHECK(max_diff(u.adjoint() * u, Matrix::Identity(3, 3)) < 1e-12);
  CHECK(max_diff(u.leftCols(1), start) == 0.0);
  // With |0> taken, the sweep picks |1> then |2> unchanged.
  CHECK(max_diff(u, Matrix::Identity(3, 3)) < 1e-12);

  Rng rng(21);
  const Matrix haar = random_unitary(4, rng);
  const Matrix completed = complete_isometry(haar.leftCols(2));
  CHECK(max_diff(completed.adjoint() * completed, Matrix::Identity(4, 4)) < 1e-10);
  const Matrix again = complete_isometry(haar.leftCols(2));
  CHECK((completed - again).cwiseAbs().maxCoeff() == 0.0);

  Matrix sloppy(3, 2);
  sloppy << 1.0, 0.5, 0.0, 0.5, 0.0, 0.0;
  CHECK_THROWS_AS(complete_isometry(sloppy), CompletionFailure);
}

TEST_CASE("embed_state pads or tensors depending on the embedding") {
  const NaimarkExtension ext3 = fourier_family_extension(3).second;
  const DensityMatrix padded = embed_state(basis_state(2, 0), ext3);
  REQUIRE(padded.dim() == 3);
  Matrix expected = Matrix::Zero(3, 3);
  expected(0, 0) = 1.0;
  CHECK(max_diff(padded.matrix(), expected) < 1e-14);

  const NaimarkExtension ext4 = four_element_extension(1);
  const DensityMatrix joint = embed_state(basis_state(2, 0), ext4);
  REQUIRE(joint.dim() == 4);
  Matrix expected4 = Matrix::Zero(4, 4);
  expected4(1, 1) = 1.0;  // (s, a) = (0, 1) sits at composite index 1
  CHECK(max_diff(joint.matrix(), expected4) < 1e-14);

  CHECK_THROWS_AS(embed_state(DensityMatrix(Matrix::Identity(3, 3) / 3.0), ext4),
                  DimensionMismatch);
}

TEST_CASE("canonical_extension of the diagonal two-outcome family") {
  for (double a : {0.1, 0.25, 0.4}) {
    const POVM povm = diagonal_two_outcome_povm(a);
    const auto [ext, kraus] = canonical_extension(povm);

    CHECK(ext.source_dim == 2);
    CHECK(ext.measurement.dim() == 4);
    const auto* anc = std::get_if<AncillaEmbedding>(&ext.embedding);
    REQUIRE(anc != nullptr);
    CHECK(anc->ancilla_dim == 2);
    CHECK(anc->reference_index == 0);

    // The reference-ancilla blocks are the measurement operators.
    Matrix sqrt0 = Matrix::Zero(2, 2);
    sqrt0(0, 0) = std::sqrt(a);
    sqrt0(1, 1) = std::sqrt(1.0 - a);
    Matrix sqrt1 = Matrix::Zero(2, 2);
    sqrt1(0, 0) = std::sqrt(1.0 - a);
    sqrt1(1, 1) = std::sqrt(a);
    CHECK(max_diff(kraus.ops[0][0], sqrt0) < 1e-12);
    CHECK(max_diff(kraus.ops[1][0], sqrt1) < 1e-12);

    // Blocks of a unitary: sum_i ops[i][a]† ops[i][b] = delta_ab I.
    for (int va = 0; va < 2; ++va) {
      for (int vb = 0; vb < 2; ++vb) {
        Matrix sum = Matrix::Zero(2, 2);
        for (int i = 0; i < 2; ++i) sum += kraus.ops[i][va].adjoint() * kraus.ops[i][vb];
        const Matrix expected =
            va == vb ? Matrix::Identity(2, 2) : Matrix::Zero(2, 2).eval();
        CHECK(max_diff(sum, expected) < 1e-10);
      }
    }

    const VerificationReport report = verify_extension(povm, ext, 20, 11);
    CHECK(report.passed);
    CHECK(report.max_deviation < 1e-9);
  }
}

TEST_CASE("canonical_extension handles trine, four-outcome and projective input") {
  for (const POVM& povm :
       {qubit_trine_povm(), phase_covariant_povm(4), computational_povm()}) {
    const auto [ext, kraus] = canonical_extension(povm);
    CHECK(ext.measurement.dim() == povm.dim() * povm.outcomes());
    const VerificationReport report = verify_extension(povm, ext, 20, 13);
    CHECK(report.passed);

    // The reference-level blocks of the projectors recover the POVM.
    const std::vector<POVM> family = extract_povm_family(ext);
    for (int i = 0; i < povm.outcomes(); ++i) {
      CHECK(max_diff(family[0].effect(i), povm.effect(i)) < 1e-9);
    }
  }
}

TEST_CASE("canonical and four-element extensions produce the same statistics") {
  const POVM povm = phase_covariant_povm(4);
  const auto [canonical, kraus] = canonical_extension(povm);
  const NaimarkExtension small = four_element_extension(0);
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_state(2, rng);
    const DensityMatrix big = embed_state(rho, canonical);
    const DensityMatrix little = embed_state(rho, small);
    for (int i = 0; i < 4; ++i) {
      const double p_canonical =
          (canonical.measurement.projector(i) * big.matrix()).trace().real();
      const double p_small =
          (small.measurement.projector(i) * little.matrix()).trace().real();
      const double p_direct = (povm.effect(i) * rho.matrix()).trace().real();
      CHECK(std::abs(p_canonical - p_direct) < 1e-10);
      CHECK(std::abs(p_small - p_direct) < 1e-10);
    }
  }
}

TEST_CASE("minimal_rank_one_extension") {
  // Trine: three rank-one effects extend to an orthonormal triple on C^3.
  const POVM trine = qubit_trine_povm();
  const NaimarkExtension ext = minimal_rank_one_extension(trine);
  CHECK(ext.measurement.dim() == 3);
  CHECK(std::holds_alternative<DirectSumEmbedding>(ext.embedding));
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(ext.measurement.projector(k).trace().real() - 1.0) < 1e-10);
  }
  CHECK(verify_extension(trine, ext, 20, 19).passed);

  // Four-outcome family lands on C^4.
  const POVM four = phase_covariant_povm(4);
  CHECK(verify_extension(four, minimal_rank_one_extension(four), 20, 23).passed);

  // A projective rank-one input needs no extension at all and the
  // construction returns it unchanged.
  const NaimarkExtension trivial = minimal_rank_one_extension(computational_povm());
  CHECK(trivial.measurement.dim() == 2);
  for (int k = 0; k < 2; ++k) {
    CHECK(max_diff(trivial.measurement.projector(k), computational_povm().effect(k)) <
          1e-12);
  }

  // Rank-two effects are out of scope for this construction.
  CHECK_THROWS_AS(minimal_rank_one_extension(diagonal_two_outcome_povm(0.25)), NotRankOne);
}

TEST_CASE("fourier_family_extension builds the phase POVM and its extension") {
  const auto [povm, ext] = fourier_family_extension(3);
  const POVM trine = qubit_trine_povm();
  for (int k = 0; k < 3; ++k) CHECK(max_diff(povm.effect(k), trine.effect(k)) < 1e-12);

  for (int d : {3, 5, 7}) {
    const auto [family, extension] = fourier_family_extension(d);
    CHECK(family.outcomes() == d);
    CHECK(extension.measurement.dim() == d);
    CHECK(verify_extension(family, extension, 20, 29).passed);
    // Restricting each extended projector to the qubit corner recovers the
    // effect exactly.
    for (int k = 0; k < d; ++k) {
      CHECK(max_diff(extension.measurement.projector(k).topLeftCorner(2, 2),
                     family.effect(k)) < 1e-12);
    }
  }

  CHECK_THROWS_AS(fourier_family_extension(4), NotPrime);
  CHECK_THROWS_AS(fourier_family_extension(6), NotPrime);
  CHECK_THROWS_AS(fourier_family_extension(2), NotPrime);
}

TEST_CASE("verify_extension flags a mispaired extension") {
  auto [povm, ext] = fourier_family_extension(3);
  // Swap two outcome labels: completeness still holds, the pairing does not.
  std::vector<Matrix> projectors = ext.measurement.projectors();
  std::swap(projectors[1], projectors[2]);
  const NaimarkExtension bad{ProjectiveMeasurement(projectors), ext.embedding,
                             ext.source_dim};
  const VerificationReport report = verify_extension(povm, bad, 20, 31);
  CHECK(!report.passed);
  CHECK(report.max_deviation > 1e-3);

  CHECK_THROWS_AS(verify_extension(phase_covariant_povm(4), ext, 5, 1), DimensionMismatch);
}

TEST_CASE("extract_povm_family recovers both families of the phase extension") {
  const std::vector<POVM> family = extract_povm_family(four_element_extension(0));
  REQUIRE(family.size() == 2);

  const POVM four = phase_covariant_povm(4);
  for (int k = 0; k < 4; ++k) CHECK(max_diff(family[0].effect(k), four.effect(k)) < 1e-9);

  const std::vector<Matrix> second = second_family_effects();
  for (int k = 0; k < 4; ++k) CHECK(max_diff(family[1].effect(k), second[k]) < 1e-9);

  // Direct-sum extensions carry no ancilla to slice along.
  const auto [povm3, ext3] = fourier_family_extension(3);
  CHECK_THROWS_AS(extract_povm_family(ext3), NotAncillaStructured);
}

TEST_CASE("four_element_extension validates its reference index") {
  CHECK_THROWS_AS(four_element_extension(2), DimensionMismatch);
  CHECK_THROWS_AS(four_element_extension(-1), DimensionMismatch);
  const NaimarkExtension ext = four_element_extension(1);
  const auto* anc = std::get_if<AncillaEmbedding>(&ext.embedding);
  REQUIRE(anc != nullptr);
  CHECK(anc->reference_index == 1);
}

}  // TEST_SUITE("naimark")
