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

#include "povmcoh/naimark.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace povmcoh {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

}  // namespace

int embedded_dim(const Embedding& embedding, int source_dim) {
  if (const auto* ds = std::get_if<DirectSumEmbedding>(&embedding)) {
    if (ds->target_dim < source_dim) {
      throw DimensionMismatch("embedded_dim: direct-sum target " +
                              std::to_string(ds->target_dim) + " smaller than source " +
                              std::to_string(source_dim));
    }
    return ds->target_dim;
  }
  const auto& anc = std::get<AncillaEmbedding>(embedding);
  if (anc.ancilla_dim < 1 || anc.reference_index < 0 ||
      anc.reference_index >= anc.ancilla_dim) {
    throw DimensionMismatch("embedded_dim: ancilla reference index " +
                            std::to_string(anc.reference_index) + " outside [0, " +
                            std::to_string(anc.ancilla_dim) + ")");
  }
  return source_dim * anc.ancilla_dim;
}

DensityMatrix embed_state(const DensityMatrix& rho, const NaimarkExtension& ext) {
  if (rho.dim() != ext.source_dim) {
    throw DimensionMismatch("embed_state: state dim " + std::to_string(rho.dim()) +
                            " vs extension source dim " + std::to_string(ext.source_dim));
  }
  const int target = embedded_dim(ext.embedding, ext.source_dim);
  if (target != ext.measurement.dim()) {
    throw DimensionMismatch("embed_state: embedding lands in dim " + std::to_string(target) +
                            " but the measurement lives in dim " +
                            std::to_string(ext.measurement.dim()));
  }
  if (std::holds_alternative<DirectSumEmbedding>(ext.embedding)) {
    Matrix out = Matrix::Zero(target, target);
    out.topLeftCorner(rho.dim(), rho.dim()) = rho.matrix();
    return DensityMatrix(out);
  }
  const auto& anc = std::get<AncillaEmbedding>(ext.embedding);
  Matrix ref = Matrix::Zero(anc.ancilla_dim, anc.ancilla_dim);
  ref(anc.reference_index, anc.reference_index) = 1.0;
  return DensityMatrix(tensor_product(rho.matrix(), ref));
}

Matrix complete_isometry(const Matrix& isometry) {
  const Eigen::Index n = isometry.rows();
  const Eigen::Index k0 = isometry.cols();
  if (n < 1 || k0 < 1 || k0 > n) {
    throw DimensionMismatch("complete_isometry: cannot complete a " + std::to_string(n) +
                            "x" + std::to_string(k0) + " matrix");
  }
  if (!isometry.allFinite()) throw NotFinite("complete_isometry: input contains NaN or Inf");
  const double ortho =
      (isometry.adjoint() * isometry - Matrix::Identity(k0, k0)).cwiseAbs().maxCoeff();
  if (ortho > 1e-8) {
    throw CompletionFailure("complete_isometry: input columns not orthonormal (deviation " +
                            std::to_string(ortho) + ")");
  }

  Matrix q(n, n);
  q.leftCols(k0) = isometry;
  Eigen::Index filled = k0;
  // Sweep the standard basis in index order; a second projection pass keeps
  // the completed columns orthogonal to working precision.
  for (Eigen::Index cand = 0; cand < n && filled < n; ++cand) {
    Vector r = Vector::Zero(n);
    r(cand) = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < filled; ++j) r -= q.col(j).dot(r) * q.col(j);
    }
    const double norm = r.norm();
    if (norm < 1e-8) continue;
    q.col(filled++) = r / norm;
  }
  if (filled < n) {
    throw CompletionFailure("complete_isometry: basis sweep filled only " +
                            std::to_string(filled) + " of " + std::to_string(n) + " columns");
  }
  return q;
}

std::pair<NaimarkExtension, KrausBlock> canonical_extension(const POVM& povm) {
  const int d0 = povm.dim();
  const int n = povm.outcomes();
  const int ds = d0 * n;
  const std::vector<Matrix> roots = measurement_operators(povm);

  // The dilation isometry sends |l> to sum_i sqrt(E_i)|l> ⊗ |i>, with the
  // composite index ordered system-major: row (k, i) = k*n + i.
  Matrix iso(ds, d0);
  for (int l = 0; l < d0; ++l)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < d0; ++k) iso(k * n + i, l) = roots[i](k, l);

  const Matrix completed = complete_isometry(iso);

  // Distribute the columns of the completed unitary so that column (l, a)
  // of V carries the isometry for a = 0 and the filler columns, in order,
  // for a > 0. V then maps ρ ⊗ |0><0| exactly as the isometry does.
  Matrix v(ds, ds);
  Eigen::Index next_filler = d0;
  for (int l = 0; l < d0; ++l) {
    for (int a = 0; a < n; ++a) {
      if (a == 0) {
        v.col(l * n + a) = completed.col(l);
      } else {
        v.col(l * n + a) = completed.col(next_filler++);
      }
    }
  }

  KrausBlock kraus;
  kraus.ops.assign(n, std::vector<Matrix>(n, Matrix::Zero(d0, d0)));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int k = 0; k < d0; ++k)
        for (int l = 0; l < d0; ++l) kraus.ops[i][a](k, l) = v(k * n + i, l * n + a);

  std::vector<Matrix> projectors;
  projectors.reserve(n);
  for (int i = 0; i < n; ++i) {
    Matrix mask = Matrix::Zero(ds, ds);
    for (int k = 0; k < d0; ++k) mask(k * n + i, k * n + i) = 1.0;
    Matrix p = v.adjoint() * mask * v;
    projectors.push_back(0.5 * (p + p.adjoint()));
  }

  NaimarkExtension ext{ProjectiveMeasurement(std::move(projectors)),
                       AncillaEmbedding{n, 0}, d0};
  return {std::move(ext), std::move(kraus)};
}

NaimarkExtension minimal_rank_one_extension(const POVM& povm) {
  const int d0 = povm.dim();
  const int n = povm.outcomes();

  Matrix w(n, d0);
  for (int k = 0; k < n; ++k) {
    const Spectrum s = hermitian_eig(povm.effect(k));
    int rank = 0;
    for (Eigen::Index j = 0; j < s.eigenvalues.size(); ++j) {
      if (s.eigenvalues(j) > kEigClip) ++rank;
    }
    if (rank != 1) {
      throw NotRankOne("minimal_rank_one_extension: effect " + std::to_string(k) +
                       " has rank " + std::to_string(rank));
    }
    w.row(k) = std::sqrt(s.eigenvalues(0)) * s.eigenvectors.col(0).adjoint();
  }

  const Matrix unitary = complete_isometry(w);
  std::vector<Matrix> projectors;
  projectors.reserve(n);
  for (int k = 0; k < n; ++k) {
    const Vector col = unitary.row(k).adjoint();
    Matrix p = col * col.adjoint();
    projectors.push_back(0.5 * (p + p.adjoint()));
  }

  return NaimarkExtension{ProjectiveMeasurement(std::move(projectors)),
                          DirectSumEmbedding{n}, d0};
}

std::pair<POVM, NaimarkExtension> fourier_family_extension(int d) {
  if (d < 3 || !is_prime(d)) {
    throw NotPrime("fourier_family_extension: " + std::to_string(d) +
                   " is not a prime >= 3");
  }

  std::vector<Matrix> effects;
  effects.reserve(d);
  for (int k = 0; k < d; ++k) {
    Vector phi(2);
    phi(0) = 1.0 / std::sqrt(2.0);
    phi(1) = std::polar(1.0 / std::sqrt(2.0), 2.0 * std::numbers::pi * k / d);
    Matrix e = (2.0 / d) * (phi * phi.adjoint());
    effects.push_back(0.5 * (e + e.adjoint()));
  }

  std::vector<Matrix> projectors;
  projectors.reserve(d);
  for (int k = 0; k < d; ++k) {
    Vector ext(d);
    for (int i = 0; i < d; ++i) {
      ext(i) = std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                          2.0 * std::numbers::pi * ((i * k) % d) / d);
    }
    Matrix p = ext * ext.adjoint();
    projectors.push_back(0.5 * (p + p.adjoint()));
  }

  return {POVM(std::move(effects)),
          NaimarkExtension{ProjectiveMeasurement(std::move(projectors)),
                           DirectSumEmbedding{d}, 2}};
}

VerificationReport verify_extension(const POVM& povm, const NaimarkExtension& ext,
                                    int trials, std::uint64_t seed) {
  if (povm.dim() != ext.source_dim) {
    throw DimensionMismatch("verify_extension: POVM dim " + std::to_string(povm.dim()) +
                            " vs extension source dim " + std::to_string(ext.source_dim));
  }
  if (povm.outcomes() != ext.measurement.outcomes()) {
    throw DimensionMismatch("verify_extension: POVM has " + std::to_string(povm.outcomes()) +
                            " outcomes, the extension " +
                            std::to_string(ext.measurement.outcomes()));
  }
  if (trials < 0) throw DimensionMismatch("verify_extension: negative trial count");

  Rng rng(seed);
  VerificationReport report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const DensityMatrix rho = random_state(povm.dim(), rng);
    const DensityMatrix lifted = embed_state(rho, ext);
    for (int i = 0; i < povm.outcomes(); ++i) {
      const Complex direct = (povm.effect(i) * rho.matrix()).trace();
      const Complex extended = (ext.measurement.projector(i) * lifted.matrix()).trace();
      report.max_deviation = std::max(report.max_deviation, std::abs(direct - extended));
    }
  }
  report.passed = report.max_deviation < 1e-9;
  return report;
}

std::vector<POVM> extract_povm_family(const NaimarkExtension& ext) {
  const auto* anc = std::get_if<AncillaEmbedding>(&ext.embedding);
  if (anc == nullptr) {
    throw NotAncillaStructured("extract_povm_family: extension has no ancilla factor");
  }
  const int d0 = ext.source_dim;
  const int na = anc->ancilla_dim;
  if (d0 * na != ext.measurement.dim()) {
    throw NotAncillaStructured("extract_povm_family: " + std::to_string(d0) + " x " +
                               std::to_string(na) + " does not factor the measurement dim " +
                               std::to_string(ext.measurement.dim()));
  }

  std::vector<POVM> family;
  family.reserve(na);
  for (int a = 0; a < na; ++a) {
    std::vector<Matrix> effects;
    effects.reserve(ext.measurement.outcomes());
    for (const Matrix& p : ext.measurement.projectors()) {
      Matrix e(d0, d0);
      for (int k = 0; k < d0; ++k)
        for (int l = 0; l < d0; ++l) e(k, l) = p(k * na + a, l * na + a);
      effects.push_back(0.5 * (e + e.adjoint()));
    }
    family.emplace_back(std::move(effects));
  }
  return family;
}

}  // namespace povmcoh
