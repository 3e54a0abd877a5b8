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

#include "povmcoh/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace povmcoh {

namespace {

// Shape and finiteness checks shared by the operator-list validators.
void check_operator_list(const std::vector<Matrix>& ops, const char* who) {
  if (ops.empty()) throw DimensionMismatch(std::string(who) + ": empty operator list");
  const Eigen::Index d = ops.front().rows();
  if (d == 0) throw DimensionMismatch(std::string(who) + ": zero-dimensional operator");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() != d || ops[i].cols() != d) {
      throw DimensionMismatch(std::string(who) + ": operator " + std::to_string(i) +
                              " is " + std::to_string(ops[i].rows()) + "x" +
                              std::to_string(ops[i].cols()) + ", expected " +
                              std::to_string(d) + "x" + std::to_string(d));
    }
    if (!ops[i].allFinite()) {
      throw NotFinite(std::string(who) + ": operator " + std::to_string(i) +
                      " contains NaN or Inf");
    }
  }
}

void check_completeness(const std::vector<Matrix>& ops, const char* who) {
  Matrix sum = Matrix::Zero(ops.front().rows(), ops.front().cols());
  for (const Matrix& op : ops) sum += op;
  const double resid =
      (sum - Matrix::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff();
  if (resid > kSumTol) {
    throw NotComplete(std::string(who) + ": operators sum to identity only within " +
                      std::to_string(resid));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionMismatch("DensityMatrix: expected a nonempty square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) throw NotFinite("DensityMatrix: matrix contains NaN or Inf");
  if (!is_hermitian(m)) {
    throw NonHermitian("DensityMatrix: max |M - M†| entry exceeds " + std::to_string(kHermTol));
  }
  mat_ = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(mat_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("DensityMatrix: eigensolver failed to converge");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kEigClip) {
    throw NotPSD("DensityMatrix: eigenvalue " + std::to_string(min_eig) + " below -" +
                 std::to_string(kEigClip));
  }
  const double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > kSumTol) {
    throw NotUnitTrace("DensityMatrix: trace is " + std::to_string(tr));
  }
}

POVM::POVM(std::vector<Matrix> effects) {
  check_operator_list(effects, "POVM");
  for (std::size_t i = 0; i < effects.size(); ++i) {
    if (!is_hermitian(effects[i])) {
      throw NotPSD("POVM: effect " + std::to_string(i) + " is not Hermitian");
    }
    effects[i] = 0.5 * (effects[i] + effects[i].adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(effects[i], Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NoConvergence("POVM: eigensolver failed on effect " + std::to_string(i));
    }
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -kEigClip) {
      throw NotPSD("POVM: effect " + std::to_string(i) + " has eigenvalue " +
                   std::to_string(min_eig));
    }
  }
  check_completeness(effects, "POVM");
  effects_ = std::move(effects);
}

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Matrix> projectors) {
  check_operator_list(projectors, "ProjectiveMeasurement");
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    if (!is_hermitian(projectors[i])) {
      throw NonHermitian("ProjectiveMeasurement: projector " + std::to_string(i) +
                         " is not Hermitian");
    }
    projectors[i] = 0.5 * (projectors[i] + projectors[i].adjoint());
    const double resid =
        (projectors[i] * projectors[i] - projectors[i]).cwiseAbs().maxCoeff();
    if (resid > kSumTol) {
      throw NotIdempotent("ProjectiveMeasurement: projector " + std::to_string(i) +
                          " fails P² = P by " + std::to_string(resid));
    }
  }
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    for (std::size_t j = i + 1; j < projectors.size(); ++j) {
      const double resid = (projectors[i] * projectors[j]).cwiseAbs().maxCoeff();
      if (resid > kSumTol) {
        throw NotOrthogonal("ProjectiveMeasurement: projectors " + std::to_string(i) +
                            " and " + std::to_string(j) + " overlap by " +
                            std::to_string(resid));
      }
    }
  }
  check_completeness(projectors, "ProjectiveMeasurement");
  projectors_ = std::move(projectors);
}

DensityMatrix block_dephase(const DensityMatrix& rho, const ProjectiveMeasurement& p) {
  if (rho.dim() != p.dim()) {
    throw DimensionMismatch("block_dephase: state dim " + std::to_string(rho.dim()) +
                            " vs measurement dim " + std::to_string(p.dim()));
  }
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& proj : p.projectors()) out += proj * rho.matrix() * proj;
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

Matrix projective_part(const Matrix& effect) {
  Spectrum s = hermitian_eig(effect);
  Matrix proj = Matrix::Zero(effect.rows(), effect.cols());
  for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
    const double lam = s.eigenvalues(k);
    if (lam < -kEigClip) {
      throw NotPSD("projective_part: eigenvalue " + std::to_string(lam) + " below -" +
                   std::to_string(kEigClip));
    }
    if (lam > kEigClip) {
      proj += s.eigenvectors.col(k) * s.eigenvectors.col(k).adjoint();
    }
  }
  return 0.5 * (proj + proj.adjoint());
}

std::vector<Matrix> measurement_operators(const POVM& povm) {
  std::vector<Matrix> roots;
  roots.reserve(povm.outcomes());
  for (const Matrix& effect : povm.effects()) roots.push_back(matrix_sqrt_psd(effect));
  return roots;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return eigenvalue_entropy(rho.matrix());
}

double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("quantum_relative_entropy: dims " + std::to_string(rho.dim()) +
                            " vs " + std::to_string(sigma.dim()));
  }
  const Spectrum sr = hermitian_eig(rho.matrix());
  const Spectrum ss = hermitian_eig(sigma.matrix());

  double tr_rho_log_rho = 0.0;
  for (Eigen::Index k = 0; k < sr.eigenvalues.size(); ++k) {
    const double lam = sr.eigenvalues(k);
    if (lam > 0.0) tr_rho_log_rho += lam * std::log2(lam);
  }

  // Weight of rho along each eigenvector of sigma. Mass landing on the
  // kernel of sigma beyond 1e-9 means the relative entropy diverges.
  double tr_rho_log_sigma = 0.0;
  double kernel_mass = 0.0;
  for (Eigen::Index k = 0; k < ss.eigenvalues.size(); ++k) {
    const double mu = ss.eigenvalues(k);
    const Vector v = ss.eigenvectors.col(k);
    const double w = std::max(0.0, (v.adjoint() * rho.matrix() * v)(0, 0).real());
    if (mu > kEigClip) {
      tr_rho_log_sigma += w * std::log2(mu);
    } else {
      kernel_mass += w;
    }
  }
  if (kernel_mass > 1e-9) return std::numeric_limits<double>::infinity();
  return std::max(0.0, tr_rho_log_rho - tr_rho_log_sigma);
}

}  // namespace povmcoh
