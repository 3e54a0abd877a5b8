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

#include "povmcoh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace povmcoh {

namespace {

void check_square_finite(const Matrix& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(who) + ": expected a nonempty square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw NotFinite(std::string(who) + ": matrix contains NaN or Inf");
  }
}

}  // namespace

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Spectrum hermitian_eig(const Matrix& m) {
  check_square_finite(m, "hermitian_eig");
  if (!is_hermitian(m)) {
    throw NonHermitian("hermitian_eig: max |M - M†| entry exceeds " + std::to_string(kHermTol));
  }
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("hermitian_eig: eigensolver failed to converge");
  }

  const Eigen::Index n = herm.rows();
  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // Eigen sorts ascending; flip to descending.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = solver.eigenvalues()(n - 1 - k);
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  // Pin the arbitrary global phase of each eigenvector: the first component
  // with magnitude above 1e-8 becomes real and positive.
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Complex c = out.eigenvectors(i, k);
      if (std::abs(c) > 1e-8) {
        out.eigenvectors.col(k) *= std::conj(c) / std::abs(c);
        break;
      }
    }
  }
  return out;
}

Matrix matrix_sqrt_psd(const Matrix& m) {
  Spectrum s = hermitian_eig(m);
  RealVector roots(s.eigenvalues.size());
  for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
    double lam = s.eigenvalues(k);
    if (lam < -kEigClip) {
      throw NotPSD("matrix_sqrt_psd: eigenvalue " + std::to_string(lam) + " below -" +
                   std::to_string(kEigClip));
    }
    roots(k) = lam > 0.0 ? std::sqrt(lam) : 0.0;
  }
  Matrix r = s.eigenvectors * roots.asDiagonal() * s.eigenvectors.adjoint();
  return 0.5 * (r + r.adjoint());
}

double shannon_entropy(const std::vector<double>& p) {
  double sum = 0.0;
  double h = 0.0;
  for (double v : p) {
    if (!std::isfinite(v)) throw NotFinite("shannon_entropy: non-finite entry");
    if (v < 0.0) {
      if (v < -kProbClip) {
        throw NotDistribution("shannon_entropy: negative entry " + std::to_string(v));
      }
      v = 0.0;
    }
    sum += v;
    if (v > 0.0) h -= v * std::log2(v);
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw NotDistribution("shannon_entropy: entries sum to " + std::to_string(sum));
  }
  return std::max(0.0, h);
}

double eigenvalue_entropy(const Matrix& m) {
  Spectrum s = hermitian_eig(m);
  double h = 0.0;
  for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
    double lam = s.eigenvalues(k);
    if (lam < -kEigClip) {
      throw NotPSD("eigenvalue_entropy: eigenvalue " + std::to_string(lam) + " below -" +
                   std::to_string(kEigClip));
    }
    if (lam > 0.0) h -= lam * std::log2(lam);
  }
  return std::max(0.0, h);
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  if (!a.allFinite() || !b.allFinite()) {
    throw NotFinite("tensor_product: input contains NaN or Inf");
  }
  return Eigen::kroneckerProduct(a, b).eval();
}

Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
  check_square_finite(m, "partial_trace");
  if (dims.empty()) throw DimensionMismatch("partial_trace: empty dimension list");
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw DimensionMismatch("partial_trace: factor dimension < 1");
    total *= d;
  }
  if (total != m.rows()) {
    throw DimensionMismatch("partial_trace: factor dimensions multiply to " +
                            std::to_string(total) + ", matrix is " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
  }

  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) {
      throw BadSubsystemIndex("partial_trace: subsystem index " + std::to_string(k) +
                              " out of range [0, " + std::to_string(n) + ")");
    }
    if (kept[k]) {
      throw BadSubsystemIndex("partial_trace: subsystem index " + std::to_string(k) +
                              " listed twice");
    }
    kept[k] = true;
  }

  // Row-major strides over the tensor factors.
  std::vector<long> stride(n, 1);
  for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * dims[k + 1];

  std::vector<int> keep_idx, trace_idx;
  for (int k = 0; k < n; ++k) (kept[k] ? keep_idx : trace_idx).push_back(k);

  long keep_dim = 1, trace_dim = 1;
  for (int k : keep_idx) keep_dim *= dims[k];
  for (int k : trace_idx) trace_dim *= dims[k];

  // Decompose a flat index over the given subsystem list into a full-matrix
  // index contribution.
  auto expand = [&](long flat, const std::vector<int>& subs) {
    long full = 0;
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
      const long digit = flat % dims[*it];
      flat /= dims[*it];
      full += digit * stride[*it];
    }
    return full;
  };

  Matrix out = Matrix::Zero(keep_dim, keep_dim);
  for (long r = 0; r < keep_dim; ++r) {
    const long row_base = expand(r, keep_idx);
    for (long c = 0; c < keep_dim; ++c) {
      const long col_base = expand(c, keep_idx);
      Complex acc = 0.0;
      for (long t = 0; t < trace_dim; ++t) {
        const long off = expand(t, trace_idx);
        acc += m(row_base + off, col_base + off);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

Matrix partial_transpose(const Matrix& m, int dim_a, int dim_b) {
  check_square_finite(m, "partial_transpose");
  if (dim_a < 1 || dim_b < 1 || static_cast<long>(dim_a) * dim_b != m.rows()) {
    throw DimensionMismatch("partial_transpose: " + std::to_string(dim_a) + " x " +
                            std::to_string(dim_b) + " does not factor a " +
                            std::to_string(m.rows()) + "-dimensional operator");
  }
  Matrix out(m.rows(), m.cols());
  for (int ia = 0; ia < dim_a; ++ia)
    for (int ka = 0; ka < dim_a; ++ka)
      for (int jb = 0; jb < dim_b; ++jb)
        for (int lb = 0; lb < dim_b; ++lb)
          out(ia * dim_b + jb, ka * dim_b + lb) = m(ia * dim_b + lb, ka * dim_b + jb);
  return out;
}

double trace_norm(const Matrix& m) {
  if (!m.allFinite()) throw NotFinite("trace_norm: matrix contains NaN or Inf");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

}  // namespace povmcoh
