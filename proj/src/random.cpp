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

#include "povmcoh/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include <Eigen/QR>

namespace povmcoh {

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - uniform() lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw DimensionMismatch("Rng::uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(gen_() % span);
}

Matrix random_ginibre(int rows, int cols, Rng& rng) {
  if (rows < 1 || cols < 1) throw DimensionMismatch("random_ginibre: empty shape");
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
  return g;
}

DensityMatrix random_state(int dim, Rng& rng) {
  const Matrix g = random_ginibre(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

Matrix random_unitary(int dim, Rng& rng) {
  const Matrix g = random_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

ProjectiveMeasurement random_projective(int dim, Rng& rng) {
  if (dim < 1) throw DimensionMismatch("random_projective: dim < 1");
  if (dim == 1) {
    return ProjectiveMeasurement({Matrix::Identity(1, 1)});
  }
  const int blocks = rng.uniform_int(2, dim);
  // Cut the index range [0, dim) at blocks-1 distinct interior points.
  std::set<int> cuts;
  while (static_cast<int>(cuts.size()) < blocks - 1) cuts.insert(rng.uniform_int(1, dim - 1));
  std::vector<int> bounds(cuts.begin(), cuts.end());
  bounds.push_back(dim);

  const Matrix q = random_unitary(dim, rng);
  std::vector<Matrix> projectors;
  int start = 0;
  for (int end : bounds) {
    const Matrix cols = q.middleCols(start, end - start);
    Matrix p = cols * cols.adjoint();
    projectors.push_back(0.5 * (p + p.adjoint()));
    start = end;
  }
  return ProjectiveMeasurement(std::move(projectors));
}

}  // namespace povmcoh
