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

#include <doctest.h>

#include "povmcoh/linalg.hpp"
#include "povmcoh/random.hpp"
#include "test_helpers.hpp"

using namespace povmcoh;
using test::max_diff;

namespace {

Matrix random_hermitian(int dim, Rng& rng) {
  const Matrix g = random_ginibre(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("hermitian_eig reconstructs with ordered spectrum and fixed phases") {
  Rng rng(101);
  for (int dim = 2; dim <= 8; ++dim) {
    const Matrix a = random_hermitian(dim, rng);
    const Spectrum s = hermitian_eig(a);

    const Matrix rebuilt =
        s.eigenvectors * s.eigenvalues.asDiagonal() * s.eigenvectors.adjoint();
    CHECK(max_diff(rebuilt, a) < 1e-10);
    CHECK(max_diff(s.eigenvectors.adjoint() * s.eigenvectors,
                   Matrix::Identity(dim, dim)) < 1e-10);

    for (int k = 0; k + 1 < dim; ++k) CHECK(s.eigenvalues(k) >= s.eigenvalues(k + 1));

    // Phase convention: the first component larger than 1e-8 in magnitude
    // is real positive.
    for (int k = 0; k < dim; ++k) {
      for (int i = 0; i < dim; ++i) {
        const Complex c = s.eigenvectors(i, k);
        if (std::abs(c) > 1e-8) {
          CHECK(c.real() > 0.0);
          CHECK(std::abs(c.imag()) < 1e-12 * std::abs(c.real()) + 1e-14);
          break;
        }
      }
    }

    // Same input, same output, bit for bit.
    const Spectrum again = hermitian_eig(a);
    CHECK((s.eigenvectors - again.eigenvectors).cwiseAbs().maxCoeff() == 0.0);
    CHECK((s.eigenvalues - again.eigenvalues).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("hermitian_eig on a worked 2x2 example") {
  // Eigenvalues of [[1/2, i/2], [-i/2, 1/2]] are 1 and 0; the top
  // eigenvector is (|0> - i|1>)/sqrt(2) once its phase is pinned.
  Matrix m(2, 2);
  m << Complex(0.5, 0.0), Complex(0.0, 0.5), Complex(0.0, -0.5), Complex(0.5, 0.0);
  const Spectrum s = hermitian_eig(m);
  CHECK(s.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.eigenvalues(1) == doctest::Approx(0.0).epsilon(1e-12));
  const double isq = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.eigenvectors(0, 0) - Complex(isq, 0.0)) < 1e-12);
  CHECK(std::abs(s.eigenvectors(1, 0) - Complex(0.0, -isq)) < 1e-12);
}

TEST_CASE("hermitian_eig rejects bad input") {
  CHECK_THROWS_AS(hermitian_eig(Matrix::Zero(2, 3)), DimensionMismatch);

  Matrix nan_mat = Matrix::Identity(2, 2);
  nan_mat(0, 1) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(hermitian_eig(nan_mat), NotFinite);

  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(skew), NonHermitian);
}

TEST_CASE("matrix_sqrt_psd squares back to its input") {
  Rng rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2 + trial % 5;
    const Matrix g = random_ginibre(dim, dim, rng);
    const Matrix psd = g * g.adjoint();
    const Matrix root = matrix_sqrt_psd(psd);
    CHECK(is_hermitian(root));
    CHECK(max_diff(root * root, psd) < 1e-8 * psd.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("matrix_sqrt_psd clips rounding noise but rejects real negatives") {
  Matrix slightly_off = Matrix::Zero(2, 2);
  slightly_off(0, 0) = 1.0;
  slightly_off(1, 1) = -5e-11;
  const Matrix root = matrix_sqrt_psd(slightly_off);
  CHECK(std::abs(root(0, 0) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(root(1, 1)) < 1e-12);

  Matrix indefinite = Matrix::Zero(2, 2);
  indefinite(0, 0) = 1.0;
  indefinite(1, 1) = -1e-6;
  CHECK_THROWS_AS(matrix_sqrt_psd(indefinite), NotPSD);
}

TEST_CASE("shannon_entropy on frozen distributions") {
  CHECK(shannon_entropy({0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(shannon_entropy({1.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(shannon_entropy({0.25, 0.75}) ==
        doctest::Approx(test::kBinEntropyQuarter).epsilon(1e-12));
  CHECK(shannon_entropy({1.0 / 3, 1.0 / 3, 1.0 / 3}) ==
        doctest::Approx(test::kLog2Of3).epsilon(1e-12));
  // Clipping tolerates rounding noise only.
  CHECK(shannon_entropy({1.0, -5e-13}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(shannon_entropy({0.9, 0.2}), NotDistribution);
  CHECK_THROWS_AS(shannon_entropy({1.1, -0.1}), NotDistribution);
}

TEST_CASE("eigenvalue_entropy is unitarily invariant") {
  Rng rng(303);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_state(4, rng);
    const Matrix u = random_unitary(4, rng);
    const double direct = eigenvalue_entropy(rho.matrix());
    const double rotated = eigenvalue_entropy(u * rho.matrix() * u.adjoint());
    CHECK(direct == doctest::Approx(rotated).epsilon(1e-10));
  }
  CHECK(eigenvalue_entropy(Matrix::Identity(4, 4) / 4.0) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("tensor_product uses the composite index i_a * dim_b + i_b") {
  Rng rng(404);
  const Matrix a = random_ginibre(2, 2, rng);
  const Matrix b = random_ginibre(3, 3, rng);
  const Matrix c = tensor_product(a, b);
  REQUIRE(c.rows() == 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          CHECK(std::abs(c(i * 3 + k, j * 3 + l) - a(i, j) * b(k, l)) < 1e-14);
}

TEST_CASE("partial_trace undoes tensor_product") {
  Rng rng(505);
  const DensityMatrix a = random_state(2, rng);
  const DensityMatrix b = random_state(3, rng);
  const Matrix joint = tensor_product(a.matrix(), b.matrix());

  CHECK(max_diff(partial_trace(joint, {2, 3}, {0}), a.matrix()) < 1e-12);
  CHECK(max_diff(partial_trace(joint, {2, 3}, {1}), b.matrix()) < 1e-12);

  const DensityMatrix c = random_state(2, rng);
  const Matrix triple = tensor_product(tensor_product(a.matrix(), b.matrix()), c.matrix());
  CHECK(max_diff(partial_trace(triple, {2, 3, 2}, {0, 2}),
                 tensor_product(a.matrix(), c.matrix())) < 1e-12);
  // Tracing everything out leaves the scalar trace.
  const Matrix all_traced = partial_trace(triple, {2, 3, 2}, {});
  CHECK(all_traced.rows() == 1);
  CHECK(std::abs(all_traced(0, 0) - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("partial_trace rejects bad subsystem specs") {
  const Matrix m = Matrix::Identity(6, 6);
  CHECK_THROWS_AS(partial_trace(m, {2, 2}, {0}), DimensionMismatch);
  CHECK_THROWS_AS(partial_trace(m, {2, 3}, {2}), BadSubsystemIndex);
  CHECK_THROWS_AS(partial_trace(m, {2, 3}, {-1}), BadSubsystemIndex);
  CHECK_THROWS_AS(partial_trace(m, {2, 3}, {1, 1}), BadSubsystemIndex);
}

TEST_CASE("partial_transpose transposes the second factor only") {
  Rng rng(606);
  const Matrix a = random_ginibre(2, 2, rng);
  const Matrix b = random_ginibre(3, 3, rng);
  const Matrix joint = tensor_product(a, b);
  CHECK(max_diff(partial_transpose(joint, 2, 3), tensor_product(a, b.transpose())) < 1e-14);

  const Matrix twice = partial_transpose(partial_transpose(joint, 2, 3), 2, 3);
  CHECK(max_diff(twice, joint) < 1e-14);

  CHECK_THROWS_AS(partial_transpose(joint, 4, 2), DimensionMismatch);
}

TEST_CASE("partial transpose of a Bell state has a -1/2 eigenvalue") {
  Matrix bell = Matrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  const Spectrum s = hermitian_eig(partial_transpose(bell, 2, 2));
  CHECK(s.eigenvalues(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.eigenvalues(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.eigenvalues(2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.eigenvalues(3) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(trace_norm(partial_transpose(bell, 2, 2)) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("trace_norm matches absolute eigenvalue sums and unitary size") {
  Rng rng(707);
  const Matrix h = random_hermitian(5, rng);
  const Spectrum s = hermitian_eig(h);
  CHECK(trace_norm(h) == doctest::Approx(s.eigenvalues.cwiseAbs().sum()).epsilon(1e-10));
  CHECK(trace_norm(random_unitary(5, rng)) == doctest::Approx(5.0).epsilon(1e-10));
}

}  // TEST_SUITE("linalg")
