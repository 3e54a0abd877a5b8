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

#ifndef POVMCOH_RANDOM_HPP
#define POVMCOH_RANDOM_HPP

#include <cstdint>
#include <random>

#include "povmcoh/linalg.hpp"
#include "povmcoh/measurement.hpp"

namespace povmcoh {

// Seeded generator with hand-rolled uniform and Gaussian draws, so the same
// seed produces the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; one spare is cached.
  double gaussian();

  // Uniform integer on [lo, hi], inclusive.
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Matrix of independent standard complex Gaussians.
Matrix random_ginibre(int rows, int cols, Rng& rng);

// Full-rank mixed state G G† / tr(G G†) from a Ginibre draw.
DensityMatrix random_state(int dim, Rng& rng);

// Haar-distributed unitary: QR of a Ginibre matrix with the phase fixed so
// R has positive diagonal.
Matrix random_unitary(int dim, Rng& rng);

// Random projective measurement: a uniformly drawn partition of dim into at
// least two blocks (when dim >= 2), conjugated by a Haar unitary.
ProjectiveMeasurement random_projective(int dim, Rng& rng);

}  // namespace povmcoh

#endif  // POVMCOH_RANDOM_HPP
