/*
 * Copyright 2026 The fgc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef FGC_RNG_HPP_
#define FGC_RNG_HPP_

#include <cstdint>
#include <random>

#include "fgc/state.hpp"

namespace fgc {

/// Split one master seed into independent per-trial seeds (splitmix64
/// finalizer over master + golden-ratio stride). Deterministic.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Matrix with iid standard normal entries, filled row by row.
Eigen::MatrixXd gaussian_matrix(std::mt19937_64& rng, int rows, int cols);

/// Haar-like random special orthogonal matrix: QR of a Gaussian matrix with
/// the R-diagonal sign fix; a determinant of -1 is repaired by swapping the
/// first two columns.
Eigen::MatrixXd random_special_orthogonal(std::mt19937_64& rng, int dim);

/// Random antisymmetric matrix (antisymmetrized Gaussian entries).
AntisymmetricMatrix random_antisymmetric(std::mt19937_64& rng, int modes,
                                         double scale = 1.0);

/// Random covariance matrix: random special-orthogonal basis with per-mode
/// block values of magnitude uniform in [lo, hi] and random sign.
CovarianceMatrix random_covariance(std::mt19937_64& rng, int modes,
                                   double lo = 0.0, double hi = 1.0);

}  // namespace fgc

#endif  // FGC_RNG_HPP_
