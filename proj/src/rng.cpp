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
#include "fgc/rng.hpp"

namespace fgc {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

Eigen::MatrixXd gaussian_matrix(std::mt19937_64& rng, int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw InvalidInputError("gaussian_matrix: dimensions must be positive");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = normal(rng);
    }
  }
  return m;
}

Eigen::MatrixXd random_special_orthogonal(std::mt19937_64& rng, int dim) {
  if (dim < 2) {
    throw InvalidInputError("random_special_orthogonal: dimension must be "
                            "at least 2");
  }
  const Eigen::MatrixXd m = gaussian_matrix(rng, dim, dim);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r =
      qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    if (r(j, j) < 0.0) {
      q.col(j) *= -1.0;
    }
  }
  if (q.determinant() < 0.0) {
    q.col(0).swap(q.col(1));
  }
  return q;
}

AntisymmetricMatrix random_antisymmetric(std::mt19937_64& rng, int modes,
                                         double scale) {
  const Eigen::MatrixXd m = gaussian_matrix(rng, 2 * modes, 2 * modes);
  return AntisymmetricMatrix(0.5 * scale * (m - m.transpose()));
}

CovarianceMatrix random_covariance(std::mt19937_64& rng, int modes, double lo,
                                   double hi) {
  if (modes < 1) {
    throw InvalidInputError("random_covariance: modes must be positive");
  }
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
    throw InvalidInputError("random_covariance: need 0 <= lo <= hi <= 1");
  }
  const Eigen::MatrixXd o = random_special_orthogonal(rng, 2 * modes);
  std::uniform_real_distribution<double> magnitude(lo, hi);
  std::uniform_int_distribution<int> coin(0, 1);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int i = 0; i < modes; ++i) {
    const double lambda = magnitude(rng) * (coin(rng) == 0 ? 1.0 : -1.0);
    d(2 * i, 2 * i + 1) = -lambda;
    d(2 * i + 1, 2 * i) = lambda;
  }
  return validate_covariance(
      AntisymmetricMatrix(o.transpose() * d * o));
}

}  // namespace fgc
