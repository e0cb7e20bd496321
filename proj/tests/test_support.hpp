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
#ifndef FGC_TESTS_TEST_SUPPORT_HPP_
#define FGC_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace fgc::testing {

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Pfaffian by cofactor-style expansion along the first row, O((2n)!!).
/// Usable up to 2n = 8 or so; the independent reference implementation for
/// the production algorithm.
inline double combinatorial_pfaffian(const Eigen::MatrixXd& m) {
  const int dim = static_cast<int>(m.rows());
  if (dim == 0) return 1.0;
  if (dim % 2 == 1) return 0.0;
  if (dim == 2) return m(0, 1);
  double acc = 0.0;
  double sign = 1.0;
  for (int j = 1; j < dim; ++j) {
    std::vector<int> keep;
    for (int k = 1; k < dim; ++k) {
      if (k != j) keep.push_back(k);
    }
    Eigen::MatrixXd minor(dim - 2, dim - 2);
    for (int a = 0; a < dim - 2; ++a) {
      for (int b = 0; b < dim - 2; ++b) {
        minor(a, b) = m(keep[static_cast<size_t>(a)],
                        keep[static_cast<size_t>(b)]);
      }
    }
    acc += sign * m(0, j) * combinatorial_pfaffian(minor);
    sign = -sign;
  }
  return acc;
}

/// Canonical block magnitudes of a real antisymmetric matrix through the
/// Hermitian eigenproblem of i M (spectrum {+-b_i}): the n largest
/// eigenvalues, descending. Independent of the real-Schur production path.
inline std::vector<double> hermitian_block_magnitudes(
    const Eigen::MatrixXd& m) {
  Eigen::MatrixXcd im =
      std::complex<double>(0.0, 1.0) * m.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(im);
  std::vector<double> eig(es.eigenvalues().data(),
                          es.eigenvalues().data() + m.rows());
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  eig.resize(static_cast<size_t>(m.rows() / 2));
  return eig;
}

}  // namespace fgc::testing

#endif  // FGC_TESTS_TEST_SUPPORT_HPP_
