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
#ifndef FGC_TESTS_DENSE_REFERENCE_HPP_
#define FGC_TESTS_DENSE_REFERENCE_HPP_

#include <cmath>
#include <complex>
#include <cstddef>

#include "fgc/dense.hpp"

namespace fgc::testing {

/// Complex power p^z of a Hermitian positive semidefinite operator through
/// its eigendecomposition; eigenvalues at or below the cutoff contribute
/// nothing (support convention).
inline Eigen::MatrixXcd complex_power(const Eigen::MatrixXcd& rho,
                                      std::complex<double> z,
                                      double cutoff = 1e-12) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  Eigen::VectorXcd powered(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    powered(i) = p > cutoff ? std::exp(z * std::log(p))
                            : std::complex<double>(0.0, 0.0);
  }
  return es.eigenvectors() * powered.asDiagonal() *
         es.eigenvectors().adjoint();
}

/// Rotated recovery map assembled directly from its operator definition,
///   X -> s^{1/2+it} N*( m^{-1/2-it} X m^{-1/2+it} ) s^{1/2-it}
/// with s = sigma and m = N(sigma). Built from dense sandwiches and the
/// dense channel adjoint only; the independent adjudicator for the
/// covariance-level construction.
inline dense::Superoperator dense_rotated_petz(
    const Eigen::MatrixXcd& sigma, const dense::Superoperator& channel,
    double t) {
  Eigen::MatrixXcd output = channel.apply(sigma);
  dense::Superoperator pre =
      dense::sandwich(complex_power(output, {-0.5, -t}));
  dense::Superoperator post = dense::sandwich(complex_power(sigma, {0.5, t}));
  return dense::compose(post, dense::compose(dense::adjoint(channel), pre));
}

/// Coefficient matrix of the linear Majorana sector of a map:
///   T_ba = tr(g_b S(g_a)) / 2^{modes_out}.
/// A Gaussian channel with linear block B transports single Majoranas as
/// S(g_a) = sum_b B_ba g_b, so this recovers B from a dense superoperator.
inline Eigen::MatrixXd majorana_transport(const dense::Superoperator& s) {
  auto gin = dense::majorana_operators(s.modes_in);
  auto gout = dense::majorana_operators(s.modes_out);
  const double dim_out = std::pow(2.0, s.modes_out);
  Eigen::MatrixXd b(2 * s.modes_out, 2 * s.modes_in);
  for (std::size_t a = 0; a < gin.size(); ++a) {
    Eigen::MatrixXcd image = s.apply(gin[a]);
    for (std::size_t r = 0; r < gout.size(); ++r) {
      b(static_cast<int>(r), static_cast<int>(a)) =
          (gout[r] * image).trace().real() / dim_out;
    }
  }
  return b;
}

}  // namespace fgc::testing

#endif  // FGC_TESTS_DENSE_REFERENCE_HPP_
