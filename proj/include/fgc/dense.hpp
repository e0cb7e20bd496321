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
#ifndef FGC_DENSE_HPP_
#define FGC_DENSE_HPP_

#include <vector>

#include "fgc/models.hpp"

namespace fgc {
namespace dense {

/// Brute-force 2^n-dimensional operator representation. Everything here is
/// exponentially sized on purpose: it is the ground truth the covariance-
/// level formulas are checked against, capped at small mode counts
/// (SizeLimitError beyond the caps).

/// Jordan-Wigner Majorana operators on n modes (1 <= n <= 5), site 1 in the
/// most significant tensor factor:
///   gamma_{2i-1} = Z^(i-1) x X x I...,  gamma_{2i} = Z^(i-1) x Y x I...
/// Hermitian, squaring to I, pairwise anticommuting ({g_i, g_j} = 2 d_ij).
/// Returned 0-indexed: element k is gamma_{k+1}.
std::vector<Eigen::MatrixXcd> majorana_operators(int modes);

/// Dense density operator of a Gaussian state: canonical-decompose G, rotate
/// the Majoranas into the canonical basis and multiply the product form
///   rho = 2^{-n} prod_i (I - i l_i g~_{2i-1} g~_{2i}),
/// with l_i the signed block values. Caps at 5 modes.
Eigen::MatrixXcd state_from_covariance(const CovarianceMatrix& g);

/// Measured covariance of a dense operator: G_ij = (i/2) tr(rho [g_i, g_j]),
/// zero diagonal. Defined for any state; no Gaussianity check.
CovarianceMatrix covariance_of(const Eigen::MatrixXcd& rho);

/// Linear map on operators, stored as a 4^out x 4^in matrix acting on
/// column-stacked operators. The Hilbert-Schmidt adjoint is the conjugate
/// transpose of `matrix`.
struct Superoperator {
  int modes_in = 0;
  int modes_out = 0;
  Eigen::MatrixXcd matrix;

  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& x) const;

  static Superoperator identity(int modes);
};

/// Hilbert-Schmidt adjoint: <X, S(Y)> = <adjoint(S)(X), Y>.
Superoperator adjoint(const Superoperator& s);

/// Composite second . first.
Superoperator compose(const Superoperator& second, const Superoperator& first);

/// The map X -> m X m^dagger.
Superoperator sandwich(const Eigen::MatrixXcd& m);

/// Dense unitary exp(c sum_ij h_ij g_i g_j) realizing the special-orthogonal
/// rotation R = exp(h) on the Majoranas, with the generator constant c
/// calibrated numerically so that U^dagger g_a U = sum_b R_ab g_b. Caps at
/// 10 modes (unitary-only relaxation of the dense cap).
Eigen::MatrixXcd unitary_from_rotation(const Eigen::MatrixXd& r);

/// The calibrated generator constant (cached after the first call).
double generator_constant();

/// Dense realization of a dilation: X -> Tr_env[ U (X x rho_env) U^dagger ].
/// Caps at 5 total (system + environment) modes.
Superoperator channel_from_dilation(const Dilation& d);

/// Dense recovery map anchored at sigma:
///   X -> sigma^{1/2} N*( N(sigma)^{-1/2} X N(sigma)^{-1/2} ) sigma^{1/2},
/// inverse square roots taken on the support of N(sigma) (eigenvalue cutoff
/// 1e-10).
Superoperator petz(const Eigen::MatrixXcd& sigma, const Superoperator& channel);

/// Uhlmann fidelity tr sqrt(sigma^{1/2} rho sigma^{1/2}) via Hermitian
/// eigendecompositions.
double fidelity(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);

/// Relative entropy tr(rho log rho) - tr(rho log sigma) in natural logs;
/// +infinity (IEEE inf) when rho has support outside the support of sigma
/// (mass beyond 1e-10).
double relative_entropy(const Eigen::MatrixXcd& rho,
                        const Eigen::MatrixXcd& sigma);

}  // namespace dense
}  // namespace fgc

#endif  // FGC_DENSE_HPP_
