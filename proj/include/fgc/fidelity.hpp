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
#ifndef FGC_FIDELITY_HPP_
#define FGC_FIDELITY_HPP_

#include "fgc/channel.hpp"
#include "fgc/state.hpp"

namespace fgc {

/// Uhlmann fidelity F(rho, sigma) = tr sqrt(sqrt(rho) sigma sqrt(rho)) of
/// two Gaussian states, from their covariance matrices:
///   F = 2^{-n/2} det(I - G_s G_r)^{1/4} det(I + sqrt(I + T^2))^{1/4},
///   T = (G_s + G_r)(I - G_s G_r)^{-1}.
/// Assembled in log space for stability at large n. When I - G_s G_r is
/// singular (smallest singular value at or below tol::kFidelitySingular) the
/// states have disjoint support and F = 0. Results are clamped to [0, 1];
/// a value beyond 1 + 1e-8, a negative determinant on nonsingular input, or
/// a structurally complex eigenvalue raise NumericalConsistencyError.
double fidelity(const CovarianceMatrix& rho, const CovarianceMatrix& sigma);

/// Hilbert-Schmidt overlap tr(rho sigma) = 2^{-n} det(I - G_r G_s)^{1/2},
/// with the same singular branch (overlap 0) as fidelity.
double overlap(const CovarianceMatrix& rho, const CovarianceMatrix& sigma);

/// Data-processing slack of fidelity under a channel:
///   F(N(rho), N(sigma)) - F(rho, sigma),
/// nonnegative up to numerical error for every CPTP channel.
double monotonicity_margin(const GaussianCPTPChannel& ch,
                           const CovarianceMatrix& rho,
                           const CovarianceMatrix& sigma);

}  // namespace fgc

#endif  // FGC_FIDELITY_HPP_
