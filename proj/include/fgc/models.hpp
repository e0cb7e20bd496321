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
#ifndef FGC_MODELS_HPP_
#define FGC_MODELS_HPP_

#include <cstdint>

#include "fgc/channel.hpp"

namespace fgc {

/// Stinespring-style realization of a Gaussian channel: a joint special-
/// orthogonal rotation R on system + environment Majoranas (system indices
/// first) together with the environment's Gaussian state.
struct Dilation {
  Eigen::MatrixXd R;              ///< 2(n+m) x 2(n+m), special orthogonal
  CovarianceMatrix environment;   ///< m-mode environment state
  int system_modes = 0;           ///< n

  int environment_modes() const { return environment.modes(); }
  int total_modes() const { return system_modes + environment.modes(); }
};

/// Throw InvalidChannelError unless R is special orthogonal of the size the
/// partition demands.
void validate_dilation(const Dilation& d);

/// Channel of a quadratic unitary: A = 0, B = R. Requires R special
/// orthogonal within tolerance (InvalidChannelError otherwise). Covariance
/// action is conjugation G -> R G R^T.
GaussianCPTPChannel unitary_channel(const Eigen::MatrixXd& r);

/// Channel of "rotate jointly, trace out the environment":
///   B = R_SS,  A = R_SE G_E R_SE^T
/// (the system blocks of R applied to G + environment noise). Always CPTP.
GaussianCPTPChannel dilation_channel(const Dilation& d);

/// Single-mode attenuator mixing the input with an environment mode of
/// block value lambda_env at transmissivity eta:
///   B = sqrt(eta) I_2,  A = (1 - eta) lambda_env J.
/// Block values map as lambda -> eta lambda + (1 - eta) lambda_env.
GaussianCPTPChannel attenuator(double eta, double lambda_env);

/// Seeded random dilation: Haar-like R on 2(n+m) Majoranas and a random
/// mixed environment (block magnitudes in [0.1, 0.9]). Deterministic per
/// seed.
Dilation random_dilation(std::uint64_t seed, int system_modes,
                         int environment_modes);

/// dilation_channel(random_dilation(seed, n, m)).
GaussianCPTPChannel random_channel(std::uint64_t seed, int system_modes,
                                   int environment_modes);

/// Seeded random state with block-value magnitudes in [lo, hi] (strictly
/// mixed by default). Deterministic per seed.
CovarianceMatrix random_state(std::uint64_t seed, int modes, double lo = 0.1,
                              double hi = 0.9);

}  // namespace fgc

#endif  // FGC_MODELS_HPP_
