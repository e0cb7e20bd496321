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
#ifndef FGC_RECOVERY_HPP_
#define FGC_RECOVERY_HPP_

#include <vector>

#include "fgc/channel.hpp"

namespace fgc {

/// Petz recovery map anchored at sigma, in closed form:
///   B_P = sqrt(I + G_s^2) B^T (sqrt(I + G_t^2))^{-1}
///   A_P = G_s - B_P G_t B_P^T            (t = N(sigma))
/// with the square-root factors evaluated blockwise as sqrt(1 - b^2). The
/// result is CPTP and recovers sigma from N(sigma) exactly by construction
/// of A_P. Requires N(sigma) strictly mixed; FaithfulnessError otherwise
/// (use petz_on_support when N(sigma) has pure modes).
GaussianCPTPChannel petz(const CovarianceMatrix& sigma,
                         const GaussianCPTPChannel& ch);

/// The same map built as the explicit three-map chain
///   sandwich_sqrt(sigma) . adjoint(ch) . sandwich_inv_sqrt(N(sigma))
/// with two general compositions, then cast to CPTP. Exists as an
/// independent cross-check of the composition calculus against the closed
/// form; the two agree within 1e-7 on valid inputs.
GaussianCPTPChannel petz_via_composition(const CovarianceMatrix& sigma,
                                         const GaussianCPTPChannel& ch);

/// Rotated recovery map: conjugates the Petz map by the one-parameter
/// rotation groups of sigma and N(sigma),
///   A_{R,t} = B_{s,t} A_P B_{s,t}^T
///   B_{R,t} = B_{s,t} B_P B_{N(s),-t}
/// with B_{s,t} = exp(-2 t arctanh G_s) (see power_rotation). Recovers
/// sigma for every t; requires sigma and N(sigma) strictly mixed and
/// |t| <= 50.
GaussianCPTPChannel rotated_petz(const CovarianceMatrix& sigma,
                                 const GaussianCPTPChannel& ch, double t);

/// Petz recovery restricted to the support of N(sigma) when pure modes are
/// present. States on the output space are read in the canonical basis of
/// G_{N(sigma)} and compressed to the mixed block:
///   G_support = (basis G basis^T) restricted to the mixed-mode rows/cols.
struct SupportPetzResult {
  /// Recovery channel from the mixed (support) modes back to the input
  /// space of the original channel.
  GaussianCPTPChannel channel;
  /// Canonical basis of G_{N(sigma)}: rows are the basis vectors.
  Eigen::MatrixXd basis;
  /// Canonical mode indices with block value below the purity threshold.
  std::vector<int> mixed_modes;
  /// Canonical mode indices of the pure modes excluded from the support.
  std::vector<int> pure_modes;
  /// Signed block values on the pure modes.
  std::vector<double> pure_values;
};

/// Support-projected Petz recovery (valid for any N(sigma) with at least
/// one mixed mode; InvalidInputError when every mode is pure, since the
/// recovery then degenerates to state preparation).
SupportPetzResult petz_on_support(const CovarianceMatrix& sigma,
                                  const GaussianCPTPChannel& ch);

}  // namespace fgc

#endif  // FGC_RECOVERY_HPP_
