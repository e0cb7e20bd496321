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
#ifndef FGC_TOLERANCES_HPP_
#define FGC_TOLERANCES_HPP_

// Numerical tolerances used across the library. These are part of the
// documented behavior of the public API and are deliberately centralized.

namespace fgc {
namespace tol {

/// Largest relative asymmetry accepted when constructing an antisymmetric
/// matrix from raw data.
inline constexpr double kAntisymmetry = 1e-12;

/// Orthogonality / special-orthogonality residual for canonical bases.
inline constexpr double kOrthogonality = 1e-10;

/// Threshold below which a Williamson value counts as zero (singular mode).
inline constexpr double kSingularValue = 1e-10;

/// Entrywise bound for canonical-form reconstruction residuals.
inline constexpr double kReconstruction = 1e-9;

/// Covariance spectral bound: values up to 1 + kSpectralSlack are accepted
/// and clipped to 1.
inline constexpr double kSpectralSlack = 1e-10;

/// |lambda - 1| below this counts as a pure mode.
inline constexpr double kPurity = 1e-10;

/// Strict-mixedness margin: recovery-map construction requires every
/// Williamson value of the reference output below 1 - kFaithfulness.
inline constexpr double kFaithfulness = 1e-10;

/// Complete-positivity slack on the largest singular value of the channel
/// block matrix.
inline constexpr double kCompletePositivity = 1e-10;

/// Trace-preservation slack on |C - 1| and on entries of D.
inline constexpr double kTracePreserving = 1e-12;

/// Stability bound for the Richardson-extrapolated regularized composition.
inline constexpr double kRegularization = 1e-7;

/// Determinant magnitude below which fidelity is exactly zero.
inline constexpr double kFidelitySingular = 1e-10;

/// Largest power-rotation parameter magnitude accepted.
inline constexpr double kMaxRotationParameter = 50.0;

}  // namespace tol
}  // namespace fgc

#endif  // FGC_TOLERANCES_HPP_
