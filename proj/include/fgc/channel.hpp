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
#ifndef FGC_CHANNEL_HPP_
#define FGC_CHANNEL_HPP_

#include <complex>

#include "fgc/state.hpp"

namespace fgc {

/// Data of a Gaussian linear map from n_in modes to n_out modes:
///   A: 2 n_out x 2 n_out antisymmetric
///   B: 2 n_out x 2 n_in
///   C: complex scalar
///   D: 2 n_in x 2 n_in antisymmetric
/// packed as N = [[A, B], [-B^T, D]]. A trace-preserving map has C = 1 and
/// D = 0 and acts on covariance matrices as G -> B G B^T + A.
struct GaussianChannelData {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  std::complex<double> C{1.0, 0.0};
  Eigen::MatrixXd D;

  int modes_out() const { return static_cast<int>(B.rows()) / 2; }
  int modes_in() const { return static_cast<int>(B.cols()) / 2; }

  /// The identity map on `modes` modes: A = 0, B = I, C = 1, D = 0.
  static GaussianChannelData identity(int modes);
};

/// Throw InvalidChannelError unless the four blocks have consistent even
/// dimensions and A, D are antisymmetric within tolerance.
void validate_structure(const GaussianChannelData& ch);

/// Complete positivity verdict: C real and nonnegative, and the largest
/// singular value of N = [[A, B], [-B^T, D]] at most 1 + tolerance.
bool validate_cp(const GaussianChannelData& ch,
                 double tolerance = tol::kCompletePositivity);

/// Trace preservation verdict: C = 1 and D = 0 within tolerance.
bool validate_tp(const GaussianChannelData& ch,
                 double tolerance = tol::kTracePreserving);

/// Unitality verdict: C = 1 and A = 0 within tolerance.
bool validate_unital(const GaussianChannelData& ch,
                     double tolerance = tol::kTracePreserving);

/// A completely positive trace-preserving Gaussian channel, stored by its
/// covariance action G -> B G B^T + A. Construction validates the CP bound
/// (largest singular value of [[A, B], [-B^T, 0]] at most 1 + tolerance) and
/// the antisymmetry of A; violations throw InvalidChannelError.
class GaussianCPTPChannel {
 public:
  GaussianCPTPChannel(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                      double tolerance = tol::kCompletePositivity);

  const Eigen::MatrixXd& offset() const { return a_; }  ///< additive block A
  const Eigen::MatrixXd& linear() const { return b_; }  ///< linear block B

  int modes_out() const { return static_cast<int>(b_.rows()) / 2; }
  int modes_in() const { return static_cast<int>(b_.cols()) / 2; }

  /// The four-block form with C = 1, D = 0.
  GaussianChannelData data() const;

  static GaussianCPTPChannel identity(int modes);

 private:
  Eigen::MatrixXd a_;
  Eigen::MatrixXd b_;
};

/// Covariance action of a channel: B G B^T + A, validated as a covariance
/// matrix on output. Throws DimensionError on a mode-count mismatch and
/// InvalidChannelError if the output violates the spectral bound (which
/// signals non-CP channel data upstream).
CovarianceMatrix apply(const GaussianCPTPChannel& ch,
                       const CovarianceMatrix& g);

/// Adjoint with respect to the Hilbert-Schmidt pairing:
///   (A, B, C, D) -> (D^T, B^T, conj(C), A^T) = (-D, B^T, conj(C), -A).
/// The adjoint of a CPTP channel is unital.
GaussianChannelData adjoint(const GaussianChannelData& ch);

/// Composite map second . first. A, B, D use the inverse-free forms
///   A = A2 + B2 (I + A1 D2)^-1 A1 B2^T
///   B = B2 (I + A1 D2)^-1 B1
///   D = D1 + B1^T D2 (I + A1 D2)^-1 B1
/// and C = C1 C2 (-1)^m Pf(A1) Pf(D2 + A1^-1) over the m intermediate modes,
/// assembled in log-magnitude form. When A1 or I + A1 D2 is singular, the
/// whole tuple is evaluated at A1(eps) (canonical J-blocks of size eps on the
/// null space of A1) for eps = 1e-5 and 1e-6 and Richardson-extrapolated;
/// NumericalConsistencyError if the two evaluations disagree beyond the
/// stability tolerance.
GaussianChannelData compose(const GaussianChannelData& second,
                            const GaussianChannelData& first);

/// Composite of two CPTP channels (B = B2 B1, A = A2 + B2 A1 B2^T).
GaussianCPTPChannel compose(const GaussianCPTPChannel& second,
                            const GaussianCPTPChannel& first);

/// Interpret four-block data as a CPTP channel: requires ||D||_max within
/// tolerance and C within tolerance of +1 or -1 (the map constant of a
/// composite chain is determined only up to this sign; the covariance action
/// is unaffected). Throws NumericalConsistencyError otherwise.
GaussianCPTPChannel to_cptp(const GaussianChannelData& ch,
                            double tolerance = 1e-6);

/// Data of the map X -> sigma^{1/2} X sigma^{1/2}:
///   A = G, B = blockwise sqrt(1 - b^2), C = 2^{-n}, D = -G
/// for G the covariance matrix of sigma. Satisfies N^T N = I.
GaussianChannelData sandwich_sqrt(const CovarianceMatrix& sigma);

/// Data of the map X -> tau^{-1/2} X tau^{-1/2}:
///   A = -G, B = blockwise sqrt(1 - b^2), C = 2^n prod_i (1 - b_i^2)^{-1},
///   D = G. Requires tau strictly mixed (every Williamson value below
///   1 - faithfulness tolerance); FaithfulnessError otherwise.
GaussianChannelData sandwich_inv_sqrt(const CovarianceMatrix& tau);

}  // namespace fgc

#endif  // FGC_CHANNEL_HPP_
