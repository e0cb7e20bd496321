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
#ifndef FGC_STATE_HPP_
#define FGC_STATE_HPP_

#include <complex>
#include <vector>

#include "fgc/antisymmetric.hpp"

namespace fgc {

/// Covariance matrix of a fermionic Gaussian state:
///   G_ij = (i/2) tr(rho [gamma_i, gamma_j]),
/// real antisymmetric with every Williamson value in [0, 1]. Instances are
/// produced by validate_covariance (or by operations that guarantee
/// validity) and cache the Williamson magnitudes computed during validation.
class CovarianceMatrix {
 public:
  const AntisymmetricMatrix& antisymmetric() const { return g_; }
  const Eigen::MatrixXd& matrix() const { return g_.matrix(); }
  int modes() const { return g_.modes(); }
  int dim() const { return g_.dim(); }

  /// Williamson magnitudes, descending. Cached at validation time.
  const std::vector<double>& williamson() const { return williamson_; }
  double max_williamson() const {
    return williamson_.empty() ? 0.0 : williamson_.front();
  }

  /// The maximally mixed state (G = 0).
  static CovarianceMatrix maximally_mixed(int modes);

 private:
  friend CovarianceMatrix validate_covariance(const AntisymmetricMatrix&,
                                              double);
  CovarianceMatrix(AntisymmetricMatrix g, std::vector<double> williamson)
      : g_(std::move(g)), williamson_(std::move(williamson)) {}

  AntisymmetricMatrix g_;
  std::vector<double> williamson_;
};

/// Check the spectral bound and produce a covariance matrix. Williamson
/// values must satisfy b <= 1 + slack; values in (1, 1 + slack] are clipped
/// to exactly 1 (the matrix is rebuilt from the clipped canonical data in
/// that case). Throws InvalidStateError listing the offending values.
CovarianceMatrix validate_covariance(const AntisymmetricMatrix& g,
                                     double slack = tol::kSpectralSlack);

/// Inverse temperature: a nonnegative real or the infinite marker.
class InverseTemperature {
 public:
  static InverseTemperature finite(double beta);
  static InverseTemperature infinite() { return InverseTemperature(0.0, true); }

  bool is_infinite() const { return infinite_; }
  double value() const;

 private:
  InverseTemperature(double v, bool inf) : beta_(v), infinite_(inf) {}
  double beta_;
  bool infinite_;
};

/// Coefficient matrix of a quadratic Majorana Hamiltonian
///   H = (i/2) sum_ij gamma_i M_ij gamma_j.
struct QuadraticHamiltonian {
  AntisymmetricMatrix coefficients;
};

/// Covariance matrix of the thermal state exp(-beta H)/Z. The signed block
/// values obey lambda_i = -tanh(beta b_i) on the canonical blocks of M. At
/// infinite beta, blocks with b_i > 0 saturate to the ground-state value and
/// exact zero modes stay maximally mixed.
CovarianceMatrix state_from_hamiltonian(const QuadraticHamiltonian& h,
                                        const InverseTemperature& beta);

/// Per-mode purity report.
struct PuritySpectrum {
  std::vector<double> values;  ///< Williamson magnitudes, descending
  std::vector<bool> pure;      ///< |value - 1| <= purity tolerance
  bool all_pure = false;
};

PuritySpectrum purity_spectrum(const CovarianceMatrix& g);

/// Wick expectation of an ordered Majorana monomial:
///   <gamma_{i_1} ... gamma_{i_k}> = Pf(W),  W_ab = -i G_{i_a i_b}.
/// Indices are 0-based, strictly ascending, and distinct; odd monomials
/// return 0. The empty monomial returns 1.
std::complex<double> wick_expectation(const CovarianceMatrix& g,
                                      const std::vector<int>& indices);

/// Spectrum map of the square-root state: a mode with covariance value
/// lambda in [0, 1] maps to lambda / (1 + sqrt(1 - lambda^2)), the
/// cancellation-free form of -(sqrt(1 - lambda^2) - 1)/lambda (limit 0 at
/// lambda = 0).
double sqrt_state_spectrum(double lambda);

/// Rotation-like power factor B_{sigma,t} = exp(-2 t arctanh G): special
/// orthogonal, block angles -2 t arctanh(lambda_i). Requires every
/// Williamson value strictly below 1 (FaithfulnessError otherwise) and
/// |t| <= 50 (InvalidInputError otherwise). B_{sigma,t} B_{sigma,-t} = I.
Eigen::MatrixXd power_rotation(const CovarianceMatrix& g, double t);

/// Throw FaithfulnessError (listing the offending modes and values) unless
/// every Williamson value of g is strictly below 1 - tol::kFaithfulness.
/// `context` names the operation for the error message.
void require_strictly_mixed(const CovarianceMatrix& g,
                            const std::string& context);

}  // namespace fgc

#endif  // FGC_STATE_HPP_
