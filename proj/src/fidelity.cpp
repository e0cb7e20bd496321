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
#include "fgc/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "fgc/errors.hpp"
#include "fgc/tolerances.hpp"

namespace fgc {

namespace {

void check_same_modes(const CovarianceMatrix& rho,
                      const CovarianceMatrix& sigma, const char* what) {
  if (rho.modes() != sigma.modes()) {
    throw DimensionError(std::string(what) + ": mode counts differ (" +
                         std::to_string(rho.modes()) + " vs " +
                         std::to_string(sigma.modes()) + ")");
  }
}

double smallest_singular_value(const Eigen::MatrixXd& m) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues().minCoeff();
}

}  // namespace

double fidelity(const CovarianceMatrix& rho, const CovarianceMatrix& sigma) {
  check_same_modes(rho, sigma, "fidelity");
  const int n = rho.modes();
  const int dim = rho.dim();

  Eigen::MatrixXd k = Eigen::MatrixXd::Identity(dim, dim) -
                      sigma.matrix() * rho.matrix();
  if (smallest_singular_value(k) <= tol::kFidelitySingular) {
    return 0.0;
  }
  SignedLog ld = log_abs_det(k);
  if (ld.sign <= 0) {
    throw NumericalConsistencyError(
        "fidelity: det(I - G_sigma G_rho) is nonpositive away from the "
        "singular branch");
  }

  // T = (G_s + G_r) K^{-1}, computed via a transposed solve.
  Eigen::MatrixXd sum = sigma.matrix() + rho.matrix();
  Eigen::MatrixXd t = k.transpose()
                          .partialPivLu()
                          .solve(sum.transpose())
                          .transpose();

  // det(I + sqrt(I + T^2))^{1/4} over the eigenvalues of T. T is real and
  // similar to an antisymmetric matrix, so 1 + mu^2 is real nonnegative for
  // every eigenvalue mu up to roundoff.
  Eigen::EigenSolver<Eigen::MatrixXd> es(t, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw NumericalConsistencyError("fidelity: eigensolve of T failed");
  }
  double log_det_quarter = 0.0;
  for (int i = 0; i < dim; ++i) {
    std::complex<double> mu = es.eigenvalues()(i);
    std::complex<double> w = 1.0 + mu * mu;
    if (w.real() < -1e-10) {
      throw NumericalConsistencyError(
          "fidelity: eigenvalue " + std::to_string(mu.real()) + " + " +
          std::to_string(mu.imag()) + "i of T gives 1 + mu^2 = " +
          std::to_string(w.real()) + " < 0");
    }
    log_det_quarter += 0.25 * std::log1p(std::sqrt(std::max(0.0, w.real())));
  }

  const double log_f =
      -0.5 * n * std::numbers::ln2 + 0.25 * ld.log_abs + log_det_quarter;
  double f = std::exp(log_f);
  if (f > 1.0 + 1e-8) {
    throw NumericalConsistencyError("fidelity: value " + std::to_string(f) +
                                    " exceeds 1 beyond tolerance");
  }
  return std::clamp(f, 0.0, 1.0);
}

double overlap(const CovarianceMatrix& rho, const CovarianceMatrix& sigma) {
  check_same_modes(rho, sigma, "overlap");
  const int n = rho.modes();
  const int dim = rho.dim();

  Eigen::MatrixXd k = Eigen::MatrixXd::Identity(dim, dim) -
                      rho.matrix() * sigma.matrix();
  if (smallest_singular_value(k) <= tol::kFidelitySingular) {
    return 0.0;
  }
  SignedLog ld = log_abs_det(k);
  if (ld.sign <= 0) {
    throw NumericalConsistencyError(
        "overlap: det(I - G_rho G_sigma) is nonpositive away from the "
        "singular branch");
  }
  return std::exp(-n * std::numbers::ln2 + 0.5 * ld.log_abs);
}

double monotonicity_margin(const GaussianCPTPChannel& ch,
                           const CovarianceMatrix& rho,
                           const CovarianceMatrix& sigma) {
  check_same_modes(rho, sigma, "monotonicity_margin");
  return fidelity(apply(ch, rho), apply(ch, sigma)) - fidelity(rho, sigma);
}

}  // namespace fgc
