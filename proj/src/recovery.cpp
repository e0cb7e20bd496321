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
#include "fgc/recovery.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fgc/errors.hpp"
#include "fgc/state.hpp"
#include "fgc/tolerances.hpp"

namespace fgc {

namespace {

struct PetzParts {
  Eigen::MatrixXd a;        // A_P
  Eigen::MatrixXd b;        // B_P
  CovarianceMatrix output;  // G_{N(sigma)}
};

PetzParts petz_parts(const CovarianceMatrix& sigma,
                     const GaussianCPTPChannel& ch) {
  if (sigma.modes() != ch.modes_in()) {
    throw DimensionError("petz: sigma has " + std::to_string(sigma.modes()) +
                         " modes but the channel expects " +
                         std::to_string(ch.modes_in()));
  }
  CovarianceMatrix tau = apply(ch, sigma);
  require_strictly_mixed(tau, "petz: channel output N(sigma)");

  Eigen::MatrixXd shrink_sigma = even_function(
      sigma.antisymmetric(),
      [](double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); },
      "sqrt(1-x^2)");
  Eigen::MatrixXd grow_tau = even_function(
      tau.antisymmetric(),
      [](double x) { return 1.0 / std::sqrt(1.0 - x * x); }, "1/sqrt(1-x^2)");

  Eigen::MatrixXd b = shrink_sigma * ch.linear().transpose() * grow_tau;
  Eigen::MatrixXd a = sigma.matrix() - b * tau.matrix() * b.transpose();
  a = 0.5 * (a - a.transpose()).eval();
  return PetzParts{std::move(a), std::move(b), std::move(tau)};
}

}  // namespace

GaussianCPTPChannel petz(const CovarianceMatrix& sigma,
                         const GaussianCPTPChannel& ch) {
  PetzParts parts = petz_parts(sigma, ch);
  return GaussianCPTPChannel(parts.a, parts.b);
}

GaussianCPTPChannel petz_via_composition(const CovarianceMatrix& sigma,
                                         const GaussianCPTPChannel& ch) {
  if (sigma.modes() != ch.modes_in()) {
    throw DimensionError("petz_via_composition: sigma has " +
                         std::to_string(sigma.modes()) +
                         " modes but the channel expects " +
                         std::to_string(ch.modes_in()));
  }
  CovarianceMatrix tau = apply(ch, sigma);
  GaussianChannelData lift = sandwich_inv_sqrt(tau);
  GaussianChannelData middle = compose(adjoint(ch.data()), lift);
  GaussianChannelData full = compose(sandwich_sqrt(sigma), middle);
  return to_cptp(full, 1e-6);
}

GaussianCPTPChannel rotated_petz(const CovarianceMatrix& sigma,
                                 const GaussianCPTPChannel& ch, double t) {
  if (!std::isfinite(t) || std::abs(t) > tol::kMaxRotationParameter) {
    throw InvalidInputError("rotated_petz: rotation parameter " +
                            std::to_string(t) + " outside [-" +
                            std::to_string(tol::kMaxRotationParameter) + ", " +
                            std::to_string(tol::kMaxRotationParameter) + "]");
  }
  if (t == 0.0) {
    return petz(sigma, ch);
  }
  require_strictly_mixed(sigma, "rotated_petz: sigma");
  PetzParts parts = petz_parts(sigma, ch);

  Eigen::MatrixXd rot_sigma = power_rotation(sigma, t);
  Eigen::MatrixXd rot_tau_back = power_rotation(parts.output, -t);

  Eigen::MatrixXd a = rot_sigma * parts.a * rot_sigma.transpose();
  a = 0.5 * (a - a.transpose()).eval();
  Eigen::MatrixXd b = rot_sigma * parts.b * rot_tau_back;
  return GaussianCPTPChannel(a, b);
}

SupportPetzResult petz_on_support(const CovarianceMatrix& sigma,
                                  const GaussianCPTPChannel& ch) {
  if (sigma.modes() != ch.modes_in()) {
    throw DimensionError("petz_on_support: sigma has " +
                         std::to_string(sigma.modes()) +
                         " modes but the channel expects " +
                         std::to_string(ch.modes_in()));
  }
  CovarianceMatrix tau = apply(ch, sigma);
  CanonicalForm canon = canonical_decompose(tau.antisymmetric());

  std::vector<int> mixed_modes;
  std::vector<int> pure_modes;
  std::vector<double> pure_values;
  const int modes = tau.modes();
  for (int i = 0; i < modes; ++i) {
    if (canon.williamson[static_cast<size_t>(i)] < 1.0 - tol::kFaithfulness) {
      mixed_modes.push_back(i);
    } else {
      pure_modes.push_back(i);
      pure_values.push_back(canon.signed_value(i));
    }
  }
  const int mixed = static_cast<int>(mixed_modes.size());
  if (mixed == 0) {
    throw InvalidInputError(
        "petz_on_support: N(sigma) is pure on every mode; the recovery "
        "degenerates to preparing sigma and carries no channel data");
  }

  Eigen::MatrixXd shrink_sigma = even_function(
      sigma.antisymmetric(),
      [](double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); },
      "sqrt(1-x^2)");

  // Columns of B^T O^T restricted to mixed modes, scaled by 1/sqrt(1-v^2)
  // per canonical block; the support covariance is block-diagonal there.
  Eigen::MatrixXd half = ch.linear().transpose() * canon.O.transpose();
  Eigen::MatrixXd b(2 * sigma.modes(), 2 * mixed);
  Eigen::MatrixXd support_cov = Eigen::MatrixXd::Zero(2 * mixed, 2 * mixed);
  for (int k = 0; k < mixed; ++k) {
    const int i = mixed_modes[static_cast<size_t>(k)];
    const double v = canon.signed_value(i);
    const double scale = 1.0 / std::sqrt(1.0 - v * v);
    b.col(2 * k) = half.col(2 * i) * scale;
    b.col(2 * k + 1) = half.col(2 * i + 1) * scale;
    support_cov(2 * k, 2 * k + 1) = -v;
    support_cov(2 * k + 1, 2 * k) = v;
  }
  b = (shrink_sigma * b).eval();

  Eigen::MatrixXd a = sigma.matrix() - b * support_cov * b.transpose();
  a = 0.5 * (a - a.transpose()).eval();
  return SupportPetzResult{GaussianCPTPChannel(a, b), canon.O,
                           std::move(mixed_modes), std::move(pure_modes),
                           std::move(pure_values)};
}

}  // namespace fgc
