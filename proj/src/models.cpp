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
#include "fgc/models.hpp"

#include <cmath>
#include <string>

#include "fgc/rng.hpp"

namespace fgc {
namespace {

void check_special_orthogonal(const Eigen::MatrixXd& r, const char* context) {
  if (r.rows() != r.cols() || r.rows() == 0 || r.rows() % 2 != 0) {
    throw InvalidChannelError(std::string(context) +
                              ": rotation must be square of even dimension");
  }
  const Eigen::Index dim = r.rows();
  const double residual =
      (r.transpose() * r - Eigen::MatrixXd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();
  if (residual > tol::kOrthogonality) {
    throw InvalidChannelError(std::string(context) +
                              ": rotation is not orthogonal, residual " +
                              std::to_string(residual));
  }
  if (r.determinant() < 0.0) {
    throw InvalidChannelError(std::string(context) +
                              ": rotation has determinant -1, not special "
                              "orthogonal");
  }
}

}  // namespace

void validate_dilation(const Dilation& d) {
  if (d.system_modes < 1) {
    throw InvalidChannelError("dilation: system needs at least one mode");
  }
  check_special_orthogonal(d.R, "dilation");
  if (d.R.rows() != 2 * d.total_modes()) {
    throw InvalidChannelError(
        "dilation: rotation dimension " + std::to_string(d.R.rows()) +
        " does not match 2*(system+environment) = " +
        std::to_string(2 * d.total_modes()));
  }
}

GaussianCPTPChannel unitary_channel(const Eigen::MatrixXd& r) {
  check_special_orthogonal(r, "unitary_channel");
  return GaussianCPTPChannel(Eigen::MatrixXd::Zero(r.rows(), r.rows()), r);
}

GaussianCPTPChannel dilation_channel(const Dilation& d) {
  validate_dilation(d);
  const Eigen::Index ds = 2 * d.system_modes;
  const Eigen::Index de = 2 * d.environment_modes();
  const Eigen::MatrixXd b = d.R.topLeftCorner(ds, ds);
  const Eigen::MatrixXd r_se = d.R.topRightCorner(ds, de);
  Eigen::MatrixXd a = r_se * d.environment.matrix() * r_se.transpose();
  a = 0.5 * (a - a.transpose()).eval();
  return GaussianCPTPChannel(a, b);
}

GaussianCPTPChannel attenuator(double eta, double lambda_env) {
  if (!(0.0 <= eta && eta <= 1.0)) {
    throw InvalidInputError("attenuator: eta must lie in [0, 1]");
  }
  if (!(0.0 <= lambda_env && lambda_env <= 1.0)) {
    throw InvalidInputError("attenuator: lambda_env must lie in [0, 1]");
  }
  Eigen::MatrixXd a(2, 2);
  const double noise = (1.0 - eta) * lambda_env;
  a << 0.0, -noise, noise, 0.0;
  const Eigen::MatrixXd b =
      std::sqrt(eta) * Eigen::MatrixXd::Identity(2, 2);
  return GaussianCPTPChannel(a, b);
}

Dilation random_dilation(std::uint64_t seed, int system_modes,
                         int environment_modes) {
  if (system_modes < 1 || environment_modes < 1) {
    throw InvalidInputError(
        "random_dilation: system and environment need at least one mode "
        "each");
  }
  std::mt19937_64 rng(seed);
  const int total = system_modes + environment_modes;
  Eigen::MatrixXd r = random_special_orthogonal(rng, 2 * total);
  CovarianceMatrix env = random_covariance(rng, environment_modes, 0.1, 0.9);
  return Dilation{std::move(r), std::move(env), system_modes};
}

GaussianCPTPChannel random_channel(std::uint64_t seed, int system_modes,
                                   int environment_modes) {
  return dilation_channel(
      random_dilation(seed, system_modes, environment_modes));
}

CovarianceMatrix random_state(std::uint64_t seed, int modes, double lo,
                              double hi) {
  std::mt19937_64 rng(seed);
  return random_covariance(rng, modes, lo, hi);
}

}  // namespace fgc
