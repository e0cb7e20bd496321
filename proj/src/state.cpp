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
#include "fgc/state.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace fgc {

namespace {

// Williamson magnitudes from the symmetric PSD matrix G^T G, whose
// eigenvalues are the squared magnitudes, doubled per mode.
std::vector<double> williamson_magnitudes(const AntisymmetricMatrix& g) {
  const int n = g.modes();
  std::vector<double> out(static_cast<size_t>(n));
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.matrix().transpose() *
                                                    g.matrix());
  if (es.info() != Eigen::Success) {
    throw NumericalConsistencyError("symmetric eigensolve failed");
  }
  // Ascending eigenvalues; average each adjacent pair for robustness.
  for (int i = 0; i < n; ++i) {
    const double pair_mean =
        0.5 * (es.eigenvalues()[2 * i] + es.eigenvalues()[2 * i + 1]);
    out[static_cast<size_t>(n - 1 - i)] = std::sqrt(std::max(0.0, pair_mean));
  }
  return out;
}

}  // namespace

CovarianceMatrix CovarianceMatrix::maximally_mixed(int modes) {
  return validate_covariance(AntisymmetricMatrix::zero(modes));
}

CovarianceMatrix validate_covariance(const AntisymmetricMatrix& g,
                                     double slack) {
  std::vector<double> w = williamson_magnitudes(g);
  std::vector<double> offenders;
  bool needs_clip = false;
  for (double v : w) {
    if (v > 1.0 + slack) {
      offenders.push_back(v);
    } else if (v > 1.0) {
      needs_clip = true;
    }
  }
  if (!offenders.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "covariance spectral bound violated; Williamson values above 1 + "
       << slack << ":";
    for (double v : offenders) os << " " << v;
    throw InvalidStateError(os.str());
  }
  if (!needs_clip) {
    return CovarianceMatrix(g, std::move(w));
  }
  // Rebuild from clipped canonical data so the stored matrix satisfies the
  // bound exactly.
  CanonicalForm cf = canonical_decompose(g);
  for (int i = 0; i < cf.modes(); ++i) {
    auto& b = cf.williamson[static_cast<size_t>(i)];
    if (b > 1.0) b = 1.0;
  }
  AntisymmetricMatrix clipped(cf.reconstruct());
  std::vector<double> cw = williamson_magnitudes(clipped);
  for (double& v : cw) v = std::min(v, 1.0);
  return CovarianceMatrix(std::move(clipped), std::move(cw));
}

InverseTemperature InverseTemperature::finite(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidInputError("inverse temperature must be a nonnegative real");
  }
  return InverseTemperature(beta, false);
}

double InverseTemperature::value() const {
  if (infinite_) {
    throw InvalidInputError("infinite inverse temperature has no finite value");
  }
  return beta_;
}

CovarianceMatrix state_from_hamiltonian(const QuadraticHamiltonian& h,
                                        const InverseTemperature& beta) {
  const AntisymmetricMatrix& m = h.coefficients;
  if (beta.is_infinite()) {
    const CanonicalForm cf = canonical_decompose(m);
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.dim(), m.dim());
    for (int i = 0; i < cf.modes(); ++i) {
      // Ground-state saturation; exact zero modes stay maximally mixed.
      const double b = cf.williamson[static_cast<size_t>(i)];
      const double lambda =
          b <= tol::kSingularValue
              ? 0.0
              : -static_cast<double>(cf.orientation[static_cast<size_t>(i)]);
      d(2 * i, 2 * i + 1) = -lambda;
      d(2 * i + 1, 2 * i) = lambda;
    }
    return validate_covariance(
        AntisymmetricMatrix(cf.O.transpose() * d * cf.O));
  }
  const double b = beta.value();
  AntisymmetricMatrix g =
      odd_function(m, [b](double x) { return -std::tanh(b * x); },
                   "thermal spectrum map");
  return validate_covariance(g);
}

PuritySpectrum purity_spectrum(const CovarianceMatrix& g) {
  PuritySpectrum ps;
  ps.values = g.williamson();
  ps.pure.resize(ps.values.size());
  ps.all_pure = true;
  for (size_t i = 0; i < ps.values.size(); ++i) {
    ps.pure[i] = std::abs(ps.values[i] - 1.0) <= tol::kPurity;
    if (!ps.pure[i]) ps.all_pure = false;
  }
  return ps;
}

std::complex<double> wick_expectation(const CovarianceMatrix& g,
                                      const std::vector<int>& indices) {
  if (indices.empty()) return {1.0, 0.0};
  if (indices.size() % 2 != 0) return {0.0, 0.0};
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= g.dim()) {
      throw InvalidInputError("Majorana index out of range: " +
                              std::to_string(indices[i]));
    }
    if (i > 0 && indices[i] <= indices[i - 1]) {
      throw InvalidInputError(
          "Majorana indices must be strictly ascending and distinct");
    }
  }
  const int len = static_cast<int>(indices.size());
  Eigen::MatrixXd sub(len, len);
  for (int a = 0; a < len; ++a) {
    for (int b = 0; b < len; ++b) {
      sub(a, b) = g.matrix()(indices[static_cast<size_t>(a)],
                             indices[static_cast<size_t>(b)]);
    }
  }
  const double pf = pfaffian(AntisymmetricMatrix(sub));
  // Pf(-i G_sub) = (-i)^k Pf(G_sub) for k pairs.
  static const std::complex<double> kPhases[4] = {
      {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  return kPhases[(len / 2) % 4] * pf;
}

double sqrt_state_spectrum(double lambda) {
  if (lambda < -1e-12 || lambda > 1.0 + 1e-12) {
    throw DomainError("sqrt_state_spectrum requires lambda in [0, 1], got " +
                      std::to_string(lambda));
  }
  const double clipped = std::min(1.0, std::max(0.0, lambda));
  return clipped / (1.0 + std::sqrt(std::max(0.0, 1.0 - clipped * clipped)));
}

Eigen::MatrixXd power_rotation(const CovarianceMatrix& g, double t) {
  if (!std::isfinite(t) || std::abs(t) > tol::kMaxRotationParameter) {
    throw InvalidInputError("rotation parameter magnitude must be <= " +
                            std::to_string(tol::kMaxRotationParameter));
  }
  require_strictly_mixed(g, "power_rotation");
  const CanonicalForm cf = canonical_decompose(g.antisymmetric());
  const int n = cf.modes();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    const double theta = -2.0 * t * std::atanh(cf.signed_value(i));
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    d(2 * i, 2 * i) = c;
    d(2 * i, 2 * i + 1) = -s;
    d(2 * i + 1, 2 * i) = s;
    d(2 * i + 1, 2 * i + 1) = c;
  }
  return cf.O.transpose() * d * cf.O;
}

void require_strictly_mixed(const CovarianceMatrix& g,
                            const std::string& context) {
  std::vector<int> modes;
  std::vector<double> values;
  const auto& w = g.williamson();
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= 1.0 - tol::kFaithfulness) {
      modes.push_back(static_cast<int>(i));
      values.push_back(w[i]);
    }
  }
  if (!modes.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << context << " requires a strictly mixed state; "
       << "pure or near-pure modes (canonical order):";
    for (size_t i = 0; i < modes.size(); ++i) {
      os << " [mode " << modes[i] << "] " << values[i];
    }
    throw FaithfulnessError(os.str(), std::move(modes), std::move(values));
  }
}

}  // namespace fgc
