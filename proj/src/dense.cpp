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
#include "fgc/dense.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace fgc {
namespace dense {
namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};
constexpr int kModeCap = 5;
constexpr int kUnitaryModeCap = 10;
constexpr double kSupportCut = 1e-10;

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Eigen::MatrixXcd kron_chain(const std::vector<Eigen::Matrix2cd>& factors) {
  Eigen::MatrixXcd acc = factors.front();
  for (size_t i = 1; i < factors.size(); ++i) {
    acc = Eigen::kroneckerProduct(acc, factors[i]).eval();
  }
  return acc;
}

// gamma_{k+1} (0-based k) on the Jordan-Wigner chain, site 1 leftmost.
Eigen::MatrixXcd single_majorana(int k, int modes) {
  const int site = k / 2;
  const Eigen::Matrix2cd head = (k % 2 == 0) ? pauli_x() : pauli_y();
  std::vector<Eigen::Matrix2cd> factors(static_cast<size_t>(modes),
                                        Eigen::Matrix2cd::Identity());
  for (int s = 0; s < site; ++s) {
    factors[static_cast<size_t>(s)] = pauli_z();
  }
  factors[static_cast<size_t>(site)] = head;
  return kron_chain(factors);
}

// Product gamma_{a+1} gamma_{b+1} for a < b as one Kronecker chain: the
// shared Z-strings cancel, leaving (P_a Z) at site(a), Z between the sites,
// and P_b at site(b).
Eigen::MatrixXcd majorana_pair(int a, int b, int modes) {
  const int sa = a / 2;
  const int sb = b / 2;
  const Eigen::Matrix2cd pa = (a % 2 == 0) ? pauli_x() : pauli_y();
  const Eigen::Matrix2cd pb = (b % 2 == 0) ? pauli_x() : pauli_y();
  std::vector<Eigen::Matrix2cd> factors(static_cast<size_t>(modes),
                                        Eigen::Matrix2cd::Identity());
  if (sa == sb) {
    factors[static_cast<size_t>(sa)] = pa * pb;
  } else {
    factors[static_cast<size_t>(sa)] = pa * pauli_z();
    for (int s = sa + 1; s < sb; ++s) {
      factors[static_cast<size_t>(s)] = pauli_z();
    }
    factors[static_cast<size_t>(sb)] = pb;
  }
  return kron_chain(factors);
}

void check_mode_cap(int modes, int cap, const char* context) {
  if (modes < 1 || modes > cap) {
    throw SizeLimitError(std::string(context) + ": mode count " +
                         std::to_string(modes) +
                         " outside the dense-representation cap [1, " +
                         std::to_string(cap) + "]");
  }
}

int modes_of_operator(const Eigen::MatrixXcd& x, const char* context) {
  const Eigen::Index dim = x.rows();
  if (dim < 2 || x.cols() != dim || (dim & (dim - 1)) != 0) {
    throw InvalidInputError(std::string(context) +
                            ": operator dimension must be a power of two, "
                            "got " +
                            std::to_string(dim) + "x" +
                            std::to_string(x.cols()));
  }
  int modes = 0;
  for (Eigen::Index d = dim; d > 1; d >>= 1) {
    ++modes;
  }
  return modes;
}

Eigen::MatrixXcd hermitize(const Eigen::MatrixXcd& m) {
  return 0.5 * (m + m.adjoint());
}

// Real logarithm of a special orthogonal matrix via its real Schur form:
// rotation planes contribute phi (w u^T - u w^T); -1 singles are paired
// into pi-planes. An odd count of -1 blocks means det = -1.
Eigen::MatrixXd rotation_log(const Eigen::MatrixXd& r) {
  const Eigen::Index dim = r.rows();
  Eigen::RealSchur<Eigen::MatrixXd> schur(r);
  const Eigen::MatrixXd& t = schur.matrixT();
  const Eigen::MatrixXd& q = schur.matrixU();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<Eigen::Index> flipped;
  Eigen::Index k = 0;
  while (k < dim) {
    const bool is_block = k + 1 < dim && std::abs(t(k + 1, k)) > 1e-12;
    if (is_block) {
      const double phi = std::atan2(t(k + 1, k), t(k, k));
      h.noalias() += phi * (q.col(k + 1) * q.col(k).transpose() -
                            q.col(k) * q.col(k + 1).transpose());
      k += 2;
    } else {
      if (t(k, k) < 0.0) {
        flipped.push_back(k);
      }
      k += 1;
    }
  }
  if (flipped.size() % 2 != 0) {
    throw InvalidChannelError(
        "rotation_log: matrix has determinant -1, no real logarithm in "
        "so(2n)");
  }
  for (size_t i = 0; i + 1 < flipped.size(); i += 2) {
    const auto u = q.col(flipped[i]);
    const auto w = q.col(flipped[i + 1]);
    h.noalias() += std::numbers::pi * (w * u.transpose() - u * w.transpose());
  }
  return 0.5 * (h - h.transpose()).eval();
}

Eigen::MatrixXcd unitary_from_generator(const Eigen::MatrixXd& h, double c) {
  const int modes = static_cast<int>(h.rows()) / 2;
  const Eigen::Index dim = Eigen::Index(1) << modes;
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(dim, dim);
  for (int a = 0; a < 2 * modes; ++a) {
    for (int b = a + 1; b < 2 * modes; ++b) {
      if (h(a, b) != 0.0) {
        k.noalias() += (2.0 * c * h(a, b)) * majorana_pair(a, b, modes);
      }
    }
  }
  return k.exp();
}

double calibration_residual(double c) {
  const double phi = 0.3;
  Eigen::MatrixXd r(2, 2);
  r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  const Eigen::MatrixXd h = rotation_log(r);
  const Eigen::MatrixXcd u = unitary_from_generator(h, c);
  double worst = 0.0;
  for (int a = 0; a < 2; ++a) {
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(2, 2);
    for (int b = 0; b < 2; ++b) {
      target += r(a, b) * single_majorana(b, 1);
    }
    const Eigen::MatrixXcd got =
        u.adjoint() * single_majorana(a, 1) * u;
    worst = std::max(worst, (got - target).cwiseAbs().maxCoeff());
  }
  return worst;
}

double calibrate_generator_constant() {
  const std::array<double, 6> candidates = {0.25,  -0.25, 0.5,
                                            -0.5,  0.125, -0.125};
  double best = candidates[0];
  double best_residual = std::numeric_limits<double>::infinity();
  for (const double c : candidates) {
    const double res = calibration_residual(c);
    if (res < best_residual) {
      best_residual = res;
      best = c;
    }
  }
  if (best_residual > 1e-10) {
    throw NumericalConsistencyError(
        "generator-constant calibration failed: best residual " +
        std::to_string(best_residual));
  }
  return best;
}

}  // namespace

std::vector<Eigen::MatrixXcd> majorana_operators(int modes) {
  check_mode_cap(modes, kModeCap, "majorana_operators");
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(static_cast<size_t>(2 * modes));
  for (int k = 0; k < 2 * modes; ++k) {
    out.push_back(single_majorana(k, modes));
  }
  return out;
}

Eigen::MatrixXcd state_from_covariance(const CovarianceMatrix& g) {
  check_mode_cap(g.modes(), kModeCap, "state_from_covariance");
  const int n = g.modes();
  const Eigen::Index dim = Eigen::Index(1) << n;
  const CanonicalForm cf = canonical_decompose(g.antisymmetric());
  const std::vector<Eigen::MatrixXcd> gamma = majorana_operators(n);

  Eigen::MatrixXcd rho =
      std::ldexp(1.0, -n) * Eigen::MatrixXcd::Identity(dim, dim);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXcd ga = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd gb = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < 2 * n; ++j) {
      ga += cf.O(2 * i, j) * gamma[static_cast<size_t>(j)];
      gb += cf.O(2 * i + 1, j) * gamma[static_cast<size_t>(j)];
    }
    const Eigen::MatrixXcd factor =
        Eigen::MatrixXcd::Identity(dim, dim) -
        kI * cf.signed_value(i) * ga * gb;
    rho = rho * factor;
  }
  return hermitize(rho);
}

CovarianceMatrix covariance_of(const Eigen::MatrixXcd& rho) {
  const int n = modes_of_operator(rho, "covariance_of");
  check_mode_cap(n, kModeCap, "covariance_of");
  const std::vector<Eigen::MatrixXcd> gamma = majorana_operators(n);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = a + 1; b < 2 * n; ++b) {
      const Complex val =
          kI * (rho * gamma[static_cast<size_t>(a)] *
                gamma[static_cast<size_t>(b)])
                   .trace();
      g(a, b) = val.real();
      g(b, a) = -val.real();
    }
  }
  return validate_covariance(AntisymmetricMatrix(g));
}

Eigen::MatrixXcd Superoperator::apply(const Eigen::MatrixXcd& x) const {
  const Eigen::Index din = Eigen::Index(1) << modes_in;
  const Eigen::Index dout = Eigen::Index(1) << modes_out;
  if (x.rows() != din || x.cols() != din) {
    throw DimensionError("superoperator expects a " + std::to_string(din) +
                         "-dimensional operator, got " +
                         std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()));
  }
  const Eigen::Map<const Eigen::VectorXcd> v(x.data(), x.size());
  const Eigen::VectorXcd w = matrix * v;
  return Eigen::Map<const Eigen::MatrixXcd>(w.data(), dout, dout);
}

Superoperator Superoperator::identity(int modes) {
  check_mode_cap(modes, kModeCap, "Superoperator::identity");
  const Eigen::Index d4 = Eigen::Index(1) << (2 * modes);
  return Superoperator{modes, modes, Eigen::MatrixXcd::Identity(d4, d4)};
}

Superoperator adjoint(const Superoperator& s) {
  return Superoperator{s.modes_out, s.modes_in, s.matrix.adjoint()};
}

Superoperator compose(const Superoperator& second, const Superoperator& first) {
  if (first.modes_out != second.modes_in) {
    throw DimensionError("superoperator composition: first emits " +
                         std::to_string(first.modes_out) +
                         " modes, second expects " +
                         std::to_string(second.modes_in));
  }
  return Superoperator{first.modes_in, second.modes_out,
                       second.matrix * first.matrix};
}

Superoperator sandwich(const Eigen::MatrixXcd& m) {
  const int n = modes_of_operator(m, "sandwich");
  check_mode_cap(n, kModeCap, "sandwich");
  return Superoperator{n, n,
                       Eigen::kroneckerProduct(m.conjugate(), m).eval()};
}

double generator_constant() {
  static const double c = calibrate_generator_constant();
  return c;
}

Eigen::MatrixXcd unitary_from_rotation(const Eigen::MatrixXd& r) {
  if (r.rows() != r.cols() || r.rows() % 2 != 0 || r.rows() == 0) {
    throw InvalidInputError(
        "unitary_from_rotation: rotation must be square of even dimension");
  }
  const int modes = static_cast<int>(r.rows()) / 2;
  check_mode_cap(modes, kUnitaryModeCap, "unitary_from_rotation");
  const Eigen::MatrixXd h = rotation_log(r);
  return unitary_from_generator(h, generator_constant());
}

Superoperator channel_from_dilation(const Dilation& d) {
  validate_dilation(d);
  check_mode_cap(d.total_modes(), kModeCap, "channel_from_dilation");
  const int n = d.system_modes;
  const Eigen::Index ds = Eigen::Index(1) << n;
  const Eigen::Index de = Eigen::Index(1) << d.environment_modes();
  const Eigen::MatrixXcd u = unitary_from_rotation(d.R);
  const Eigen::MatrixXcd rho_env = state_from_covariance(d.environment);

  Superoperator s{n, n, Eigen::MatrixXcd(ds * ds, ds * ds)};
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(ds, ds);
  for (Eigen::Index k = 0; k < ds * ds; ++k) {
    const Eigen::Index row = k % ds;
    const Eigen::Index col = k / ds;
    basis(row, col) = 1.0;
    const Eigen::MatrixXcd joint =
        Eigen::kroneckerProduct(basis, rho_env).eval();
    const Eigen::MatrixXcd evolved = u * joint * u.adjoint();
    Eigen::MatrixXcd traced(ds, ds);
    for (Eigen::Index a = 0; a < ds; ++a) {
      for (Eigen::Index b = 0; b < ds; ++b) {
        traced(a, b) = evolved.block(a * de, b * de, de, de).trace();
      }
    }
    s.matrix.col(k) =
        Eigen::Map<const Eigen::VectorXcd>(traced.data(), traced.size());
    basis(row, col) = 0.0;
  }
  return s;
}

Superoperator petz(const Eigen::MatrixXcd& sigma,
                   const Superoperator& channel) {
  const int n = modes_of_operator(sigma, "petz");
  if (n != channel.modes_in) {
    throw DimensionError("petz: anchor state has " + std::to_string(n) +
                         " modes, channel expects " +
                         std::to_string(channel.modes_in));
  }
  const Eigen::MatrixXcd mapped = hermitize(channel.apply(sigma));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_mapped(mapped);
  Eigen::VectorXd inv_sqrt = es_mapped.eigenvalues();
  for (Eigen::Index i = 0; i < inv_sqrt.size(); ++i) {
    inv_sqrt(i) =
        inv_sqrt(i) > kSupportCut ? 1.0 / std::sqrt(inv_sqrt(i)) : 0.0;
  }
  const Eigen::MatrixXcd mapped_inv_sqrt =
      es_mapped.eigenvectors() * inv_sqrt.asDiagonal() *
      es_mapped.eigenvectors().adjoint();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_sigma(hermitize(sigma));
  Eigen::VectorXd sqrt_vals = es_sigma.eigenvalues().cwiseMax(0.0);
  sqrt_vals = sqrt_vals.cwiseSqrt();
  const Eigen::MatrixXcd sigma_sqrt = es_sigma.eigenvectors() *
                                      sqrt_vals.asDiagonal() *
                                      es_sigma.eigenvectors().adjoint();

  return compose(sandwich(sigma_sqrt),
                 compose(adjoint(channel), sandwich(mapped_inv_sqrt)));
}

double fidelity(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  modes_of_operator(rho, "fidelity");
  if (sigma.rows() != rho.rows() || sigma.cols() != rho.cols()) {
    throw DimensionError("fidelity: operators have mismatched dimensions");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_sigma(hermitize(sigma));
  Eigen::VectorXd sqrt_vals = es_sigma.eigenvalues().cwiseMax(0.0);
  sqrt_vals = sqrt_vals.cwiseSqrt();
  const Eigen::MatrixXcd sigma_sqrt = es_sigma.eigenvectors() *
                                      sqrt_vals.asDiagonal() *
                                      es_sigma.eigenvectors().adjoint();
  const Eigen::MatrixXcd inner =
      hermitize(sigma_sqrt * hermitize(rho) * sigma_sqrt);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_inner(inner);
  double f = 0.0;
  for (Eigen::Index i = 0; i < es_inner.eigenvalues().size(); ++i) {
    f += std::sqrt(std::max(0.0, es_inner.eigenvalues()(i)));
  }
  return f;
}

double relative_entropy(const Eigen::MatrixXcd& rho,
                        const Eigen::MatrixXcd& sigma) {
  modes_of_operator(rho, "relative_entropy");
  if (sigma.rows() != rho.rows() || sigma.cols() != rho.cols()) {
    throw DimensionError(
        "relative_entropy: operators have mismatched dimensions");
  }
  const Eigen::MatrixXcd rho_h = hermitize(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_rho(rho_h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_sigma(hermitize(sigma));

  double mass_outside = 0.0;
  double cross = 0.0;
  for (Eigen::Index j = 0; j < es_sigma.eigenvalues().size(); ++j) {
    const double q = es_sigma.eigenvalues()(j);
    const Eigen::VectorXcd v = es_sigma.eigenvectors().col(j);
    const double weight = std::real(Complex(v.dot(rho_h * v)));
    if (q <= kSupportCut) {
      mass_outside += std::max(0.0, weight);
    } else {
      cross += weight * std::log(q);
    }
  }
  if (mass_outside > kSupportCut) {
    return std::numeric_limits<double>::infinity();
  }

  double entropy_term = 0.0;
  for (Eigen::Index i = 0; i < es_rho.eigenvalues().size(); ++i) {
    const double p = es_rho.eigenvalues()(i);
    if (p > 1e-15) {
      entropy_term += p * std::log(p);
    }
  }
  return entropy_term - cross;
}

}  // namespace dense
}  // namespace fgc
