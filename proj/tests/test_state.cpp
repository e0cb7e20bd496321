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
#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "fgc/errors.hpp"
#include "fgc/rng.hpp"
#include "fgc/state.hpp"
#include "fgc/tolerances.hpp"
#include "test_support.hpp"

using namespace fgc;
using fgc::testing::hermitian_block_magnitudes;
using fgc::testing::max_abs;

namespace {

Eigen::MatrixXd single_block(double lambda) {
  Eigen::MatrixXd g(2, 2);
  g << 0.0, -lambda, lambda, 0.0;
  return g;
}

CovarianceMatrix product_state(const std::vector<double>& lambdas) {
  const int n = static_cast<int>(lambdas.size());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    g(2 * i, 2 * i + 1) = -lambdas[static_cast<size_t>(i)];
    g(2 * i + 1, 2 * i) = lambdas[static_cast<size_t>(i)];
  }
  return validate_covariance(AntisymmetricMatrix(g));
}

}  // namespace

TEST_CASE("validate_covariance enforces the spectral bound") {
  CHECK_NOTHROW(validate_covariance(AntisymmetricMatrix(single_block(1.0))));
  CHECK_THROWS_AS(
      validate_covariance(AntisymmetricMatrix(single_block(1.2))),
      InvalidStateError);

  // Values inside the slack band clip to exactly 1.
  CovarianceMatrix clipped = validate_covariance(
      AntisymmetricMatrix(single_block(1.0 + 0.5 * tol::kSpectralSlack)));
  CHECK(clipped.max_williamson() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(max_abs(clipped.matrix() - single_block(1.0)) < 1e-9);
}

TEST_CASE("covariance matrices cache their williamson values") {
  std::mt19937_64 rng(3);
  CovarianceMatrix g = random_covariance(rng, 4, 0.0, 1.0);
  std::vector<double> reference = hermitian_block_magnitudes(g.matrix());
  REQUIRE(g.williamson().size() == reference.size());
  for (size_t i = 0; i < reference.size(); ++i) {
    CHECK(g.williamson()[i] ==
          doctest::Approx(reference[i]).epsilon(1e-10).scale(1.0));
  }
  CHECK(CovarianceMatrix::maximally_mixed(3).matrix().isZero(0.0));
}

TEST_CASE("thermal states follow -tanh(beta b) on canonical blocks") {
  const double b = 0.8;
  const double beta = 0.6;
  QuadraticHamiltonian h{AntisymmetricMatrix(single_block(b))};

  CovarianceMatrix g =
      state_from_hamiltonian(h, InverseTemperature::finite(beta));
  CHECK(max_abs(g.matrix() - single_block(-std::tanh(beta * b))) < 1e-12);

  CovarianceMatrix ground =
      state_from_hamiltonian(h, InverseTemperature::infinite());
  CHECK(max_abs(ground.matrix() - single_block(-1.0)) < 1e-12);
}

TEST_CASE("thermal zero modes stay maximally mixed") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m(0, 1) = -1.3;
  m(1, 0) = 1.3;
  QuadraticHamiltonian h{AntisymmetricMatrix(m)};

  CovarianceMatrix g =
      state_from_hamiltonian(h, InverseTemperature::infinite());
  CHECK(g.matrix()(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_abs(g.matrix().bottomRightCorner(2, 2)) < 1e-12);

  CovarianceMatrix warm =
      state_from_hamiltonian(h, InverseTemperature::finite(2.0));
  CHECK(warm.matrix()(0, 1) == doctest::Approx(std::tanh(2.6)).epsilon(1e-12));
  CHECK(max_abs(warm.matrix().bottomRightCorner(2, 2)) < 1e-12);
}

TEST_CASE("inverse temperature rejects negatives and non-finite input") {
  CHECK_THROWS_AS(InverseTemperature::finite(-0.1), InvalidInputError);
  CHECK_THROWS_AS(InverseTemperature::finite(
                      std::numeric_limits<double>::infinity()),
                  InvalidInputError);
  CHECK(InverseTemperature::infinite().is_infinite());
}

TEST_CASE("purity spectrum flags pure and mixed modes") {
  CovarianceMatrix g = product_state({1.0, 0.3});
  PuritySpectrum p = purity_spectrum(g);
  REQUIRE(p.values.size() == 2);
  CHECK(p.pure[0]);
  CHECK_FALSE(p.pure[1]);
  CHECK_FALSE(p.all_pure);
  CHECK(purity_spectrum(product_state({1.0, 1.0})).all_pure);
}

TEST_CASE("wick expectations match dense single- and two-mode traces") {
  const double l1 = 0.7, l2 = -0.4;
  CovarianceMatrix g = product_state({l1, l2});

  CHECK(wick_expectation(g, {}) == std::complex<double>(1.0, 0.0));
  CHECK(wick_expectation(g, {0}) == std::complex<double>(0.0, 0.0));

  // tr(rho g1 g2) = i l for a single block.
  std::complex<double> two = wick_expectation(g, {0, 1});
  CHECK(two.real() == doctest::Approx(0.0).scale(1.0));
  CHECK(two.imag() == doctest::Approx(l1).epsilon(1e-13));

  // Cross-mode pair has no correlation in a product state.
  CHECK(std::abs(wick_expectation(g, {1, 2})) < 1e-14);

  // tr(rho g1 g2 g3 g4) = -l1 l2.
  std::complex<double> four = wick_expectation(g, {0, 1, 2, 3});
  CHECK(four.real() == doctest::Approx(-l1 * l2).epsilon(1e-13));
  CHECK(four.imag() == doctest::Approx(0.0).scale(1.0));

  CHECK_THROWS_AS(wick_expectation(g, {1, 0}), InvalidInputError);
  CHECK_THROWS_AS(wick_expectation(g, {0, 0}), InvalidInputError);
  CHECK_THROWS_AS(wick_expectation(g, {0, 7}), InvalidInputError);
}

TEST_CASE("square-root-state spectrum map") {
  CHECK(sqrt_state_spectrum(0.6) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(sqrt_state_spectrum(0.0) == 0.0);
  CHECK(sqrt_state_spectrum(1.0) == doctest::Approx(1.0));

  // Doubling the square-root state recovers the original value.
  for (int k = 0; k <= 10; ++k) {
    const double lambda = 0.1 * k;
    const double half = sqrt_state_spectrum(lambda);
    CHECK(2.0 * half / (1.0 + half * half) ==
          doctest::Approx(lambda).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("power rotation is a one-parameter orthogonal group") {
  std::mt19937_64 rng(5);
  CovarianceMatrix g = random_covariance(rng, 3, 0.1, 0.9);

  Eigen::MatrixXd b1 = power_rotation(g, 0.7);
  Eigen::MatrixXd b2 = power_rotation(g, -0.7);
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(6, 6);
  CHECK(max_abs(b1 * b1.transpose() - id) < 1e-10);
  CHECK(b1.determinant() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(max_abs(b1 * b2 - id) < 1e-10);

  Eigen::MatrixXd sum = power_rotation(g, 1.1);
  CHECK(max_abs(power_rotation(g, 0.4) * power_rotation(g, 0.7) - sum) <
        1e-10);

  // The rotation commutes with its anchor state.
  CHECK(max_abs(b1 * g.matrix() * b1.transpose() - g.matrix()) < 1e-10);
}

TEST_CASE("power rotation single-block angle is -2t arctanh(lambda)") {
  const double lambda = 0.5, t = 0.3;
  CovarianceMatrix g = product_state({lambda});
  const double theta = -2.0 * t * std::atanh(lambda);
  Eigen::MatrixXd expected(2, 2);
  expected << std::cos(theta), -std::sin(theta), std::sin(theta),
      std::cos(theta);
  CHECK(max_abs(power_rotation(g, t) - expected) < 1e-13);
}

TEST_CASE("power rotation guards its domain") {
  CovarianceMatrix pure = product_state({1.0});
  CHECK_THROWS_AS(power_rotation(pure, 0.5), FaithfulnessError);

  CovarianceMatrix mixed = product_state({0.5});
  CHECK_THROWS_AS(power_rotation(mixed, 51.0), InvalidInputError);
  CHECK_NOTHROW(power_rotation(mixed, 50.0));
}

TEST_CASE("require_strictly_mixed reports offending modes") {
  CovarianceMatrix g = product_state({1.0, 0.2});
  try {
    require_strictly_mixed(g, "test");
    FAIL("expected FaithfulnessError");
  } catch (const FaithfulnessError& e) {
    REQUIRE(e.modes().size() == 1);
    CHECK(e.modes()[0] == 0);
    CHECK(e.values()[0] == doctest::Approx(1.0));
  }
  CHECK_NOTHROW(require_strictly_mixed(product_state({0.2, 0.3}), "test"));
}
