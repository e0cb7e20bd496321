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
#ifndef FGC_ANTISYMMETRIC_HPP_
#define FGC_ANTISYMMETRIC_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fgc/errors.hpp"
#include "fgc/tolerances.hpp"

namespace fgc {

/// Real antisymmetric matrix of even dimension 2n ("n modes").
///
/// Construction from raw data checks the shape and the asymmetry residual,
/// then stores the exact antisymmetrization (M - M^T)/2, so every instance
/// satisfies M^T = -M to machine precision.
class AntisymmetricMatrix {
 public:
  /// Validating constructor. Throws InvalidInputError if the matrix is not
  /// square with even dimension, or if ||M + M^T||_max exceeds
  /// tolerance * max(1, ||M||_max).
  explicit AntisymmetricMatrix(const Eigen::MatrixXd& m,
                               double tolerance = tol::kAntisymmetry);

  /// Zero matrix on the given number of modes.
  static AntisymmetricMatrix zero(int modes);

  int modes() const { return static_cast<int>(m_.rows()) / 2; }
  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

/// Canonical (Williamson-type) block decomposition of a real antisymmetric
/// matrix:  M = O^T (blkdiag_i  s_i b_i J) O  with J = [[0,-1],[1,0]],
/// O in SO(2n), b_i >= 0 sorted descending and s_i in {+1,-1}.
///
/// The magnitudes b_i live in `williamson`; the block orientation signs s_i
/// live in `orientation`. Orientation signs are genuine data: keeping
/// det(O) = +1 together with b_i >= 0 forces some inputs (e.g. the
/// single-mode matrix -J) onto the reversed block orientation. Modes with
/// b_i = 0 always carry s_i = +1.
struct CanonicalForm {
  Eigen::MatrixXd O;               ///< rows are the canonical basis vectors
  std::vector<double> williamson;  ///< b_i >= 0, descending
  std::vector<int> orientation;    ///< s_i in {+1,-1}

  int modes() const { return static_cast<int>(williamson.size()); }

  /// Signed block value s_i * b_i of mode i.
  double signed_value(int i) const {
    return orientation[static_cast<size_t>(i)] *
           williamson[static_cast<size_t>(i)];
  }

  /// Rebuild O^T (blkdiag s_i b_i J) O.
  Eigen::MatrixXd reconstruct() const;
};

/// Compute the canonical block decomposition via the real Schur form.
/// Deterministic for identical input bytes on one platform; ties in the
/// descending sort are broken by the first significant component of the
/// block's leading basis vector.
CanonicalForm canonical_decompose(const AntisymmetricMatrix& m);

/// Sign/log-magnitude representation of a real scalar, used where plain
/// doubles would overflow (Pfaffians and determinants of large matrices).
struct SignedLog {
  double sign = 0.0;      ///< -1, 0 or +1
  double log_abs = 0.0;   ///< natural log of |value|; ignored when sign == 0

  double value() const { return sign == 0.0 ? 0.0 : sign * std::exp(log_abs); }
};

/// Pfaffian via Householder tridiagonalization with sign tracking, O(n^3).
/// Satisfies Pf(M)^2 = det(M) and Pf(B M B^T) = det(B) Pf(M).
double pfaffian(const AntisymmetricMatrix& m);

/// Pfaffian in sign/log form (overflow-safe).
SignedLog pfaffian_log(const AntisymmetricMatrix& m);

/// Odd spectral calculus: apply an odd scalar function f to the signed
/// canonical block values, i.e. return O^T (blkdiag f(s_i b_i) J) O. The
/// result is antisymmetric. Throws DomainError naming the offending value if
/// f evaluates non-finite at some block value.
AntisymmetricMatrix odd_function(const AntisymmetricMatrix& m,
                                 const std::function<double(double)>& f,
                                 const std::string& name = "f");

/// Even spectral calculus: apply an even scalar function g to the Williamson
/// magnitudes, i.e. return O^T (blkdiag g(b_i) I_2) O. Computed through a
/// symmetric eigensolve of M^T M; the result is symmetric. Throws DomainError
/// if g evaluates non-finite at some magnitude.
Eigen::MatrixXd even_function(const AntisymmetricMatrix& m,
                              const std::function<double(double)>& g,
                              const std::string& name = "g");

/// Scalar function with declared singular points, for spectral application
/// on (possibly singular) antisymmetric matrices. A singular point with a
/// declared limit evaluates to that limit; one without a declared limit
/// raises SingularityError when hit.
struct SpectralFunction {
  struct SingularPoint {
    double where = 0.0;
    std::optional<double> limit;  ///< declared value; nullopt = no finite limit
  };

  std::function<double(double)> fn;
  std::vector<SingularPoint> singular;
  double tolerance = tol::kSingularValue;
  std::string name = "f";
};

/// Apply f to the signed canonical block values with the declared
/// singular-point policy: values within f.tolerance of a singular point take
/// the declared limit (or raise SingularityError if none is declared).
/// Returns O^T (blkdiag f(lambda_i) J) O.
Eigen::MatrixXd support_pseudo_apply(const AntisymmetricMatrix& m,
                                     const SpectralFunction& f);

/// Moore-Penrose pseudo-inverse of an antisymmetric matrix: inverts the
/// nonsingular canonical blocks ((lambda J)^+ = -J/lambda) and annihilates
/// the kernel. Equals the true inverse when no Williamson value is below
/// `tolerance`.
Eigen::MatrixXd pseudo_inverse(const AntisymmetricMatrix& m,
                               double tolerance = tol::kSingularValue);

/// Sign and natural log of |det| via a partially pivoted LU (overflow-safe).
SignedLog log_abs_det(const Eigen::MatrixXd& m);

}  // namespace fgc

#endif  // FGC_ANTISYMMETRIC_HPP_
