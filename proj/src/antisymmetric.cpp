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
#include "fgc/antisymmetric.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace fgc {

namespace {

// Canonical 2x2 block J = [[0,-1],[1,0]].
Eigen::Matrix2d block_j() {
  Eigen::Matrix2d j;
  j << 0.0, -1.0, 1.0, 0.0;
  return j;
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

AntisymmetricMatrix::AntisymmetricMatrix(const Eigen::MatrixXd& m,
                                         double tolerance) {
  if (m.rows() != m.cols()) {
    throw InvalidInputError("antisymmetric matrix must be square, got " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  if (m.rows() % 2 != 0) {
    throw InvalidInputError(
        "antisymmetric matrix must have even dimension, got " +
        std::to_string(m.rows()));
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m + m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tolerance * scale) {
    throw InvalidInputError("matrix is not antisymmetric: ||M + M^T||_max = " +
                            format_value(asym) + " exceeds tolerance " +
                            format_value(tolerance * scale));
  }
  m_ = 0.5 * (m - m.transpose().eval());
}

AntisymmetricMatrix AntisymmetricMatrix::zero(int modes) {
  if (modes < 0) {
    throw InvalidInputError("mode count must be nonnegative");
  }
  return AntisymmetricMatrix(Eigen::MatrixXd::Zero(2 * modes, 2 * modes));
}

Eigen::MatrixXd CanonicalForm::reconstruct() const {
  const int n = modes();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  const Eigen::Matrix2d j = block_j();
  for (int i = 0; i < n; ++i) {
    d.block<2, 2>(2 * i, 2 * i) = signed_value(i) * j;
  }
  return O.transpose() * d * O;
}

CanonicalForm canonical_decompose(const AntisymmetricMatrix& m) {
  const int dim = m.dim();
  const int n = m.modes();

  CanonicalForm cf;
  if (n == 0) {
    cf.O = Eigen::MatrixXd::Identity(0, 0);
    return cf;
  }

  // Real Schur form: T = Q^T M Q is antisymmetric and quasi-triangular,
  // hence block diagonal with 2x2 antisymmetric blocks and scalar zeros.
  Eigen::RealSchur<Eigen::MatrixXd> schur(m.matrix());
  if (schur.info() != Eigen::Success) {
    throw NumericalConsistencyError("real Schur iteration failed to converge");
  }
  const Eigen::MatrixXd& t = schur.matrixT();
  const Eigen::MatrixXd& q = schur.matrixU();

  const double scale = std::max(1.0, m.matrix().cwiseAbs().maxCoeff());
  const double block_eps = 1e-14 * scale;

  // Walk the diagonal, collecting 2x2 blocks and unpaired scalar zeros.
  struct Mode {
    double value;          // block magnitude, >= 0 after normalization
    Eigen::VectorXd u;     // leading basis vector (stored as a column)
    Eigen::VectorXd w;     // trailing basis vector
  };
  std::vector<Mode> blocks;
  std::vector<Eigen::VectorXd> singles;
  int k = 0;
  while (k < dim) {
    if (k + 1 < dim && std::abs(t(k + 1, k)) > block_eps) {
      // signed value lambda with respect to lambda*J: (2,1) entry is +lambda
      const double lambda = 0.5 * (t(k + 1, k) - t(k, k + 1));
      Mode mode{lambda, q.col(k), q.col(k + 1)};
      if (mode.value < 0.0) {
        // Flip to nonnegative orientation; each flip negates det(O).
        mode.value = -mode.value;
        mode.u = -mode.u;
      }
      blocks.push_back(std::move(mode));
      k += 2;
    } else {
      singles.push_back(q.col(k));
      k += 1;
    }
  }
  if (singles.size() % 2 != 0) {
    throw NumericalConsistencyError(
        "odd number of scalar Schur blocks for an antisymmetric matrix");
  }
  // Unpaired columns span the kernel; pair them into zero modes.
  for (size_t i = 0; i + 1 < singles.size(); i += 2) {
    blocks.push_back({0.0, singles[i], singles[i + 1]});
  }

  // Descending by magnitude with a deterministic tie key (index and value of
  // the first significant component of the leading basis vector). Keys are
  // precomputed so the comparison is a strict weak ordering.
  struct SortKey {
    double value;
    int first_index;
    double first_component;
    size_t position;
  };
  std::vector<SortKey> keys(blocks.size());
  for (size_t i = 0; i < blocks.size(); ++i) {
    const Eigen::VectorXd& u = blocks[i].u;
    int fi = static_cast<int>(u.size());
    double fc = 0.0;
    for (int c = 0; c < u.size(); ++c) {
      if (std::abs(u[c]) > 1e-8) {
        fi = c;
        fc = u[c];
        break;
      }
    }
    keys[i] = {blocks[i].value, fi, fc, i};
  }
  std::sort(keys.begin(), keys.end(), [](const SortKey& a, const SortKey& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.first_index != b.first_index) return a.first_index < b.first_index;
    if (a.first_component != b.first_component) {
      return a.first_component > b.first_component;
    }
    return a.position < b.position;
  });

  cf.O.resize(dim, dim);
  cf.williamson.resize(static_cast<size_t>(n));
  cf.orientation.assign(static_cast<size_t>(n), 1);
  for (int i = 0; i < n; ++i) {
    const Mode& mode = blocks[keys[static_cast<size_t>(i)].position];
    cf.O.row(2 * i) = mode.u.transpose();
    cf.O.row(2 * i + 1) = mode.w.transpose();
    cf.williamson[static_cast<size_t>(i)] = mode.value;
  }

  // Restore det(O) = +1 if the orientation normalization flipped it. Prefer
  // a kernel mode (reconstruction is unaffected there); otherwise reverse
  // the smallest block and record the reversed orientation.
  if (cf.O.determinant() < 0.0) {
    int target = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (cf.williamson[static_cast<size_t>(i)] <= tol::kSingularValue) {
        target = i;
        break;
      }
    }
    if (target < 0) {
      target = n - 1;
      cf.orientation[static_cast<size_t>(target)] = -1;
    }
    cf.O.row(2 * target) = -cf.O.row(2 * target).eval();
  }

  return cf;
}

double pfaffian(const AntisymmetricMatrix& m) {
  return pfaffian_log(m).value();
}

SignedLog pfaffian_log(const AntisymmetricMatrix& m) {
  const int dim = m.dim();
  SignedLog result{1.0, 0.0};
  if (dim == 0) return result;  // Pf of the empty matrix is 1

  Eigen::MatrixXd a = m.matrix();
  double sign = 1.0;

  // Householder tridiagonalization acting on rows/cols k+1..dim-1; each
  // nontrivial reflection contributes det(P) = -1 to the transform.
  for (int k = 0; k + 2 < dim; ++k) {
    Eigen::VectorXd x = a.col(k).segment(k + 1, dim - k - 1);
    const double norm = x.norm();
    if (norm == 0.0) continue;
    double alpha = (x[0] >= 0.0 ? -norm : norm);
    Eigen::VectorXd v = x;
    v[0] -= alpha;
    const double vnorm = v.norm();
    if (vnorm <= 1e-300) continue;
    v /= vnorm;

    auto rows = a.middleRows(k + 1, dim - k - 1);
    rows -= (2.0 * v) * (v.transpose() * rows).eval();
    auto cols = a.middleCols(k + 1, dim - k - 1);
    cols -= (cols * v).eval() * (2.0 * v.transpose());
    sign = -sign;
  }

  // Pfaffian of the antisymmetric tridiagonal form: product of the odd
  // superdiagonal entries.
  double log_abs = 0.0;
  double prod_sign = 1.0;
  for (int k = 0; k + 1 < dim; k += 2) {
    const double entry = a(k, k + 1);
    if (entry == 0.0) return SignedLog{0.0, 0.0};
    log_abs += std::log(std::abs(entry));
    prod_sign *= (entry > 0.0 ? 1.0 : -1.0);
  }
  return SignedLog{sign * prod_sign, log_abs};
}

namespace {

// Shared builder for odd spectral application: blocks f(lambda_i) * J.
Eigen::MatrixXd build_odd(const CanonicalForm& cf,
                          const std::vector<double>& values) {
  const int n = cf.modes();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  const Eigen::Matrix2d j = block_j();
  for (int i = 0; i < n; ++i) {
    d.block<2, 2>(2 * i, 2 * i) = values[static_cast<size_t>(i)] * j;
  }
  return cf.O.transpose() * d * cf.O;
}

}  // namespace

AntisymmetricMatrix odd_function(const AntisymmetricMatrix& m,
                                 const std::function<double(double)>& f,
                                 const std::string& name) {
  const CanonicalForm cf = canonical_decompose(m);
  std::vector<double> values(static_cast<size_t>(cf.modes()));
  for (int i = 0; i < cf.modes(); ++i) {
    const double lambda = cf.signed_value(i);
    const double fv = f(lambda);
    if (!std::isfinite(fv)) {
      throw DomainError(name + " evaluates non-finite at block value " +
                        format_value(lambda));
    }
    values[static_cast<size_t>(i)] = fv;
  }
  return AntisymmetricMatrix(build_odd(cf, values));
}

Eigen::MatrixXd even_function(const AntisymmetricMatrix& m,
                              const std::function<double(double)>& g,
                              const std::string& name) {
  // M^T M is symmetric PSD with eigenvalues b_i^2 (doubled); applying
  // g(sqrt(.)) to its spectrum realizes the even calculus without canonical
  // pairing. Accuracy near b = 0 is preserved because even functions are
  // smooth in b^2.
  const Eigen::MatrixXd s = m.matrix().transpose() * m.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  if (es.info() != Eigen::Success) {
    throw NumericalConsistencyError("symmetric eigensolve failed");
  }
  Eigen::VectorXd gvals(es.eigenvalues().size());
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double b = std::sqrt(std::max(0.0, es.eigenvalues()[i]));
    const double gv = g(b);
    if (!std::isfinite(gv)) {
      throw DomainError(name + " evaluates non-finite at Williamson value " +
                        format_value(b));
    }
    gvals[i] = gv;
  }
  return es.eigenvectors() * gvals.asDiagonal() *
         es.eigenvectors().transpose();
}

Eigen::MatrixXd support_pseudo_apply(const AntisymmetricMatrix& m,
                                     const SpectralFunction& f) {
  const CanonicalForm cf = canonical_decompose(m);
  std::vector<double> values(static_cast<size_t>(cf.modes()));
  for (int i = 0; i < cf.modes(); ++i) {
    const double lambda = cf.signed_value(i);
    const SpectralFunction::SingularPoint* hit = nullptr;
    for (const auto& sp : f.singular) {
      if (std::abs(lambda - sp.where) <= f.tolerance) {
        hit = &sp;
        break;
      }
    }
    double fv;
    if (hit != nullptr) {
      if (!hit->limit.has_value()) {
        throw SingularityError(f.name + " has no finite limit at " +
                               format_value(hit->where) +
                               " but block value " + format_value(lambda) +
                               " is present");
      }
      fv = *hit->limit;
    } else {
      fv = f.fn(lambda);
      if (!std::isfinite(fv)) {
        throw SingularityError(f.name +
                               " has no declared limit at block value " +
                               format_value(lambda));
      }
    }
    values[static_cast<size_t>(i)] = fv;
  }
  return build_odd(cf, values);
}

Eigen::MatrixXd pseudo_inverse(const AntisymmetricMatrix& m,
                               double tolerance) {
  SpectralFunction inv;
  inv.fn = [](double x) { return -1.0 / x; };
  inv.singular = {{0.0, 0.0}};
  inv.tolerance = tolerance;
  inv.name = "pseudo-inverse";
  return support_pseudo_apply(m, inv);
}

SignedLog log_abs_det(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw InvalidInputError("determinant of a non-square matrix");
  }
  if (m.rows() == 0) return SignedLog{1.0, 0.0};
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  double sign = lu.permutationP().determinant() > 0 ? 1.0 : -1.0;
  double log_abs = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    const double u = lu.matrixLU()(i, i);
    if (u == 0.0) return SignedLog{0.0, 0.0};
    log_abs += std::log(std::abs(u));
    if (u < 0.0) sign = -sign;
  }
  return SignedLog{sign, log_abs};
}

}  // namespace fgc
