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
#ifndef FGC_ERRORS_HPP_
#define FGC_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace fgc {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed argument: wrong shape, asymmetry beyond tolerance, bad index list.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Objects with incompatible dimensions were combined.
class DimensionError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

/// A matrix declared as a covariance matrix violates the spectral bound.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Channel data fails a required complete-positivity / trace-preservation check.
class InvalidChannelError : public Error {
 public:
  using Error::Error;
};

/// A scalar function evaluated non-finite at a spectral point of its argument.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A spectral value fell inside a declared singular set with no finite limit.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A state that must be strictly mixed has modes at (or beyond) purity.
/// Carries the offending mode indices and Williamson values so callers can
/// report the support structure.
class FaithfulnessError : public Error {
 public:
  FaithfulnessError(const std::string& msg, std::vector<int> modes,
                    std::vector<double> values)
      : Error(msg), modes_(std::move(modes)), values_(std::move(values)) {}

  const std::vector<int>& modes() const { return modes_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<int> modes_;
  std::vector<double> values_;
};

/// A brute-force-path size cap was exceeded.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed (negative determinant where a nonnegative
/// one is guaranteed, unstable regularized limit, composite constant drift).
class NumericalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace fgc

#endif  // FGC_ERRORS_HPP_
