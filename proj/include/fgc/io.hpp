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
#ifndef FGC_IO_HPP_
#define FGC_IO_HPP_

#include <string>

#include "fgc/channel.hpp"
#include "fgc/errors.hpp"
#include "fgc/models.hpp"
#include "fgc/state.hpp"

namespace fgc::io {

/// Malformed document: JSON syntax errors (message carries line/column) or
/// schema violations (missing keys, wrong types, ragged or mis-sized
/// matrices). Distinct from the validation errors raised once a document
/// has been decoded into matrices.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or unwritable file.
class IoError : public Error {
 public:
  using Error::Error;
};

/// State document: {"n": int, "G": [[...]]} with G row-major 2n x 2n.
/// Decoding applies validate_covariance, so the result is always a valid
/// covariance matrix (InvalidStateError propagates otherwise).
CovarianceMatrix parse_state(const std::string& text);
std::string serialize_state(const CovarianceMatrix& g);
CovarianceMatrix read_state(const std::string& path);
void write_state(const std::string& path, const CovarianceMatrix& g);

/// Channel document:
///   {"n_in": int, "n_out": int, "A": [[...]], "B": [[...]],
///    "C": [re, im], "D": [[...]]}
/// C and D are optional (C defaults to 1, D to zero), so CPTP documents can
/// omit them. Decoding checks shapes against n_in/n_out but performs no
/// channel validation; run validate_structure / validate_cp / validate_tp
/// or to_cptp on the result.
GaussianChannelData parse_channel(const std::string& text);
std::string serialize_channel(const GaussianChannelData& ch);
/// CPTP serialization omits C and D.
std::string serialize_channel(const GaussianCPTPChannel& ch);
GaussianChannelData read_channel(const std::string& path);
void write_channel(const std::string& path, const GaussianChannelData& ch);
void write_channel(const std::string& path, const GaussianCPTPChannel& ch);

/// Dilation document: {"R": [[...]], "G_E": [[...]], "n": int, "m": int}.
/// Decoding validates G_E as a covariance matrix and checks shapes; run
/// validate_dilation for the orthogonality check on R.
Dilation parse_dilation(const std::string& text);
std::string serialize_dilation(const Dilation& d);
Dilation read_dilation(const std::string& path);
void write_dilation(const std::string& path, const Dilation& d);

}  // namespace fgc::io

#endif  // FGC_IO_HPP_
