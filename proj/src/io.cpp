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
#include "fgc/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace fgc::io {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

int require_mode_count(const json& doc, const std::string& key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw ParseError("missing or non-integer \"" + key + "\"");
  }
  const int n = doc[key].get<int>();
  if (n < 0) {
    throw ParseError("\"" + key + "\" must be nonnegative, got " +
                     std::to_string(n));
  }
  return n;
}

Eigen::MatrixXd require_matrix(const json& doc, const std::string& key,
                               int rows, int cols) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError("missing or non-array \"" + key + "\"");
  }
  const json& m = doc[key];
  if (static_cast<int>(m.size()) != rows) {
    throw ParseError("\"" + key + "\" has " + std::to_string(m.size()) +
                     " rows, expected " + std::to_string(rows));
  }
  Eigen::MatrixXd out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = m[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw ParseError("\"" + key + "\" row " + std::to_string(i) +
                       " is not an array of length " + std::to_string(cols));
    }
    for (int j = 0; j < cols; ++j) {
      const json& cell = row[static_cast<size_t>(j)];
      if (!cell.is_number()) {
        throw ParseError("\"" + key + "\" entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") is not a number");
      }
      out(i, j) = cell.get<double>();
    }
  }
  return out;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path + " for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failure on " + path);
  }
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw IoError("write failure on " + path);
  }
}

}  // namespace

CovarianceMatrix parse_state(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object()) {
    throw ParseError("state document must be a JSON object");
  }
  const int n = require_mode_count(doc, "n");
  Eigen::MatrixXd g = require_matrix(doc, "G", 2 * n, 2 * n);
  return validate_covariance(AntisymmetricMatrix(g));
}

std::string serialize_state(const CovarianceMatrix& g) {
  json doc;
  doc["n"] = g.modes();
  doc["G"] = matrix_to_json(g.matrix());
  return doc.dump(2) + "\n";
}

CovarianceMatrix read_state(const std::string& path) {
  return parse_state(read_file(path));
}

void write_state(const std::string& path, const CovarianceMatrix& g) {
  write_file(path, serialize_state(g));
}

GaussianChannelData parse_channel(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object()) {
    throw ParseError("channel document must be a JSON object");
  }
  const int n_in = require_mode_count(doc, "n_in");
  const int n_out = require_mode_count(doc, "n_out");
  GaussianChannelData ch;
  ch.A = require_matrix(doc, "A", 2 * n_out, 2 * n_out);
  ch.B = require_matrix(doc, "B", 2 * n_out, 2 * n_in);
  if (doc.contains("C")) {
    const json& c = doc["C"];
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() ||
        !c[1].is_number()) {
      throw ParseError("\"C\" must be a [re, im] pair");
    }
    ch.C = {c[0].get<double>(), c[1].get<double>()};
  }
  if (doc.contains("D")) {
    ch.D = require_matrix(doc, "D", 2 * n_in, 2 * n_in);
  } else {
    ch.D = Eigen::MatrixXd::Zero(2 * n_in, 2 * n_in);
  }
  return ch;
}

std::string serialize_channel(const GaussianChannelData& ch) {
  json doc;
  doc["n_in"] = ch.modes_in();
  doc["n_out"] = ch.modes_out();
  doc["A"] = matrix_to_json(ch.A);
  doc["B"] = matrix_to_json(ch.B);
  doc["C"] = json::array({ch.C.real(), ch.C.imag()});
  doc["D"] = matrix_to_json(ch.D);
  return doc.dump(2) + "\n";
}

std::string serialize_channel(const GaussianCPTPChannel& ch) {
  json doc;
  doc["n_in"] = ch.modes_in();
  doc["n_out"] = ch.modes_out();
  doc["A"] = matrix_to_json(ch.offset());
  doc["B"] = matrix_to_json(ch.linear());
  return doc.dump(2) + "\n";
}

GaussianChannelData read_channel(const std::string& path) {
  return parse_channel(read_file(path));
}

void write_channel(const std::string& path, const GaussianChannelData& ch) {
  write_file(path, serialize_channel(ch));
}

void write_channel(const std::string& path, const GaussianCPTPChannel& ch) {
  write_file(path, serialize_channel(ch));
}

Dilation parse_dilation(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object()) {
    throw ParseError("dilation document must be a JSON object");
  }
  const int n = require_mode_count(doc, "n");
  const int m = require_mode_count(doc, "m");
  Eigen::MatrixXd r = require_matrix(doc, "R", 2 * (n + m), 2 * (n + m));
  Eigen::MatrixXd g_e = require_matrix(doc, "G_E", 2 * m, 2 * m);
  return Dilation{std::move(r),
                  validate_covariance(AntisymmetricMatrix(g_e)), n};
}

std::string serialize_dilation(const Dilation& d) {
  json doc;
  doc["n"] = d.system_modes;
  doc["m"] = d.environment_modes();
  doc["R"] = matrix_to_json(d.R);
  doc["G_E"] = matrix_to_json(d.environment.matrix());
  return doc.dump(2) + "\n";
}

Dilation read_dilation(const std::string& path) {
  return parse_dilation(read_file(path));
}

void write_dilation(const std::string& path, const Dilation& d) {
  write_file(path, serialize_dilation(d));
}

}  // namespace fgc::io
