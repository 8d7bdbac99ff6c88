// Copyright 2026 The QSeal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qseal/seal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qseal/error.hpp"

namespace qseal {

namespace {

using json = nlohmann::json;

void require_qmax(double q_max) {
  if (!(q_max > 0.0 && q_max <= 1.0)) {
    throw Error(ErrorCode::kQmaxOutOfRange,
                "q_max must lie in (0, 1], got " + std::to_string(q_max));
  }
}

json state_to_json(const StateVector& psi) {
  json arr = json::array();
  for (const auto& z : psi.amplitudes()) arr.push_back(json::array({z.real(), z.imag()}));
  return arr;
}

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::size_t read_dimension(const json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end()) throw Error(ErrorCode::kParseError, std::string("missing field '") + field + "'");
  if (!it->is_number_unsigned() || it->get<std::size_t>() == 0) {
    throw Error(ErrorCode::kParseError, std::string("field '") + field + "': expected a positive integer");
  }
  return it->get<std::size_t>();
}

StateVector read_state(const json& doc, const char* field, std::size_t dim) {
  const auto it = doc.find(field);
  if (it == doc.end()) throw Error(ErrorCode::kParseError, std::string("missing field '") + field + "'");
  if (!it->is_array()) throw Error(ErrorCode::kParseError, std::string("field '") + field + "': expected an array");
  if (it->size() != dim) {
    throw Error(ErrorCode::kParseError, std::string("field '") + field + "': expected " + std::to_string(dim) +
                                            " amplitudes, found " + std::to_string(it->size()));
  }
  StateVector psi(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const json& pair = (*it)[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw Error(ErrorCode::kParseError,
                  std::string("field '") + field + "' entry " + std::to_string(k) + ": expected [re, im]");
    }
    psi[k] = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return psi;
}

}  // namespace

void validate_scheme(const SealScheme& s, double norm_tol) {
  if (s.dim_b < 2) throw Error(ErrorCode::kInvalidArgument, "dim_b must be at least 2");
  if (s.dim_a < 1) throw Error(ErrorCode::kInvalidArgument, "dim_a must be at least 1");
  const std::size_t dim = s.dim_b * s.dim_a;
  for (int bit = 0; bit < 2; ++bit) {
    const StateVector& psi = s.state(bit);
    if (psi.dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, "psi" + std::to_string(bit) + " has dimension " +
                                                     std::to_string(psi.dim()) + ", expected " +
                                                     std::to_string(dim));
    }
    const double norm = psi.norm();
    if (!(std::abs(norm - 1.0) <= norm_tol)) {
      throw Error(ErrorCode::kNormalizationError,
                  "psi" + std::to_string(bit) + " has norm " + std::to_string(norm));
    }
  }
}

SealScheme make_stringent_scheme(double q_max) {
  require_qmax(q_max);
  const double w = std::sqrt(1.0 - q_max) / 2.0;
  const double tail = std::sqrt(q_max);
  SealScheme s{2, 3, StateVector(6), StateVector(6)};
  for (int bit = 0; bit < 2; ++bit) {
    const double sign = bit == 0 ? 1.0 : -1.0;
    StateVector& psi = bit == 0 ? s.psi0 : s.psi1;
    // (|0> + sign|1>) (x) |0>_A
    psi[0 * 3 + 0] = w;
    psi[1 * 3 + 0] = sign * w;
    // (|0> - sign|1>) (x) |1>_A
    psi[0 * 3 + 1] = w;
    psi[1 * 3 + 1] = -sign * w;
    // |bit> (x) |2>_A
    psi[static_cast<std::size_t>(bit) * 3 + 2] = tail;
  }
  return s;
}

SealScheme make_product_scheme(double q_max) {
  require_qmax(q_max);
  const double hi = std::sqrt((1.0 + q_max) / 2.0);
  const double lo = std::sqrt((1.0 - q_max) / 2.0);
  return SealScheme{2, 1, StateVector{hi, lo}, StateVector{lo, hi}};
}

SchemeAnalysis analyze_scheme(const SealScheme& s) {
  validate_scheme(s);
  SchemeAnalysis out{partial_trace_over_a(s.psi0, s.dim_b, s.dim_a),
                     partial_trace_over_a(s.psi1, s.dim_b, s.dim_a), 0.0};
  out.q_max = trace_distance(out.rho0, out.rho1);
  return out;
}

std::string scheme_to_string(const SealScheme& s) {
  validate_scheme(s);
  // Fixed field order keeps files byte-stable.
  std::ostringstream os;
  os << "{\n"
     << "  \"dim_b\": " << s.dim_b << ",\n"
     << "  \"dim_a\": " << s.dim_a << ",\n"
     << "  \"psi0\": " << state_to_json(s.psi0).dump() << ",\n"
     << "  \"psi1\": " << state_to_json(s.psi1).dump() << "\n"
     << "}\n";
  return os.str();
}

SealScheme scheme_from_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_of_offset(text, e.byte)) + ": malformed scheme document");
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParseError, "line 1: scheme must be an object");
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "dim_b" && key != "dim_a" && key != "psi0" && key != "psi1") {
      throw Error(ErrorCode::kParseError, "unknown field '" + key + "'");
    }
  }
  SealScheme s;
  s.dim_b = read_dimension(doc, "dim_b");
  s.dim_a = read_dimension(doc, "dim_a");
  s.psi0 = read_state(doc, "psi0", s.dim_b * s.dim_a);
  s.psi1 = read_state(doc, "psi1", s.dim_b * s.dim_a);
  validate_scheme(s, kLoadNormTolerance);
  return s;
}

void save_scheme(const SealScheme& s, const std::filesystem::path& path) {
  const std::string text = scheme_to_string(s);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write to '" + path.string() + "' failed");
}

SealScheme load_scheme(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "read from '" + path.string() + "' failed");
  return scheme_from_string(buf.str());
}

}  // namespace qseal
