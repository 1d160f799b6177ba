// Copyright 2026 The opgraph developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opgraph/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "opgraph/errors.hpp"

namespace opgraph {

namespace {

using json = nlohmann::json;

constexpr const char* kFormatVersion = "1";

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sp(int n) { return std::string(static_cast<std::size_t>(n), ' '); }

// [\n  [a, b],\n  [c, d]\n] — one line per matrix row.
void write_grid(std::string& out, const ComplexMatrix& m, bool imag, int indent) {
  out += "[\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += sp(indent + 2);
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) out += ", ";
      out += fmt_double(imag ? m(i, j).imag() : m(i, j).real());
    }
    out += ']';
    if (i + 1 < m.rows()) out += ',';
    out += '\n';
  }
  out += sp(indent);
  out += ']';
}

void write_matrix_object(std::string& out, const ComplexMatrix& m, int indent) {
  out += "{\n";
  out += sp(indent + 2) + "\"im\": ";
  write_grid(out, m, true, indent + 2);
  out += ",\n";
  out += sp(indent + 2) + "\"re\": ";
  write_grid(out, m, false, indent + 2);
  out += '\n';
  out += sp(indent) + "}";
}

void write_matrix_list(std::string& out, const std::vector<ComplexMatrix>& mats, int indent) {
  out += "[\n";
  for (std::size_t k = 0; k < mats.size(); ++k) {
    out += sp(indent + 2);
    write_matrix_object(out, mats[k], indent + 2);
    if (k + 1 < mats.size()) out += ',';
    out += '\n';
  }
  out += sp(indent) + "]";
}

void require_finite(const ComplexMatrix& m) {
  if (!m.is_finite()) throw ValidationError("matrix entries must be finite");
}

// ---- parsing helpers ----------------------------------------------------

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

const json& require_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t require_dim(const json& j, const char* key) {
  const json& f = require_field(j, key);
  if (!f.is_number_unsigned() || f.get<std::size_t>() == 0) {
    throw ParseError(std::string("field '") + key + "' must be a positive integer");
  }
  return f.get<std::size_t>();
}

std::string require_string(const json& j, const char* key) {
  const json& f = require_field(j, key);
  if (!f.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return f.get<std::string>();
}

void check_version(const json& j) {
  if (require_string(j, "version") != kFormatVersion) {
    throw ValidationError("unsupported format version '" + require_string(j, "version") + "'");
  }
}

// Reads the paired re/im grids of one matrix.
ComplexMatrix parse_matrix_payload(const json& j, std::size_t rows, std::size_t cols,
                                   const std::string& where) {
  ComplexMatrix m(rows, cols);
  for (const bool imag : {false, true}) {
    const char* key = imag ? "im" : "re";
    const json& grid = require_field(j, key);
    if (!grid.is_array() || grid.size() != rows) {
      throw ParseError(where + ": field '" + key + "' must be an array of " +
                       std::to_string(rows) + " rows");
    }
    for (std::size_t i = 0; i < rows; ++i) {
      const json& row = grid[i];
      if (!row.is_array() || row.size() != cols) {
        throw ParseError(where + ": '" + key + "' row " + std::to_string(i) + " has " +
                         std::to_string(row.is_array() ? row.size() : 0) +
                         " entries, expected " + std::to_string(cols));
      }
      for (std::size_t c = 0; c < cols; ++c) {
        if (!row[c].is_number()) {
          throw ParseError(where + ": '" + key + "' entry (" + std::to_string(i) + "," +
                           std::to_string(c) + ") is not a number");
        }
        const double v = row[c].get<double>();
        if (imag) {
          m(i, c) = complexd(m(i, c).real(), v);
        } else {
          m(i, c) = complexd(v, 0.0);
        }
      }
    }
  }
  require_finite(m);
  return m;
}

std::vector<ComplexMatrix> parse_matrix_list(const json& j, const char* key, std::size_t rows,
                                             std::size_t cols, const std::string& where) {
  const json& list = require_field(j, key);
  if (!list.is_array() || list.empty()) {
    throw ParseError(where + ": field '" + std::string(key) + "' must be a non-empty array");
  }
  std::vector<ComplexMatrix> out;
  out.reserve(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (!list[k].is_object()) {
      throw ParseError(where + ": '" + std::string(key) + "' element " + std::to_string(k) +
                       " must be an object");
    }
    out.push_back(parse_matrix_payload(list[k], rows, cols,
                                       where + " " + key + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::string require_kind(const json& j, const char* expected) {
  const std::string kind = require_string(j, "kind");
  if (kind != expected) {
    throw ValidationError("expected kind '" + std::string(expected) + "', found '" + kind + "'");
  }
  return kind;
}

}  // namespace

std::string emit(const ComplexMatrix& m) {
  require_finite(m);
  std::string out = "{\n";
  out += "  \"cols\": " + std::to_string(m.cols()) + ",\n";
  out += "  \"im\": ";
  write_grid(out, m, true, 2);
  out += ",\n";
  out += "  \"kind\": \"matrix\",\n";
  out += "  \"re\": ";
  write_grid(out, m, false, 2);
  out += ",\n";
  out += "  \"rows\": " + std::to_string(m.rows()) + ",\n";
  out += "  \"version\": \"1\"\n";
  out += "}\n";
  return out;
}

std::string emit(const OperatorSystem& s) {
  std::string out = "{\n";
  out += "  \"basis\": ";
  write_matrix_list(out, s.herm_basis(), 2);
  out += ",\n";
  out += "  \"dim_h\": " + std::to_string(s.dim_h()) + ",\n";
  out += "  \"kind\": \"operator_system\",\n";
  out += "  \"version\": \"1\"\n";
  out += "}\n";
  return out;
}

std::string emit(const EffectBasis& e) {
  std::string out = "{\n";
  out += "  \"basis_kind\": \"" + std::string(effect_kind_name(e.kind)) + "\",\n";
  out += "  \"dim_h\": " + std::to_string(e.dim_h()) + ",\n";
  out += "  \"effects\": ";
  write_matrix_list(out, e.effects, 2);
  out += ",\n";
  out += "  \"kind\": \"effect_basis\",\n";
  out += "  \"version\": \"1\"\n";
  out += "}\n";
  return out;
}

std::string emit(const QuantumChannel& c) {
  std::string out = "{\n";
  out += "  \"dim_in\": " + std::to_string(c.dim_in()) + ",\n";
  out += "  \"dim_out\": " + std::to_string(c.dim_out()) + ",\n";
  out += "  \"kind\": \"channel\",\n";
  out += "  \"kraus\": ";
  write_matrix_list(out, c.kraus(), 2);
  out += ",\n";
  out += "  \"version\": \"1\"\n";
  out += "}\n";
  return out;
}

std::string emit_report(const RoundTripReport& r) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::string out = "{\n";
  out += "  \"channel\": {\n";
  out += "    \"choi_min_eigenvalue\": " + fmt_double(r.choi_min_eigenvalue) + ",\n";
  out += "    \"choi_psd_ok\": " + std::string(b(r.choi_psd_ok)) + ",\n";
  out += "    \"choi_tp_ok\": " + std::string(b(r.choi_tp_ok)) + ",\n";
  out += "    \"choi_tp_residual\": " + fmt_double(r.choi_tp_residual) + ",\n";
  out += "    \"dim_out\": " + std::to_string(r.dim_out) + ",\n";
  out += "    \"kraus_count\": " + std::to_string(r.kraus_count) + ",\n";
  out += "    \"kraus_orthogonality_ok\": " + std::string(b(r.kraus_orthogonality_ok)) + ",\n";
  out += "    \"kraus_orthogonality_residual\": " + fmt_double(r.kraus_orthogonality_residual) +
         ",\n";
  out += "    \"tp_ok\": " + std::string(b(r.tp_ok)) + ",\n";
  out += "    \"tp_residual\": " + fmt_double(r.tp_residual) + "\n";
  out += "  },\n";
  out += "  \"dim_h\": " + std::to_string(r.dim_h) + ",\n";
  out += "  \"effect_basis\": {\n";
  out += "    \"count\": " + std::to_string(r.effect_count) + ",\n";
  out += "    \"geometric_bounds_ok\": " + std::string(b(r.geometric_bounds_ok)) + ",\n";
  out += "    \"identity_defect_norm\": " + fmt_double(r.identity_defect_norm) + ",\n";
  out += "    \"max_eigenvalue\": " + fmt_double(r.effect_max_eigenvalue) + ",\n";
  out += "    \"min_eigenvalue\": " + fmt_double(r.effect_min_eigenvalue) + ",\n";
  out += "    \"norm_decay_margin\": " + fmt_double(r.norm_decay_margin) + ",\n";
  out += "    \"span_distance\": " + fmt_double(r.effect_span_distance) + ",\n";
  out += "    \"span_ok\": " + std::string(b(r.effect_span_ok)) + ",\n";
  out += "    \"spectrum_ok\": " + std::string(b(r.effect_spectrum_ok)) + ",\n";
  out += "    \"sum_ok\": " + std::string(b(r.effect_sum_ok)) + ",\n";
  out += "    \"sum_residual\": " + fmt_double(r.effect_sum_residual) + "\n";
  out += "  },\n";
  out += "  \"graph\": {\n";
  out += "    \"dim_complex\": " + std::to_string(r.graph_dim_complex) + ",\n";
  out += "    \"dim_real\": " + std::to_string(r.graph_dim_real) + ",\n";
  out += "    \"equal\": " + std::string(b(r.graph_equal)) + ",\n";
  out += "    \"projector_distance\": " + fmt_double(r.projector_distance) + "\n";
  out += "  },\n";
  out += "  \"kind\": \"" + std::string(effect_kind_name(r.kind)) + "\",\n";
  out += "  \"system_dim\": " + std::to_string(r.system_dim) + ",\n";
  out += "  \"verdict\": " + std::string(b(r.verdict)) + "\n";
  out += "}\n";
  return out;
}

ComplexMatrix parse_matrix(const std::string& text) {
  const json j = parse_json(text);
  require_kind(j, "matrix");
  check_version(j);
  const std::size_t rows = require_dim(j, "rows");
  const std::size_t cols = require_dim(j, "cols");
  return parse_matrix_payload(j, rows, cols, "matrix");
}

OperatorSystem parse_operator_system(const std::string& text) {
  const json j = parse_json(text);
  require_kind(j, "operator_system");
  check_version(j);
  const std::size_t n = require_dim(j, "dim_h");
  std::vector<ComplexMatrix> basis = parse_matrix_list(j, "basis", n, n, "operator_system");
  return OperatorSystem::from_herm_basis(n, std::move(basis), 1e-6);
}

EffectBasis parse_effect_basis(const std::string& text) {
  const json j = parse_json(text);
  require_kind(j, "effect_basis");
  check_version(j);
  const std::size_t n = require_dim(j, "dim_h");
  const std::string kind_name = require_string(j, "basis_kind");
  EffectBasis e;
  if (kind_name == "duan") {
    e.kind = EffectKind::duan;
  } else if (kind_name == "geometric") {
    e.kind = EffectKind::geometric;
  } else {
    throw ValidationError("basis_kind must be 'duan' or 'geometric', found '" + kind_name + "'");
  }
  e.effects = parse_matrix_list(j, "effects", n, n, "effect_basis");
  for (const auto& check : check_effect_basis(e, /*strict=*/false)) {
    if (!check.ok) {
      throw ValidationError("effect basis invariant '" + check.name +
                            "' failed at load tolerance");
    }
  }
  return e;
}

QuantumChannel parse_channel(const std::string& text) {
  const json j = parse_json(text);
  require_kind(j, "channel");
  check_version(j);
  const std::size_t dim_in = require_dim(j, "dim_in");
  const std::size_t dim_out = require_dim(j, "dim_out");
  std::vector<ComplexMatrix> kraus = parse_matrix_list(j, "kraus", dim_out, dim_in, "channel");
  return QuantumChannel(std::move(kraus), kTpTolLoad);
}

Document parse_any(const std::string& text) {
  const json j = parse_json(text);
  const std::string kind = require_string(j, "kind");
  if (kind == "matrix") return parse_matrix(text);
  if (kind == "operator_system") return parse_operator_system(text);
  if (kind == "effect_basis") return parse_effect_basis(text);
  if (kind == "channel") return parse_channel(text);
  throw ValidationError("unknown document kind '" + kind + "'");
}

const char* document_kind_name(const Document& doc) {
  switch (doc.index()) {
    case 0:
      return "matrix";
    case 1:
      return "operator_system";
    case 2:
      return "effect_basis";
    default:
      return "channel";
  }
}

}  // namespace opgraph
