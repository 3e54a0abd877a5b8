// Copyright 2026 The povmcoh authors
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

#include "povmcoh/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace povmcoh {

namespace {

using nlohmann::json;

std::string kind_name(FileKind kind) {
  switch (kind) {
    case FileKind::State: return "state";
    case FileKind::Povm: return "povm";
    case FileKind::Projective: return "projective";
    case FileKind::Unitary: return "unitary";
  }
  throw ParseError("unknown file kind");
}

FileKind kind_from_name(const std::string& name) {
  if (name == "state") return FileKind::State;
  if (name == "povm") return FileKind::Povm;
  if (name == "projective") return FileKind::Projective;
  if (name == "unitary") return FileKind::Unitary;
  throw ParseError("unknown file kind \"" + name + "\"");
}

bool single_matrix_kind(FileKind kind) {
  return kind == FileKind::State || kind == FileKind::Unitary;
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + ": non-finite value");
  return v;
}

Matrix matrix_from_json(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ParseError("matrix: expected " + std::to_string(dim) + " rows");
  }
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError("matrix row " + std::to_string(r) + ": expected " +
                       std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      const json& entry = row[c];
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError("matrix entry: expected an [re, im] pair");
      }
      m(r, c) = Complex(finite_number(entry[0], "matrix entry"),
                        finite_number(entry[1], "matrix entry"));
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_file_shape(const MatrixFile& file) {
  if (file.dim < 1) throw ParseError("matrix file: dim must be positive");
  if (file.data.empty()) throw ParseError("matrix file: no matrices");
  if (single_matrix_kind(file.kind) && file.data.size() != 1) {
    throw ParseError("matrix file: kind \"" + kind_name(file.kind) +
                     "\" carries exactly one matrix");
  }
  for (const Matrix& m : file.data) {
    if (m.rows() != file.dim || m.cols() != file.dim) {
      throw ParseError("matrix file: matrix shape " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + " does not match dim " +
                       std::to_string(file.dim));
    }
    if (!m.allFinite()) throw ParseError("matrix file: non-finite matrix entry");
  }
  if (!file.labels.empty() && file.labels.size() != file.data.size()) {
    throw ParseError("matrix file: expected one label per matrix");
  }
}

MatrixFile file_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix file: expected a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("matrix file: missing \"kind\"");
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("matrix file: missing integer \"dim\"");
  }
  if (!j.contains("data")) throw ParseError("matrix file: missing \"data\"");

  MatrixFile file;
  file.kind = kind_from_name(j["kind"].get<std::string>());
  file.dim = j["dim"].get<int>();
  if (file.dim < 1) throw ParseError("matrix file: dim must be positive");

  const json& data = j["data"];
  if (single_matrix_kind(file.kind)) {
    file.data.push_back(matrix_from_json(data, file.dim));
  } else {
    if (!data.is_array() || data.empty()) {
      throw ParseError("matrix file: \"data\" must be a nonempty list of matrices");
    }
    for (const json& entry : data) file.data.push_back(matrix_from_json(entry, file.dim));
  }

  if (j.contains("labels")) {
    const json& labels = j["labels"];
    if (!labels.is_array()) throw ParseError("matrix file: \"labels\" must be a list");
    for (const json& label : labels) {
      if (!label.is_string()) throw ParseError("matrix file: labels must be strings");
      file.labels.push_back(label.get<std::string>());
    }
  }
  check_file_shape(file);
  return file;
}

json file_to_json(const MatrixFile& file) {
  check_file_shape(file);
  json j;
  j["kind"] = kind_name(file.kind);
  j["dim"] = file.dim;
  if (single_matrix_kind(file.kind)) {
    j["data"] = matrix_to_json(file.data.front());
  } else {
    json list = json::array();
    for (const Matrix& m : file.data) list.push_back(matrix_to_json(m));
    j["data"] = std::move(list);
  }
  if (!file.labels.empty()) j["labels"] = file.labels;
  return j;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\" for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open \"" + path + "\" for writing");
  out << text;
  if (!out) throw Error("failed writing \"" + path + "\"");
}

}  // namespace

MatrixFile parse_matrix_file(const std::string& text) { return file_from_json(parse_text(text)); }

std::string serialize_matrix_file(const MatrixFile& file) {
  return file_to_json(file).dump(2) + "\n";
}

MatrixFile load_matrix_file(const std::string& path) {
  return parse_matrix_file(read_file(path));
}

void write_matrix_file(const std::string& path, const MatrixFile& file) {
  write_file(path, serialize_matrix_file(file));
}

DensityMatrix load_state(const std::string& path) {
  const MatrixFile file = load_matrix_file(path);
  if (file.kind != FileKind::State) {
    throw ParseError("\"" + path + "\" holds a " + kind_name(file.kind) + ", expected a state");
  }
  return DensityMatrix(file.data.front());
}

POVM load_povm(const std::string& path) {
  const MatrixFile file = load_matrix_file(path);
  if (file.kind != FileKind::Povm) {
    throw ParseError("\"" + path + "\" holds a " + kind_name(file.kind) + ", expected a povm");
  }
  return POVM(file.data);
}

ProjectiveMeasurement load_projective(const std::string& path) {
  const MatrixFile file = load_matrix_file(path);
  if (file.kind != FileKind::Projective) {
    throw ParseError("\"" + path + "\" holds a " + kind_name(file.kind) +
                     ", expected a projective measurement");
  }
  return ProjectiveMeasurement(file.data);
}

std::string serialize_extension(const NaimarkExtension& ext) {
  json j;
  j["kind"] = "naimark_extension";
  j["source_dim"] = ext.source_dim;
  if (const auto* ds = std::get_if<DirectSumEmbedding>(&ext.embedding)) {
    j["embedding"] = {{"type", "direct_sum"}, {"target_dim", ds->target_dim}};
  } else {
    const auto& anc = std::get<AncillaEmbedding>(ext.embedding);
    j["embedding"] = {{"type", "ancilla"},
                      {"ancilla_dim", anc.ancilla_dim},
                      {"reference_index", anc.reference_index}};
  }
  MatrixFile meas;
  meas.kind = FileKind::Projective;
  meas.dim = ext.measurement.dim();
  meas.data = ext.measurement.projectors();
  j["measurement"] = file_to_json(meas);
  return j.dump(2) + "\n";
}

NaimarkExtension parse_extension(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("kind") || j["kind"] != "naimark_extension") {
    throw ParseError("extension file: expected kind \"naimark_extension\"");
  }
  if (!j.contains("source_dim") || !j["source_dim"].is_number_integer()) {
    throw ParseError("extension file: missing integer \"source_dim\"");
  }
  if (!j.contains("embedding") || !j["embedding"].is_object()) {
    throw ParseError("extension file: missing \"embedding\"");
  }
  if (!j.contains("measurement")) throw ParseError("extension file: missing \"measurement\"");

  const int source_dim = j["source_dim"].get<int>();
  if (source_dim < 1) throw ParseError("extension file: source_dim must be positive");

  const json& emb = j["embedding"];
  if (!emb.contains("type") || !emb["type"].is_string()) {
    throw ParseError("extension file: embedding needs a \"type\"");
  }
  Embedding embedding = DirectSumEmbedding{0};
  const std::string type = emb["type"].get<std::string>();
  if (type == "direct_sum") {
    if (!emb.contains("target_dim") || !emb["target_dim"].is_number_integer()) {
      throw ParseError("extension file: direct_sum embedding needs \"target_dim\"");
    }
    embedding = DirectSumEmbedding{emb["target_dim"].get<int>()};
  } else if (type == "ancilla") {
    if (!emb.contains("ancilla_dim") || !emb["ancilla_dim"].is_number_integer()) {
      throw ParseError("extension file: ancilla embedding needs \"ancilla_dim\"");
    }
    AncillaEmbedding anc{emb["ancilla_dim"].get<int>(), 0};
    if (emb.contains("reference_index")) {
      if (!emb["reference_index"].is_number_integer()) {
        throw ParseError("extension file: \"reference_index\" must be an integer");
      }
      anc.reference_index = emb["reference_index"].get<int>();
    }
    embedding = anc;
  } else {
    throw ParseError("extension file: unknown embedding type \"" + type + "\"");
  }

  const MatrixFile meas_file = file_from_json(j["measurement"]);
  if (meas_file.kind != FileKind::Projective) {
    throw ParseError("extension file: measurement must have kind \"projective\"");
  }
  ProjectiveMeasurement measurement(meas_file.data);
  if (embedded_dim(embedding, source_dim) != measurement.dim()) {
    throw ParseError("extension file: embedding dim does not match the measurement");
  }
  return NaimarkExtension{std::move(measurement), embedding, source_dim};
}

void write_extension_file(const std::string& path, const NaimarkExtension& ext) {
  write_file(path, serialize_extension(ext));
}

NaimarkExtension load_extension_file(const std::string& path) {
  return parse_extension(read_file(path));
}

}  // namespace povmcoh
