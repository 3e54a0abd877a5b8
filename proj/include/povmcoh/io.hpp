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

#ifndef POVMCOH_IO_HPP
#define POVMCOH_IO_HPP

#include <string>
#include <vector>

#include "povmcoh/measurement.hpp"
#include "povmcoh/naimark.hpp"

namespace povmcoh {

// JSON container for matrices on disk. Complex entries are [re, im] pairs,
// matrices are row-major nested arrays. A "state" or "unitary" file carries
// a single matrix under "data"; "povm" and "projective" files carry a list
// of matrices, optionally tagged with outcome "labels".
enum class FileKind { State, Povm, Projective, Unitary };

struct MatrixFile {
  FileKind kind = FileKind::State;
  int dim = 0;
  std::vector<Matrix> data;
  std::vector<std::string> labels;  // empty or one per matrix
};

// Parsing rejects malformed JSON, unknown kinds, non-finite numbers and
// shape mismatches with ParseError. Serialisation keeps full double
// precision, so a parse/serialise round trip reproduces every entry.
MatrixFile parse_matrix_file(const std::string& text);
std::string serialize_matrix_file(const MatrixFile& file);

MatrixFile load_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const MatrixFile& file);

// Typed loaders: check the file kind and run full validation.
DensityMatrix load_state(const std::string& path);
POVM load_povm(const std::string& path);
ProjectiveMeasurement load_projective(const std::string& path);

// A Naimark extension bundles its projective measurement with the embedding
// that feeds it, under kind "naimark_extension".
std::string serialize_extension(const NaimarkExtension& ext);
NaimarkExtension parse_extension(const std::string& text);
void write_extension_file(const std::string& path, const NaimarkExtension& ext);
NaimarkExtension load_extension_file(const std::string& path);

}  // namespace povmcoh

#endif  // POVMCOH_IO_HPP
