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

#include <complex>
#include <filesystem>

#include <doctest.h>

#include "povmcoh/families.hpp"
#include "povmcoh/io.hpp"
#include "povmcoh/random.hpp"
#include "test_helpers.hpp"

using namespace povmcoh;
using test::max_diff;

TEST_SUITE("io") {

TEST_CASE("matrix files round-trip losslessly") {
  Rng rng(7);

  MatrixFile state;
  state.kind = FileKind::State;
  state.dim = 3;
  state.data = {random_state(3, rng).matrix()};

  MatrixFile povm;
  povm.kind = FileKind::Povm;
  povm.dim = 2;
  povm.data = qubit_trine_povm().effects();
  povm.labels = {"k0", "k1", "k2"};

  MatrixFile unitary;
  unitary.kind = FileKind::Unitary;
  unitary.dim = 4;
  unitary.data = {random_unitary(4, rng)};

  for (const MatrixFile& original : {state, povm, unitary}) {
    const MatrixFile back = parse_matrix_file(serialize_matrix_file(original));
    CHECK(back.kind == original.kind);
    CHECK(back.dim == original.dim);
    REQUIRE(back.data.size() == original.data.size());
    for (std::size_t i = 0; i < original.data.size(); ++i) {
      CHECK(max_diff(back.data[i], original.data[i]) <= 1e-12);
    }
    CHECK(back.labels == original.labels);
  }
}

TEST_CASE("parse_matrix_file rejects malformed input") {
  CHECK_THROWS_AS(parse_matrix_file("not json"), ParseError);
  CHECK_THROWS_AS(parse_matrix_file("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"state","dim":1})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"wibble","dim":1,"data":[[[1,0]]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"state","dim":2,"data":[[[1,0]]]})"),
                  ParseError);
  // Entries must be [re, im] pairs of finite numbers.
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"state","dim":1,"data":[[[1]]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"state","dim":1,"data":[[[null,0]]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"state","dim":1,"data":[[[1e999,0]]]})"),
                  ParseError);
  // Labels, when present, must pair up with the matrices.
  CHECK_THROWS_AS(
      parse_matrix_file(
          R"({"kind":"povm","dim":1,"data":[[[1,0]]],"labels":["a","b"]})"),
      ParseError);
}

TEST_CASE("serialize_matrix_file validates shape first") {
  MatrixFile bad;
  bad.kind = FileKind::State;
  bad.dim = 2;
  bad.data = {Matrix::Identity(2, 2) / 2.0, Matrix::Identity(2, 2) / 2.0};
  CHECK_THROWS_AS(serialize_matrix_file(bad), ParseError);

  MatrixFile mismatched;
  mismatched.kind = FileKind::State;
  mismatched.dim = 3;
  mismatched.data = {Matrix::Identity(2, 2) / 2.0};
  CHECK_THROWS_AS(serialize_matrix_file(mismatched), ParseError);
}

TEST_CASE("typed loaders enforce kind and validity") {
  const std::string dir =
      (std::filesystem::temp_directory_path() / "povmcoh_io_test_").string();

  MatrixFile povm;
  povm.kind = FileKind::Povm;
  povm.dim = 2;
  povm.data = qubit_trine_povm().effects();
  write_matrix_file(dir + "povm.json", povm);

  CHECK(load_povm(dir + "povm.json").outcomes() == 3);
  CHECK_THROWS_AS(load_state(dir + "povm.json"), ParseError);
  CHECK_THROWS_AS(load_projective(dir + "povm.json"), ParseError);
  CHECK_THROWS_AS(load_state("no_such_file.json"), ParseError);

  // A state file with an invalid state parses but fails validation.
  MatrixFile not_normalised;
  not_normalised.kind = FileKind::State;
  not_normalised.dim = 2;
  not_normalised.data = {0.5 * Matrix::Identity(2, 2) * 1.5};
  write_matrix_file(dir + "badstate.json", not_normalised);
  CHECK_THROWS_AS(load_state(dir + "badstate.json"), NotUnitTrace);

  // A POVM file whose effects do not resolve the identity.
  MatrixFile incomplete;
  incomplete.kind = FileKind::Povm;
  incomplete.dim = 2;
  incomplete.data = {0.5 * Matrix::Identity(2, 2), 0.4 * Matrix::Identity(2, 2)};
  write_matrix_file(dir + "incomplete.json", incomplete);
  CHECK_THROWS_AS(load_povm(dir + "incomplete.json"), NotComplete);

  for (const char* name : {"povm.json", "badstate.json", "incomplete.json"}) {
    std::filesystem::remove(dir + name);
  }
}

TEST_CASE("extension files round-trip both embedding flavours") {
  const NaimarkExtension fourier = fourier_family_extension(5).second;
  const NaimarkExtension back = parse_extension(serialize_extension(fourier));
  CHECK(back.source_dim == 2);
  const auto* ds = std::get_if<DirectSumEmbedding>(&back.embedding);
  REQUIRE(ds != nullptr);
  CHECK(ds->target_dim == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(max_diff(back.measurement.projector(k), fourier.measurement.projector(k)) <=
          1e-12);
  }

  const NaimarkExtension phase = four_element_extension(1);
  const NaimarkExtension back2 = parse_extension(serialize_extension(phase));
  const auto* anc = std::get_if<AncillaEmbedding>(&back2.embedding);
  REQUIRE(anc != nullptr);
  CHECK(anc->ancilla_dim == 2);
  CHECK(anc->reference_index == 1);
  for (int k = 0; k < 4; ++k) {
    CHECK(max_diff(back2.measurement.projector(k), phase.measurement.projector(k)) <=
          1e-12);
  }
}

TEST_CASE("parse_extension rejects inconsistent bundles") {
  CHECK_THROWS_AS(parse_extension(R"({"kind":"state"})"), ParseError);
  CHECK_THROWS_AS(parse_extension(R"({"kind":"naimark_extension","source_dim":2})"),
                  ParseError);

  // A direct-sum target that cannot hold the measurement.
  std::string text = serialize_extension(fourier_family_extension(3).second);
  const std::string needle = "\"target_dim\": 3";
  const auto at = text.find(needle);
  REQUIRE(at != std::string::npos);
  text.replace(at, needle.size(), "\"target_dim\": 4");
  CHECK_THROWS_AS(parse_extension(text), ParseError);
}

}  // TEST_SUITE("io")
