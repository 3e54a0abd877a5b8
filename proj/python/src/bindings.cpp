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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "povmcoh/convert.hpp"
#include "povmcoh/families.hpp"
#include "povmcoh/io.hpp"
#include "povmcoh/random.hpp"
#include "povmcoh/sweep.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace povmcoh;

PYBIND11_MODULE(_core, m) {
  m.doc() = "block coherence, POVM coherence and their conversion to entanglement";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NumericalError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // States and measurements.
  py::class_<DensityMatrix>(m, "DensityMatrix",
                            "A validated quantum state (Hermitian, PSD, unit trace).")
      .def(py::init<Matrix>(), "matrix"_a)
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def("__repr__", [](const DensityMatrix& rho) {
        return "DensityMatrix(dim=" + std::to_string(rho.dim()) + ")";
      });

  py::class_<POVM>(m, "POVM", "Effects that are Hermitian, PSD and sum to identity.")
      .def(py::init<std::vector<Matrix>>(), "effects"_a)
      .def_property_readonly("effects", &POVM::effects)
      .def("effect", &POVM::effect, "i"_a)
      .def_property_readonly("dim", &POVM::dim)
      .def_property_readonly("outcomes", &POVM::outcomes)
      .def("__len__", &POVM::outcomes)
      .def("__repr__", [](const POVM& p) {
        return "POVM(dim=" + std::to_string(p.dim()) +
               ", outcomes=" + std::to_string(p.outcomes()) + ")";
      });

  py::class_<ProjectiveMeasurement>(
      m, "ProjectiveMeasurement",
      "Orthogonal, idempotent, complete projectors of arbitrary rank.")
      .def(py::init<std::vector<Matrix>>(), "projectors"_a)
      .def_property_readonly("projectors", &ProjectiveMeasurement::projectors)
      .def("projector", &ProjectiveMeasurement::projector, "i"_a)
      .def_property_readonly("dim", &ProjectiveMeasurement::dim)
      .def_property_readonly("outcomes", &ProjectiveMeasurement::outcomes)
      .def("__len__", &ProjectiveMeasurement::outcomes)
      .def("__repr__", [](const ProjectiveMeasurement& p) {
        return "ProjectiveMeasurement(dim=" + std::to_string(p.dim()) +
               ", outcomes=" + std::to_string(p.outcomes()) + ")";
      });

  m.def("block_dephase", &block_dephase, "rho"_a, "measurement"_a,
        "Pinching map sum_i P_i rho P_i.");
  m.def("projective_part", &projective_part, "effect"_a,
        "Projector onto the range of a Hermitian PSD operator.");
  m.def("measurement_operators", &measurement_operators, "povm"_a,
        "Canonical measurement operators A_i = sqrt(E_i).");
  m.def("von_neumann_entropy", &von_neumann_entropy, "rho"_a);
  m.def("quantum_relative_entropy", &quantum_relative_entropy, "rho"_a, "sigma"_a,
        "S(rho || sigma) in bits; +inf outside the support of sigma.");

  // Linear algebra helpers.
  m.def("tensor_product", &tensor_product, "a"_a, "b"_a);
  m.def("partial_trace", &partial_trace, "m"_a, "dims"_a, "keep"_a,
        "Trace out every tensor factor not listed in keep.");
  m.def("partial_transpose", &partial_transpose, "m"_a, "dim_a"_a, "dim_b"_a);
  m.def("trace_norm", &trace_norm, "m"_a, "Sum of singular values.");
  m.def("shannon_entropy", &shannon_entropy, "p"_a,
        "Entropy in bits of a probability vector.");

  // Naimark extensions.
  py::class_<DirectSumEmbedding>(m, "DirectSumEmbedding",
                                 "Zero-pad states into the top-left block.")
      .def(py::init([](int target_dim) { return DirectSumEmbedding{target_dim}; }),
           "target_dim"_a)
      .def_readonly("target_dim", &DirectSumEmbedding::target_dim)
      .def("__repr__", [](const DirectSumEmbedding& e) {
        return "DirectSumEmbedding(target_dim=" + std::to_string(e.target_dim) + ")";
      });

  py::class_<AncillaEmbedding>(m, "AncillaEmbedding",
                               "Tensor a fixed ancilla basis state on the right.")
      .def(py::init([](int ancilla_dim, int reference_index) {
             return AncillaEmbedding{ancilla_dim, reference_index};
           }),
           "ancilla_dim"_a, "reference_index"_a = 0)
      .def_readonly("ancilla_dim", &AncillaEmbedding::ancilla_dim)
      .def_readonly("reference_index", &AncillaEmbedding::reference_index)
      .def("__repr__", [](const AncillaEmbedding& e) {
        return "AncillaEmbedding(ancilla_dim=" + std::to_string(e.ancilla_dim) +
               ", reference_index=" + std::to_string(e.reference_index) + ")";
      });

  py::class_<NaimarkExtension>(
      m, "NaimarkExtension",
      "A projective measurement on a larger space plus the embedding feeding it.")
      .def(py::init([](ProjectiveMeasurement measurement, Embedding embedding,
                       int source_dim) {
             return NaimarkExtension{std::move(measurement), std::move(embedding),
                                     source_dim};
           }),
           "measurement"_a, "embedding"_a, "source_dim"_a)
      .def_readonly("measurement", &NaimarkExtension::measurement)
      .def_readonly("embedding", &NaimarkExtension::embedding)
      .def_readonly("source_dim", &NaimarkExtension::source_dim);

  py::class_<KrausBlock>(m, "KrausBlock")
      .def_readonly("ops", &KrausBlock::ops);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("trials", &VerificationReport::trials)
      .def_readonly("max_deviation", &VerificationReport::max_deviation)
      .def_readonly("passed", &VerificationReport::passed)
      .def("__repr__", [](const VerificationReport& r) {
        return "VerificationReport(trials=" + std::to_string(r.trials) +
               ", max_deviation=" + std::to_string(r.max_deviation) +
               ", passed=" + (r.passed ? std::string("True") : std::string("False")) +
               ")";
      });

  m.def("embedded_dim", &embedded_dim, "embedding"_a, "source_dim"_a);
  m.def("embed_state", &embed_state, "rho"_a, "extension"_a,
        "Lift a source state into the extension space.");
  m.def("complete_isometry", &complete_isometry, "isometry"_a,
        "Deterministically complete orthonormal columns to a unitary.");
  m.def("canonical_extension", &canonical_extension, "povm"_a,
        "Ancilla dilation of any POVM; returns (extension, kraus_block).");
  m.def("minimal_rank_one_extension", &minimal_rank_one_extension, "povm"_a,
        "Extension of a rank-one POVM onto a space of one dimension per outcome.");
  m.def("fourier_family_extension", &fourier_family_extension, "d"_a,
        "Equatorial phase POVM for prime d >= 3 with its Fourier-basis extension.");
  m.def("verify_extension", &verify_extension, "povm"_a, "extension"_a, "trials"_a = 100,
        "seed"_a = 7, "Monte Carlo check that the extension reproduces the POVM.");
  m.def("extract_povm_family", &extract_povm_family, "extension"_a,
        "One POVM per ancilla level of an ancilla-embedded extension.");

  // Coherence.
  py::class_<CoherenceReport>(m, "CoherenceReport")
      .def_readonly("value", &CoherenceReport::value)
      .def_readonly("probabilities", &CoherenceReport::probabilities)
      .def_readonly("post_measurement_entropies",
                    &CoherenceReport::post_measurement_entropies)
      .def_readonly("state_entropy", &CoherenceReport::state_entropy)
      .def("__repr__", [](const CoherenceReport& r) {
        return "CoherenceReport(value=" + std::to_string(r.value) + ")";
      });

  m.def("block_coherence", &block_coherence, "rho"_a, "measurement"_a,
        "Relative entropy of block coherence S(dephased) - S(rho).");
  m.def("povm_coherence", &povm_coherence, "rho"_a, "povm"_a,
        "Coherence with respect to a POVM via the canonical operators.");
  m.def("povm_coherence_via_naimark", &povm_coherence_via_naimark, "rho"_a, "povm"_a,
        "extension"_a, "POVM coherence as block coherence in the extension space.");
  m.def("is_povm_incoherent", &is_povm_incoherent, "rho"_a, "povm"_a,
        "Fixed point of conjugation by the projective parts of the effects.");

  // Conversion to entanglement.
  py::class_<ConversionResult>(m, "ConversionResult")
      .def_readonly("output_state", &ConversionResult::output_state)
      .def_readonly("system_dim", &ConversionResult::system_dim)
      .def_readonly("target_dim", &ConversionResult::target_dim)
      .def_readonly("unitary", &ConversionResult::unitary)
      .def_readonly("negativity", &ConversionResult::negativity)
      .def_readonly("rel_ent_entanglement", &ConversionResult::rel_ent_entanglement)
      .def_readonly("coherence_input", &ConversionResult::coherence_input);

  py::class_<SandwichReport>(m, "SandwichReport")
      .def_readonly("coherence", &SandwichReport::coherence)
      .def_readonly("lower", &SandwichReport::lower)
      .def_readonly("upper", &SandwichReport::upper);

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("coherence", &EquivalenceReport::coherence)
      .def_readonly("negativity", &EquivalenceReport::negativity)
      .def_readonly("rel_ent_entanglement", &EquivalenceReport::rel_ent_entanglement)
      .def_readonly("coherent", &EquivalenceReport::coherent)
      .def_readonly("entangled", &EquivalenceReport::entangled)
      .def_readonly("passed", &EquivalenceReport::passed);

  m.def("build_entangling_unitary", &build_entangling_unitary, "measurement"_a,
        "target_dim"_a, "Controlled block-shift on system x ancilla.");
  m.def("convert", &convert, "rho"_a, "measurement"_a, "target_dim"_a,
        "Apply the entangling unitary to rho x |0><0| and report the entanglement.");
  m.def("negativity", &negativity, "rho"_a, "dim_a"_a, "dim_b"_a,
        "(trace norm of the partial transpose - 1) / 2.");
  m.def("conversion_entanglement_bounds", &conversion_entanglement_bounds, "rho"_a,
        "measurement"_a, "Lower and upper bounds that collapse onto the coherence.");
  m.def("rel_ent_entanglement_converted", &rel_ent_entanglement_converted, "rho"_a,
        "measurement"_a, "Relative entropy of entanglement of the converted state.");
  m.def("equivalence_check", &equivalence_check, "rho"_a, "measurement"_a, "target_dim"_a,
        "Entangled iff coherent, with matching entropies.");

  // Worked families.
  m.def("basis_state", &basis_state, "dim"_a, "k"_a);
  m.def("phase_state", &phase_state, "t"_a,
        "Equatorial qubit state cos(t)|0> + i sin(t)|1>.");
  m.def("phase_covariant_povm", &phase_covariant_povm, "outcomes"_a);
  m.def("qubit_trine_povm", &qubit_trine_povm);
  m.def("diagonal_two_outcome_povm", &diagonal_two_outcome_povm, "a"_a);
  m.def("four_element_extension", &four_element_extension, "reference_index"_a = 0);

  // Randomised inputs.
  py::class_<Rng>(m, "Rng", "Deterministic seeded generator.")
      .def(py::init<std::uint64_t>(), "seed"_a)
      .def("uniform", &Rng::uniform)
      .def("gaussian", &Rng::gaussian)
      .def("uniform_int", &Rng::uniform_int, "lo"_a, "hi"_a);

  m.def("random_ginibre", &random_ginibre, "rows"_a, "cols"_a, "rng"_a);
  m.def("random_state", &random_state, "dim"_a, "rng"_a);
  m.def("random_unitary", &random_unitary, "dim"_a, "rng"_a);
  m.def("random_projective", &random_projective, "dim"_a, "rng"_a);

  // Sweeps.
  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("t", &SweepRow::t)
      .def_readonly("coherence_e0", &SweepRow::coherence_e0)
      .def_readonly("coherence_e1", &SweepRow::coherence_e1)
      .def_readonly("entanglement_selected", &SweepRow::entanglement_selected)
      .def_readonly("ancilla_choice", &SweepRow::ancilla_choice);

  py::class_<EquivalenceSweep>(m, "EquivalenceSweep")
      .def_readonly("dim", &EquivalenceSweep::dim)
      .def_readonly("trials", &EquivalenceSweep::trials)
      .def_readonly("failures", &EquivalenceSweep::failures)
      .def_readonly("worst_entropy_gap", &EquivalenceSweep::worst_entropy_gap)
      .def_readonly("first_failure_trial", &EquivalenceSweep::first_failure_trial)
      .def_readonly("first_failure_seed", &EquivalenceSweep::first_failure_seed);

  py::class_<EquivalenceTrial>(m, "EquivalenceTrial")
      .def_readonly("state", &EquivalenceTrial::state)
      .def_readonly("measurement", &EquivalenceTrial::measurement)
      .def_readonly("report", &EquivalenceTrial::report);

  m.def("phase_sweep_row", &phase_sweep_row, "t"_a);
  m.def("phase_sweep", &phase_sweep, "grid"_a,
        "Rows at t = k pi / grid for k = 0 .. grid-1.");
  m.def("trial_seed", &trial_seed, "master_seed"_a, "trial"_a);
  m.def("run_equivalence_sweep", &run_equivalence_sweep, "dim"_a, "trials"_a, "master_seed"_a);
  m.def("run_equivalence_trial", &run_equivalence_trial, "dim"_a, "seed"_a, "dephase_input"_a);

  // File formats shared with the command line tool.
  m.def("load_state", &load_state, "path"_a);
  m.def("load_povm", &load_povm, "path"_a);
  m.def("load_projective", &load_projective, "path"_a);
  m.def("load_extension_file", &load_extension_file, "path"_a);
  m.def("write_extension_file", &write_extension_file, "path"_a, "extension"_a);
}
