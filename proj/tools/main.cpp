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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "povmcoh/convert.hpp"
#include "povmcoh/families.hpp"
#include "povmcoh/io.hpp"
#include "povmcoh/sweep.hpp"

namespace {

using namespace povmcoh;

std::string fixed7(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", v);
  return buf;
}

std::string compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string short_exp(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

void print_matrix(std::ostream& os, const Matrix& m) {
  const Eigen::IOFormat fmt(17, 0, ", ", "\n  ", "(", ")", "  [", "]");
  os << m.format(fmt) << "\n";
}

int run_coherence(const std::string& state_path, const std::string& povm_path,
                  const std::string& proj_path) {
  if (povm_path.empty() == proj_path.empty()) {
    throw ValidationError("coherence: pass exactly one of --povm and --projective");
  }
  const DensityMatrix rho = load_state(state_path);

  if (!proj_path.empty()) {
    const ProjectiveMeasurement p = load_projective(proj_path);
    const double value = block_coherence(rho, p);
    std::cout << "measurement = projective, dim = " << p.dim()
              << ", outcomes = " << p.outcomes() << "\n";
    std::cout << "block coherence = " << fixed7(value) << "\n";
    std::cout << "block probabilities =";
    for (int i = 0; i < p.outcomes(); ++i) {
      std::cout << " " << fixed7((p.projector(i) * rho.matrix()).trace().real());
    }
    std::cout << "\n";
    std::cout << "incoherent = " << (value < 1e-9 ? "yes" : "no") << "\n";
    return 0;
  }

  const POVM povm = load_povm(povm_path);
  const CoherenceReport report = povm_coherence(rho, povm);
  std::cout << "measurement = povm, dim = " << povm.dim()
            << ", outcomes = " << povm.outcomes() << "\n";
  std::cout << "coherence = " << fixed7(report.value) << "\n";
  std::cout << "state entropy = " << fixed7(report.state_entropy) << "\n";
  std::cout << "outcome  probability  post-measurement entropy\n";
  for (int i = 0; i < povm.outcomes(); ++i) {
    std::printf("%7d  %11.7f  %24.7f\n", i, report.probabilities[i],
                report.post_measurement_entropies[i]);
  }
  std::cout << "povm-incoherent = " << (is_povm_incoherent(rho, povm) ? "yes" : "no")
            << "\n";
  return 0;
}

int run_naimark(const std::string& povm_path, const std::string& method,
                const std::string& out_path, int trials, std::uint64_t seed) {
  const POVM povm = load_povm(povm_path);

  const NaimarkExtension ext = [&]() -> NaimarkExtension {
    if (method == "canonical") return canonical_extension(povm).first;
    if (method == "minimal") return minimal_rank_one_extension(povm);
    if (method == "fourier") {
      const auto [family, fourier_ext] = fourier_family_extension(povm.outcomes());
      for (int k = 0; k < povm.outcomes(); ++k) {
        if ((family.effect(k) - povm.effect(k)).cwiseAbs().maxCoeff() > 1e-9) {
          throw ValidationError(
              "naimark: the fourier method only applies to the equatorial phase "
              "family; effect " + std::to_string(k) + " does not match");
        }
      }
      return fourier_ext;
    }
    throw ValidationError("naimark: unknown method \"" + method +
                          "\" (canonical, minimal, fourier)");
  }();

  std::cout << "method = " << method << "\n";
  std::cout << "source dim = " << povm.dim() << ", outcomes = " << povm.outcomes() << "\n";
  if (const auto* ds = std::get_if<DirectSumEmbedding>(&ext.embedding)) {
    std::cout << "extension dim = " << ds->target_dim << ", embedding = direct-sum\n";
  } else {
    const auto& anc = std::get<AncillaEmbedding>(ext.embedding);
    std::cout << "extension dim = " << ext.measurement.dim()
              << ", embedding = ancilla (dim " << anc.ancilla_dim << ", reference level "
              << anc.reference_index << ")\n";
  }

  const VerificationReport report = verify_extension(povm, ext, trials, seed);
  std::cout << "verification: trials = " << report.trials
            << ", max deviation = " << short_exp(report.max_deviation)
            << ", passed = " << (report.passed ? "yes" : "no") << "\n";

  if (!out_path.empty()) {
    write_extension_file(out_path, ext);
    std::cout << "wrote extension to " << out_path << "\n";
  }
  if (!report.passed) {
    throw InconsistentExtension("naimark: verification failed with max deviation " +
                                compact(report.max_deviation));
  }
  return 0;
}

int run_convert(const std::string& state_path, const std::string& proj_path,
                int target_dim, const std::string& out_path) {
  const DensityMatrix rho = load_state(state_path);
  const ProjectiveMeasurement p = load_projective(proj_path);
  if (target_dim == 0) target_dim = p.outcomes();

  const ConversionResult res = convert(rho, p, target_dim);
  std::cout << "system dim = " << res.system_dim << ", outcomes = " << p.outcomes()
            << ", target dim = " << res.target_dim << "\n";
  std::cout << "input block coherence = " << fixed7(res.coherence_input) << "\n";
  std::cout << "negativity = " << fixed7(res.negativity) << "\n";
  std::cout << "rel-ent entanglement = " << fixed7(res.rel_ent_entanglement) << "\n";

  if (!out_path.empty()) {
    MatrixFile file;
    file.kind = FileKind::State;
    file.dim = res.output_state.dim();
    file.data = {res.output_state.matrix()};
    write_matrix_file(out_path, file);
    std::cout << "wrote converted state to " << out_path << "\n";
  }
  return 0;
}

int repro_diagonal(int grid) {
  if (grid <= 0) grid = 9;
  std::cout << "diagonal two-outcome family swept over its parameter\n";
  std::cout << "      a  state   coherence  negativity  purity gap\n";
  double worst_closed_form = 0.0;
  double worst_purity = 0.0;
  for (int j = 1; j <= grid; ++j) {
    const double a = 0.5 * j / (grid + 1);
    const POVM povm = diagonal_two_outcome_povm(a);
    const NaimarkExtension ext = canonical_extension(povm).first;
    const double expected_h = -a * std::log2(a) - (1.0 - a) * std::log2(1.0 - a);
    const double expected_neg = std::sqrt(a * (1.0 - a));

    for (int k = 0; k < 2; ++k) {
      const double coherence = povm_coherence(basis_state(2, k), povm).value;
      const DensityMatrix lifted = embed_state(basis_state(2, k), ext);
      const ConversionResult res = convert(lifted, ext.measurement, 2);

      // The input qubit never entangles with anything: its reduced output
      // state stays pure.
      const Matrix reduced = partial_trace(res.output_state.matrix(), {2, 2, 2}, {0});
      const double purity_gap = 1.0 - (reduced * reduced).trace().real();

      worst_closed_form = std::max({worst_closed_form, std::abs(coherence - expected_h),
                                    std::abs(res.negativity - expected_neg),
                                    std::abs(res.rel_ent_entanglement - expected_h)});
      worst_purity = std::max(worst_purity, std::abs(purity_gap));
      if (k == 0) {
        std::printf("%7.4f  |%d>    %10.7f  %10.7f  %10.1e\n", a, k, coherence,
                    res.negativity, purity_gap);
      }
    }
  }
  std::cout << "largest deviation from closed form = " << short_exp(worst_closed_form)
            << "\n";
  std::cout << "largest purity gap = " << short_exp(worst_purity) << "\n";
  if (worst_closed_form > 1e-8 || worst_purity > 1e-9) {
    throw SandwichViolation("repro diagonal: results drifted from the closed forms");
  }
  return 0;
}

int repro_trine() {
  const POVM trine = qubit_trine_povm();
  const DensityMatrix rho = basis_state(2, 0);
  const NaimarkExtension ext = minimal_rank_one_extension(trine);
  const DensityMatrix lifted = embed_state(rho, ext);
  const ConversionResult res = convert(lifted, ext.measurement, 3);

  const double direct = povm_coherence(rho, trine).value;
  const double via_ext = povm_coherence_via_naimark(rho, trine, ext);
  std::cout << "trine pipeline on |0><0|\n";
  std::cout << "direct coherence = " << fixed7(direct) << "\n";
  std::cout << "coherence via rank-one extension = " << fixed7(via_ext) << "\n";
  std::cout << "converted negativity = " << fixed7(res.negativity) << "\n";
  std::cout << "converted rel-ent entanglement = " << fixed7(res.rel_ent_entanglement)
            << "\n";

  const double expected = 1.584962500721156;  // log2(3)
  const double dev = std::max({std::abs(direct - expected), std::abs(via_ext - expected),
                               std::abs(res.rel_ent_entanglement - expected)});
  std::cout << "deviation from log2(3) = " << short_exp(dev) << "\n";
  if (dev > 1e-8) throw SandwichViolation("repro trine: coherence drifted from log2(3)");
  return 0;
}

int repro_four_element() {
  const std::vector<POVM> family = extract_povm_family(four_element_extension(0));
  std::cout << "four-outcome phase family, both ancilla preparations\n";
  std::cout << "      t  family  coherence  entanglement\n";
  double worst = 0.0;
  const double expected[2][2] = {{2.0, 1.5}, {1.5, 2.0}};
  for (int ti = 0; ti < 2; ++ti) {
    const double t = ti * std::numbers::pi / 4.0;
    const DensityMatrix rho = phase_state(t);
    for (int a = 0; a < 2; ++a) {
      const double coherence = povm_coherence(rho, family[a]).value;
      const NaimarkExtension ext = four_element_extension(a);
      const DensityMatrix lifted = embed_state(rho, ext);
      const double entanglement = rel_ent_entanglement_converted(lifted, ext.measurement);
      std::printf("%7.4f  E%d      %9.7f  %12.7f\n", t, a, coherence, entanglement);
      worst = std::max({worst, std::abs(coherence - expected[ti][a]),
                        std::abs(entanglement - expected[ti][a])});
    }
  }
  std::cout << "largest deviation from the expected table = " << short_exp(worst) << "\n";
  if (worst > 1e-8) {
    throw SandwichViolation("repro four-element: values drifted from the expected table");
  }
  return 0;
}

int repro_phase_sweep(int grid, const std::string& out_path) {
  if (grid <= 0) grid = 256;
  const std::vector<SweepRow> rows = phase_sweep(grid);

  double worst_row = 0.0;
  for (const SweepRow& row : rows) {
    worst_row = std::max(worst_row,
                         std::abs(row.entanglement_selected -
                                  std::max(row.coherence_e0, row.coherence_e1)));
  }

  if (!out_path.empty()) {
    std::ofstream csv(out_path, std::ios::trunc);
    if (!csv) throw Error("cannot open \"" + out_path + "\" for writing");
    csv << "t,coherence_e0,coherence_e1,entanglement_selected,ancilla_choice\n";
    for (const SweepRow& row : rows) {
      csv << compact(row.t) << "," << compact(row.coherence_e0) << ","
          << compact(row.coherence_e1) << "," << compact(row.entanglement_selected) << ","
          << row.ancilla_choice << "\n";
    }
  }

  // The four quarter-turn points alternate between (2, 1.5) and (1.5, 2).
  double worst_anchor = 0.0;
  for (int q = 0; q < 4; ++q) {
    const SweepRow row = phase_sweep_row(q * std::numbers::pi / 4.0);
    const double e0 = q % 2 == 0 ? 2.0 : 1.5;
    const double e1 = q % 2 == 0 ? 1.5 : 2.0;
    worst_anchor = std::max({worst_anchor, std::abs(row.coherence_e0 - e0),
                             std::abs(row.coherence_e1 - e1),
                             std::abs(row.entanglement_selected - 2.0)});
  }

  std::cout << "phase sweep over [0, pi) with " << grid << " points\n";
  std::cout << "max |entanglement - max(coherences)| = " << short_exp(worst_row) << "\n";
  std::cout << "max anchor deviation at quarter turns = " << short_exp(worst_anchor)
            << "\n";
  if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
  if (worst_row > 1e-10 || worst_anchor > 1e-9) {
    throw SandwichViolation("repro phase-sweep: sweep drifted from the expected anchors");
  }
  return 0;
}

int run_repro(const std::string& example, int grid, const std::string& out_path) {
  if (example == "diagonal") return repro_diagonal(grid);
  if (example == "trine") return repro_trine();
  if (example == "four-element") return repro_four_element();
  if (example == "phase-sweep") return repro_phase_sweep(grid, out_path);
  throw ValidationError("repro: unknown example \"" + example +
                        "\" (diagonal, trine, four-element, phase-sweep)");
}

int run_sweep(int dim, int trials, std::uint64_t seed) {
  if (dim < 2 || dim > 8) {
    throw ValidationError("sweep: dim must lie in [2, 8]");
  }
  const EquivalenceSweep sweep = run_equivalence_sweep(dim, trials, seed);
  std::cout << "dim = " << sweep.dim << ", trials = " << sweep.trials
            << ", master seed = " << seed << "\n";
  std::cout << "passes = " << (sweep.trials - sweep.failures)
            << ", failures = " << sweep.failures << "\n";
  std::cout << "worst |rel-ent entanglement - coherence| = "
            << short_exp(sweep.worst_entropy_gap) << "\n";
  if (sweep.failures > 0) {
    const EquivalenceTrial bad = run_equivalence_trial(dim, sweep.first_failure_seed,
                                                 sweep.first_failure_trial % 4 == 3);
    std::cerr << "first failure: trial " << sweep.first_failure_trial << ", seed "
              << sweep.first_failure_seed << "\n";
    std::cerr << "state:\n";
    print_matrix(std::cerr, bad.state.matrix());
    for (int i = 0; i < bad.measurement.outcomes(); ++i) {
      std::cerr << "projector " << i << ":\n";
      print_matrix(std::cerr, bad.measurement.projector(i));
    }
    throw SandwichViolation("sweep: " + std::to_string(sweep.failures) + " of " +
                            std::to_string(sweep.trials) + " trials failed");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block coherence, POVM coherence and their conversion to entanglement"};
  app.require_subcommand(1);

  std::string state_path, povm_path, proj_path, out_path;
  std::string method = "canonical";
  std::string example;
  int target_dim = 0;
  int trials = -1;
  int dim = 0;
  int grid = 0;
  std::uint64_t seed = 7;

  CLI::App* coherence = app.add_subcommand(
      "coherence", "coherence of a state with respect to a measurement");
  coherence->add_option("--state", state_path, "state file (kind \"state\")")->required();
  coherence->add_option("--povm", povm_path, "POVM file (kind \"povm\")");
  coherence->add_option("--projective", proj_path,
                        "projective measurement file (kind \"projective\")");

  CLI::App* naimark =
      app.add_subcommand("naimark", "build and verify an extension of a POVM");
  naimark->add_option("--povm", povm_path, "POVM file")->required();
  naimark->add_option("--method", method, "canonical | minimal | fourier");
  naimark->add_option("--trials", trials, "verification trials (default 100)");
  naimark->add_option("--seed", seed, "verification seed");
  naimark->add_option("--out", out_path, "write the extension here");

  CLI::App* convert_cmd = app.add_subcommand(
      "convert", "turn block coherence into entanglement with an ancilla");
  convert_cmd->add_option("--state", state_path, "state file")->required();
  convert_cmd->add_option("--projective", proj_path, "projective measurement file")
      ->required();
  convert_cmd->add_option("--target-dim", target_dim,
                          "ancilla dimension (default: the outcome count)");
  convert_cmd->add_option("--out", out_path, "write the converted state here");

  CLI::App* repro = app.add_subcommand("repro", "reproduce the worked examples");
  repro->add_option("example", example, "diagonal | trine | four-element | phase-sweep")
      ->required();
  repro->add_option("--grid", grid, "sample count (diagonal: 9, phase-sweep: 256)");
  repro->add_option("--out", out_path, "CSV output path (phase-sweep)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "randomised conversion checks in a fixed dimension");
  sweep->add_option("--dim", dim, "system dimension, 2 to 8")->required();
  sweep->add_option("--trials", trials, "number of trials (default 200)");
  sweep->add_option("--seed", seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (coherence->parsed()) return run_coherence(state_path, povm_path, proj_path);
    if (naimark->parsed()) {
      return run_naimark(povm_path, method, out_path, trials < 0 ? 100 : trials, seed);
    }
    if (convert_cmd->parsed()) return run_convert(state_path, proj_path, target_dim, out_path);
    if (repro->parsed()) return run_repro(example, grid, out_path);
    if (sweep->parsed()) return run_sweep(dim, trials < 0 ? 200 : trials, seed);
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
