// Copyright 2026 The ncnsynth Authors
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

// ncn_cli: transpile a unitary or circuit to negators + controlled-sqrt(NOT),
// verify a transpiled circuit, and run the two-qubit Grover demo.
//
// Exit codes: 0 ok, 2 input/parse error, 3 non-unitary input,
// 4 internal verification failure, 5 contract failure.

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncn/ncn.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kInputError = 2,
  kNonUnitary = 3,
  kInternalFailure = 4,
  kContractFailure = 5,
};

std::string first_token(const std::string &text) {
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    break;
  }
  std::size_t j = i;
  while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
  return text.substr(i, j - i);
}

void print_verify(const ncn::VerifyReport &v) {
  std::cout << "verify: states=" << v.states_checked << " worst_deficit=" << std::scientific
            << std::setprecision(3) << v.worst_deficit
            << " worst_ancilla_distance=" << v.worst_ancilla_distance
            << (v.entangled ? " entangled_ancilla" : "") << std::defaultfloat << '\n';
}

void write_trace(const std::filesystem::path &dir, const std::vector<ncn::TraceStep> &steps) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::ostringstream name;
    name << std::setw(4) << std::setfill('0') << i << ".ncnv1";
    ncn::io::write_file((dir / name.str()).string(),
                        "# " + steps[i].label + "\n" +
                            ncn::io::serialize_circuit(steps[i].circuit));
  }
}

struct TranspileArgs {
  std::string input;
  std::string out;
  bool trace = false;
  bool keep_phase = false;
  std::string format = "text";
  double tol = ncn::kVerifyTol;
};

int cmd_transpile(const TranspileArgs &a) {
  const std::string text = ncn::io::read_file(a.input);
  const std::string magic = first_token(text);
  std::vector<ncn::TraceStep> trace;
  ncn::TransformOptions opt;
  opt.keep_global_phase = a.keep_phase;
  ncn::TranspileResult r;
  if (magic == "matv1") {
    const ncn::ComplexMatrix u = ncn::io::parse_matrix(text);
    r = ncn::transpile_matrix(u, a.tol, opt, a.trace ? &trace : nullptr);
  } else if (magic == "ncnv1") {
    r = ncn::transpile_circuit(ncn::io::parse_circuit(text), a.tol, opt,
                               a.trace ? &trace : nullptr);
  } else {
    throw ncn::ParseError("unrecognized file type '" + magic + "'", 1);
  }
  if (a.format == "kv") {
    std::cout << ncn::format_report_kv(r.cost);
  } else {
    std::cout << ncn::format_report(r.cost);
  }
  print_verify(r.verify);
  if (!r.verify.passed) {
    std::cerr << "error: internal verification failed; no output written\n";
    return kInternalFailure;
  }
  ncn::io::write_file(a.out, ncn::io::serialize_circuit(r.output));
  if (a.trace) write_trace(a.out + ".trace", trace);
  return kOk;
}

struct VerifyArgs {
  std::string unitary;
  std::string circuit;
  double tol = ncn::kVerifyTol;
  std::uint64_t seed = ncn::kVerifySeed;
};

int cmd_verify(const VerifyArgs &a) {
  const ncn::ComplexMatrix u = ncn::io::parse_matrix(ncn::io::read_file(a.unitary));
  ncn::require_unitary(u, 1e-10, "unitary");
  const ncn::Circuit c = ncn::io::parse_circuit(ncn::io::read_file(a.circuit));
  const ncn::VerifyReport v = ncn::verify_contract(u, c, a.tol, ncn::kVerifyRandomStates, a.seed);
  print_verify(v);
  std::cout << (v.passed ? "PASS" : "FAIL") << '\n';
  return v.passed ? kOk : kContractFailure;
}

struct GroverArgs {
  std::size_t omega = 3;
  std::size_t shots = 1000;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_grover(const GroverArgs &a) {
  const ncn::GroverRun run = ncn::run_grover(a.omega, a.shots, a.seed);
  std::cout << "# omega=" << ncn::io::bit_string(a.omega, 2) << " ncn_gates=" << run.ncn.size()
            << " n_csqn=" << run.cost.n_csqn << " n_neg=" << run.cost.n_neg << '\n';
  std::cout << "# exact probabilities (q0 q1)\n"
            << ncn::io::format_probabilities(run.histogram.exact, 2);
  std::cout << "# sampled frequencies, shots=" << a.shots << " seed=" << a.seed << '\n';
  for (std::size_t i = 0; i < run.histogram.counts.size(); ++i) {
    const double f = a.shots == 0 ? 0.0
                                  : static_cast<double>(run.histogram.counts[i]) /
                                        static_cast<double>(a.shots);
    std::cout << ncn::io::bit_string(i, 2) << ' ' << f << '\n';
  }
  if (!a.out.empty()) ncn::io::write_file(a.out, ncn::io::serialize_circuit(run.ncn));
  if (run.p_omega < 1.0 - ncn::kVerifyTol || run.ancilla_distance > ncn::kVerifyTol) {
    std::cerr << "error: p(omega) = " << run.p_omega << '\n';
    return kInternalFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Negator / controlled-sqrt(NOT) circuit synthesis"};
  app.require_subcommand(1);

  TranspileArgs ta;
  auto *tr = app.add_subcommand("transpile", "Compile a matv1 unitary or ncnv1 circuit to NCN");
  tr->add_option("--input", ta.input, "matv1 or GENERAL ncnv1 file")->required();
  tr->add_option("--out", ta.out, "NCN ncnv1 output path")->required();
  tr->add_flag("--trace", ta.trace, "Write every rewrite stage to <out>.trace/");
  tr->add_flag("--keep-phase", ta.keep_phase, "Keep the ancilla negators carrying global phase");
  tr->add_option("--format", ta.format, "Cost report style")
      ->check(CLI::IsMember({"text", "kv"}));
  tr->add_option("--tol", ta.tol, "Verification tolerance");

  VerifyArgs va;
  auto *ve = app.add_subcommand("verify", "Check U|psi> = Psi(N Phi(|psi>)) by simulation");
  ve->add_option("--unitary", va.unitary, "matv1 file")->required();
  ve->add_option("--circuit", va.circuit, "NCN ncnv1 file with ancilla=0")->required();
  ve->add_option("--tol", va.tol, "Maximum fidelity deficit");
  ve->add_option("--seed", va.seed, "Seed for the random test states");

  GroverArgs ga;
  auto *gr = app.add_subcommand("grover", "Two-qubit Grover search through the NCN pipeline");
  gr->add_option("--omega", ga.omega, "Marked element")->check(CLI::Range(0, 3));
  gr->add_option("--shots", ga.shots, "Number of samples");
  gr->add_option("--seed", ga.seed, "Sampling seed");
  gr->add_option("--out", ga.out, "Also write the NCN circuit here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*tr) return cmd_transpile(ta);
    if (*ve) return cmd_verify(va);
    return cmd_grover(ga);
  } catch (const ncn::NonUnitaryError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNonUnitary;
  } catch (const ncn::RuleCheckError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternalFailure;
  } catch (const ncn::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternalFailure;
  }
}
