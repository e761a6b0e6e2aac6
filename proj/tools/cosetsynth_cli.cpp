// Copyright 2026 The cosetsynth Authors
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

// Command-line front end: gen, synth, verify, expand, info.
//
// Exit codes: 0 success, 2 input or validation error, 3 no convergence,
// 4 verification failure.

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cosetsynth/error.hpp"
#include "cosetsynth/gates.hpp"
#include "cosetsynth/matrix_io.hpp"
#include "cosetsynth/pauli.hpp"
#include "cosetsynth/sequence.hpp"
#include "cosetsynth/sequence_io.hpp"
#include "cosetsynth/synthesis.hpp"
#include "json.hpp"

namespace {

using namespace cosetsynth;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitVerification = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Temp file + rename, so readers never observe a partial file.
void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.flush()) throw ParseError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw ParseError("cannot rename onto '" + path + "': " + ec.message());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_atomic(path, text);
  }
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string report_json(double distance, bool pass, int iterations,
                        std::size_t factors, std::size_t max_weight) {
  nlohmann::ordered_json j;
  j["distance"] = distance;
  j["pass"] = pass;
  j["iterations"] = iterations;
  j["factors"] = factors;
  j["max_weight"] = max_weight;
  return j.dump() + "\n";
}

std::string stats_line(const SequenceStats& s) {
  std::ostringstream ss;
  ss << "factors " << s.total << " (pauli_exp " << s.pauli_exp << ", local "
     << s.local << "), max weight " << s.max_weight;
  return ss.str();
}

struct GenArgs {
  std::string name;
  int qubits = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenArgs& a) {
  GateSpec spec;
  spec.name = parse_gate_name(a.name);
  spec.n_qubits = a.qubits;
  spec.seed = a.seed;
  const Mat m = named_gate(spec);
  emit(a.output, serialize_matrix(m) + "\n");
  return kExitOk;
}

struct SynthArgs {
  std::string input;
  std::string output;
  SynthConfig cfg;
  bool json = false;
};

int cmd_synth(const SynthArgs& a) {
  a.cfg.validate();
  const Mat u = parse_matrix(read_file(a.input));
  require_unitary(u, 1e-10, "synth");
  qubit_count(u.rows());
  std::ostream& log = (a.output.empty() || a.output == "-") ? std::cerr : std::cout;
  SynthesisResult r;
  try {
    r = synthesize(u, a.cfg);
  } catch (const ConvergenceError& e) {
    log << "error: " << e.what() << "\n";
    log << "residual history (iteration: right left reconstruction):\n";
    int it = 1;
    for (const auto& h : e.history())
      log << "  " << it++ << ": " << sci(h.right) << " " << sci(h.left) << " "
          << sci(h.reconstruction) << "\n";
    return kExitConvergence;
  }
  emit(a.output, serialize_sequence(r.sequence) + "\n");
  const SequenceStats s = stats(r.sequence);
  if (a.json) {
    std::cout << report_json(r.distance, true, r.iterations, s.total, s.max_weight);
  } else {
    log << "distance " << sci(r.distance) << "\n";
    log << stats_line(s) << ", iterations " << r.iterations << ", restarts "
        << r.restarts << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string matrix;
  std::string sequence;
  double tol = 1e-8;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
  if (!(a.tol > 0.0)) throw RangeError("--tol must be positive");
  const Mat u = parse_matrix(read_file(a.matrix));
  const GateSequence seq = parse_sequence(read_file(a.sequence));
  if (u.rows() != (std::size_t{1} << seq.n_qubits))
    throw DimensionError("matrix dimension " + std::to_string(u.rows()) +
                         " does not match a " + std::to_string(seq.n_qubits) +
                         "-qubit sequence");
  const VerifyReport rep = verify(seq, u, a.tol);
  const SequenceStats s = stats(seq);
  if (a.json) {
    std::cout << report_json(rep.distance, rep.pass, 0, s.total, s.max_weight);
  } else {
    std::cout << "distance " << sci(rep.distance) << " "
              << (rep.pass ? "pass" : "FAIL") << "\n";
  }
  return rep.pass ? kExitOk : kExitVerification;
}

int cmd_expand(const std::string& path) {
  const Mat u = parse_matrix(read_file(path));
  qubit_count(u.rows());
  require_unitary(u, 1e-10, "expand");
  const PauliCoeffs c = expand_generator(hermitian_generator(u));
  for (const auto& [word, coeff] : c.coeffs) {
    if (std::abs(coeff) <= 1e-12) continue;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", coeff);
    std::cout << word << " " << buf << "\n";
  }
  return kExitOk;
}

int cmd_info(const std::string& path, int native_weight) {
  const GateSequence seq = parse_sequence(read_file(path));
  const SequenceStats s = stats(seq);
  std::cout << "qubits " << seq.n_qubits << "\n";
  std::cout << "factors " << s.total << "\n";
  std::cout << "pauli_exp " << s.pauli_exp << "\n";
  std::cout << "local " << s.local << "\n";
  for (const auto& [w, count] : s.weight_histogram)
    std::cout << "weight " << w << " " << count << "\n";
  std::cout << "max_weight " << s.max_weight << "\n";
  if (s.max_weight > static_cast<std::size_t>(native_weight))
    std::cout << "warning: factors heavier than weight " << native_weight
              << " are not native\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coset-decomposition gate synthesis for NMR-native gate sets"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a built-in gate as matrix JSON");
  gen_cmd->add_option("name", gen.name, "qft | identity | cnot | swap | random")->required();
  gen_cmd->add_option("-n,--qubits", gen.qubits, "Number of qubits")->required();
  gen_cmd->add_option("--seed", gen.seed, "Seed for random");
  gen_cmd->add_option("-o,--output", gen.output, "Output path (default stdout)");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize a unitary into a gate sequence");
  synth_cmd->add_option("matrix", synth.input, "Matrix JSON")->required();
  synth_cmd->add_option("-o,--output", synth.output, "Sequence output path (default stdout)");
  synth_cmd->add_option("--tol", synth.cfg.tol_verify, "Verification tolerance");
  synth_cmd->add_option("--tol-converge", synth.cfg.tol_converge, "Convergence tolerance");
  synth_cmd->add_option("--max-iter", synth.cfg.max_iter, "Iteration cap per extraction");
  synth_cmd->add_option("--max-weight", synth.cfg.max_weight, "Largest native Pauli weight");
  synth_cmd->add_option("--retries", synth.cfg.singular_retry_limit, "Pivoted restarts allowed");
  synth_cmd->add_option("--seed", synth.cfg.seed, "Seed (recorded; synthesis is deterministic)");
  synth_cmd->add_flag("--json", synth.json, "Print the report as JSON");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check a sequence against a matrix");
  verify_cmd->add_option("matrix", ver.matrix, "Matrix JSON")->required();
  verify_cmd->add_option("sequence", ver.sequence, "Sequence JSON")->required();
  verify_cmd->add_option("--tol", ver.tol, "Distance tolerance");
  verify_cmd->add_flag("--json", ver.json, "Print the report as JSON");

  std::string expand_path;
  auto* expand_cmd = app.add_subcommand("expand", "Pauli coefficients of the generator h, U = exp(i h)");
  expand_cmd->add_option("matrix", expand_path, "Matrix JSON")->required();

  std::string info_path;
  int info_weight = 2;
  auto* info_cmd = app.add_subcommand("info", "Sequence statistics");
  info_cmd->add_option("sequence", info_path, "Sequence JSON")->required();
  info_cmd->add_option("--max-weight", info_weight, "Native weight bound for the warning");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*synth_cmd) return cmd_synth(synth);
    if (*verify_cmd) return cmd_verify(ver);
    if (*expand_cmd) return cmd_expand(expand_path);
    if (*info_cmd) return cmd_info(info_path, info_weight);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const SynthesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
