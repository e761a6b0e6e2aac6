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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any gating criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cosetsynth/coset.hpp"
#include "cosetsynth/error.hpp"
#include "cosetsynth/gates.hpp"
#include "cosetsynth/linalg.hpp"
#include "cosetsynth/matrix_io.hpp"
#include "cosetsynth/pauli.hpp"
#include "cosetsynth/sequence.hpp"
#include "cosetsynth/sequence_io.hpp"
#include "cosetsynth/synthesis.hpp"
#include "testutil.hpp"

#ifndef COSETSYNTH_CLI_PATH
#error "COSETSYNTH_CLI_PATH must name the cosetsynth executable"
#endif

namespace {

using namespace cosetsynth;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  bool gating = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Outcome coset_exactness() {
  const auto t0 = Clock::now();
  double worst_rec = 0.0, worst_exp = 0.0;
  int failures = 0;
  auto run = [&](int n, int count, std::uint64_t base) {
    for (int i = 0; i < count; ++i) {
      const Mat u = random_unitary(n, base + static_cast<std::uint64_t>(i));
      try {
        const CosetFactors f = coset_right(u);
        worst_rec = std::max(worst_rec, frobenius_dist(f.coset * f.subgroup(), u));
        worst_exp = std::max(
            worst_exp, frobenius_dist(normal_exp(antiblock(coset_generator(f.x))), f.coset));
      } catch (const Error&) {
        ++failures;
      }
    }
  };
  run(2, 200, 1000);
  run(3, 200, 2000);
  run(4, 20, 3000);
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = failures == 0 && worst_rec <= 1e-10 && worst_exp <= 1e-10 && t < 30.0;
  o.detail = "reconstruction " + fmt(worst_rec) + ", exp round trip " + fmt(worst_exp) +
             ", errors " + std::to_string(failures) + ", " + fmt(t) + " s";
  return o;
}

Outcome middle_span() {
  const auto t0 = Clock::now();
  SynthConfig cfg;
  double worst_mass = 0.0, worst_inv = 0.0;
  int failures = 0, max_iter_seen = 0, pivots = 0;
  const std::vector<std::string> y_only{"Y*"};
  auto run = [&](int n, int count, std::uint64_t base) {
    for (int i = 0; i < count; ++i) {
      const Mat u = random_unitary(n, base + static_cast<std::uint64_t>(i));
      try {
        const MiddleSplit s = middle_extract(u, cfg);
        max_iter_seen = std::max(max_iter_seen, s.iterations);
        pivots += s.pivots;
        for (const auto& h : s.history) worst_inv = std::max(worst_inv, h.reconstruction);
        const PauliCoeffs c = expand_generator(hermitian_generator(s.middle));
        worst_mass = std::max(worst_mass, mass_outside(c, y_only));
      } catch (const ConvergenceError& e) {
        ++failures;
        std::cout << "    no convergence: dim " << (1 << n) << " seed " << base + i
                  << ", last right/left residual "
                  << fmt(e.history().back().right) << "/" << fmt(e.history().back().left)
                  << "\n";
      } catch (const Error& e) {
        ++failures;
        std::cout << "    error: dim " << (1 << n) << " seed " << base + i << ": " << e.what()
                  << "\n";
      }
    }
  };
  run(2, 100, 4000);
  run(3, 25, 5000);
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = failures == 0 && worst_mass <= 1e-8 && worst_inv <= 1e-8 && t < 60.0;
  o.detail = "non-Y mass " + fmt(worst_mass) + ", invariant " + fmt(worst_inv) +
             ", max iterations " + std::to_string(max_iter_seen) + ", singular pivots " +
             std::to_string(pivots) + ", failures " + std::to_string(failures) + ", " +
             fmt(t) + " s";
  return o;
}

Outcome subgroup_isolation() {
  double worst_rec = 0.0, worst_mass = 0.0;
  int failures = 0;
  const std::vector<std::string> z_only{"Z*"};
  for (int i = 0; i < 200; ++i) {
    const int k = 1 + i % 3;
    const std::uint64_t seed = 6000 + 2 * static_cast<std::uint64_t>(i);
    const Mat d = blockdiag(random_unitary(k, seed), random_unitary(k, seed + 1));
    try {
      const LocalIsolation iso = isolate_local(d);
      worst_rec = std::max(worst_rec, frobenius_dist(iso.coset_half * iso.local, d));
      const PauliCoeffs c = expand_generator(hermitian_generator(iso.coset_half));
      worst_mass = std::max(worst_mass, mass_outside(c, z_only));
    } catch (const Error&) {
      ++failures;
    }
  }
  Outcome o;
  o.pass = failures == 0 && worst_rec <= 1e-10 && worst_mass <= 1e-10;
  o.detail = "reassembly " + fmt(worst_rec) + ", non-Z mass " + fmt(worst_mass) +
             ", errors " + std::to_string(failures);
  return o;
}

Outcome end_to_end() {
  const auto t0 = Clock::now();
  SynthConfig cfg;
  int failures = 0;
  double worst8 = 0.0, worst16 = 0.0;
  std::size_t heaviest = 0;
  auto check = [&](const Mat& u, const std::string& label) {
    const int n = qubit_count(u.rows());
    SynthConfig c = cfg;
    c.tol_verify = n <= 3 ? 1e-8 : 1e-7;
    try {
      const SynthesisResult r = synthesize(u, c);
      const double dist = frobenius_dist(evaluate(r.sequence), u);
      (n <= 3 ? worst8 : worst16) = std::max(n <= 3 ? worst8 : worst16, dist);
      bool native = true;
      for (const Factor& f : r.sequence.factors)
        if (f.kind == FactorKind::kPauliExp) {
          heaviest = std::max(heaviest, word_weight(f.word));
          native = native && word_weight(f.word) <= 2;
        }
      if (!native || dist > c.tol_verify) {
        ++failures;
        std::cout << "    " << label << ": distance " << fmt(dist) << "\n";
      }
    } catch (const Error& e) {
      ++failures;
      std::cout << "    " << label << ": " << e.what() << "\n";
    }
  };
  for (int n = 2; n <= 4; ++n) check(qft(n), "qft" + std::to_string(n));
  for (int i = 0; i < 50; ++i) check(random_unitary(2, 7000 + i), "U4 #" + std::to_string(i));
  for (int i = 0; i < 20; ++i) check(random_unitary(3, 8000 + i), "U8 #" + std::to_string(i));
  for (int i = 0; i < 5; ++i) check(random_unitary(4, 9000 + i), "U16 #" + std::to_string(i));
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = failures == 0 && t < 300.0;
  o.detail = "worst dim<=8 " + fmt(worst8) + ", worst dim 16 " + fmt(worst16) +
             ", max weight " + std::to_string(heaviest) + ", failures " +
             std::to_string(failures) + ", " + fmt(t) + " s";
  return o;
}

Outcome qft2_coefficients() {
  const std::vector<double> targets{0.55536, 0.392699, 0.785398, 1.1781};
  Outcome o;
  o.gating = false;
  std::string matched;
  std::ostringstream diag;
  for (const bool conj : {false, true}) {
    const char* label = conj ? "omega-bar" : "omega";
    std::vector<double> mags;
    try {
      const SynthesisResult r = synthesize(qft(2, conj), SynthConfig{});
      for (const TailoredFactor& t : r.tailored) {
        if (t.generator.n_qubits != 1) continue;
        for (const auto& [word, c] : t.generator.coeffs)
          if (std::abs(c) > 1e-9) mags.push_back(std::abs(c));
      }
    } catch (const Error& e) {
      diag << " " << label << ": " << e.what() << ";";
      continue;
    }
    bool all = true;
    for (double want : targets) {
      bool hit = false;
      for (double m : mags) hit = hit || std::abs(m - want) <= 1e-3;
      all = all && hit;
    }
    diag << " " << label << " magnitudes {";
    for (std::size_t i = 0; i < mags.size(); ++i)
      diag << (i ? ", " : "") << std::to_string(mags[i]);
    diag << "};";
    if (all && matched.empty()) matched = label;
  }
  o.pass = !matched.empty();
  o.detail = o.pass ? "matched under " + matched + " convention"
                    : "branch-convention diagnostic:" + diag.str();
  if (o.pass) std::cout << "    " << diag.str() << "\n";
  return o;
}

Outcome weight_reduction() {
  SplitMix64 rng(10101);
  double worst = 0.0;
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const int weight = 3 + i % 2;
    const int length = weight + static_cast<int>(rng.next() % 2);
    const std::string word = test::random_word(length, weight, rng);
    const double angle = 2.0 * std::numbers::pi * (rng.uniform() - 0.5);
    GateSequence in{length, {Factor::pauli_exp(word, angle)}};
    const GateSequence out = reduce_weight(in, 2);
    const SequenceStats s = stats(out);
    worst = std::max(worst, frobenius_dist(evaluate(out), evaluate(in)));
    const std::size_t expected = 1 + 2 * static_cast<std::size_t>(weight - 2);
    if (s.max_weight > 2 || s.total != expected) ++failures;
  }
  Outcome o;
  o.pass = failures == 0 && worst <= 1e-12;
  o.detail = "evaluation drift " + fmt(worst) + ", count/weight failures " +
             std::to_string(failures);
  return o;
}

Outcome pauli_expansion() {
  double worst = 0.0, worst_orth = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Mat h = test::random_hermitian(1 + i % 3, 11000 + static_cast<std::uint64_t>(i));
    worst = std::max(worst, frobenius_dist(reconstruct(expand_generator(h)), h));
  }
  for (int n = 1; n <= 2; ++n) {
    const auto words = all_words(n);
    const double dim = static_cast<double>(1 << n);
    for (const auto& a : words)
      for (const auto& b : words) {
        const Complex ip = trace(word_matrix(a) * word_matrix(b)) / dim;
        worst_orth = std::max(worst_orth, std::abs(ip - (a == b ? 1.0 : 0.0)));
      }
  }
  Outcome o;
  o.pass = worst <= 1e-12 && worst_orth <= 1e-12;
  o.detail = "round trip " + fmt(worst) + ", orthogonality " + fmt(worst_orth);
  return o;
}

// CLI contract ---------------------------------------------------------------

int run_cli(const std::string& args, const std::string& stdout_path = "/dev/null") {
  const std::string cmd =
      std::string("\"") + COSETSYNTH_CLI_PATH + "\" " + args + " >" + stdout_path + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& p, const std::string& s) {
  std::ofstream(p, std::ios::binary) << s;
}

Outcome cli_contract() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("cosetsynth_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto p = [&](const char* name) { return (dir / name).string(); };

  std::vector<std::string> bad;
  auto expect = [&](const std::string& what, int got, int want) {
    if (got != want)
      bad.push_back(what + " -> " + std::to_string(got) + " (want " + std::to_string(want) + ")");
  };

  expect("gen qft", run_cli("gen qft --qubits 2 -o " + p("q2.json")), 0);
  if (parse_matrix(slurp(p("q2.json"))) != parse_matrix(serialize_matrix(qft(2))))
    bad.push_back("gen qft content");
  expect("gen qubits 0", run_cli("gen qft --qubits 0 -o " + p("never.json")), 2);
  if (fs::exists(p("never.json"))) bad.push_back("file written on validation error");
  expect("gen unknown", run_cli("gen hadamard --qubits 1"), 2);
  expect("gen random a", run_cli("gen random --qubits 3 --seed 7 -o " + p("r3a.json")), 0);
  expect("gen random b", run_cli("gen random --qubits 3 --seed 7 -o " + p("r3b.json")), 0);
  if (slurp(p("r3a.json")) != slurp(p("r3b.json"))) bad.push_back("gen random not byte-identical");

  expect("synth qft", run_cli("synth " + p("q2.json") + " -o " + p("q2s.json")), 0);
  expect("synth qft rerun", run_cli("synth " + p("q2.json") + " -o " + p("q2s_b.json")), 0);
  if (slurp(p("q2s.json")) != slurp(p("q2s_b.json"))) bad.push_back("synth not byte-identical");
  expect("synth random", run_cli("synth " + p("r3a.json") + " --seed 7 -o " + p("r3s.json")), 0);
  expect("synth json report",
         run_cli("synth " + p("q2.json") + " --json -o " + p("q2s_c.json"), p("report.json")), 0);
  {
    const std::string rep = slurp(p("report.json"));
    for (const char* key : {"\"distance\"", "\"pass\"", "\"iterations\"", "\"factors\"", "\"max_weight\""})
      if (rep.find(key) == std::string::npos) bad.push_back(std::string("report lacks ") + key);
  }
  Mat skew = qft(2);
  skew(0, 0) += 0.25;
  spit(p("nonunitary.json"), serialize_matrix(skew));
  expect("synth non-unitary", run_cli("synth " + p("nonunitary.json") + " -o " + p("x.json")), 2);
  spit(p("garbage.json"), "{\"dim\": 2, \"data\": [[1]]");
  expect("synth malformed", run_cli("synth " + p("garbage.json") + " -o " + p("x.json")), 2);
  expect("synth missing file", run_cli("synth " + p("absent.json")), 2);
  expect("synth bad flag", run_cli("synth " + p("q2.json") + " --max-iter 0"), 2);
  expect("synth starved", run_cli("synth " + p("r3a.json") + " --max-iter 1 -o " + p("x.json")), 3);

  expect("verify own", run_cli("verify " + p("q2.json") + " " + p("q2s.json")), 0);
  expect("verify random", run_cli("verify " + p("r3a.json") + " " + p("r3s.json")), 0);
  spit(p("empty2.json"), serialize_sequence(GateSequence{2, {}}));
  expect("verify empty", run_cli("verify " + p("q2.json") + " " + p("empty2.json")), 4);
  expect("verify dims", run_cli("verify " + p("r3a.json") + " " + p("q2s.json")), 2);

  GateSequence zz{2, {Factor::pauli_exp("ZZ", std::numbers::pi / 4)}};
  spit(p("zz.json"), serialize_matrix(evaluate(zz)));
  expect("expand zz", run_cli("expand " + p("zz.json"), p("zz.txt")), 0);
  if (slurp(p("zz.txt")) != "ZZ 0.7853981634\n")
    bad.push_back("expand zz printed '" + slurp(p("zz.txt")) + "'");
  spit(p("id.json"), serialize_matrix(Mat::identity(4)));
  expect("expand identity", run_cli("expand " + p("id.json"), p("id.txt")), 0);
  if (!slurp(p("id.txt")).empty()) bad.push_back("expand identity printed terms");
  expect("expand non-unitary", run_cli("expand " + p("nonunitary.json")), 2);

  expect("info", run_cli("info " + p("q2s.json"), p("info.txt")), 0);
  {
    const std::string txt = slurp(p("info.txt"));
    if (txt.find("max_weight 1\n") == std::string::npos &&
        txt.find("max_weight 2\n") == std::string::npos)
      bad.push_back("info max_weight not <= 2");
  }
  expect("info empty", run_cli("info " + p("empty2.json"), p("info0.txt")), 0);
  if (slurp(p("info0.txt")).find("factors 0\n") == std::string::npos)
    bad.push_back("info empty counts");
  spit(p("w3.json"), serialize_sequence(GateSequence{3, {Factor::pauli_exp("XYZ", 0.3)}}));
  expect("info weight 3", run_cli("info " + p("w3.json"), p("info3.txt")), 0);
  {
    const std::string txt = slurp(p("info3.txt"));
    if (txt.find("weight 3 1\n") == std::string::npos || txt.find("warning") == std::string::npos)
      bad.push_back("info weight-3 histogram or warning missing");
  }
  expect("info malformed", run_cli("info " + p("garbage.json")), 2);

  fs::remove_all(dir);
  Outcome o;
  o.pass = bad.empty();
  if (bad.empty()) {
    o.detail = "exit codes 0/2/3/4 and byte-identical reruns";
  } else {
    for (const auto& b : bad) o.detail += (o.detail.empty() ? "" : "; ") + b;
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"coset exactness", coset_exactness},
      {"middle-term span", middle_span},
      {"subgroup isolation", subgroup_isolation},
      {"end-to-end synthesis", end_to_end},
      {"QFT-2 coefficient magnitudes", qft2_coefficients},
      {"weight reduction", weight_reduction},
      {"Pauli expansion", pauli_expansion},
      {"CLI contract", cli_contract},
  };
  int gating_failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("unexpected exception: ") + e.what();
    }
    const char* verdict = o.pass ? "PASS" : (o.gating ? "FAIL" : "SOFT-FAIL");
    std::cout << "[" << verdict << "] " << i + 1 << ". " << criteria[i].name << ": "
              << o.detail << std::endl;
    if (!o.pass && o.gating) ++gating_failures;
  }
  return gating_failures == 0 ? 0 : 1;
}
