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

#include "cosetsynth/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "cosetsynth/coset.hpp"
#include "cosetsynth/linalg.hpp"

namespace cosetsynth {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kUnitaryTol = 1e-10;
// Angles and coefficients below this are dropped from emitted sequences.
constexpr double kNegligible = 1e-14;

std::string join(const std::string& path, const char* leaf) {
  return path.empty() ? std::string(leaf) : path + "/" + leaf;
}

std::string pivot_word(int n_qubits) {
  return "Y" + std::string(static_cast<std::size_t>(n_qubits - 1), 'I');
}

bool is_identity(const Mat& m, double tol) {
  return frobenius_dist(m, Mat::identity(m.rows())) <= tol;
}

bool is_diagonal(const Mat& h, double tol) {
  double off = 0.0;
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c)
      if (r != c) off += std::norm(h(r, c));
  return std::sqrt(off) <= tol;
}

// Block-diagonal principal log, keeping the off blocks exactly zero.
Mat block_log(const Mat& d) {
  const std::size_t m = d.rows() / 2;
  return blockdiag(unitary_log(d.block(0, 0, m, m)),
                   unitary_log(d.block(m, m, m, m)));
}

// Ratio settling window for tail extrapolation.
constexpr double kRatioSpread = 0.02;
constexpr double kRatioFloor = 0.2;

MiddleSplit run_middle_loop(const Mat& target, const Mat& v,
                            const SynthConfig& cfg) {
  const std::size_t dim = target.rows();
  const Mat one = Mat::identity(dim);
  const Mat vd = dagger(v);
  MiddleSplit out;
  out.left_core = one;
  out.right = one;
  Mat current = target;
  double prev_res = -1.0;
  double prev_ratio = -1.0;
  for (int it = 1; it <= cfg.max_iter; ++it) {
    const CosetFactors rf = coset_right(current);
    const Mat d = rf.subgroup();
    out.right = d * out.right;
    const CosetFactors lf = coset_left(vd * rf.coset * v);
    const Mat dp = lf.subgroup();
    out.left_core = out.left_core * dp;
    current = v * lf.coset * vd;

    IterationResidual res;
    res.right = frobenius_dist(d, one);
    // ||V D' V^dag - 1|| = ||D' - 1||
    res.left = frobenius_dist(dp, one);
    res.reconstruction = frobenius_dist(
        v * out.left_core * vd * current * out.right, target);
    out.history.push_back(res);
    if (res.right <= cfg.tol_converge && res.left <= cfg.tol_converge) {
      out.left = v * out.left_core * vd;
      out.middle = std::move(current);
      out.iterations = it;
      return out;
    }

    const double worst = std::max(res.right, res.left);
    double ratio = prev_res > 0.0 ? worst / prev_res : -1.0;
    if (cfg.extrapolate && ratio > kRatioFloor && ratio < 1.0 && prev_ratio > 0.0 &&
        std::abs(ratio - prev_ratio) < kRatioSpread * ratio) {
      const Complex s = ratio / (1.0 - ratio);
      const Mat er = normal_exp(s * block_log(d));
      const Mat el = normal_exp(s * block_log(dp));
      out.right = er * out.right;
      out.left_core = out.left_core * el;
      current = v * dagger(el) * vd * current * dagger(er);
      ratio = -1.0;  // let the ratio settle again before the next jump
    }
    prev_ratio = ratio;
    prev_res = worst;
  }
  const auto& last = out.history.back();
  throw ConvergenceError(
      "middle_extract: no convergence after " + std::to_string(cfg.max_iter) +
          " iterations (residuals " + std::to_string(last.right) + ", " +
          std::to_string(last.left) + ")",
      out.history);
}

Mat rotation_matrix(const std::string& word, double angle) {
  return normal_exp((kI * angle) * word_matrix(word));
}

// Y-component h' of a generator h = Y (x) h' + (other first letters):
// h' = Tr_1[(Y (x) 1) h] / 2 = i (h12 - h21) / 2.
Mat y_component(const Mat& h) {
  const std::size_t m = h.rows() / 2;
  const Mat h12 = h.block(0, m, m, m);
  const Mat h21 = h.block(m, 0, m, m);
  Mat out = (0.5 * kI) * (h12 - h21);
  return 0.5 * (out + dagger(out));
}

// Recursion state shared by synthesize and lift_axis.
class Synthesizer {
 public:
  explicit Synthesizer(const SynthConfig& cfg) : cfg_(cfg) {}

  GateSequence run(const Mat& u, const std::string& path) {
    const int n = qubit_count(u.rows());
    if (n == 0) throw DimensionError("synthesize: need at least one qubit");
    GateSequence seq{n, {}};
    if (n == 1) {
      const PauliCoeffs gen = expand_generator(hermitian_generator(u));
      const std::array<double, 4> c{gen.at("I"), gen.at("X"), gen.at("Y"),
                                    gen.at("Z")};
      bool trivial = true;
      for (double x : c) trivial = trivial && std::abs(x) <= kNegligible;
      if (!trivial) {
        seq.factors.push_back(Factor::local(1, c, path));
        tailored_.push_back({path, 1, gen});
      }
      return seq;
    }

    Mat target = u;
    MiddleSplit split;
    int restarts = 0;
    Restart outer;
    for (;;) {
      try {
        split = middle_extract(target, cfg_);
        break;
      } catch (const SynthesisError& e) {
        throw SynthesisError(std::string(e.what()) + " at '" + path + "'");
      } catch (const ConvergenceError&) {
        // A stalled iteration gets the same rotated restart as a singular block.
        if (restarts >= cfg_.singular_retry_limit) throw;
        ++restarts;
        outer = restart_rotation(u, restarts);
        target = apply_restart(u, outer);
      }
    }
    iterations_ += split.iterations;
    restarts_ += restarts + split.pivots;

    const std::string pword = pivot_word(n);
    if (!is_identity(split.left_core, kNegligible)) {
      seq.factors.push_back(Factor::pauli_exp(pword, kQuarterPi, join(path, "pivot")));
      append(seq, isolate(split.left_core, join(path, "left")));
      seq.factors.push_back(Factor::pauli_exp(pword, -kQuarterPi, join(path, "pivot")));
    }
    append(seq, lift(2, y_component(hermitian_generator(split.middle)),
                     join(path, "middle")));
    append(seq, isolate(split.right, join(path, "right")));
    // Undo the restarts; the inner one acted on apply_restart(u, outer).
    GateSequence front{n, {}};
    GateSequence back{n, {}};
    for (const Restart* r : {&outer, &split.restart}) {
      if (!r->left.factors.empty()) front = concat(front, adjoint(r->left));
      if (!r->right.factors.empty()) back = concat(adjoint(r->right), back);
    }
    for (Factor& f : front.factors) f.provenance = join(path, "restart");
    for (Factor& f : back.factors) f.provenance = join(path, "restart");
    seq = concat(concat(front, seq), back);
    return seq;
  }

  // axis: 1 = X, 2 = Y, 3 = Z.
  GateSequence lift(int axis, const Mat& h, const std::string& path) {
    static constexpr char kAxis[] = {'I', 'X', 'Y', 'Z'};
    const int k = qubit_count(h.rows());
    const int n = k + 1;
    GateSequence seq{n, {}};
    const double scale = std::max(1.0, frobenius_norm(h));
    const Mat herm = 0.5 * (h + dagger(h));
    if (frobenius_norm(herm) <= kNegligible) return seq;
    tailored_.push_back({path, 2, expand_generator(herm)});

    std::vector<double> lam(herm.rows());
    GateSequence basis;
    const bool diagonal = is_diagonal(herm, kNegligible * scale);
    if (diagonal) {
      for (std::size_t i = 0; i < lam.size(); ++i) lam[i] = herm(i, i).real();
    } else {
      const HermitianEigen eig = herm_eig(herm);
      lam = eig.values;
      basis = embed(run(eig.vectors, join(path, "basis")), n, 2);
    }
    if (!diagonal) append(seq, basis);
    for (const auto& [word, c] : diag_to_zstrings(lam).coeffs) {
      if (std::abs(c) <= kNegligible) continue;
      seq.factors.push_back(Factor::pauli_exp(kAxis[axis] + word, c, path));
    }
    if (!diagonal) append(seq, adjoint(basis));
    return seq;
  }

  GateSequence isolate(const Mat& d, const std::string& path) {
    const int n = qubit_count(d.rows());
    const LocalIsolation li = isolate_local(d);
    GateSequence seq{n, {}};
    append(seq, lift(3, hermitian_generator(li.s2), join(path, "coset")));
    append(seq, embed(run(li.s1, join(path, "local")), n, 2));
    return seq;
  }

  int iterations() const { return iterations_; }
  int restarts() const { return restarts_; }
  std::vector<TailoredFactor> take_tailored() { return std::move(tailored_); }

 private:
  static void append(GateSequence& into, const GateSequence& tail) {
    into.factors.insert(into.factors.end(), tail.factors.begin(),
                        tail.factors.end());
  }

  const SynthConfig& cfg_;
  std::vector<TailoredFactor> tailored_;
  int iterations_ = 0;
  int restarts_ = 0;
};

}  // namespace

void SynthConfig::validate() const {
  if (!(tol_converge > 0.0)) throw RangeError("tol_converge must be positive");
  if (!(tol_verify > 0.0)) throw RangeError("tol_verify must be positive");
  if (max_iter < 1) throw RangeError("max_iter must be >= 1");
  if (max_weight < 1) throw RangeError("max_weight must be >= 1");
  if (singular_retry_limit < 0)
    throw RangeError("singular_retry_limit must be >= 0");
}

Mat pivot(int n_qubits) {
  if (n_qubits < 1) throw DimensionError("pivot: n_qubits must be >= 1");
  return rotation_matrix(pivot_word(n_qubits), kQuarterPi);
}

Mat apply_restart(const Mat& u, const Restart& r) {
  Mat out = u;
  if (!r.left.factors.empty()) out = evaluate(r.left) * out;
  if (!r.right.factors.empty()) out = out * evaluate(r.right);
  return out;
}

Restart restart_rotation(const Mat& u, int k) {
  const int n = qubit_count(u.rows());
  if (n < 2) throw DimensionError("restart_rotation: need two qubits");
  if (k < 1) throw RangeError("restart_rotation: k must be >= 1");
  const std::size_t m = u.rows() / 2;

  std::vector<Factor> singles;
  for (double angle : {kQuarterPi, kQuarterPi / 2.0}) {
    for (std::size_t flips = 0; flips < m; ++flips) {
      std::string word = pivot_word(n);
      for (int q = 1; q < n; ++q)
        if (flips & (std::size_t{1} << (n - 1 - q))) word[static_cast<std::size_t>(q)] = 'X';
      singles.push_back(Factor::pauli_exp(std::move(word), angle, "restart"));
    }
  }

  struct Ranked {
    Restart restart;
    double sigma;
  };
  std::vector<Ranked> cands;
  auto add = [&](std::vector<Factor> left, std::vector<Factor> right) {
    Restart r{{n, std::move(left)}, {n, std::move(right)}};
    // Quantized so that values equal up to rounding tie deterministically.
    const double sigma =
        std::round(sigma_min(apply_restart(u, r).block(0, 0, m, m)) * 1e10) * 1e-10;
    cands.push_back({std::move(r), sigma});
  };
  auto ranked = [&]() {
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Ranked& a, const Ranked& b) { return a.sigma > b.sigma; });
  };

  for (const Factor& f : singles) add({}, {f});
  for (const Factor& f : singles) add({f}, {});
  ranked();
  const std::size_t pick = static_cast<std::size_t>(k - 1);
  if (pick < cands.size() && cands[pick].sigma >= kBlockSingularTol)
    return cands[pick].restart;

  for (const Factor& a : singles)
    for (const Factor& b : singles) {
      add({}, {a, b});
      add({a, b}, {});
      add({a}, {b});
    }
  ranked();
  return cands[pick % cands.size()].restart;
}

MiddleSplit middle_extract(const Mat& u, const SynthConfig& cfg) {
  cfg.validate();
  require_square(u, "middle_extract");
  const int n = qubit_count(u.rows());
  if (n < 2) throw DimensionError("middle_extract: need at least two qubits");
  require_unitary(u, kUnitaryTol, "middle_extract");
  const Mat v = pivot(n);
  Mat target = u;
  Restart restart;
  for (int attempt = 0;; ++attempt) {
    try {
      MiddleSplit out = run_middle_loop(target, v, cfg);
      out.pivots = attempt;
      out.restart = restart;
      return out;
    } catch (const SingularityError& e) {
      if (attempt >= cfg.singular_retry_limit) {
        throw SynthesisError(
            "middle_extract: singular block persists after " +
            std::to_string(attempt) + " pivoted retries (sigma_min = " +
            std::to_string(e.sigma_min()) + ")");
      }
      restart = restart_rotation(u, attempt + 1);
      target = apply_restart(u, restart);
    }
  }
}

LocalIsolation isolate_local(const Mat& d) {
  require_square(d, "isolate_local");
  if (d.rows() % 2 != 0) throw DimensionError("isolate_local: odd dimension");
  const double off = off_block_mass(d);
  if (off > 1e-8) {
    throw StructureError("isolate_local: input is not block diagonal (off-block mass " +
                         std::to_string(off) + ")");
  }
  const std::size_t m = d.rows() / 2;
  const SubgroupSplit split =
      subgroup_split(d.block(0, 0, m, m), d.block(m, m, m, m));
  LocalIsolation out;
  out.coset_half = blockdiag(split.s2, dagger(split.s2));
  out.local = kron(Mat::identity(2), split.s1);
  out.s1 = split.s1;
  out.s2 = split.s2;
  return out;
}

PauliCoeffs diag_to_zstrings(std::span<const double> lam) {
  const int k = qubit_count(lam.size());
  PauliCoeffs out;
  out.n_qubits = k;
  const std::size_t dim = lam.size();
  for (std::size_t s = 0; s < dim; ++s) {
    double c = 0.0;
    for (std::size_t j = 0; j < dim; ++j)
      c += (std::popcount(s & j) % 2 == 0) ? lam[j] : -lam[j];
    c /= static_cast<double>(dim);
    if (c == 0.0) continue;
    std::string word(static_cast<std::size_t>(k), 'I');
    for (int q = 0; q < k; ++q)
      if (s & (std::size_t{1} << (k - 1 - q))) word[static_cast<std::size_t>(q)] = 'Z';
    out.coeffs.emplace(std::move(word), c);
  }
  return out;
}

GateSequence lift_axis(char axis, const Mat& h, const SynthConfig& cfg) {
  cfg.validate();
  require_square(h, "lift_axis");
  int a = 0;
  switch (axis) {
    case 'X': a = 1; break;
    case 'Y': a = 2; break;
    case 'Z': a = 3; break;
    default: throw Error(std::string("lift_axis: invalid axis '") + axis + "'");
  }
  if (hermiticity_defect(h) > 1e-10 * std::max(1.0, frobenius_norm(h)))
    throw SymmetryError("lift_axis: generator is not Hermitian");
  Synthesizer s(cfg);
  return s.lift(a, h, "lift");
}

SynthesisResult synthesize(const Mat& u, const SynthConfig& cfg) {
  cfg.validate();
  require_square(u, "synthesize");
  qubit_count(u.rows());
  require_unitary(u, kUnitaryTol, "synthesize");
  Synthesizer s(cfg);
  SynthesisResult out;
  const GateSequence raw = s.run(u, "");
  out.sequence = reduce_weight(raw, cfg.max_weight);
  out.tailored = s.take_tailored();
  out.iterations = s.iterations();
  out.restarts = s.restarts();
  out.distance = frobenius_dist(evaluate(out.sequence), u);
  if (!(out.distance <= cfg.tol_verify)) {
    throw VerificationError("synthesize: sequence misses the target by " +
                                std::to_string(out.distance),
                            out.distance);
  }
  return out;
}

Mat hermitian_generator(const Mat& u) {
  const Mat h = (-kI) * unitary_log(u);
  return 0.5 * (h + dagger(h));
}

}  // namespace cosetsynth
