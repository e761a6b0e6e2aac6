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

#include "cosetsynth/sequence.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cosetsynth/error.hpp"
#include "cosetsynth/pauli.hpp"

namespace cosetsynth {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

void check_factor(const Factor& f, int n_qubits) {
  if (f.kind == FactorKind::kPauliExp) {
    if (static_cast<int>(f.word.size()) != n_qubits)
      throw DimensionError("factor word '" + f.word + "' has length " +
                           std::to_string(f.word.size()) + ", expected " +
                           std::to_string(n_qubits));
    validate_word(f.word);
    if (!std::isfinite(f.angle)) throw RangeError("factor angle is not finite");
  } else {
    if (f.qubit < 1 || f.qubit > n_qubits)
      throw DimensionError("local factor qubit " + std::to_string(f.qubit) +
                           " out of range 1.." + std::to_string(n_qubits));
    for (double c : f.log_coeffs)
      if (!std::isfinite(c)) throw RangeError("local coefficient is not finite");
  }
}

Mat local_2x2(const std::array<double, 4>& c) {
  const double r = std::sqrt(c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
  const Complex global = std::exp(Complex{0.0, c[0]});
  const double cs = std::cos(r);
  // i sin(r)/r * (cX X + cY Y + cZ Z)
  const double k = r == 0.0 ? 0.0 : std::sin(r) / r;
  const Complex ix = kI * (k * c[1]);
  const Complex y = k * c[2];
  const Complex iz = kI * (k * c[3]);
  // X = [[0,1],[1,0]], Y = [[0,-i],[i,0]], Z = diag(1,-1)
  Mat m{{cs + iz, ix + y}, {ix - y, cs - iz}};
  return global * m;
}

// acc <- acc * exp(i angle P_word)
void apply_pauli_exp(Mat& acc, const std::string& word, double angle) {
  const Mat p = word_matrix(word);
  const std::size_t dim = acc.rows();
  const double c = std::cos(angle);
  const Complex is = Complex{0.0, std::sin(angle)};
  Mat out = c * acc;
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t col = 0; col < dim; ++col) {
      const Complex pv = p(k, col);
      if (pv == Complex{}) continue;
      const Complex f = is * pv;
      for (std::size_t r = 0; r < dim; ++r) out(r, col) += acc(r, k) * f;
      break;
    }
  }
  acc = std::move(out);
}

void reduce_into(const Factor& f, int max_weight, std::vector<Factor>& out) {
  const std::size_t weight = word_weight(f.word);
  if (static_cast<int>(weight) <= max_weight) {
    out.push_back(f);
    return;
  }
  if (max_weight < 2)
    throw RangeError("reduce_weight: weight " + std::to_string(weight) +
                     " cannot be reduced below 2");
  const std::size_t n = f.word.size();
  std::size_t anchor = n;
  std::size_t drop = n;
  for (std::size_t q = 0; q < n; ++q) {
    if (f.word[q] == 'I') continue;
    if (anchor == n) anchor = q;
    drop = q;
  }
  std::string conj(n, 'I');
  conj[drop] = f.word[drop];
  switch (f.word[anchor]) {
    case 'X': conj[anchor] = 'Y'; break;
    case 'Y': conj[anchor] = 'Z'; break;
    default: conj[anchor] = 'X'; break;
  }
  // core = -i P Q, Hermitian: the phase of P Q is +-i.
  const PauliString pq = pauli_mul(PauliString(f.word), PauliString(conj));
  const int core_power = (pq.phase_power() + 3) % 4;
  if (core_power % 2 != 0)
    throw Error("reduce_weight: conjugator does not anticommute");
  Factor core = f;
  core.word = pq.word();
  core.angle = core_power == 0 ? f.angle : -f.angle;

  const std::string tag = f.provenance.empty() ? "reduce" : f.provenance + "/reduce";
  out.push_back(Factor::pauli_exp(conj, -kQuarterPi, tag));
  reduce_into(core, max_weight, out);
  out.push_back(Factor::pauli_exp(conj, kQuarterPi, tag));
}

}  // namespace

Factor Factor::pauli_exp(std::string word, double angle,
                         std::string provenance) {
  Factor f;
  f.kind = FactorKind::kPauliExp;
  f.word = std::move(word);
  f.angle = angle;
  f.provenance = std::move(provenance);
  return f;
}

Factor Factor::local(int qubit, std::array<double, 4> log_coeffs,
                     std::string provenance) {
  Factor f;
  f.kind = FactorKind::kLocal;
  f.qubit = qubit;
  f.log_coeffs = log_coeffs;
  f.provenance = std::move(provenance);
  return f;
}

Mat factor_matrix(const Factor& f, int n_qubits) {
  check_factor(f, n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (f.kind == FactorKind::kPauliExp) {
    Mat m = Mat::identity(dim);
    apply_pauli_exp(m, f.word, f.angle);
    return m;
  }
  const Mat before = Mat::identity(std::size_t{1} << (f.qubit - 1));
  const Mat after = Mat::identity(std::size_t{1} << (n_qubits - f.qubit));
  return kron(kron(before, local_2x2(f.log_coeffs)), after);
}

Mat evaluate(const GateSequence& seq) {
  if (seq.n_qubits < 1) throw DimensionError("evaluate: n_qubits must be >= 1");
  Mat acc = Mat::identity(std::size_t{1} << seq.n_qubits);
  for (const auto& f : seq.factors) {
    check_factor(f, seq.n_qubits);
    if (f.kind == FactorKind::kPauliExp) {
      apply_pauli_exp(acc, f.word, f.angle);
    } else {
      acc = acc * factor_matrix(f, seq.n_qubits);
    }
  }
  return acc;
}

GateSequence concat(const GateSequence& a, const GateSequence& b) {
  if (a.n_qubits != b.n_qubits)
    throw DimensionError("concat: qubit counts differ");
  GateSequence out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

GateSequence adjoint(const GateSequence& seq) {
  GateSequence out{seq.n_qubits, {}};
  out.factors.reserve(seq.factors.size());
  for (auto it = seq.factors.rbegin(); it != seq.factors.rend(); ++it) {
    Factor f = *it;
    f.angle = -f.angle;
    for (double& c : f.log_coeffs) c = -c;
    out.factors.push_back(std::move(f));
  }
  return out;
}

GateSequence embed(const GateSequence& seq, int n_qubits, int first_qubit) {
  if (first_qubit < 1 || first_qubit - 1 + seq.n_qubits > n_qubits)
    throw DimensionError("embed: target register too small");
  GateSequence out{n_qubits, {}};
  out.factors.reserve(seq.factors.size());
  const std::string before(static_cast<std::size_t>(first_qubit - 1), 'I');
  const std::string after(
      static_cast<std::size_t>(n_qubits - first_qubit + 1 - seq.n_qubits), 'I');
  for (Factor f : seq.factors) {
    if (f.kind == FactorKind::kPauliExp) {
      f.word = before + f.word + after;
    } else {
      f.qubit += first_qubit - 1;
    }
    out.factors.push_back(std::move(f));
  }
  return out;
}

GateSequence reduce_weight(const GateSequence& seq, int max_weight) {
  if (max_weight < 1) throw RangeError("reduce_weight: max_weight must be >= 1");
  GateSequence out{seq.n_qubits, {}};
  out.factors.reserve(seq.factors.size());
  for (const auto& f : seq.factors) {
    check_factor(f, seq.n_qubits);
    if (f.kind == FactorKind::kLocal) {
      out.factors.push_back(f);
    } else {
      reduce_into(f, max_weight, out.factors);
    }
  }
  return out;
}

VerifyReport verify(const GateSequence& seq, const Mat& target, double tol) {
  const Mat m = evaluate(seq);
  if (m.rows() != target.rows() || m.cols() != target.cols())
    throw DimensionError("verify: sequence acts on " + std::to_string(m.rows()) +
                         " dimensions, target has " +
                         std::to_string(target.rows()));
  VerifyReport r;
  r.distance = frobenius_dist(m, target);
  r.pass = r.distance <= tol;
  return r;
}

SequenceStats stats(const GateSequence& seq) {
  SequenceStats s;
  s.total = seq.factors.size();
  for (const auto& f : seq.factors) {
    if (f.kind == FactorKind::kLocal) {
      ++s.local;
      s.max_weight = std::max<std::size_t>(s.max_weight, 1);
      continue;
    }
    ++s.pauli_exp;
    const std::size_t w = word_weight(f.word);
    ++s.weight_histogram[w];
    s.max_weight = std::max(s.max_weight, w);
  }
  return s;
}

}  // namespace cosetsynth
