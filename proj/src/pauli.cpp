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

#include "cosetsynth/pauli.hpp"

#include <cmath>

#include "cosetsynth/error.hpp"

namespace cosetsynth {

namespace {

int letter_index(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: return -1;
  }
}

constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};

constexpr Complex kPhases[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Column index and entry of the single nonzero element in row `row` of the
// word's matrix (monomial structure).
struct RowEntry {
  std::size_t col;
  Complex value;
};

RowEntry row_entry(std::string_view word, std::size_t row) {
  const std::size_t n = word.size();
  std::size_t col = row;
  Complex value = 1.0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    const bool one = (row & bit) != 0;
    switch (word[q]) {
      case 'X':
        col ^= bit;
        break;
      case 'Y':
        col ^= bit;
        value *= one ? Complex{0, 1} : Complex{0, -1};
        break;
      case 'Z':
        if (one) value = -value;
        break;
      default:
        break;
    }
  }
  return {col, value};
}

double hermitian_scale(const Mat& h) { return std::max(1.0, frobenius_norm(h)); }

}  // namespace

PauliString::PauliString(std::string word, int phase_power)
    : word_(std::move(word)), phase_power_(((phase_power % 4) + 4) % 4) {
  validate_word(word_);
}

PauliString PauliString::parse(std::string_view text) {
  int power = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    power = text[0] == '-' ? 2 : 0;
    text.remove_prefix(1);
    if (!text.empty() && text[0] == 'i') {
      power += 1;
      text.remove_prefix(1);
    }
  }
  try {
    return PauliString(std::string(text), power);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::size_t PauliString::weight() const { return word_weight(word_); }

Complex PauliString::phase() const { return kPhases[phase_power_]; }

std::string PauliString::to_string() const {
  static const char* const kPrefix[] = {"", "+i", "-", "-i"};
  return kPrefix[phase_power_] + word_;
}

std::size_t word_weight(std::string_view word) {
  std::size_t w = 0;
  for (char c : word) w += c != 'I';
  return w;
}

void validate_word(std::string_view word) {
  if (word.empty()) throw Error("Pauli word must be nonempty");
  for (char c : word) {
    if (letter_index(c) < 0)
      throw Error("invalid Pauli letter '" + std::string(1, c) + "' in '" +
                  std::string(word) + "'");
  }
}

Mat string_matrix(const PauliString& s) {
  Mat m = word_matrix(s.word());
  if (s.phase_power() != 0) m *= s.phase();
  return m;
}

Mat word_matrix(std::string_view word) {
  validate_word(word);
  const std::size_t dim = std::size_t{1} << word.size();
  Mat m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const RowEntry e = row_entry(word, r);
    m(r, e.col) = e.value;
  }
  return m;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size())
    throw DimensionError("pauli_mul: word lengths differ (" +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  std::string word(a.size(), 'I');
  int power = a.phase_power() + b.phase_power();
  for (std::size_t q = 0; q < a.size(); ++q) {
    const int x = letter_index(a.word()[q]);
    const int y = letter_index(b.word()[q]);
    if (x == 0 || y == 0 || x == y) {
      word[q] = kLetters[x ^ y];
      continue;
    }
    word[q] = kLetters[x ^ y];
    // XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
    power += ((y - x + 3) % 3 == 1) ? 1 : 3;
  }
  return PauliString(std::move(word), power);
}

bool anticommutes(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) throw DimensionError("anticommutes: length mismatch");
  int clashes = 0;
  for (std::size_t q = 0; q < a.size(); ++q)
    clashes += a[q] != 'I' && b[q] != 'I' && a[q] != b[q];
  return clashes % 2 == 1;
}

std::vector<std::string> all_words(int n_qubits) {
  std::vector<std::string> words{""};
  for (int q = 0; q < n_qubits; ++q) {
    std::vector<std::string> next;
    next.reserve(words.size() * 4);
    for (const auto& w : words)
      for (char c : kLetters) next.push_back(w + c);
    words = std::move(next);
  }
  return words;
}

double PauliCoeffs::at(const std::string& word) const {
  const auto it = coeffs.find(word);
  return it == coeffs.end() ? 0.0 : it->second;
}

PauliCoeffs expand_generator(const Mat& h) {
  require_square(h, "expand_generator");
  const int n = qubit_count(h.rows());
  if (hermiticity_defect(h) > 1e-10 * hermitian_scale(h))
    throw SymmetryError("expand_generator: matrix is not Hermitian");
  PauliCoeffs out;
  out.n_qubits = n;
  const std::size_t dim = h.rows();
  for (const auto& word : all_words(n)) {
    // Tr(P h) = sum_r P[r, c(r)] h[c(r), r].
    Complex tr{};
    for (std::size_t r = 0; r < dim; ++r) {
      const RowEntry e = row_entry(word, r);
      tr += e.value * h(e.col, r);
    }
    const double c = tr.real() / static_cast<double>(dim);
    if (c != 0.0) out.coeffs.emplace(word, c);
  }
  return out;
}

Mat reconstruct(const PauliCoeffs& c) {
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  Mat m(dim, dim);
  for (const auto& [word, coeff] : c.coeffs) {
    if (static_cast<int>(word.size()) != c.n_qubits)
      throw DimensionError("reconstruct: word length differs from n_qubits");
    for (std::size_t r = 0; r < dim; ++r) {
      const RowEntry e = row_entry(word, r);
      m(r, e.col) += coeff * e.value;
    }
  }
  return m;
}

bool matches_pattern(std::string_view word, std::string_view pattern) {
  std::size_t i = 0;
  for (; i < pattern.size(); ++i) {
    if (pattern[i] == '*') return i + 1 == pattern.size();
    if (i >= word.size() || word[i] != pattern[i]) return false;
  }
  return i == word.size();
}

bool support_subset(const PauliCoeffs& c, std::span<const std::string> allowed,
                    double tol) {
  for (const auto& [word, coeff] : c.coeffs) {
    if (std::abs(coeff) <= tol) continue;
    bool ok = false;
    for (const auto& p : allowed) ok = ok || matches_pattern(word, p);
    if (!ok) return false;
  }
  return true;
}

double mass_outside(const PauliCoeffs& c, std::span<const std::string> allowed) {
  double s = 0.0;
  for (const auto& [word, coeff] : c.coeffs) {
    bool ok = false;
    for (const auto& p : allowed) ok = ok || matches_pattern(word, p);
    if (!ok) s += coeff * coeff;
  }
  return std::sqrt(s);
}

}  // namespace cosetsynth
