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

#include "cosetsynth/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "cosetsynth/error.hpp"

namespace cosetsynth {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kJacobiOffTol = 1e-13;
constexpr double kHermitianTol = 1e-12;
constexpr double kClusterGap = 1e-9;
constexpr double kPsdClamp = 1e-10;
constexpr double kNullSingular = 1e-12;
constexpr int kMaxSweeps = 100;

double scale_of(const Mat& a) { return std::max(1.0, frobenius_norm(a)); }

Mat hermitian_part(const Mat& a) { return 0.5 * (a + dagger(a)); }

Mat antihermitian_part(const Mat& a) { return 0.5 * (a - dagger(a)); }

double column_norm(const Mat& a, std::size_t col) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) s += std::norm(a(r, col));
  return std::sqrt(s);
}

// Orthonormalizes columns [first, last) of `q` in place (modified
// Gram-Schmidt, two passes), against all earlier columns as well.
void reorthonormalize(Mat& q, std::size_t first, std::size_t last) {
  for (std::size_t k = first; k < last; ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        Complex dot{};
        for (std::size_t r = 0; r < q.rows(); ++r)
          dot += std::conj(q(r, j)) * q(r, k);
        for (std::size_t r = 0; r < q.rows(); ++r) q(r, k) -= dot * q(r, j);
      }
    }
    const double nrm = column_norm(q, k);
    for (std::size_t r = 0; r < q.rows(); ++r) q(r, k) /= nrm;
  }
}

// Fills the columns of `u` not flagged in `filled` with an orthonormal
// completion drawn from the standard basis.
void complete_orthonormal(Mat& u, std::vector<bool>& filled) {
  const std::size_t m = u.rows();
  for (std::size_t col = 0; col < u.cols(); ++col) {
    if (filled[col]) continue;
    std::vector<Complex> best;
    double best_norm = -1.0;
    for (std::size_t e = 0; e < m; ++e) {
      std::vector<Complex> v(m);
      v[e] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < u.cols(); ++j) {
          if (!filled[j]) continue;
          Complex dot{};
          for (std::size_t r = 0; r < m; ++r) dot += std::conj(u(r, j)) * v[r];
          for (std::size_t r = 0; r < m; ++r) v[r] -= dot * u(r, j);
        }
      }
      double nrm = 0.0;
      for (const auto& z : v) nrm += std::norm(z);
      nrm = std::sqrt(nrm);
      if (nrm > best_norm) {
        best_norm = nrm;
        best = std::move(v);
      }
    }
    for (std::size_t r = 0; r < m; ++r) u(r, col) = best[r] / best_norm;
    filled[col] = true;
  }
}

Mat conjugate_diagonal(const Mat& q, std::span<const Complex> diag) {
  // q diag(d) q^dag
  const std::size_t n = q.rows();
  Mat scaled = q;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) scaled(r, c) *= diag[c];
  return scaled * dagger(q);
}

// Rotation [[c, s], [-conj(s), c]] mapping (x, y) to (r, 0).
struct Givens {
  double c;
  Complex s;
};

Givens make_givens(Complex x, Complex y) {
  const double ax = std::abs(x);
  const double r = std::hypot(ax, std::abs(y));
  if (r == 0.0) return {1.0, 0.0};
  if (ax == 0.0) return {0.0, std::conj(y) / std::abs(y)};
  return {ax / r, (x / ax) * std::conj(y) / r};
}

}  // namespace

Mat lu_inverse(const Mat& a, double singular_tol) {
  require_square(a, "lu_inverse");
  const double smin = sigma_min(a);
  if (smin < singular_tol) {
    throw SingularityError(
        "lu_inverse: matrix is numerically singular (sigma_min = " +
            std::to_string(smin) + ")",
        smin);
  }
  const std::size_t n = a.rows();
  Mat lu = a;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(lu(r, k)) > std::abs(lu(piv, k))) piv = r;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(piv, c));
      std::swap(perm[k], perm[piv]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      lu(r, k) /= lu(k, k);
      const Complex f = lu(r, k);
      for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= f * lu(k, c);
    }
  }
  Mat inv(n, n);
  std::vector<Complex> y(n);
  for (std::size_t col = 0; col < n; ++col) {
    // Solve L y = P e_col, then U x = y.
    for (std::size_t r = 0; r < n; ++r) {
      Complex s = perm[r] == col ? 1.0 : 0.0;
      for (std::size_t c = 0; c < r; ++c) s -= lu(r, c) * y[c];
      y[r] = s;
    }
    for (std::size_t r = n; r-- > 0;) {
      Complex s = y[r];
      for (std::size_t c = r + 1; c < n; ++c) s -= lu(r, c) * inv(c, col);
      inv(r, col) = s / lu(r, r);
    }
  }
  return inv;
}

HermitianEigen herm_eig(const Mat& h) {
  require_square(h, "herm_eig");
  const double scale = scale_of(h);
  const double defect = hermiticity_defect(h);
  if (defect > kHermitianTol * scale) {
    throw SymmetryError("herm_eig: matrix is not Hermitian (||H - H^dag||_F = " +
                        std::to_string(defect) + ")");
  }
  const std::size_t n = h.rows();
  Mat a = hermitian_part(h);
  Mat q = Mat::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t r = 0; r < n; ++r)
        if (p != r) off += std::norm(a(p, r));
    if (std::sqrt(off) < kJacobiOffTol * scale) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const Complex apr = a(p, r);
        const double mag = std::abs(apr);
        if (mag < std::numeric_limits<double>::min()) continue;
        const Complex phase = std::conj(apr) / mag;  // e^{-i phi}
        const double app = a(p, p).real();
        const double arr = a(r, r).real();
        const double theta = (arr - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, r).
        const Complex g_pp = c, g_pr = s;
        const Complex g_rp = -s * phase, g_rr = c * phase;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex xp = a(k, p), xr = a(k, r);
          a(k, p) = xp * g_pp + xr * g_rp;
          a(k, r) = xp * g_pr + xr * g_rr;
          const Complex qp = q(k, p), qr = q(k, r);
          q(k, p) = qp * g_pp + qr * g_rp;
          q(k, r) = qp * g_pr + qr * g_rr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex xp = a(p, k), xr = a(r, k);
          a(p, k) = std::conj(g_pp) * xp + std::conj(g_rp) * xr;
          a(r, k) = std::conj(g_pr) * xp + std::conj(g_rr) * xr;
        }
        a(p, r) = 0.0;
        a(r, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(r, r) = a(r, r).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = q(r, order[k]);
  }
  // Degenerate clusters get an explicitly orthonormal basis.
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && out.values[end] - out.values[end - 1] < kClusterGap) ++end;
    if (end - start > 1) reorthonormalize(out.vectors, start, end);
    start = end;
  }
  return out;
}

Svd svd(const Mat& a) {
  if (a.rows() < a.cols()) {
    Svd t = svd(dagger(a));
    return Svd{std::move(t.v), std::move(t.singular), std::move(t.u)};
  }
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Mat w = a;
  Mat v = Mat::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma{};
        for (std::size_t r = 0; r < m; ++r) {
          alpha += std::norm(w(r, p));
          beta += std::norm(w(r, q));
          gamma += std::conj(w(r, p)) * w(r, q);
        }
        const double mag = std::abs(gamma);
        if (mag <= kEps * std::sqrt(alpha * beta) ||
            mag < std::numeric_limits<double>::min())
          continue;
        rotated = true;
        const Complex phase = std::conj(gamma) / mag;  // e^{-i phi}
        const double zeta = (beta - alpha) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t r = 0; r < m; ++r) {
          const Complex wp = w(r, p), wq = w(r, q) * phase;
          w(r, p) = c * wp - s * wq;
          w(r, q) = s * wp + c * wq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const Complex vp = v(r, p), vq = v(r, q) * phase;
          v(r, p) = c * vp - s * vq;
          v(r, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> norms(n);
  for (std::size_t k = 0; k < n; ++k) norms[k] = column_norm(w, k);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  Svd out;
  out.singular.resize(n);
  out.u = Mat(m, m);
  out.v = Mat(n, n);
  std::vector<bool> filled(m, false);
  const double null_tol =
      kNullSingular * std::max(1.0, n == 0 ? 0.0 : norms[order[0]]);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.singular[k] = norms[src];
    for (std::size_t r = 0; r < n; ++r) out.v(r, k) = v(r, src);
    if (norms[src] >= null_tol) {
      for (std::size_t r = 0; r < m; ++r) out.u(r, k) = w(r, src) / norms[src];
      filled[k] = true;
    }
  }
  complete_orthonormal(out.u, filled);
  return out;
}

double sigma_min(const Mat& a) {
  const Svd d = svd(a);
  return d.singular.empty() ? 0.0 : d.singular.back();
}

Mat polar_unitary(const Mat& a) {
  require_square(a, "polar_unitary");
  const Svd d = svd(a);
  return d.u * dagger(d.v);
}

Mat psd_sqrt(const Mat& a) {
  require_square(a, "psd_sqrt");
  const double scale = scale_of(a);
  if (hermiticity_defect(a) > 1e-10 * scale) {
    throw SymmetryError("psd_sqrt: matrix is not Hermitian");
  }
  const HermitianEigen eig = herm_eig(hermitian_part(a));
  std::vector<Complex> roots(eig.values.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const double lam = eig.values[k];
    if (lam < -kPsdClamp) {
      throw DefinitenessError("psd_sqrt: negative eigenvalue " +
                                  std::to_string(lam),
                              lam);
    }
    roots[k] = std::sqrt(std::max(lam, 0.0));
  }
  return hermitian_part(conjugate_diagonal(eig.vectors, roots));
}

Schur schur(const Mat& a) {
  require_square(a, "schur");
  const std::size_t n = a.rows();
  Mat h = a;
  Mat z = Mat::identity(n);

  // Householder reduction to upper Hessenberg form.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    std::vector<Complex> v(n);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    const Complex x0 = h(k + 1, k);
    const Complex unit = std::abs(x0) == 0.0 ? Complex{1.0} : x0 / std::abs(x0);
    v[k + 1] += unit * xnorm;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    const double f = 2.0 / vnorm2;
    for (std::size_t c = 0; c < n; ++c) {
      Complex s{};
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, c);
      s *= f;
      for (std::size_t i = k + 1; i < n; ++i) h(i, c) -= s * v[i];
    }
    for (Mat* m : {&h, &z}) {
      for (std::size_t r = 0; r < n; ++r) {
        Complex s{};
        for (std::size_t i = k + 1; i < n; ++i) s += (*m)(r, i) * v[i];
        s *= f;
        for (std::size_t i = k + 1; i < n; ++i) (*m)(r, i) -= s * std::conj(v[i]);
      }
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }

  // Shifted QR on the active window [lo, hi].
  const double hnorm = std::max(frobenius_norm(h), std::numeric_limits<double>::min());
  std::size_t hi = n == 0 ? 0 : n - 1;
  int iter = 0;
  int total = 0;
  std::vector<Givens> rots;
  while (hi > 0) {
    std::size_t lo = hi;
    while (lo > 0) {
      double diag = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (diag == 0.0) diag = hnorm;
      if (std::abs(h(lo, lo - 1)) <= kEps * diag) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      iter = 0;
      continue;
    }
    if (++total > 1000 * static_cast<int>(n)) {
      throw Error("schur: QR iteration failed to converge");
    }

    Complex mu;
    if (iter > 0 && iter % 10 == 0) {
      mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    } else {
      const Complex p = h(hi - 1, hi - 1), q = h(hi - 1, hi);
      const Complex r = h(hi, hi - 1), s = h(hi, hi);
      const Complex half = 0.5 * (p + s);
      const Complex disc = std::sqrt(0.25 * (p - s) * (p - s) + q * r);
      const Complex mu1 = half + disc, mu2 = half - disc;
      mu = std::abs(mu1 - s) < std::abs(mu2 - s) ? mu1 : mu2;
    }
    ++iter;

    for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= mu;
    rots.clear();
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      for (std::size_t c = k; c < n; ++c) {
        const Complex x = h(k, c), y = h(k + 1, c);
        h(k, c) = g.c * x + g.s * y;
        h(k + 1, c) = -std::conj(g.s) * x + g.c * y;
      }
      rots.push_back(g);
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens& g = rots[k - lo];
      const std::size_t last = std::min(k + 2, hi);
      for (std::size_t r = 0; r <= last; ++r) {
        const Complex x = h(r, k), y = h(r, k + 1);
        h(r, k) = g.c * x + std::conj(g.s) * y;
        h(r, k + 1) = -g.s * x + g.c * y;
      }
      for (std::size_t r = 0; r < n; ++r) {
        const Complex x = z(r, k), y = z(r, k + 1);
        z(r, k) = g.c * x + std::conj(g.s) * y;
        z(r, k + 1) = -g.s * x + g.c * y;
      }
    }
    for (std::size_t k = lo; k <= hi; ++k) h(k, k) += mu;
  }
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) h(r, c) = 0.0;
  return Schur{std::move(h), std::move(z)};
}

Mat unitary_log(const Mat& u) {
  require_unitary(u, 1e-10, "unitary_log");
  const Schur s = schur(u);
  std::vector<Complex> logs(u.rows());
  for (std::size_t k = 0; k < logs.size(); ++k) {
    const Complex lam = s.t(k, k);
    double phase = std::abs(lam + 1.0) < 1e-12 ? std::numbers::pi : std::arg(lam);
    if (phase <= -std::numbers::pi) phase = std::numbers::pi;
    logs[k] = Complex{0.0, phase};
  }
  return antihermitian_part(conjugate_diagonal(s.z, logs));
}

Mat normal_exp(const Mat& g) {
  require_square(g, "normal_exp");
  const double scale = scale_of(g);
  const Mat gd = dagger(g);
  if (frobenius_dist(g * gd, gd * g) > 1e-10 * scale * scale) {
    throw NormalityError("normal_exp: matrix is not normal");
  }
  const std::size_t n = g.rows();
  std::vector<Complex> diag(n);
  if (frobenius_norm(g + gd) <= 1e-10 * scale) {
    // g = -i H with H = i g Hermitian.
    const HermitianEigen eig = herm_eig(hermitian_part(kI * g));
    for (std::size_t k = 0; k < n; ++k)
      diag[k] = std::exp(Complex{0.0, -eig.values[k]});
    return conjugate_diagonal(eig.vectors, diag);
  }
  const Schur s = schur(g);
  for (std::size_t k = 0; k < n; ++k) diag[k] = std::exp(s.t(k, k));
  return conjugate_diagonal(s.z, diag);
}

}  // namespace cosetsynth
