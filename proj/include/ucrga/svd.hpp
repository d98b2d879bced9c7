#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "ucrga/dense_matrix.hpp"
#include "ucrga/error.hpp"

namespace ucrga {

// a = u * diag(sigma) * v^T with u (m x m) and v (n x n) orthogonal and sigma
// sorted non-increasing, length min(m, n).
struct SvdFactors {
  DenseMatrix u;
  std::vector<double> sigma;
  DenseMatrix v;
};

struct SvdOptions {
  // Pair (i, j) is converged once |<w_i, w_j>| <= orthogonality_tol * |w_i| |w_j|.
  double orthogonality_tol = 1e-14;
  int max_sweeps = 60;
};

struct RankInfo {
  std::size_t numerical_rank = 0;
  double rank_tolerance = 0.0;
  double largest_sv = 0.0;
};

inline constexpr double kDefaultRankTol = 1e-12;

namespace detail {

// Column-major m x n work matrix.
struct Columns {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<double> v;

  double* col(std::size_t j) { return v.data() + j * m; }
  const double* col(std::size_t j) const { return v.data() + j * m; }
};

inline double dot(const double* x, const double* y, std::size_t len) {
  double s = 0.0;
  for (std::size_t k = 0; k < len; ++k) s += x[k] * y[k];
  return s;
}

// Extends the orthonormal columns of q flagged in `filled` to a full basis,
// drawing candidates from the standard basis. Two rounds of modified
// Gram-Schmidt keep the completed columns orthogonal to working precision.
inline void complete_basis(Columns& q, std::vector<bool>& filled) {
  const std::size_t m = q.m;
  std::vector<double> cand(m);
  for (std::size_t j = 0; j < q.n; ++j) {
    if (filled[j]) continue;
    double best_norm = -1.0;
    std::vector<double> best(m);
    for (std::size_t e = 0; e < m; ++e) {
      std::fill(cand.begin(), cand.end(), 0.0);
      cand[e] = 1.0;
      for (int round = 0; round < 2; ++round) {
        for (std::size_t k = 0; k < q.n; ++k) {
          if (!filled[k]) continue;
          const double proj = dot(q.col(k), cand.data(), m);
          for (std::size_t r = 0; r < m; ++r) cand[r] -= proj * q.col(k)[r];
        }
      }
      const double nrm = std::sqrt(dot(cand.data(), cand.data(), m));
      if (nrm > best_norm + 1e-12) {
        best_norm = nrm;
        best = cand;
      }
    }
    for (std::size_t r = 0; r < m; ++r) q.col(j)[r] = best[r] / best_norm;
    filled[j] = true;
  }
}

inline DenseMatrix to_dense(const Columns& c) {
  std::vector<double> out(c.m * c.n);
  for (std::size_t j = 0; j < c.n; ++j)
    for (std::size_t i = 0; i < c.m; ++i) out[i * c.n + j] = c.col(j)[i];
  return DenseMatrix(c.m, c.n, std::move(out));
}

// One-sided Jacobi on a tall (m >= n) matrix.
inline SvdFactors jacobi_svd_tall(const DenseMatrix& a, const SvdOptions& opts) {
  const std::size_t m = a.rows(), n = a.cols();
  Columns w{m, n, std::vector<double>(m * n)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) w.col(j)[i] = a(i, j);
  Columns v{n, n, std::vector<double>(n * n, 0.0)};
  for (std::size_t j = 0; j < n; ++j) v.col(j)[j] = 1.0;

  double off = 0.0;
  bool converged = n < 2;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    off = 0.0;
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double* wp = w.col(p);
        double* wq = w.col(q);
        const double alpha = dot(wp, wp, m);
        const double beta = dot(wq, wq, m);
        const double gamma = dot(wp, wq, m);
        if (alpha == 0.0 || beta == 0.0 || gamma == 0.0) continue;
        const double scale = std::sqrt(alpha) * std::sqrt(beta);
        const double rel = std::abs(gamma) / scale;
        off = std::max(off, rel);
        if (rel <= opts.orthogonality_tol) continue;

        // Rotation that zeroes the (p, q) entry of the 2x2 Gram block.
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (std::size_t k = 0; k < m; ++k) {
          const double xp = wp[k], xq = wq[k];
          wp[k] = c * xp - s * xq;
          wq[k] = s * xp + c * xq;
        }
        double* vp = v.col(p);
        double* vq = v.col(q);
        for (std::size_t k = 0; k < n; ++k) {
          const double xp = vp[k], xq = vq[k];
          vp[k] = c * xp - s * xq;
          vq[k] = s * xp + c * xq;
        }
        rotated = true;
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    throw NumericalError("svd: one-sided Jacobi did not converge in " + std::to_string(opts.max_sweeps) +
                             " sweeps (off-diagonal residual " + std::to_string(off) + ")",
                         off);
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(dot(w.col(j), w.col(j), m));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  Columns u{m, m, std::vector<double>(m * m, 0.0)};
  Columns vs{n, n, std::vector<double>(n * n)};
  std::vector<double> sorted(n);
  std::vector<bool> filled(m, false);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    sorted[k] = sigma[j];
    std::copy(v.col(j), v.col(j) + n, vs.col(k));
    if (sigma[j] > 0.0) {
      for (std::size_t r = 0; r < m; ++r) u.col(k)[r] = w.col(j)[r] / sigma[j];
      filled[k] = true;
    }
  }
  complete_basis(u, filled);
  return SvdFactors{to_dense(u), std::move(sorted), to_dense(vs)};
}

}  // namespace detail

// Deterministic for a fixed input. Wide inputs are factored through their
// transpose.
inline SvdFactors svd(const DenseMatrix& a, const SvdOptions& opts = {}) {
  if (a.rows() >= a.cols()) return detail::jacobi_svd_tall(a, opts);
  SvdFactors t = detail::jacobi_svd_tall(transpose(a), opts);
  return SvdFactors{std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

// Counts singular values strictly above rel_tol * sigma_max * max(m, n).
inline RankInfo numerical_rank(const SvdFactors& f, double rel_tol = kDefaultRankTol) {
  if (!(rel_tol > 0.0)) throw InvalidValueError("numerical_rank: rel_tol must be positive");
  RankInfo info;
  info.largest_sv = f.sigma.empty() ? 0.0 : f.sigma.front();
  const double dim = static_cast<double>(std::max(f.u.rows(), f.v.rows()));
  info.rank_tolerance = std::max(rel_tol * info.largest_sv * dim, std::numeric_limits<double>::min());
  info.numerical_rank = static_cast<std::size_t>(
      std::count_if(f.sigma.begin(), f.sigma.end(), [&](double s) { return s > info.rank_tolerance; }));
  return info;
}

// v * diag(1/sigma, truncated at the rank tolerance) * u^T
inline DenseMatrix pinv(const SvdFactors& f, double rel_tol = kDefaultRankTol) {
  const RankInfo info = numerical_rank(f, rel_tol);
  const std::size_t m = f.u.rows(), n = f.v.rows();
  std::vector<double> out(n * m, 0.0);
  for (std::size_t k = 0; k < info.numerical_rank; ++k) {
    const double inv = 1.0 / f.sigma[k];
    for (std::size_t i = 0; i < n; ++i) {
      const double vik = f.v(i, k) * inv;
      if (vik == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i * m + j] += vik * f.u(j, k);
    }
  }
  return DenseMatrix(n, m, std::move(out));
}

inline DenseMatrix pinv(const DenseMatrix& a, double rel_tol = kDefaultRankTol) {
  return pinv(svd(a), rel_tol);
}

// Inverse by Gauss-Jordan elimination with partial pivoting. Throws
// SingularMatrixError only on an exactly zero pivot; callers that need a
// numerical singularity test should consult numerical_rank first.
inline DenseMatrix gauss_inverse(const DenseMatrix& a) {
  if (!a.is_square()) throw ShapeError("gauss_inverse: matrix is not square");
  const std::size_t n = a.rows();
  const std::size_t w = 2 * n;
  std::vector<double> aug(n * w, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = a(i, j);
    aug[i * w + n + i] = 1.0;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(aug[r * w + col]) > std::abs(aug[piv * w + col])) piv = r;
    if (aug[piv * w + col] == 0.0) throw SingularMatrixError("gauss_inverse: zero pivot");
    if (piv != col)
      std::swap_ranges(aug.begin() + piv * w, aug.begin() + (piv + 1) * w, aug.begin() + col * w);
    const double d = aug[col * w + col];
    for (std::size_t j = 0; j < w; ++j) aug[col * w + j] /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = aug[r * w + col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < w; ++j) aug[r * w + j] -= f * aug[col * w + j];
    }
  }
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    std::copy(aug.begin() + i * w + n, aug.begin() + (i + 1) * w, out.begin() + i * n);
  return DenseMatrix(n, n, std::move(out));
}

}  // namespace ucrga
