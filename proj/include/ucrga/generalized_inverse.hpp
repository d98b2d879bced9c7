#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ucrga/balance.hpp"
#include "ucrga/dense_matrix.hpp"
#include "ucrga/svd.hpp"

namespace ucrga {

struct UcOptions {
  BalanceOptions balance{};
  double rank_tol = kDefaultRankTol;
};

struct UcInverse {
  DenseMatrix matrix;
  bool balancer_converged = false;
  RankInfo core_rank{};
};

//
// Unit-consistent generalized inverse. With a = D^-1 S E^-1 from balance(),
// the inverse is E * pinv(S) * D, i.e. entry (j, i) is
// pinv(S)(j, i) * exp(left_log[i] + right_log[j]). It satisfies
// (D' a E')^-U = E'^-1 a^-U D'^-1 for any nonsingular diagonal D', E'.
//
inline UcInverse uc_inverse_with_status(const DenseMatrix& a, const UcOptions& opts = {}) {
  const ScalingDecomposition dec = balance(a, opts.balance);
  const SvdFactors f = svd(dec.core);
  const RankInfo rank = numerical_rank(f, opts.rank_tol);
  const DenseMatrix core_pinv = pinv(f, opts.rank_tol);

  const std::size_t m = a.rows(), n = a.cols();
  std::vector<double> out(n * m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      out[j * m + i] = core_pinv(j, i) * std::exp(dec.left_log[i] + dec.right_log[j]);
  return UcInverse{DenseMatrix(n, m, std::move(out)), dec.converged, rank};
}

inline DenseMatrix uc_inverse(const DenseMatrix& a, const UcOptions& opts = {}) {
  return uc_inverse_with_status(a, opts).matrix;
}

// Relative residuals of A G A = A and G A G = G.
struct GiResiduals {
  double residual_axa = 0.0;
  double residual_xax = 0.0;

  double worst() const noexcept { return std::max(residual_axa, residual_xax); }
};

inline GiResiduals check_gi_identities(const DenseMatrix& a, const DenseMatrix& g) {
  if (g.rows() != a.cols() || g.cols() != a.rows()) {
    throw DimensionError("check_gi_identities: inverse is " + detail::shape_str(g.rows(), g.cols()) +
                         ", expected " + detail::shape_str(a.cols(), a.rows()));
  }
  const DenseMatrix aga = matmul(matmul(a, g), a);
  const DenseMatrix gag = matmul(matmul(g, a), g);
  return GiResiduals{relative_max_abs_diff(aga, a), relative_max_abs_diff(gag, g)};
}

//
// max|E * inv(D a E) * D - inv(a)| / max|inv(a)| for an arbitrary inverse
// routine. Zero for an inverse that is consistent with diagonal scaling.
//
template <typename InverseFn>
double diagonal_consistency_residual(const DenseMatrix& a, const DiagScaling& d, const DiagScaling& e,
                                     InverseFn&& inverse) {
  const DenseMatrix scaled_inv = inverse(apply_diag(d, a, e));
  const DenseMatrix restored = apply_diag(e, scaled_inv, d);
  return relative_max_abs_diff(restored, inverse(a));
}

inline double uc_consistency_residual(const DenseMatrix& a, const DiagScaling& d, const DiagScaling& e,
                                      const UcOptions& opts = {}) {
  return diagonal_consistency_residual(a, d, e, [&](const DenseMatrix& x) { return uc_inverse(x, opts); });
}

inline double mp_consistency_residual(const DenseMatrix& a, const DiagScaling& d, const DiagScaling& e,
                                      double rank_tol = kDefaultRankTol) {
  return diagonal_consistency_residual(a, d, e, [&](const DenseMatrix& x) { return pinv(x, rank_tol); });
}

// max|pinv(U a V) - V^T pinv(a) U^T| / max|pinv(a)| for orthogonal U, V.
inline double unitary_consistency_residual(const DenseMatrix& a, const DenseMatrix& u, const DenseMatrix& v,
                                           double rank_tol = kDefaultRankTol) {
  const DenseMatrix lhs = pinv(matmul(matmul(u, a), v), rank_tol);
  const DenseMatrix rhs = matmul(matmul(transpose(v), pinv(a, rank_tol)), transpose(u));
  return relative_max_abs_diff(lhs, rhs);
}

}  // namespace ucrga
