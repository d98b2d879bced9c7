#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ucrga/dense_matrix.hpp"
#include "ucrga/error.hpp"

namespace ucrga {

struct BalanceOptions {
  // Stop once the summed mean absolute column and row shifts of a sweep
  // fall to this value.
  double tol = 1e-15;
  std::size_t max_iter = 10000;
};

//
// a = diag(exp(-left_log)) * core * diag(exp(-right_log)), where the nonzero
// magnitudes of core have unit geometric mean along every row and column that
// has any nonzero entry. left_log and right_log are only determined up to a
// constant traded between them; consumers should rely on sums
// left_log[i] + right_log[j].
//
struct ScalingDecomposition {
  std::vector<double> left_log;
  std::vector<double> right_log;
  DenseMatrix core;
  bool converged = false;
  std::size_t iterations = 0;
  double final_shift = 0.0;

  DiagScaling left() const { return exp_scaling(left_log); }
  DiagScaling right() const { return exp_scaling(right_log); }

 private:
  static DiagScaling exp_scaling(const std::vector<double>& logs) {
    std::vector<double> out(logs.size());
    for (std::size_t i = 0; i < logs.size(); ++i) out[i] = std::exp(logs[i]);
    return DiagScaling(std::move(out));
  }
};

//
// Alternating log-mean centering. Work is done on L = log|a| over the nonzero
// mask; each sweep removes the column means of L (accumulated into right_log)
// and then the row means (accumulated into left_log). Rows/columns without
// nonzeros are skipped, and an empty set of qualifying rows or columns
// contributes zero to the shift. Exponentials are only taken once, when the
// core is formed.
//
inline ScalingDecomposition balance(const DenseMatrix& a, const BalanceOptions& opts = {}) {
  if (!(opts.tol > 0.0)) throw InvalidValueError("balance: tol must be positive");
  if (opts.max_iter == 0) throw InvalidValueError("balance: max_iter must be positive");

  const std::size_t m = a.rows(), n = a.cols();
  std::vector<double> logs(m * n, 0.0);
  std::vector<unsigned char> mask(m * n, 0);
  std::vector<std::size_t> row_count(m, 0), col_count(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = a(i, j);
      if (x != 0.0) {
        logs[i * n + j] = std::log(std::abs(x));
        mask[i * n + j] = 1;
        ++row_count[i];
        ++col_count[j];
      }
    }
  }

  std::vector<double> u(m, 0.0), v(n, 0.0), shift;
  double dx = 2.0 * opts.tol;
  std::size_t iter = 0;
  while (dx > opts.tol && iter < opts.max_iter) {
    ++iter;

    shift.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) shift[j] += logs[i * n + j];
    double col_total = 0.0;
    std::size_t col_active = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (col_count[j] == 0) continue;
      shift[j] /= static_cast<double>(col_count[j]);
      v[j] -= shift[j];
      col_total += std::abs(shift[j]);
      ++col_active;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mask[i * n + j]) logs[i * n + j] -= shift[j];
    dx = col_active ? col_total / static_cast<double>(col_active) : 0.0;

    shift.assign(m, 0.0);
    double row_total = 0.0;
    std::size_t row_active = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (row_count[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) shift[i] += logs[i * n + j];
      shift[i] /= static_cast<double>(row_count[i]);
      for (std::size_t j = 0; j < n; ++j)
        if (mask[i * n + j]) logs[i * n + j] -= shift[i];
      u[i] -= shift[i];
      row_total += std::abs(shift[i]);
      ++row_active;
    }
    dx += row_active ? row_total / static_cast<double>(row_active) : 0.0;
  }

  std::vector<double> core(m * n, 0.0);
  for (std::size_t k = 0; k < m * n; ++k) {
    if (mask[k]) core[k] = std::copysign(std::exp(logs[k]), a.data()[k]);
  }
  return ScalingDecomposition{std::move(u), std::move(v), DenseMatrix(m, n, std::move(core)),
                              dx <= opts.tol, iter, dx};
}

}  // namespace ucrga
