#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ucrga/dense_matrix.hpp"
#include "ucrga/generalized_inverse.hpp"
#include "ucrga/svd.hpp"

namespace ucrga {

enum class RgaMethod { strict, mp, uc };

inline std::string_view to_string(RgaMethod m) noexcept {
  switch (m) {
    case RgaMethod::strict: return "strict";
    case RgaMethod::mp: return "mp";
    case RgaMethod::uc: return "uc";
  }
  return "unknown";
}

inline std::optional<RgaMethod> parse_method(std::string_view s) noexcept {
  if (s == "strict") return RgaMethod::strict;
  if (s == "mp") return RgaMethod::mp;
  if (s == "uc") return RgaMethod::uc;
  return std::nullopt;
}

struct RgaOptions {
  double rank_tol = kDefaultRankTol;
  BalanceOptions balance{};

  UcOptions uc() const { return UcOptions{balance, rank_tol}; }
};

//
// g o inv(g)^T together with its sums. numerical_rank is the rank of the
// matrix that was actually inverted: g itself for strict and mp, the balanced
// core for uc (same rank in exact arithmetic). element_sum equals it.
//
struct RgaResult {
  DenseMatrix rga;
  RgaMethod method;
  std::size_t numerical_rank = 0;
  std::vector<double> row_sums;
  std::vector<double> col_sums;
  double element_sum = 0.0;
  bool balancer_converged = true;
};

namespace detail {

inline RgaResult make_result(const DenseMatrix& g, const DenseMatrix& inv, RgaMethod method, std::size_t rank,
                             bool converged) {
  DenseMatrix r = hadamard(g, transpose(inv));
  auto rs = row_sums(r);
  auto cs = col_sums(r);
  const double total = ucrga::element_sum(r);
  return RgaResult{std::move(r), method, rank, std::move(rs), std::move(cs), total, converged};
}

}  // namespace detail

// Classical RGA; g must be square and numerically nonsingular.
inline RgaResult rga_strict(const DenseMatrix& g, const RgaOptions& opts = {}) {
  if (!g.is_square()) {
    throw ShapeError("strict RGA needs a square matrix, got " + detail::shape_str(g.rows(), g.cols()) +
                     "; use the mp or uc method");
  }
  const RankInfo rank = numerical_rank(svd(g), opts.rank_tol);
  if (rank.numerical_rank < g.rows()) {
    throw SingularMatrixError("matrix is numerically singular (rank " + std::to_string(rank.numerical_rank) +
                              " of " + std::to_string(g.rows()) + "); use --method uc or --method mp");
  }
  return detail::make_result(g, gauss_inverse(g), RgaMethod::strict, g.rows(), true);
}

inline RgaResult rga_mp(const DenseMatrix& g, const RgaOptions& opts = {}) {
  const SvdFactors f = svd(g);
  const RankInfo rank = numerical_rank(f, opts.rank_tol);
  return detail::make_result(g, pinv(f, opts.rank_tol), RgaMethod::mp, rank.numerical_rank, true);
}

inline RgaResult rga_uc(const DenseMatrix& g, const RgaOptions& opts = {}) {
  const UcInverse inv = uc_inverse_with_status(g, opts.uc());
  return detail::make_result(g, inv.matrix, RgaMethod::uc, inv.core_rank.numerical_rank,
                             inv.balancer_converged);
}

inline RgaResult compute_rga(const DenseMatrix& g, RgaMethod method, const RgaOptions& opts = {}) {
  switch (method) {
    case RgaMethod::strict: return rga_strict(g, opts);
    case RgaMethod::mp: return rga_mp(g, opts);
    case RgaMethod::uc: return rga_uc(g, opts);
  }
  throw InvalidValueError("unknown RGA method");
}

// max|RGA(d g e) - RGA(g)| / max|RGA(g)|
inline double scaling_invariance_residual(const DenseMatrix& g, const DiagScaling& d, const DiagScaling& e,
                                          RgaMethod method, const RgaOptions& opts = {}) {
  const DenseMatrix base = compute_rga(g, method, opts).rga;
  const DenseMatrix moved = compute_rga(apply_diag(d, g, e), method, opts).rga;
  return relative_max_abs_diff(moved, base);
}

// max|RGA(P g Q) - P RGA(g) Q| / max|RGA(g)|
inline double permutation_equivariance_residual(const DenseMatrix& g, const Permutation& p,
                                                const Permutation& q, RgaMethod method,
                                                const RgaOptions& opts = {}) {
  const DenseMatrix expected = permute(compute_rga(g, method, opts).rga, p, q);
  const DenseMatrix actual = compute_rga(permute(g, p, q), method, opts).rga;
  return relative_max_abs_diff(actual, expected);
}

// ---------------------------------------------------------------------------
// Property reports
// ---------------------------------------------------------------------------

// Informational checks are reported but never fail a report.
struct PropertyCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
  bool informational = false;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;

  void add(std::string name, double value, double threshold, bool informational = false) {
    checks.push_back(PropertyCheck{std::move(name), value, threshold, value <= threshold, informational});
  }

  bool all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return c.passed || c.informational; });
  }

  const PropertyCheck* find(std::string_view name) const noexcept {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void append(const PropertyReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

inline constexpr double kSummaryThreshold = 1e-7;

//
// Row sums equal 1 only when the rows of g are independent (rank == rows), and
// likewise for columns; otherwise the corresponding check is informational.
// The element sum always equals the rank.
//
inline PropertyReport rga_summary(const RgaResult& r) {
  auto max_dev_from_one = [](const std::vector<double>& s) {
    double d = 0.0;
    for (double x : s) d = std::max(d, std::abs(x - 1.0));
    return d;
  };
  PropertyReport report;
  report.add("row_sum_deviation", max_dev_from_one(r.row_sums), kSummaryThreshold,
             r.numerical_rank < r.rga.rows());
  report.add("col_sum_deviation", max_dev_from_one(r.col_sums), kSummaryThreshold,
             r.numerical_rank < r.rga.cols());
  report.add("element_sum_minus_rank", std::abs(r.element_sum - static_cast<double>(r.numerical_rank)),
             kSummaryThreshold);
  return report;
}

}  // namespace ucrga
