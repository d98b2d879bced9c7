#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ucrga/error.hpp"

namespace ucrga {

namespace detail {

inline std::string shape_str(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

}  // namespace detail

//
// Row-major dense real matrix. Values are immutable once constructed and every
// entry is finite; algorithms build results in a std::vector<double> and hand
// it to the constructor, which validates it.
//
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : DenseMatrix(rows, cols, std::vector<double>(rows * cols, fill)) {}

  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows_ == 0 || cols_ == 0) {
      throw DimensionError("matrix dimensions must be positive, got " +
                           detail::shape_str(rows_, cols_));
    }
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("matrix data length " + std::to_string(data_.size()) +
                           " does not match shape " + detail::shape_str(rows_, cols_));
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!std::isfinite(data_[k])) {
        throw InvalidValueError("non-finite entry at (" + std::to_string(k / cols_) + "," +
                                std::to_string(k % cols_) + ")");
      }
    }
  }

  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : DenseMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size(), flatten(rows)) {}

  static DenseMatrix identity(std::size_t n) {
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 1.0;
    return DenseMatrix(n, n, std::move(d));
  }

  static DenseMatrix diagonal(std::span<const double> entries) {
    const std::size_t n = entries.size();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = entries[i];
    return DenseMatrix(n, n, std::move(d));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<const double> data() const noexcept { return data_; }
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(data_).subspan(i * cols_, cols_);
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  static std::vector<double> flatten(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<double> out;
    const std::size_t width = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != width) throw DimensionError("ragged initializer list");
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

// Nonsingular diagonal scaling, stored as its diagonal.
class DiagScaling {
 public:
  explicit DiagScaling(std::vector<double> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!std::isfinite(entries_[i]) || entries_[i] == 0.0) {
        throw InvalidValueError("scale factor " + std::to_string(i) + " must be finite and nonzero");
      }
    }
  }

  static DiagScaling identity(std::size_t n) { return DiagScaling(std::vector<double>(n, 1.0)); }

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const noexcept { return entries_[i]; }
  std::span<const double> entries() const noexcept { return entries_; }

  DiagScaling inverse() const {
    std::vector<double> inv(entries_.size());
    std::transform(entries_.begin(), entries_.end(), inv.begin(), [](double x) { return 1.0 / x; });
    return DiagScaling(std::move(inv));
  }

  DenseMatrix to_matrix() const { return DenseMatrix::diagonal(entries_); }

  friend DiagScaling operator*(const DiagScaling& a, const DiagScaling& b) {
    if (a.size() != b.size()) throw DimensionError("diagonal scalings differ in length");
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
    return DiagScaling(std::move(out));
  }

 private:
  std::vector<double> entries_;
};

// Bijection on 0..n-1. permute() reads result(i) from source(mapping[i]).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (std::size_t k : mapping_) {
      if (k >= mapping_.size() || seen[k]) {
        throw InvalidValueError("permutation mapping is not a bijection on 0.." +
                                std::to_string(mapping_.size()) + "-1");
      }
      seen[k] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return Permutation(std::move(m));
  }

  std::size_t size() const noexcept { return mapping_.size(); }
  std::size_t operator[](std::size_t i) const noexcept { return mapping_[i]; }
  std::span<const std::size_t> mapping() const noexcept { return mapping_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(mapping_.size());
    for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

// ---------------------------------------------------------------------------
// Elementary algebra
// ---------------------------------------------------------------------------

inline DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hadamard: shape mismatch " + detail::shape_str(a.rows(), a.cols()) +
                         " vs " + detail::shape_str(b.rows(), b.cols()));
  }
  std::vector<double> out(a.size());
  auto da = a.data();
  auto db = b.data();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = da[k] * db[k];
  return DenseMatrix(a.rows(), a.cols(), std::move(out));
}

inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions differ " + detail::shape_str(a.rows(), a.cols()) +
                         " * " + detail::shape_str(b.rows(), b.cols()));
  }
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  std::vector<double> out(m * n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a(i, p);
      if (aip == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aip * b(p, j);
    }
  }
  return DenseMatrix(m, n, std::move(out));
}

inline DenseMatrix transpose(const DenseMatrix& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[j * a.rows() + i] = a(i, j);
  return DenseMatrix(a.cols(), a.rows(), std::move(out));
}

// left * a * right with both scalings diagonal.
inline DenseMatrix apply_diag(const DiagScaling& left, const DenseMatrix& a, const DiagScaling& right) {
  if (left.size() != a.rows() || right.size() != a.cols()) {
    throw DimensionError("apply_diag: scalings of length " + std::to_string(left.size()) + "/" +
                         std::to_string(right.size()) + " do not conform to " +
                         detail::shape_str(a.rows(), a.cols()));
  }
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i * a.cols() + j] = left[i] * a(i, j) * right[j];
  return DenseMatrix(a.rows(), a.cols(), std::move(out));
}

// result(i,j) = a(p_rows[i], p_cols[j])
inline DenseMatrix permute(const DenseMatrix& a, const Permutation& p_rows, const Permutation& p_cols) {
  if (p_rows.size() != a.rows() || p_cols.size() != a.cols()) {
    throw DimensionError("permute: permutation lengths do not conform to " +
                         detail::shape_str(a.rows(), a.cols()));
  }
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i * a.cols() + j] = a(p_rows[i], p_cols[j]);
  return DenseMatrix(a.rows(), a.cols(), std::move(out));
}

// [a b]
inline DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hconcat: row counts differ");
  const std::size_t n = a.cols() + b.cols();
  std::vector<double> out(a.rows() * n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), out.begin() + i * n);
    std::copy(b.row(i).begin(), b.row(i).end(), out.begin() + i * n + a.cols());
  }
  return DenseMatrix(a.rows(), n, std::move(out));
}

// Rectangular block of a.
inline DenseMatrix block(const DenseMatrix& a, std::size_t row0, std::size_t col0, std::size_t rows,
                         std::size_t cols) {
  if (row0 + rows > a.rows() || col0 + cols > a.cols()) throw DimensionError("block out of range");
  std::vector<double> out(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] = a(row0 + i, col0 + j);
  return DenseMatrix(rows, cols, std::move(out));
}

inline DenseMatrix scaled(const DenseMatrix& a, double s) {
  std::vector<double> out(a.data().begin(), a.data().end());
  for (double& x : out) x *= s;
  return DenseMatrix(a.rows(), a.cols(), std::move(out));
}

inline DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("subtraction: shape mismatch");
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.data()[k] - b.data()[k];
  return DenseMatrix(a.rows(), a.cols(), std::move(out));
}

// ---------------------------------------------------------------------------
// Norms and reductions
// ---------------------------------------------------------------------------

inline double max_abs(const DenseMatrix& a) noexcept {
  double m = 0.0;
  for (double x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

inline double frobenius_norm(const DenseMatrix& a) noexcept {
  double s = 0.0;
  for (double x : a.data()) s += x * x;
  return std::sqrt(s);
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

// Guard used wherever a max-abs norm sits in a denominator.
inline constexpr double kNormFloor = 1e-300;

// max|a - reference| / max(max|reference|, kNormFloor)
inline double relative_max_abs_diff(const DenseMatrix& a, const DenseMatrix& reference) {
  return max_abs_diff(a, reference) / std::max(max_abs(reference), kNormFloor);
}

inline std::vector<double> row_sums(const DenseMatrix& a) {
  std::vector<double> s(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (double x : a.row(i)) s[i] += x;
  return s;
}

inline std::vector<double> col_sums(const DenseMatrix& a) {
  std::vector<double> s(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s[j] += a(i, j);
  return s;
}

inline double element_sum(const DenseMatrix& a) noexcept {
  double s = 0.0;
  for (double x : a.data()) s += x;
  return s;
}

}  // namespace ucrga
