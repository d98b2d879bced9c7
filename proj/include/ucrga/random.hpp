#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "ucrga/dense_matrix.hpp"

namespace ucrga::random {

using Engine = std::mt19937_64;

inline DenseMatrix gaussian(Engine& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> d(rows * cols);
  for (double& x : d) x = dist(rng);
  return DenseMatrix(rows, cols, std::move(d));
}

// Product of rows x rank and rank x cols Gaussian factors; rank `rank` with
// probability one.
inline DenseMatrix with_rank(Engine& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
  return matmul(gaussian(rng, rows, rank), gaussian(rng, rank, cols));
}

// Magnitude log-uniform on [lo, hi]; sign random when signed_entries is set.
inline double log_uniform(Engine& rng, double lo, double hi, bool signed_entries = false) {
  std::uniform_real_distribution<double> expo(std::log(lo), std::log(hi));
  double x = std::exp(expo(rng));
  if (signed_entries && std::bernoulli_distribution(0.5)(rng)) x = -x;
  return x;
}

inline DiagScaling log_uniform_scaling(Engine& rng, std::size_t n, double lo = 1e-6, double hi = 1e6) {
  std::vector<double> d(n);
  for (double& x : d) x = log_uniform(rng, lo, hi, true);
  return DiagScaling(std::move(d));
}

inline Permutation permutation(Engine& rng, std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  std::shuffle(m.begin(), m.end(), rng);
  return Permutation(std::move(m));
}

// Orthogonal factor of a Gaussian matrix, by twice-applied modified
// Gram-Schmidt.
inline DenseMatrix orthogonal(Engine& rng, std::size_t n) {
  const DenseMatrix g = gaussian(rng, n, n);
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) q[j][i] = g(i, j);
    for (int round = 0; round < 2; ++round) {
      for (std::size_t k = 0; k < j; ++k) {
        double proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += q[k][i] * q[j][i];
        for (std::size_t i = 0; i < n; ++i) q[j][i] -= proj * q[k][i];
      }
    }
    double nrm = 0.0;
    for (double x : q[j]) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (double& x : q[j]) x /= nrm;
  }
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = q[j][i];
  return DenseMatrix(n, n, std::move(d));
}

}  // namespace ucrga::random
