#pragma once

#include <string>

#include "ucrga/dense_matrix.hpp"

namespace fixtures {

using ucrga::DenseMatrix;

inline DenseMatrix ones3() { return DenseMatrix(3, 3, 1.0); }

// ones3 with its first row and first column doubled.
inline DenseMatrix scaled_ones3() { return {{4, 2, 2}, {2, 1, 1}, {2, 1, 1}}; }

inline DenseMatrix a() { return {{7, 4, 8}, {7, 2, 5}, {3, 8, 8}}; }

// a with columns scaled by (3, 4, 2).
inline DenseMatrix b() { return {{21, 16, 16}, {21, 8, 10}, {9, 32, 16}}; }

inline DenseMatrix m() { return ucrga::hconcat(a(), b()); }

// Exact RGA(a): a(i,j) * cofactor(i,j) / det(a), det(a) = 68.
inline DenseMatrix rga_a_exact() {
  return ucrga::scaled(DenseMatrix{{-42, -41, 100}, {56, 16, -55}, {3, 42, -28}}, 1.0 / 17.0);
}

// Two-decimal table printed for RGA(a) = RGA(b).
inline DenseMatrix rga_a_printed() {
  return {{-2.47, -2.41, 5.88}, {3.29, 0.94, -3.24}, {0.18, 2.47, -1.65}};
}

// Two-decimal table printed for UC-RGA([a b]), already multiplied by 1/2.
inline DenseMatrix uc_rga_m_printed() {
  return ucrga::scaled(DenseMatrix{{-2.47, -2.41, 5.88, -2.47, -2.41, 5.88},
                                   {3.29, 0.94, -3.24, 3.29, 0.94, -3.24},
                                   {0.18, 2.47, -1.65, 0.18, 2.47, -1.65}},
                       0.5);
}

// Two-decimal table printed for MP-RGA([a b]), already multiplied by 1/2.
inline DenseMatrix mp_rga_m_printed() {
  return ucrga::scaled(DenseMatrix{{-4.47, -4.54, 9.41, -0.49, -0.28, 2.35},
                                   {5.93, 1.77, -5.18, 0.66, 0.11, -1.29},
                                   {0.32, 4.65, -2.64, 0.04, 0.29, -0.66}},
                       0.5);
}

// Exact MP-RGA([a b]) from m^T (m m^T)^-1 in rational arithmetic, over 2890.
inline DenseMatrix mp_rga_m_exact() {
  return ucrga::scaled(DenseMatrix{{-714, -410, 3400, -6426, -6560, 13600},
                                   {952, 160, -1870, 8568, 2560, -7480},
                                   {51, 420, -952, 459, 6720, -3808}},
                       1.0 / 2890.0);
}

inline DenseMatrix mp_rga_scaled_ones3_exact() {
  return ucrga::scaled(DenseMatrix{{4, 1, 1}, {1, 0.25, 0.25}, {1, 0.25, 0.25}}, 1.0 / 9.0);
}

inline std::string data_path(const std::string& name) { return std::string(UCRGA_DATA_DIR) + "/" + name; }

}  // namespace fixtures
