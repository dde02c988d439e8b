#include "okbody/linalg.hpp"

#include <cassert>
#include <utility>

namespace okbody {

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, RatVector(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Rat determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rat factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(RatMatrix m) {
  const std::size_t n = m.size();
  RatMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat p = m[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rat factor = m[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[row][k] -= factor * m[col][k];
        inv[row][k] -= factor * inv[col][k];
      }
    }
  }
  return inv;
}

RatVector multiply(const RatMatrix& m, const RatVector& v) {
  RatVector out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    assert(m[i].size() == v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

Inertia inertia(RatMatrix a) {
  // Symmetric elimination a -> S a S^T; each step keeps the matrix symmetric.
  Inertia result;
  std::size_t n = a.size();
  std::size_t k = 0;
  while (k < n) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][pivot] == 0) ++pivot;
    if (pivot == n) {
      // Zero diagonal: combine rows/cols i,j with a_ij != 0 to create a pivot.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (a[i][j] == 0) continue;
          for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
          for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
          pivot = i;
          found = true;
        }
      }
      if (!found) {
        result.zero += static_cast<int>(n - k);
        break;
      }
    }
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      for (auto& row : a) std::swap(row[pivot], row[k]);
    }
    const Rat p = a[k][k];
    if (p > 0) ++result.positive;
    else ++result.negative;
    // Schur complement on the trailing block.
    const RatVector column = [&] {
      RatVector c(n);
      for (std::size_t r = 0; r < n; ++r) c[r] = a[r][k];
      return c;
    }();
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) a[r][c] -= column[r] * column[c] / p;
      a[r][k] = 0;
      a[k][r] = 0;
    }
    ++k;
  }
  return result;
}

bool is_negative_definite(const RatMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix minor(k, RatVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[i][j];
    const int s = sgn(determinant(std::move(minor)));
    const int expected = (k % 2 == 1) ? -1 : 1;
    if (s != expected) return false;
  }
  return true;
}

}  // namespace okbody
