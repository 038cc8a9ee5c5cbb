#include "pi2/intmat.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace pi2 {

namespace {

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer matrix arithmetic overflow");
  }
  return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("integer matrix arithmetic overflow");
  }
  return r;
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer matrix arithmetic overflow");
  }
  return r;
}

// col_j -= q * col_c, applied to both the working matrix and the transform.
void eliminate_column(IntMat& M, IntMat& U, size_t j, size_t c, int64_t q, size_t start_row) {
  if (q == 0) {
    return;
  }
  for (size_t i = start_row; i < M.size(); ++i) {
    if (M[i][c] != 0) {
      M[i][j] = checked_sub(M[i][j], checked_mul(q, M[i][c]));
    }
  }
  for (auto& row : U) {
    if (row[c] != 0) {
      row[j] = checked_sub(row[j], checked_mul(q, row[c]));
    }
  }
}

void swap_columns(IntMat& M, IntMat& U, size_t a, size_t b, size_t start_row) {
  if (a == b) {
    return;
  }
  for (size_t i = start_row; i < M.size(); ++i) {
    std::swap(M[i][a], M[i][b]);
  }
  for (auto& row : U) {
    std::swap(row[a], row[b]);
  }
}

// Column echelon form of M with tracked unimodular U (M_out = M_in * U).
// Returns the number of pivot columns; columns >= that count are zero.
size_t column_echelon(IntMat& M, IntMat& U) {
  size_t m = M.size();
  size_t n = m == 0 ? 0 : M[0].size();
  U.assign(n, std::vector<int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    U[i][i] = 1;
  }
  size_t c = 0;
  for (size_t row = 0; row < m && c < n; ++row) {
    // Gcd-reduce the active columns on this row until one survives.
    while (true) {
      size_t best = n;
      for (size_t j = c; j < n; ++j) {
        if (M[row][j] != 0 && (best == n || std::llabs(M[row][j]) < std::llabs(M[row][best]))) {
          best = j;
        }
      }
      if (best == n) {
        break;  // row is zero on the active columns
      }
      swap_columns(M, U, c, best, row);
      bool cleared = true;
      for (size_t j = c + 1; j < n; ++j) {
        if (M[row][j] != 0) {
          int64_t q = M[row][j] / M[row][c];
          eliminate_column(M, U, j, c, q, row);
          if (M[row][j] != 0) {
            cleared = false;  // remainder left; another reduction round
          }
        }
      }
      if (cleared) {
        if (M[row][c] < 0) {
          for (size_t i = row; i < m; ++i) {
            M[i][c] = -M[i][c];
          }
          for (auto& urow : U) {
            urow[c] = -urow[c];
          }
        }
        ++c;
        break;
      }
    }
  }
  return c;
}

}  // namespace

std::vector<std::vector<int64_t>> integer_kernel_basis(IntMat M) {
  if (M.empty()) {
    return {};
  }
  size_t n = M[0].size();
  IntMat U;
  size_t rank = column_echelon(M, U);
  std::vector<std::vector<int64_t>> basis;
  for (size_t j = rank; j < n; ++j) {
    std::vector<int64_t> v(n);
    for (size_t i = 0; i < n; ++i) {
      v[i] = U[i][j];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<int64_t>> lattice_solve(IntMat A, std::vector<int64_t> const& b) {
  size_t m = A.size();
  if (m == 0) {
    return std::vector<int64_t>{};
  }
  size_t n = A[0].size();
  IntMat U;
  IntMat H = A;
  size_t rank = column_echelon(H, U);

  // Solve H z = b on the echelon columns.  Each pivot column has its first
  // nonzero entry strictly below the previous one's.
  std::vector<int64_t> residual = b;
  std::vector<int64_t> z(n, 0);
  size_t col = 0;
  for (size_t row = 0; row < m && col < rank; ++row) {
    if (H[row][col] == 0) {
      if (residual[row] != 0) {
        return std::nullopt;
      }
      continue;
    }
    if (residual[row] % H[row][col] != 0) {
      return std::nullopt;
    }
    int64_t q = residual[row] / H[row][col];
    z[col] = q;
    for (size_t i = row; i < m; ++i) {
      residual[i] = checked_sub(residual[i], checked_mul(q, H[i][col]));
    }
    ++col;
  }
  for (size_t i = 0; i < m; ++i) {
    if (residual[i] != 0) {
      return std::nullopt;
    }
  }
  // y = U z (only the first `rank` entries of z are nonzero).
  std::vector<int64_t> y(n, 0);
  for (size_t i = 0; i < n; ++i) {
    int64_t acc = 0;
    for (size_t j = 0; j < rank; ++j) {
      if (z[j] != 0 && U[i][j] != 0) {
        acc = checked_add(acc, checked_mul(z[j], U[i][j]));
      }
    }
    y[i] = acc;
  }
  return y;
}

}  // namespace pi2
