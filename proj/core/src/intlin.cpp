#include "cyc/intlin.hpp"

#include <algorithm>
#include <cstdlib>

namespace cyc {

namespace {

size_t width(const zmat& rows) { return rows.empty() ? 0 : rows[0].size(); }

/// Integer row elimination: after the call, rows are in echelon shape with
/// `rank` pivot rows on top; all operations are unimodular.
int integer_echelon(zmat& rows) {
  const size_t m = rows.size();
  const size_t n = width(rows);
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    // Euclidean elimination within column c, rows r..m-1.
    while (true) {
      size_t best = m;
      for (size_t i = r; i < m; ++i) {
        if (rows[i][c] != 0 && (best == m || cmp(abs(rows[i][c]), abs(rows[best][c])) < 0)) best = i;
      }
      if (best == m) break;
      std::swap(rows[r], rows[best]);
      bool reduced_all = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q = rows[i][c] / rows[r][c];  // truncated division
        if (q != 0) {
          for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        if (rows[i][c] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (rows[r][c] != 0) ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int rational_rank(const zmat& rows) {
  zmat work = rows;
  return integer_echelon(work);
}

zmat integer_kernel_basis(const zmat& a) {
  const size_t rows_a = a.size();
  const size_t cols_a = rows_a == 0 ? 0 : a[0].size();
  // Row-reduce [a^T | I]; rows whose a^T part vanishes carry the kernel.
  zmat work(cols_a, zvec(rows_a + cols_a, 0));
  for (size_t i = 0; i < cols_a; ++i) {
    for (size_t j = 0; j < rows_a; ++j) work[i][j] = a[j][i];
    work[i][rows_a + i] = 1;
  }
  // Eliminate the a^T part only.
  const size_t m = work.size();
  size_t r = 0;
  for (size_t c = 0; c < rows_a && r < m; ++c) {
    while (true) {
      size_t best = m;
      for (size_t i = r; i < m; ++i) {
        if (work[i][c] != 0 && (best == m || cmp(abs(work[i][c]), abs(work[best][c])) < 0)) best = i;
      }
      if (best == m) break;
      std::swap(work[r], work[best]);
      bool reduced_all = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (work[i][c] == 0) continue;
        mpz_class q = work[i][c] / work[r][c];
        if (q != 0) {
          for (size_t j = 0; j < work[i].size(); ++j) work[i][j] -= q * work[r][j];
        }
        if (work[i][c] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (work[r][c] != 0) ++r;
  }
  zmat kernel;
  for (size_t i = r; i < m; ++i) {
    zvec v(work[i].begin() + rows_a, work[i].end());
    bool nonzero = false;
    mpz_class content = 0;
    for (const auto& x : v) {
      if (x != 0) nonzero = true;
      content = gcd(content, x);
    }
    if (!nonzero) continue;
    for (auto& x : v) x /= content;  // no-op for saturated kernels, canonical anyway
    for (const auto& x : v) {
      if (x != 0) {
        if (x < 0)
          for (auto& y : v) y = -y;
        break;
      }
    }
    kernel.push_back(std::move(v));
  }
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

zmat hermite_normal_form(zmat rows) {
  int rank = integer_echelon(rows);
  rows.resize(rank);
  const size_t n = width(rows);
  // Locate pivots, force them positive, reduce entries above.
  std::vector<size_t> pivot_col(rank);
  for (int i = 0; i < rank; ++i) {
    size_t c = 0;
    while (c < n && rows[i][c] == 0) ++c;
    pivot_col[i] = c;
    if (rows[i][c] < 0) {
      for (auto& x : rows[i]) x = -x;
    }
  }
  // Reduce above-pivot entries with increasing pivot index: row_i has zeros
  // left of its pivot, so earlier reductions stay intact.
  for (int k = 0; k < rank; ++k) {
    for (int i = k + 1; i < rank; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[k][pivot_col[i]].get_mpz_t(), rows[i][pivot_col[i]].get_mpz_t());
      if (q != 0) {
        for (size_t j = 0; j < n; ++j) rows[k][j] -= q * rows[i][j];
      }
    }
  }
  return rows;
}

std::optional<qvec> solve_rational(qmat a, qvec b) {
  const size_t m = a.size();
  const size_t n = m == 0 ? 0 : a[0].size();
  size_t r = 0;
  std::vector<size_t> pivot_of_row;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t pivot = m;
    for (size_t i = r; i < m; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == m) continue;
    std::swap(a[r], a[pivot]);
    std::swap(b[r], b[pivot]);
    mpq_class inv = 1 / a[r][c];
    for (size_t j = c; j < n; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_of_row.push_back(c);
    ++r;
  }
  for (size_t i = r; i < m; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  qvec x(n, 0);
  for (size_t i = 0; i < r; ++i) x[pivot_of_row[i]] = b[i];
  return x;
}

qmat rational_kernel_basis(qmat a) {
  const size_t m = a.size();
  const size_t n = m == 0 ? 0 : a[0].size();
  size_t r = 0;
  std::vector<size_t> pivot_cols;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t pivot = m;
    for (size_t i = r; i < m; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == m) continue;
    std::swap(a[r], a[pivot]);
    mpq_class inv = 1 / a[r][c];
    for (size_t j = c; j < n; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_cols) is_pivot[c] = true;
  qmat kernel;
  for (size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    qvec v(n, 0);
    v[c] = 1;
    for (size_t i = 0; i < r; ++i) v[pivot_cols[i]] = -a[i][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace cyc
