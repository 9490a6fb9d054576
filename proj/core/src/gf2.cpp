#include "cyc/gf2.hpp"

namespace cyc {

gf2_rref_result gf2_rref(const gf2_matrix& m) {
  gf2_rref_result out;
  std::vector<bits> rows = m.row;
  std::vector<bits> kept;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i) {
      if ((rows[i] >> c) & 1u) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = 0; i < m.rows; ++i) {
      if (i != r && ((rows[i] >> c) & 1u)) rows[i] ^= rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  kept.assign(rows.begin(), rows.begin() + r);
  out.mat.rows = r;
  out.mat.cols = m.cols;
  out.mat.row = std::move(kept);
  out.rank = r;
  out.pivots = std::move(pivots);
  return out;
}

std::vector<bits> gf2_kernel_basis(const gf2_matrix& m) {
  gf2_rref_result r = gf2_rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<bits> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    bits v = bits(1) << c;
    for (int i = 0; i < r.rank; ++i) {
      if ((r.mat.row[i] >> c) & 1u) v |= bits(1) << r.pivots[i];
    }
    basis.push_back(v);
  }
  return basis;
}

int gf2_rank(const gf2_matrix& m) { return gf2_rref(m).rank; }

int gf2_rank_submatrix(const gf2_matrix& m, bits mask) {
  gf2_matrix sub;
  sub.rows = m.rows;
  sub.cols = m.cols;
  sub.row.reserve(m.rows);
  for (bits r : m.row) sub.row.push_back(r & mask);
  return gf2_rank(sub);
}

bool gf2_in_rowspace(const gf2_rref_result& r, bits v) {
  for (int i = 0; i < r.rank; ++i) {
    if ((v >> r.pivots[i]) & 1u) v ^= r.mat.row[i];
  }
  return v == 0;
}

}  // namespace cyc
