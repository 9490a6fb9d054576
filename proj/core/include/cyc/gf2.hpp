#ifndef CYC_GF2_HPP
#define CYC_GF2_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace cyc {

/// Subset of a ground set with at most 64 elements; bit i is element i.
using bits = std::uint64_t;

inline int popcount(bits b) { return std::popcount(b); }
inline int lowest_bit(bits b) { return std::countr_zero(b); }
inline bool contains(bits set, int e) { return (set >> e) & 1u; }
inline bits full_mask(int n) { return n >= 64 ? ~bits(0) : (bits(1) << n) - 1; }

/// Canonical order on element sets: by size, then by bit pattern as an
/// integer (element 0 least significant).
inline bool set_less(bits a, bits b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

/// Dense GF(2) matrix with at most 64 columns; each row is a bitmask.
struct gf2_matrix {
  int rows = 0;
  int cols = 0;
  std::vector<bits> row;

  bool get(int r, int c) const { return (row[r] >> c) & 1u; }
  void set(int r, int c) { row[r] |= bits(1) << c; }
};

struct gf2_rref_result {
  gf2_matrix mat;           // reduced row-echelon form, zero rows dropped
  int rank = 0;
  std::vector<int> pivots;  // pivot column of each retained row, increasing
};

/// Reduced row-echelon form with the leftmost-pivot rule; deterministic.
gf2_rref_result gf2_rref(const gf2_matrix& m);

/// Basis of the right kernel mod 2; each vector is a bitmask over columns.
/// Size equals cols - rank.
std::vector<bits> gf2_kernel_basis(const gf2_matrix& m);

int gf2_rank(const gf2_matrix& m);

/// Rank of the matrix restricted to the columns in `mask`.
int gf2_rank_submatrix(const gf2_matrix& m, bits mask);

/// Whether v lies in the row space of an already reduced matrix.
bool gf2_in_rowspace(const gf2_rref_result& r, bits v);

}  // namespace cyc

#endif
