#ifndef CYC_POLYTOPE_HPP
#define CYC_POLYTOPE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cyc/intlin.hpp"
#include "cyc/matroid.hpp"

namespace cyc {

/// Vertex set of a cycle polytope: the characteristic vectors of Cyc(M),
/// stored as bitmasks over the ambient coordinates. Always contains 0.
struct cycle_polytope {
  ground_set ambient;
  std::vector<bits> vertices;  // canonical order

  int vertex_count() const { return static_cast<int>(vertices.size()); }
};

/// Exact affine map y = matrix x + offset.
struct affine_map {
  qmat matrix;  // target_dim x source_dim
  qvec offset;

  qvec apply(const qvec& x) const;
  qvec apply_vertex(bits v, int source_dim) const;
  bool is_integral() const;
};

cycle_polytope cycle_polytope_of(const matroid& m, const caps& c = {});

/// Affine dimension; equals d(M) for cycle polytopes (checked by tests).
int dimension(const cycle_polytope& p);

/// P_Cyc(M\e) together with the coordinate-inclusion morphism onto the face
/// of P_Cyc(M) cut out by x_e = 0; the image is verified to be exactly that
/// vertex set.
std::pair<cycle_polytope, affine_map> face_of_deletion(const matroid& m, int e, const caps& c = {});

/// The explicit vertex bijection P_Cyc(M/e) -> P_Cyc(M) when e is in a
/// 2-cocircuit (duplicate the partner coordinate) or a coloop (insert a zero
/// coordinate). Throws not_applicable otherwise.
affine_map iso_of_series_or_coloop_contraction(const matroid& m, int e, const caps& c = {});

/// Searches for an affine map carrying vertices(p) bijectively onto
/// vertices(q). Exhaustive over anchored assignments of an affine basis;
/// nullopt means none exists within the (checked) budget.
std::optional<affine_map> affine_vertex_bijection(const cycle_polytope& p, const cycle_polytope& q,
                                                  const caps& c = {});

/// All nonempty faces of a small polytope as vertex subsets (the improper
/// face included), via supporting-hyperplane enumeration in exact arithmetic.
/// Desk-scale helper for the verification suite; capped at 16 vertices.
std::vector<std::vector<bits>> enumerate_faces_small(const cycle_polytope& p, const caps& c = {});

}  // namespace cyc

#endif
