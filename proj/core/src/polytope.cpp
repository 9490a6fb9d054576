#include "cyc/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cyc/minors.hpp"

namespace cyc {

namespace {

zvec vertex_to_zvec(bits v, int n) {
  zvec out(n, 0);
  for (int i = 0; i < n; ++i) {
    if (contains(v, i)) out[i] = 1;
  }
  return out;
}

qvec vertex_to_qvec(bits v, int n) {
  qvec out(n, 0);
  for (int i = 0; i < n; ++i) {
    if (contains(v, i)) out[i] = 1;
  }
  return out;
}

}  // namespace

qvec affine_map::apply(const qvec& x) const {
  qvec y = offset;
  for (size_t r = 0; r < matrix.size(); ++r) {
    for (size_t c = 0; c < matrix[r].size(); ++c) {
      if (matrix[r][c] != 0 && x[c] != 0) y[r] += matrix[r][c] * x[c];
    }
  }
  return y;
}

qvec affine_map::apply_vertex(bits v, int source_dim) const {
  return apply(vertex_to_qvec(v, source_dim));
}

bool affine_map::is_integral() const {
  for (const auto& row : matrix) {
    for (const auto& x : row) {
      if (x.get_den() != 1) return false;
    }
  }
  for (const auto& x : offset) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

cycle_polytope cycle_polytope_of(const matroid& m, const caps& c) {
  cycle_set cs = cycles(m, c);
  return cycle_polytope{cs.ground, std::move(cs.cycles)};
}

int dimension(const cycle_polytope& p) {
  // Cycle polytopes contain the zero vertex, so the affine dimension is the
  // linear rank of the vertex vectors.
  const int n = p.ambient.size();
  zmat rows;
  rows.reserve(p.vertices.size());
  for (bits v : p.vertices) rows.push_back(vertex_to_zvec(v, n));
  return rational_rank(rows);
}

std::pair<cycle_polytope, affine_map> face_of_deletion(const matroid& m, int e, const caps& c) {
  if (e < 0 || e >= m.size()) fail(errc::invalid_argument, "element out of range");
  cycle_polytope big = cycle_polytope_of(m, c);
  matroid deleted = delete_elements(m, bits(1) << e, c);
  cycle_polytope small = cycle_polytope_of(deleted, c);
  const int n = m.size();

  affine_map inclusion;
  inclusion.matrix.assign(n, qvec(n - 1, 0));
  inclusion.offset.assign(n, 0);
  for (int i = 0, j = 0; i < n; ++i) {
    if (i == e) continue;
    inclusion.matrix[i][j] = 1;
    ++j;
  }

  // The image must be exactly the vertices of P_Cyc(M) on the hyperplane
  // x_e = 0; anything else is an implementation bug.
  std::vector<bits> image;
  for (bits v : small.vertices) {
    bits lifted = 0;
    for (int i = 0, j = 0; i < n; ++i) {
      if (i == e) continue;
      if (contains(v, j)) lifted |= bits(1) << i;
      ++j;
    }
    image.push_back(lifted);
  }
  std::sort(image.begin(), image.end(), set_less);
  std::vector<bits> face;
  for (bits v : big.vertices) {
    if (!contains(v, e)) face.push_back(v);
  }
  if (image != face)
    fail(errc::property_violation, "deletion face does not match the x_e = 0 vertex set");
  return {std::move(small), std::move(inclusion)};
}

affine_map iso_of_series_or_coloop_contraction(const matroid& m, int e, const caps& c) {
  if (e < 0 || e >= m.size()) fail(errc::invalid_argument, "element out of range");
  const int n = m.size();
  int partner = -1;
  bool coloop_case = contains(coloops(m), e);
  if (!coloop_case) {
    for (int f = 0; f < n && partner < 0; ++f) {
      if (f != e && is_two_cocircuit(m, e, f)) partner = f;
    }
    if (partner < 0)
      fail(errc::not_applicable, "element is neither a coloop nor in a 2-cocircuit");
  }

  affine_map phi;
  phi.matrix.assign(n, qvec(n - 1, 0));
  phi.offset.assign(n, 0);
  auto source_index = [&](int original) { return original < e ? original : original - 1; };
  for (int i = 0; i < n; ++i) {
    if (i == e) {
      if (!coloop_case) phi.matrix[i][source_index(partner)] = 1;
      // coloop: the e-th coordinate of every vertex is zero
    } else {
      phi.matrix[i][source_index(i)] = 1;
    }
  }

  // Verify the claimed vertex bijection.
  cycle_polytope big = cycle_polytope_of(m, c);
  cycle_polytope small = cycle_polytope_of(contract_elements(m, bits(1) << e, c), c);
  std::vector<bits> image;
  for (bits v : small.vertices) {
    bits lifted = 0;
    for (int i = 0; i < n; ++i) {
      if (i == e) {
        if (!coloop_case && contains(v, source_index(partner))) lifted |= bits(1) << i;
      } else if (contains(v, source_index(i))) {
        lifted |= bits(1) << i;
      }
    }
    image.push_back(lifted);
  }
  std::sort(image.begin(), image.end(), set_less);
  if (image != big.vertices)
    fail(errc::property_violation, "contraction map is not a vertex bijection");
  return phi;
}

std::optional<affine_map> affine_vertex_bijection(const cycle_polytope& p, const cycle_polytope& q,
                                                  const caps& c) {
  if (p.vertex_count() != q.vertex_count()) return std::nullopt;
  if (dimension(p) != dimension(q)) return std::nullopt;
  const int a = p.ambient.size();
  const int b = q.ambient.size();
  const int nv = p.vertex_count();

  // Affine basis of p anchored at its first vertex (the zero vertex for
  // cycle polytopes), built greedily in canonical order.
  const bits anchor = p.vertices.front();
  std::vector<int> basis;  // indices into p.vertices
  {
    zmat rows;
    for (int i = 1; i < nv; ++i) {
      zvec diff = vertex_to_zvec(p.vertices[i], a);
      zvec base = vertex_to_zvec(anchor, a);
      for (int j = 0; j < a; ++j) diff[j] -= base[j];
      rows.push_back(diff);
      if (rational_rank(rows) == static_cast<int>(basis.size()) + 1) {
        basis.push_back(i);
      } else {
        rows.pop_back();
      }
    }
  }
  const int k = static_cast<int>(basis.size());

  qmat basis_rows(k, qvec(a, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < a; ++j)
      basis_rows[i][j] = mpq_class(contains(p.vertices[basis[i]], j) ? 1 : 0) -
                         mpq_class(contains(anchor, j) ? 1 : 0);
  }

  std::set<std::vector<mpq_class>> q_vertex_set;
  for (bits v : q.vertices) q_vertex_set.insert(vertex_to_qvec(v, b));

  std::uint64_t budget = c.affine_budget;
  std::vector<int> assignment(k, 0);  // q-vertex index per basis vertex

  for (int anchor_q = 0; anchor_q < nv; ++anchor_q) {
    // Iterate over all assignments of the k basis vertices.
    std::fill(assignment.begin(), assignment.end(), 0);
    while (true) {
      if (budget-- == 0) fail(errc::cap_exceeded, "affine bijection search budget exhausted");
      // Solve for the linear part row by row: L * basis_i = q_i - q_anchor.
      affine_map candidate;
      candidate.matrix.assign(b, qvec(a, 0));
      candidate.offset = vertex_to_qvec(q.vertices[anchor_q], b);
      bool solvable = true;
      for (int r = 0; r < b && solvable; ++r) {
        qvec rhs(k);
        for (int i = 0; i < k; ++i) {
          rhs[i] = mpq_class(contains(q.vertices[assignment[i]], r) ? 1 : 0) -
                   mpq_class(contains(q.vertices[anchor_q], r) ? 1 : 0);
        }
        auto sol = solve_rational(basis_rows, rhs);
        if (!sol) {
          solvable = false;
          break;
        }
        candidate.matrix[r] = *sol;
      }
      if (solvable) {
        // candidate maps x to L(x - anchor) + q_anchor; fold the anchor into
        // the offset.
        qvec anchor_vec = vertex_to_qvec(anchor, a);
        qvec shift = candidate.offset;
        for (int r = 0; r < b; ++r) {
          for (int j = 0; j < a; ++j) shift[r] -= candidate.matrix[r][j] * anchor_vec[j];
        }
        candidate.offset = shift;
        std::set<std::vector<mpq_class>> images;
        bool bijective = true;
        for (bits v : p.vertices) {
          qvec img = candidate.apply_vertex(v, a);
          if (!q_vertex_set.count(img) || !images.insert(img).second) {
            bijective = false;
            break;
          }
        }
        if (bijective) return candidate;
      }
      // advance the assignment vector
      int pos = k - 1;
      while (pos >= 0 && assignment[pos] == nv - 1) {
        assignment[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++assignment[pos];
    }
  }
  return std::nullopt;
}

std::vector<std::vector<bits>> enumerate_faces_small(const cycle_polytope& p, const caps&) {
  const int nv = p.vertex_count();
  if (nv > 16) fail(errc::cap_exceeded, "face enumeration capped at 16 vertices");
  const int a = p.ambient.size();

  // Affine coordinates relative to a greedy basis anchored at the first vertex.
  const bits anchor = p.vertices.front();
  std::vector<int> basis;
  {
    zmat rows;
    for (int i = 1; i < nv; ++i) {
      zvec diff = vertex_to_zvec(p.vertices[i], a);
      zvec base = vertex_to_zvec(anchor, a);
      for (int j = 0; j < a; ++j) diff[j] -= base[j];
      rows.push_back(diff);
      if (rational_rank(rows) == static_cast<int>(basis.size()) + 1) {
        basis.push_back(i);
      } else {
        rows.pop_back();
      }
    }
  }
  const int k = static_cast<int>(basis.size());

  std::set<bits> face_masks;  // subsets of vertex indices
  const bits all = full_mask(nv);
  face_masks.insert(all);
  if (k > 0) {
    qmat basis_cols(a, qvec(k, 0));  // columns are basis difference vectors
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < a; ++j)
        basis_cols[j][i] = mpq_class(contains(p.vertices[basis[i]], j) ? 1 : 0) -
                           mpq_class(contains(anchor, j) ? 1 : 0);
    }
    qmat coords(nv);
    for (int v = 0; v < nv; ++v) {
      qvec diff(a);
      for (int j = 0; j < a; ++j)
        diff[j] = mpq_class(contains(p.vertices[v], j) ? 1 : 0) -
                  mpq_class(contains(anchor, j) ? 1 : 0);
      auto sol = solve_rational(basis_cols, diff);
      if (!sol) fail(errc::property_violation, "vertex outside its own affine hull");
      coords[v] = *sol;
    }

    // Candidate facet hyperplanes through k-subsets of vertices.
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::set<bits> facet_masks;
    while (true) {
      qmat rows(k, qvec(k + 1));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) rows[i][j] = coords[idx[i]][j];
        rows[i][k] = 1;
      }
      qmat kernel = rational_kernel_basis(rows);
      if (kernel.size() == 1) {
        const qvec& h = kernel[0];  // c . x - alpha with h = (c, -alpha)
        int sign = 0;
        bool supporting = true;
        bits on_plane = 0;
        for (int v = 0; v < nv && supporting; ++v) {
          mpq_class val = h[k];
          for (int j = 0; j < k; ++j) val += h[j] * coords[v][j];
          int s = sgn(val);
          if (s == 0) {
            on_plane |= bits(1) << v;
          } else if (sign == 0) {
            sign = s;
          } else if (s != sign) {
            supporting = false;
          }
        }
        if (supporting && sign != 0) facet_masks.insert(on_plane);
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == nv - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }

    // Close under intersection: every proper face is an intersection of facets.
    std::vector<bits> worklist(facet_masks.begin(), facet_masks.end());
    for (bits f : worklist) face_masks.insert(f);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<bits> current(face_masks.begin(), face_masks.end());
      for (bits f : current) {
        for (bits g : worklist) {
          bits meet = f & g;
          if (meet && !face_masks.count(meet)) {
            face_masks.insert(meet);
            grew = true;
          }
        }
      }
    }
  }

  std::vector<std::vector<bits>> out;
  for (bits mask : face_masks) {
    std::vector<bits> verts;
    for (int v = 0; v < nv; ++v) {
      if (contains(mask, v)) verts.push_back(p.vertices[v]);
    }
    out.push_back(std::move(verts));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
  return out;
}

}  // namespace cyc
