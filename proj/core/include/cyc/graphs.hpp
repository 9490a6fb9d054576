#ifndef CYC_GRAPHS_HPP
#define CYC_GRAPHS_HPP

#include <string>
#include <vector>

#include "cyc/matroid.hpp"
#include "cyc/minors.hpp"

namespace cyc {

/// Multigraph on vertices 0..num_vertices-1; loops and parallel edges are
/// permitted, labels are distinct.
struct multigraph {
  struct edge {
    int u, v;
    std::string label;
  };
  int num_vertices = 0;
  std::vector<edge> edges;

  int edge_index(const std::string& label) const;  // -1 when absent
};

bool graph_connected(const multigraph& g);

/// Vertex-edge incidence matrix over GF(2); loop edges give zero columns.
gf2_matrix incidence_matrix(const multigraph& g);

/// Cycle (polygon) matroid M(G). Throws free_result when G is a forest.
binary_matroid cycle_matroid(const multigraph& g, const caps& c = {});

/// Cographic matroid M(G)*: circuits are the bonds. Requires a connected
/// input (the Whitney normalization); forests are rejected.
binary_matroid cographic_matroid(const multigraph& g, const caps& c = {});

/// Edge sets of the Eulerian subgraphs = cycles of M(G).
cycle_set eulerian_subgraphs(const multigraph& g, const caps& c = {});

/// All cut vectors Cut(A), A over vertex subsets up to complement, including
/// the empty cut; equals cycles of M(G)*. Requires a connected input.
cycle_set cut_sets(const multigraph& g, const caps& c = {});

/// W, W' partition the vertices; H = G_W; the defining containment is
/// W cap N_G(W') subseteq N_H[v].
struct neighborhood_minor_spec {
  std::vector<int> w;
  std::vector<int> wprime;
  int v = 0;
};

bool is_neighborhood_minor(const multigraph& g, const neighborhood_minor_spec& spec);

/// The explicit g-series step sequence taking M(G)* to M(G_W)*: contract each
/// W'-component to a vertex (deletions and coloop contractions on the
/// cographic side), then either delete-the-bridge-edge plus series
/// contractions, or a binary matroidal retract on the star of the merged
/// vertex. Replay-verified before returning.
minor_witness neighborhood_minor_witness(const multigraph& g, const neighborhood_minor_spec& spec,
                                         const caps& c = {});

/// Cographic matroid without the connectivity/forest rejections, as a direct
/// sum over components; used by the witness machinery and tests.
binary_matroid cographic_matroid_any(const multigraph& g);

/// 2-connected and M(K4)-minor free. Throws not_two_connected otherwise.
bool is_series_parallel(const multigraph& g, const caps& c = {});

multigraph edge_delete(const multigraph& g, const std::string& label);
/// Identifies the endpoints of the edge and removes it; other edges between
/// the merged endpoints become loops and are retained.
multigraph edge_contract(const multigraph& g, const std::string& label);

}  // namespace cyc

#endif
