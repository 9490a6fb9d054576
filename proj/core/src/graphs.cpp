#include "cyc/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cyc {

int multigraph::edge_index(const std::string& label) const {
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

bool graph_connected(const multigraph& g) {
  if (g.num_vertices == 0) return false;
  std::vector<int> stack = {0};
  std::vector<bool> seen(g.num_vertices, false);
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges) {
      int to = -1;
      if (e.u == u && !seen[e.v]) to = e.v;
      if (e.v == u && !seen[e.u]) to = e.u;
      if (to >= 0) {
        seen[to] = true;
        ++count;
        stack.push_back(to);
      }
    }
  }
  return count == g.num_vertices;
}

gf2_matrix incidence_matrix(const multigraph& g) {
  gf2_matrix m;
  m.rows = g.num_vertices;
  m.cols = static_cast<int>(g.edges.size());
  m.row.assign(m.rows, 0);
  for (int j = 0; j < m.cols; ++j) {
    const auto& e = g.edges[j];
    if (e.u == e.v) continue;  // loop: zero column
    m.row[e.u] |= bits(1) << j;
    m.row[e.v] |= bits(1) << j;
  }
  return m;
}

namespace {

ground_set edge_ground(const multigraph& g) {
  std::vector<std::string> labels;
  for (const auto& e : g.edges) labels.push_back(e.label);
  return ground_set(std::move(labels));
}

}  // namespace

binary_matroid cycle_matroid(const multigraph& g, const caps&) {
  if (g.edges.empty()) fail(errc::invalid_argument, "graph has no edges");
  try {
    return from_gf2_matrix(incidence_matrix(g), edge_ground(g));
  } catch (const error& e) {
    if (e.code() == errc::free_matroid)
      fail(errc::free_result, "graph has no cycle: its cycle matroid is free");
    throw;
  }
}

binary_matroid cographic_matroid_any(const multigraph& g) {
  if (g.edges.empty()) fail(errc::invalid_argument, "graph has no edges");
  // Rows spanning the cycle space of G; the kernel of this matrix is the cut
  // space, which is the cycle space of M(G)*.
  std::vector<bits> basis = gf2_kernel_basis(incidence_matrix(g));
  gf2_matrix rep;
  rep.rows = static_cast<int>(basis.size());
  rep.cols = static_cast<int>(g.edges.size());
  rep.row = std::move(basis);
  return binary_matroid(edge_ground(g), std::move(rep));
}

binary_matroid cographic_matroid(const multigraph& g, const caps&) {
  if (g.edges.empty()) fail(errc::invalid_argument, "graph has no edges");
  if (!graph_connected(g))
    fail(errc::disconnected,
         "cographic matroids require a connected graph; take per-component direct sums instead");
  if (gf2_kernel_basis(incidence_matrix(g)).empty())
    fail(errc::free_result, "forests are rejected: every element of M(G)* would be a loop");
  return cographic_matroid_any(g);
}

cycle_set eulerian_subgraphs(const multigraph& g, const caps& c) {
  return cycles(matroid(cycle_matroid(g, c)), c);
}

cycle_set cut_sets(const multigraph& g, const caps& c) {
  if (g.edges.empty()) fail(errc::invalid_argument, "graph has no edges");
  if (!graph_connected(g)) fail(errc::disconnected, "cut enumeration requires a connected graph");
  const int nv = g.num_vertices;
  if (nv - 1 > 62 || (std::uint64_t(1) << (nv - 1)) > c.max_cycles)
    fail(errc::cap_exceeded, "too many vertex subsets");
  cycle_set out;
  out.ground = edge_ground(g);
  std::set<bits> vectors;
  // Fix vertex 0 outside A: A and its complement give the same cut vector.
  for (bits a = 0; a < (bits(1) << (nv - 1)); ++a) {
    bits side = a << 1;  // vertex 0 stays out
    bits cut = 0;
    for (size_t j = 0; j < g.edges.size(); ++j) {
      const auto& e = g.edges[j];
      if (e.u == e.v) continue;
      if (contains(side, e.u) != contains(side, e.v)) cut |= bits(1) << j;
    }
    vectors.insert(cut);
  }
  out.cycles.assign(vectors.begin(), vectors.end());
  std::sort(out.cycles.begin(), out.cycles.end(), set_less);
  return out;
}

// -- neighborhood minors ----------------------------------------------------------

namespace {

void validate_partition(const multigraph& g, const neighborhood_minor_spec& spec) {
  std::vector<int> mark(g.num_vertices, 0);
  if (spec.w.empty() || spec.wprime.empty())
    fail(errc::invalid_argument, "W and W' must be non-empty");
  for (int x : spec.w) {
    if (x < 0 || x >= g.num_vertices) fail(errc::invalid_argument, "W vertex out of range");
    mark[x] += 1;
  }
  for (int x : spec.wprime) {
    if (x < 0 || x >= g.num_vertices) fail(errc::invalid_argument, "W' vertex out of range");
    mark[x] += 1;
  }
  for (int x = 0; x < g.num_vertices; ++x) {
    if (mark[x] != 1) fail(errc::invalid_argument, "W and W' must partition the vertex set");
  }
  if (std::find(spec.w.begin(), spec.w.end(), spec.v) == spec.w.end())
    fail(errc::invalid_argument, "v must lie in W");
}

}  // namespace

bool is_neighborhood_minor(const multigraph& g, const neighborhood_minor_spec& spec) {
  validate_partition(g, spec);
  std::set<int> w(spec.w.begin(), spec.w.end());
  std::set<int> wp(spec.wprime.begin(), spec.wprime.end());
  std::set<int> closed_nbhd = {spec.v};  // N_H[v]
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    if (e.u == spec.v && w.count(e.v)) closed_nbhd.insert(e.v);
    if (e.v == spec.v && w.count(e.u)) closed_nbhd.insert(e.u);
  }
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    int in_w = -1;
    if (w.count(e.u) && wp.count(e.v)) in_w = e.u;
    if (w.count(e.v) && wp.count(e.u)) in_w = e.v;
    if (in_w >= 0 && !closed_nbhd.count(in_w)) return false;
  }
  return true;
}

namespace {

multigraph remove_edge_at(const multigraph& g, int index) {
  multigraph out = g;
  out.edges.erase(out.edges.begin() + index);
  return out;
}

multigraph contract_keep(const multigraph& g, int index, int survivor) {
  const auto e = g.edges[index];
  int gone = e.u == survivor ? e.v : e.u;
  multigraph out;
  out.num_vertices = g.num_vertices;  // vertex ids are stable; `gone` just ends up isolated
  for (size_t j = 0; j < g.edges.size(); ++j) {
    if (static_cast<int>(j) == index) continue;
    auto edge = g.edges[j];
    if (edge.u == gone) edge.u = survivor;
    if (edge.v == gone) edge.v = survivor;
    out.edges.push_back(edge);
  }
  return out;
}

std::vector<std::vector<int>> induced_components(const multigraph& g, const std::set<int>& verts) {
  std::map<int, int> parent;
  for (int v : verts) parent[v] = v;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    if (e.u != e.v && verts.count(e.u) && verts.count(e.v)) parent[find(e.u)] = find(e.v);
  }
  std::map<int, std::vector<int>> groups;
  for (int v : verts) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, vs] : groups) {
    std::sort(vs.begin(), vs.end());
    out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

multigraph induced_subgraph(const multigraph& g, const std::set<int>& verts) {
  multigraph out;
  out.num_vertices = g.num_vertices;
  for (const auto& e : g.edges) {
    if (verts.count(e.u) && verts.count(e.v)) out.edges.push_back(e);
  }
  return out;
}

}  // namespace

minor_witness neighborhood_minor_witness(const multigraph& g, const neighborhood_minor_spec& spec,
                                         const caps& c) {
  if (!is_neighborhood_minor(g, spec))
    fail(errc::not_a_neighborhood_minor, "the neighborhood containment fails for this (W, W', v)");
  std::set<int> w_set(spec.w.begin(), spec.w.end());
  multigraph target_graph = induced_subgraph(g, w_set);
  if (target_graph.edges.empty())
    fail(errc::invalid_argument, "G_W has no edges: its cographic matroid is not constructible");

  std::vector<minor_step> steps;
  multigraph cur = g;
  const int v = spec.v;

  for (const auto& component : induced_components(g, std::set<int>(spec.wprime.begin(), spec.wprime.end()))) {
    std::set<int> k(component.begin(), component.end());
    // Adjacency of the component to the rest of the current graph.
    bool touches_rest = false;
    for (const auto& e : cur.edges) {
      if (e.u == e.v) continue;
      if ((k.count(e.u) && !k.count(e.v)) || (k.count(e.v) && !k.count(e.u))) touches_rest = true;
    }

    if (!touches_rest) {
      std::vector<std::string> internal;
      for (const auto& e : cur.edges) {
        if (k.count(e.u) && k.count(e.v)) internal.push_back(e.label);
      }
      for (const auto& label : internal) cur = remove_edge_at(cur, cur.edge_index(label));
      if (!internal.empty()) steps.push_back({step_kind::del, internal, {}});
      continue;
    }

    // Loop edges inside the component are coloops of the cographic matroid;
    // clear them first (contractions below can only create more).
    bool swept_initial = true;
    while (swept_initial) {
      swept_initial = false;
      for (size_t j = 0; j < cur.edges.size(); ++j) {
        if (cur.edges[j].u == cur.edges[j].v && k.count(cur.edges[j].u)) {
          steps.push_back({step_kind::coloop_contract, {cur.edges[j].label}, {}});
          cur = remove_edge_at(cur, static_cast<int>(j));
          swept_initial = true;
          break;
        }
      }
    }

    // (i) Contract the component to a single vertex. Each graph contraction
    // is a deletion in M(G)*; each loop that appears is a coloop there.
    std::set<int> live = k;
    while (live.size() > 1) {
      int pick = -1;
      for (size_t j = 0; j < cur.edges.size(); ++j) {
        const auto& e = cur.edges[j];
        if (e.u != e.v && live.count(e.u) && live.count(e.v)) {
          pick = static_cast<int>(j);
          break;
        }
      }
      if (pick < 0) fail(errc::property_violation, "component lost connectivity during contraction");
      const auto edge = cur.edges[pick];
      int survivor = std::min(edge.u, edge.v);
      int gone = std::max(edge.u, edge.v);
      steps.push_back({step_kind::del, {edge.label}, {}});
      cur = contract_keep(cur, pick, survivor);
      live.erase(gone);
      // Sweep loops created at the survivor.
      bool swept = true;
      while (swept) {
        swept = false;
        for (size_t j = 0; j < cur.edges.size(); ++j) {
          if (cur.edges[j].u == cur.edges[j].v && k.count(cur.edges[j].u)) {
            steps.push_back({step_kind::coloop_contract, {cur.edges[j].label}, {}});
            cur = remove_edge_at(cur, static_cast<int>(j));
            swept = true;
            break;
          }
        }
      }
    }
    const int merged = *live.begin();

    // Merge parallel bundles out of the merged vertex: extra copies are
    // coparallel elements of the cographic matroid.
    std::map<int, std::vector<std::string>> bundles;  // neighbor -> labels
    for (const auto& e : cur.edges) {
      if (e.u == merged && e.v != merged) bundles[e.v].push_back(e.label);
      if (e.v == merged && e.u != merged) bundles[e.u].push_back(e.label);
    }
    for (auto& [u, labels] : bundles) {
      std::sort(labels.begin(), labels.end());
      for (size_t i = 1; i < labels.size(); ++i) {
        steps.push_back({step_kind::series_contract, {labels[i]}, {}});
        cur = remove_edge_at(cur, cur.edge_index(labels[i]));
        }
      labels.resize(1);
    }

    if (bundles.count(v)) {
      // (ii), case 1: contract the edge {v, merged}; the former star edges of
      // the merged vertex become parallel to H-edges and are series-contracted.
      std::string bridge = bundles[v][0];
      std::vector<std::string> star;
      for (const auto& e : cur.edges) {
        if (e.label == bridge) continue;
        if (e.u == merged || e.v == merged) star.push_back(e.label);
      }
      std::sort(star.begin(), star.end());
      steps.push_back({step_kind::del, {bridge}, {}});
      cur = contract_keep(cur, cur.edge_index(bridge), v);
      for (const auto& label : star) {
        int idx = cur.edge_index(label);
        const auto& e = cur.edges[idx];
        int other = e.u == v ? e.v : e.u;
        bool has_partner = false;
        for (const auto& h : cur.edges) {
          if (h.label != label && ((h.u == v && h.v == other) || (h.v == v && h.u == other)))
            has_partner = true;
        }
        if (e.u == e.v || !has_partner)
          fail(errc::property_violation, "star edge has no parallel partner after contraction");
        steps.push_back({step_kind::series_contract, {label}, {}});
        cur = remove_edge_at(cur, idx);
      }
    } else if (!bundles.empty()) {
      // (ii), case 2: binary matroidal retract on the star of the merged
      // vertex, paired with the corresponding edges at v.
      std::vector<std::string> eprime, paired;
      for (const auto& [u, labels] : bundles) {
        std::string at_v;
        for (const auto& h : cur.edges) {
          if ((h.u == v && h.v == u) || (h.v == v && h.u == u)) {
            if (at_v.empty() || h.label < at_v) at_v = h.label;
          }
        }
        if (at_v.empty())
          fail(errc::property_violation, "missing edge between v and a neighbor of the merged vertex");
        eprime.push_back(labels[0]);
        paired.push_back(at_v);
      }
      steps.push_back({step_kind::binary_retract, eprime, paired});
      for (const auto& label : eprime) cur = remove_edge_at(cur, cur.edge_index(label));
    }
  }

  minor_witness witness;
  witness.steps = std::move(steps);
  for (const auto& e : target_graph.edges) witness.final_iso.emplace_back(e.label, e.label);

  // Replay on the cographic side and insist on an exact match.
  matroid start(cographic_matroid_any(g));
  matroid finish = replay_witness(start, witness, c);
  matroid target(cographic_matroid_any(target_graph));
  if (!(finish.ground() == target.ground()) || circuits(finish, c) != circuits(target, c))
    fail(errc::property_violation, "replayed witness does not reproduce M(G_W)*");
  return witness;
}

// -- series-parallel recognition -----------------------------------------------------

namespace {

struct articulation_scan {
  const multigraph& g;
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge index)
  std::vector<int> depth, low;
  std::vector<bool> seen;
  bool has_articulation = false;

  explicit articulation_scan(const multigraph& graph) : g(graph) {
    adj.resize(g.num_vertices);
    for (size_t j = 0; j < g.edges.size(); ++j) {
      const auto& e = g.edges[j];
      if (e.u == e.v) continue;
      adj[e.u].emplace_back(e.v, static_cast<int>(j));
      adj[e.v].emplace_back(e.u, static_cast<int>(j));
    }
    depth.assign(g.num_vertices, 0);
    low.assign(g.num_vertices, 0);
    seen.assign(g.num_vertices, false);
  }

  void dfs(int u, int parent_edge, int d) {
    seen[u] = true;
    depth[u] = low[u] = d;
    int children = 0;
    for (auto [to, idx] : adj[u]) {
      if (idx == parent_edge) continue;
      if (!seen[to]) {
        ++children;
        dfs(to, idx, d + 1);
        low[u] = std::min(low[u], low[to]);
        if (d > 0 && low[to] >= depth[u]) has_articulation = true;
      } else {
        low[u] = std::min(low[u], depth[to]);
      }
    }
    if (d == 0 && children > 1) has_articulation = true;
  }
};

bool two_connected(const multigraph& g) {
  if (g.num_vertices < 2) return false;
  if (!graph_connected(g)) return false;
  articulation_scan scan(g);
  scan.dfs(0, -1, 0);
  return !scan.has_articulation;
}

multigraph k4_graph() {
  multigraph g;
  g.num_vertices = 4;
  int id = 0;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) g.edges.push_back({u, v, "k4e" + std::to_string(++id)});
  }
  return g;
}

}  // namespace

bool is_series_parallel(const multigraph& g, const caps& c) {
  if (!two_connected(g)) fail(errc::not_two_connected, "series-parallel test requires a 2-connected graph");
  matroid m(cycle_matroid(g, c));
  matroid k4(cycle_matroid(k4_graph(), c));
  return minor_free(m, k4, minor_kind::general, c);
}

multigraph edge_delete(const multigraph& g, const std::string& label) {
  int idx = g.edge_index(label);
  if (idx < 0) fail(errc::invalid_argument, "no edge labeled " + label);
  return remove_edge_at(g, idx);
}

multigraph edge_contract(const multigraph& g, const std::string& label) {
  int idx = g.edge_index(label);
  if (idx < 0) fail(errc::invalid_argument, "no edge labeled " + label);
  const auto& e = g.edges[idx];
  if (e.u == e.v) return remove_edge_at(g, idx);  // contracting a loop deletes it
  return contract_keep(g, idx, std::min(e.u, e.v));
}

}  // namespace cyc
