#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cyctest;

TEST_CASE("incidence matrices give loops zero columns") {
  multigraph g;
  g.num_vertices = 2;
  g.edges = {{0, 1, "a"}, {1, 1, "l"}};
  gf2_matrix inc = incidence_matrix(g);
  REQUIRE(inc.get(0, 0));
  REQUIRE(inc.get(1, 0));
  REQUIRE(!inc.get(0, 1));
  REQUIRE(!inc.get(1, 1));
}

TEST_CASE("cycle matroids of small graphs") {
  REQUIRE(circuits(matroid(cycle_matroid(fixture_graph("k3")))).size() == 1);
  auto k4_circuits = circuits(matroid(cycle_matroid(fixture_graph("k4"))));
  std::multiset<int> sizes;
  for (bits c : k4_circuits) sizes.insert(popcount(c));
  REQUIRE(sizes == std::multiset<int>{3, 3, 3, 3, 4, 4, 4});

  REQUIRE_THROWS_MATCHES(cycle_matroid(fixture_graph("p4")), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::free_result; }));
}

TEST_CASE("cographic matroids") {
  matroid k4_star(cographic_matroid(fixture_graph("k4")));
  REQUIRE(are_isomorphic(k4_star, fixture_matroid("k4")).has_value());

  matroid c4_star(cographic_matroid(fixture_graph("c4")));
  auto bonds = circuits(c4_star);
  REQUIRE(bonds.size() == 6);
  for (bits b : bonds) REQUIRE(popcount(b) == 2);
  // Cross-check against the brute-force bond oracle.
  REQUIRE(bonds == bonds_brute_force(fixture_graph("c4")));

  REQUIRE_THROWS_MATCHES(cographic_matroid(fixture_graph("p4")), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::free_result; }));

  multigraph disconnected;
  disconnected.num_vertices = 6;
  disconnected.edges = {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"},
                        {3, 4, "d"}, {4, 5, "e"}, {3, 5, "f"}};
  REQUIRE_THROWS_MATCHES(cographic_matroid(disconnected), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::disconnected; }));
}

TEST_CASE("Eulerian subgraphs match the even-degree brute force") {
  multigraph two_triangles;
  two_triangles.num_vertices = 6;
  two_triangles.edges = {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"},
                         {3, 4, "d"}, {4, 5, "e"}, {3, 5, "f"}};
  for (const multigraph& g : {fixture_graph("k4"), fixture_graph("c5"), fixture_graph("theta"),
                              fixture_graph("k4minus"), fixture_graph("trianglebridge"),
                              two_triangles}) {
    REQUIRE(eulerian_subgraphs(g).cycles == even_subgraphs_brute_force(g));
  }
  REQUIRE(eulerian_subgraphs(fixture_graph("k4")).count() == 8);
  REQUIRE(eulerian_subgraphs(fixture_graph("c5")).count() == 2);
  REQUIRE(eulerian_subgraphs(two_triangles).count() == 4);
}

TEST_CASE("cut sets match the cographic cycle space") {
  for (const char* name : {"k4", "c4", "c5", "theta", "k4minus"}) {
    multigraph g = fixture_graph(name);
    REQUIRE(cut_sets(g).cycles == cycles(matroid(cographic_matroid(g))).cycles);
  }
  REQUIRE(cut_sets(fixture_graph("k4")).count() == 8);
  REQUIRE(cut_sets(fixture_graph("k3")).count() == 4);
  REQUIRE(cut_sets(fixture_graph("p4")).count() == 8);  // every edge subset of a path is a cut
}

TEST_CASE("neighborhood minor recognition") {
  // K4: any triangle is a neighborhood minor of the whole graph.
  neighborhood_minor_spec spec{{0, 1, 2}, {3}, 0};
  REQUIRE(is_neighborhood_minor(fixture_graph("k4"), spec));

  // Disjoint unions always qualify.
  multigraph disjoint;
  disjoint.num_vertices = 5;
  disjoint.edges = {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}, {3, 4, "d"}};
  REQUIRE(is_neighborhood_minor(disjoint, {{0, 1, 2}, {3, 4}, 0}));

  // Path a-b-c-d with W = {a, d}: d is adjacent to W' but not to N_H[a].
  multigraph path = fixture_graph("p4");
  REQUIRE(!is_neighborhood_minor(path, {{0, 3}, {1, 2}, 0}));

  // 4-wheel with the hub removed: the rim's closed neighborhoods are too small.
  multigraph wheel;
  wheel.num_vertices = 5;
  wheel.edges = {{0, 1, "r1"}, {1, 2, "r2"}, {2, 3, "r3"}, {0, 3, "r4"},
                 {4, 0, "s1"}, {4, 1, "s2"}, {4, 2, "s3"}, {4, 3, "s4"}};
  neighborhood_minor_spec wheel_spec{{0, 1, 2, 3}, {4}, 0};
  REQUIRE(!is_neighborhood_minor(wheel, wheel_spec));
  REQUIRE_THROWS_MATCHES(neighborhood_minor_witness(wheel, wheel_spec), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::not_a_neighborhood_minor;
                         }));
}

TEST_CASE("neighborhood minor witness for the K4 apex") {
  multigraph k4 = fixture_graph("k4");
  neighborhood_minor_spec spec{{0, 1, 2}, {3}, 0};
  minor_witness w = neighborhood_minor_witness(k4, spec);  // replay-verified internally
  REQUIRE(!w.steps.empty());
  matroid replayed = replay_witness(matroid(cographic_matroid(k4)), w);
  auto bonds = circuits(replayed);
  REQUIRE(bonds.size() == 3);  // the triangle's cographic matroid
  for (bits b : bonds) REQUIRE(popcount(b) == 2);
}

TEST_CASE("disjoint components are removed by pure deletions") {
  multigraph disjoint;
  disjoint.num_vertices = 5;
  disjoint.edges = {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}, {3, 4, "d"}};
  minor_witness w = neighborhood_minor_witness(disjoint, {{0, 1, 2}, {3, 4}, 0});
  for (const auto& step : w.steps) REQUIRE(step.kind == step_kind::del);
}

TEST_CASE("the C4 neighborhood minor uses a binary retract") {
  // W' = the vertex opposite to v: its neighbors v1, v2 are in N_H(v), but v
  // itself is not adjacent to W', which is exactly case (2) of the proof.
  multigraph c4 = fixture_graph("c4");
  // c4 edges: e1=0-1, e2=1-2, e3=2-3, e4=3-0; take W' = {2}, v = 0.
  neighborhood_minor_spec spec{{0, 1, 3}, {2}, 0};
  REQUIRE(is_neighborhood_minor(c4, spec));
  minor_witness w = neighborhood_minor_witness(c4, spec);
  bool used_retract = false;
  for (const auto& step : w.steps) used_retract |= step.kind == step_kind::binary_retract;
  REQUIRE(used_retract);
}

TEST_CASE("a two-vertex component is contracted before the bridge case") {
  // K5 with W = {0,1,2}: the component {3,4} has an internal edge, so the
  // witness needs the contraction stage (deletion + parallel merges on the
  // cographic side) before the case-(1) bridge contraction at v.
  multigraph k5 = fixture_graph("k5");
  neighborhood_minor_spec spec{{0, 1, 2}, {3, 4}, 0};
  REQUIRE(is_neighborhood_minor(k5, spec));
  minor_witness w = neighborhood_minor_witness(k5, spec);
  bool has_delete = false, has_series = false;
  for (const auto& step : w.steps) {
    has_delete |= step.kind == step_kind::del;
    has_series |= step.kind == step_kind::series_contract;
  }
  REQUIRE(has_delete);
  REQUIRE(has_series);
  matroid end = replay_witness(matroid(cographic_matroid_any(k5)), w);
  auto bonds = circuits(end);
  REQUIRE(bonds.size() == 3);  // M(K3)* again
  for (bits b : bonds) REQUIRE(popcount(b) == 2);
}

TEST_CASE("disconnected W' mixes deletion-only and bridge components") {
  // K4 on {0,1,2,3} plus a detached triangle {4,5,6}: the component {3} goes
  // through the bridge case, the triangle through pure deletions.
  multigraph g = fixture_graph("k4");
  g.num_vertices = 7;
  g.edges.push_back({4, 5, "t1"});
  g.edges.push_back({5, 6, "t2"});
  g.edges.push_back({4, 6, "t3"});
  neighborhood_minor_spec spec{{0, 1, 2}, {3, 4, 5, 6}, 0};
  REQUIRE(is_neighborhood_minor(g, spec));
  minor_witness w = neighborhood_minor_witness(g, spec);
  bool deleted_triangle = false;
  for (const auto& step : w.steps) {
    if (step.kind == step_kind::del) {
      for (const auto& label : step.elems) deleted_triangle |= label == "t1";
    }
  }
  REQUIRE(deleted_triangle);
  matroid end = replay_witness(matroid(cographic_matroid_any(g)), w);
  REQUIRE(circuits(end).size() == 3);
}

TEST_CASE("loops on W' vertices are cleared as coloops") {
  // A triangle W with an attached vertex carrying a loop.
  multigraph g;
  g.num_vertices = 4;
  g.edges = {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}, {0, 3, "s"}, {3, 3, "loop"}};
  neighborhood_minor_spec spec{{0, 1, 2}, {3}, 0};
  REQUIRE(is_neighborhood_minor(g, spec));
  minor_witness w = neighborhood_minor_witness(g, spec);
  bool loop_contracted = false;
  for (const auto& step : w.steps) {
    if (step.kind == step_kind::coloop_contract && step.elems == std::vector<std::string>{"loop"})
      loop_contracted = true;
  }
  REQUIRE(loop_contracted);
}

TEST_CASE("witnessed neighborhood minors do not raise mu") {
  multigraph k4 = fixture_graph("k4");
  generator_report big = mu_report(matroid(cographic_matroid(k4)));
  generator_report small =
      cycle_ideal_report(cut_sets(fixture_graph("k3")), markov_method::saturation, 8);
  bool nondecreasing = !small.mu.has_value() || (big.mu.has_value() && *small.mu <= *big.mu);
  REQUIRE(nondecreasing);
}

TEST_CASE("series-parallel recognition") {
  REQUIRE(is_series_parallel(fixture_graph("c5")));
  REQUIRE(is_series_parallel(fixture_graph("c4")));
  REQUIRE(is_series_parallel(fixture_graph("k4minus")));
  REQUIRE(is_series_parallel(fixture_graph("theta")));
  REQUIRE(!is_series_parallel(fixture_graph("k4")));
  REQUIRE_THROWS_MATCHES(is_series_parallel(fixture_graph("trianglebridge")), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::not_two_connected; }));
  REQUIRE_THROWS_AS(is_series_parallel(fixture_graph("p4")), error);
}

TEST_CASE("edge deletion and contraction commute with the matroid operations") {
  multigraph k3 = fixture_graph("k3");
  multigraph contracted = edge_contract(k3, "12");
  REQUIRE(contracted.edges.size() == 2);
  bool doubled = (contracted.edges[0].u == contracted.edges[1].u &&
                  contracted.edges[0].v == contracted.edges[1].v) ||
                 (contracted.edges[0].u == contracted.edges[1].v &&
                  contracted.edges[0].v == contracted.edges[1].u);
  REQUIRE(doubled);

  multigraph tb = fixture_graph("trianglebridge");
  REQUIRE(!graph_connected(edge_delete(tb, "d")));  // deleting the bridge disconnects

  multigraph k4 = fixture_graph("k4");
  for (const auto& e : k4.edges) {
    // circuits(M(G/e)) = circuits(M(G)/e) and circuits(M(G\e)) = circuits(M(G)\e)
    matroid mg(cycle_matroid(k4));
    bits eb = set_of(mg, {e.label});
    REQUIRE(circuits(matroid(cycle_matroid(edge_contract(k4, e.label)))) ==
            circuits(contract_elements(mg, eb)));
    REQUIRE(circuits(matroid(cycle_matroid(edge_delete(k4, e.label)))) ==
            circuits(delete_elements(mg, eb)));
  }
}

TEST_CASE("loops survive graph contraction and become matroid loops") {
  multigraph k3 = fixture_graph("k3");
  multigraph contracted = edge_contract(k3, "12");  // doubled edge, still no loop
  multigraph again = edge_contract(contracted, contracted.edges[0].label);
  REQUIRE(again.edges.size() == 1);
  REQUIRE(again.edges[0].u == again.edges[0].v);  // the remaining parallel edge is now a loop
  matroid m(cycle_matroid(again));
  REQUIRE(loops(m) == 0b1);
}
