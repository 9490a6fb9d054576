#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cyctest;

namespace {

matroid u12() {
  return matroid(from_circuits({0b11}, ground_set({"a", "b"})));
}

const std::set<std::string> fano_circuit_labels = {
    // the seven lines
    "1,2,6", "1,3,5", "2,3,4", "2,5,7", "3,6,7", "1,4,7", "4,5,6",
    // and their complements
    "3,4,5,7", "2,4,6,7", "1,5,6,7", "1,3,4,6", "1,2,4,5", "2,3,5,6", "1,2,3,7"};

}  // namespace

TEST_CASE("vector matroid of the K4 incidence matrix has rank 3") {
  binary_matroid m = cycle_matroid(fixture_graph("k4"));
  REQUIRE(m.rank() == 3);
  REQUIRE(m.size() == 6);
}

TEST_CASE("free matrices are rejected") {
  REQUIRE_THROWS_MATCHES(from_gf2_matrix(matrix_from_strings({"10", "01"}), ground_set::numbered(2)),
                         error, Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::free_matroid;
                         }));
}

TEST_CASE("the Fano fixture reproduces the printed circuit list") {
  matroid fano = fixture_matroid("fano");
  auto circs = circuits(fano);
  REQUIRE(circs.size() == 14);
  REQUIRE(label_sets(circs, fano.ground()) == fano_circuit_labels);
}

TEST_CASE("circuits of the dual Fano matroid are the complements") {
  matroid fd = fixture_matroid("fanodual");
  auto circs = circuits(fd);
  REQUIRE(label_sets(circs, fd.ground()) ==
          std::set<std::string>{"3,4,5,7", "2,4,6,7", "1,5,6,7", "1,3,4,6", "1,2,4,5", "2,3,5,6",
                                "1,2,3,7"});
}

TEST_CASE("circuit matroid constructor accepts uniform circuits") {
  matroid u = fixture_matroid("u24");
  REQUIRE(circuits(u).size() == 4);
  REQUIRE(u.rank() == 2);
}

TEST_CASE("U_{1,3}: every 2-subset a circuit passes elimination") {
  auto m = from_circuits({0b011, 0b110, 0b101}, ground_set::numbered(3));
  REQUIRE(m.circuits().size() == 3);
}

TEST_CASE("inclusions among circuits are rejected") {
  REQUIRE_THROWS_MATCHES(from_circuits({0b01, 0b11}, ground_set::numbered(2)), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::axiom_violation; }));
}

TEST_CASE("an empty circuit list means a free matroid") {
  REQUIRE_THROWS_MATCHES(from_circuits({}, ground_set::numbered(2)), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::empty_circuit_list; }));
}

TEST_CASE("a violated elimination axiom is reported") {
  // {1,2} and {2,3} demand a circuit inside {1,3}; give none.
  REQUIRE_THROWS_AS(from_circuits({0b011, 0b110}, ground_set::numbered(3)), error);
}

TEST_CASE("cycles of binary matroids are the kernel supports") {
  matroid k4 = fixture_matroid("k4");
  cycle_set cs = cycles(k4);
  REQUIRE(cs.count() == 8);
  std::multiset<int> sizes;
  for (bits c : cs.cycles) sizes.insert(popcount(c));
  REQUIRE(sizes == std::multiset<int>{0, 3, 3, 3, 3, 4, 4, 4});

  matroid fd = fixture_matroid("fanodual");
  REQUIRE(cycles(fd).count() == 8);
  matroid k3 = fixture_matroid("k3");
  REQUIRE(cycles(k3).count() == 2);
}

TEST_CASE("cycles of circuit matroids are disjoint unions of circuits") {
  matroid u = fixture_matroid("u24");
  cycle_set cs = cycles(u);
  REQUIRE(cs.count() == 5);  // nothing is disjoint among the 3-subsets
  auto closure = cycle_closure_brute_force(circuits(u));
  REQUIRE(cs.cycles.size() == closure.size());
}

TEST_CASE("binary cycle enumeration agrees with the disjoint-union closure") {
  for (const char* name : {"k4", "c4", "fano", "fanodual", "trianglebridge", "theta"}) {
    matroid m = fixture_matroid(name);
    cycle_set cs = cycles(m);
    auto closure = cycle_closure_brute_force(circuits(m));
    std::set<bits> a(cs.cycles.begin(), cs.cycles.end());
    std::set<bits> b(closure.begin(), closure.end());
    REQUIRE(a == b);
  }
}

TEST_CASE("duality is an involution on circuits") {
  matroid fano = fixture_matroid("fano");
  REQUIRE(circuits(dual(dual(fano))) == circuits(fano));
}

TEST_CASE("M(K4) is self-dual") {
  matroid k4 = fixture_matroid("k4");
  REQUIRE(are_isomorphic(k4, dual(k4)).has_value());
}

TEST_CASE("the dual of U24 is U24") {
  matroid u = fixture_matroid("u24");
  matroid d = dual(u);
  REQUIRE(!d.is_binary_presented());
  REQUIRE(circuits(d) == circuits(u));  // all 3-subsets again
}

TEST_CASE("loops and coloops") {
  multigraph with_loop;
  with_loop.num_vertices = 3;
  with_loop.edges = {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}, {1, 1, "l"}};
  matroid m(cycle_matroid(with_loop));
  REQUIRE(loops(m) == set_of(m, {"l"}));
  REQUIRE(coloops(m) == 0);

  matroid tb = fixture_matroid("trianglebridge");
  REQUIRE(coloops(tb) == set_of(tb, {"d"}));
  REQUIRE(loops(tb) == 0);

  matroid fano = fixture_matroid("fano");
  REQUIRE(loops(fano) == 0);
  REQUIRE(coloops(fano) == 0);
}

TEST_CASE("coparallel classes of the Fano dual are singletons") {
  matroid fd = fixture_matroid("fanodual");
  auto classes = coparallel_classes(fd);
  REQUIRE(classes.size() == 7);
  for (bits cl : classes) REQUIRE(popcount(cl) == 1);
}

TEST_CASE("all four edges of a 4-cycle form one series class") {
  matroid c4 = fixture_matroid("c4");
  auto classes = coparallel_classes(c4);
  REQUIRE(classes.size() == 1);
  REQUIRE(popcount(classes[0]) == 4);

  // Independent check: the bonds of C4 are exactly the 2-subsets of edges.
  auto bonds = bonds_brute_force(fixture_graph("c4"));
  REQUIRE(bonds.size() == 6);
  for (bits b : bonds) REQUIRE(popcount(b) == 2);
  for (int e = 0; e < 4; ++e) {
    for (int f = e + 1; f < 4; ++f) REQUIRE(is_two_cocircuit(c4, e, f));
  }
}

TEST_CASE("M(K4) has six singleton series classes") {
  matroid k4 = fixture_matroid("k4");
  REQUIRE(coparallel_count(k4) == 6);
  auto bonds = bonds_brute_force(fixture_graph("k4"));
  for (bits b : bonds) REQUIRE(popcount(b) >= 3);  // no 2-cocircuits anywhere
}

TEST_CASE("parallel classes mirror coparallel classes of the dual") {
  multigraph doubled;  // triangle with one doubled edge
  doubled.num_vertices = 3;
  doubled.edges = {{0, 1, "a"}, {0, 1, "a2"}, {1, 2, "b"}, {0, 2, "c"}};
  matroid m(cycle_matroid(doubled));
  auto classes = parallel_classes(m);
  REQUIRE(classes.size() == 3);
  REQUIRE(label_sets(classes, m.ground()) == std::set<std::string>{"a,a2", "b", "c"});
  REQUIRE(coparallel_classes(dual(m)) == classes);
}

TEST_CASE("connectivity") {
  REQUIRE(is_connected(fixture_matroid("fano")));
  REQUIRE(is_connected(fixture_matroid("u24")));
  REQUIRE(!is_connected(fixture_matroid("k3k3")));
  REQUIRE(!is_connected(fixture_matroid("trianglebridge")));  // the bridge is a coloop
  // A single loop counts as connected.
  multigraph loop_only;
  loop_only.num_vertices = 1;
  loop_only.edges = {{0, 0, "l"}};
  REQUIRE(is_connected(matroid(cycle_matroid(loop_only))));
}

TEST_CASE("connectivity is invariant under duality") {
  for (const char* name : {"fano", "k4", "c4", "k3k3"}) {
    matroid m = fixture_matroid(name);
    REQUIRE(is_connected(m) == is_connected(dual(m)));
  }
}

TEST_CASE("direct sums") {
  matroid sum = fixture_matroid("k3k3");
  REQUIRE(circuits(sum).size() == 2);
  REQUIRE(cycles(sum).count() == 4);
  REQUIRE(sum.ground().labels() ==
          std::vector<std::string>{"12", "13", "23", "12#2", "13#2", "23#2"});

  matroid mixed = direct_sum(fixture_matroid("k3"), u12());
  REQUIRE(label_sets(circuits(mixed), mixed.ground()) ==
          std::set<std::string>{"12,13,23", "a,b"});

  // d is additive across direct sums.
  REQUIRE(coparallel_count(fixture_matroid("k3k3")) == 2);
  matroid k4_plus_c4 = direct_sum(fixture_matroid("k4"), fixture_matroid("c4"));
  REQUIRE(coparallel_count(k4_plus_c4) == 6 + 1);
}

TEST_CASE("binarity via symmetric differences") {
  REQUIRE(!is_binary(fixture_matroid("u24").as_circuits()));
  REQUIRE(is_binary(circuit_presentation(fixture_matroid("fano"))));
  REQUIRE(is_binary(circuit_presentation(fixture_matroid("k4"))));
}

TEST_CASE("isomorphism finds a witness and respects invariants") {
  matroid k4 = fixture_matroid("k4");
  auto perm = are_isomorphic(k4, dual(k4));
  REQUIRE(perm.has_value());

  REQUIRE(!are_isomorphic(fixture_matroid("u24"),
                          direct_sum(fixture_matroid("k3"), u12()))
               .has_value());

  // A relabeled Fano matroid is found again; the witness maps circuits onto
  // circuits.
  matroid fano = fixture_matroid("fano");
  std::vector<std::string> shuffled = {"3", "1", "7", "5", "2", "6", "4"};
  gf2_matrix rearranged;
  rearranged.rows = fano.as_binary().matrix().rows;
  rearranged.cols = 7;
  rearranged.row.assign(rearranged.rows, 0);
  for (int j = 0; j < 7; ++j) {
    int src = *fano.ground().index_of(shuffled[j]);
    for (int r = 0; r < rearranged.rows; ++r) {
      if (fano.as_binary().matrix().get(r, src)) rearranged.set(r, j);
    }
  }
  matroid relabeled(from_gf2_matrix(rearranged, ground_set::numbered(7)));
  auto witness = are_isomorphic(fano, relabeled);
  REQUIRE(witness.has_value());
  std::set<bits> target_circuits;
  for (bits c : circuits(relabeled)) target_circuits.insert(c);
  for (bits c : circuits(fano)) {
    bits image = 0;
    for (int e = 0; e < 7; ++e) {
      if (contains(c, e)) image |= bits(1) << (*witness)[e];
    }
    REQUIRE(target_circuits.count(image) == 1);
  }
}

TEST_CASE("circuit/cocircuit intersections obey the parity rules") {
  for (const char* name : {"fano", "fanodual", "k4", "c4dual"}) {
    matroid m = fixture_matroid(name);
    auto circs = circuits(m);
    auto cocircs = circuits(dual(m));
    for (bits c : circs) {
      for (bits cc : cocircs) {
        int inter = popcount(c & cc);
        REQUIRE(inter != 1);
        REQUIRE(inter % 2 == 0);
      }
    }
  }
}
