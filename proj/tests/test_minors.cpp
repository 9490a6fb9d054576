#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cyctest;

namespace {

bool witness_lands_on(const matroid& source, const minor_witness& w, const matroid& target) {
  matroid end = replay_witness(source, w);
  if (end.size() != target.size()) return false;
  std::set<bits> target_circuits;
  for (bits c : circuits(target)) target_circuits.insert(c);
  auto target_index = [&](const std::string& label) { return *target.ground().index_of(label); };
  std::map<std::string, std::string> iso(w.final_iso.begin(), w.final_iso.end());
  std::set<bits> mapped;
  for (bits c : circuits(end)) {
    bits image = 0;
    for (int e = 0; e < end.size(); ++e) {
      if (contains(c, e)) image |= bits(1) << target_index(iso.at(end.ground().label(e)));
    }
    mapped.insert(image);
  }
  return mapped == target_circuits;
}

}  // namespace

TEST_CASE("deleting 7 from the Fano matroid") {
  matroid fano = fixture_matroid("fano");
  matroid del = delete_elements(fano, set_of(fano, {"7"}));
  auto circs = circuits(del);
  std::set<std::string> triples, quads;
  for (bits c : circs) {
    (popcount(c) == 3 ? triples : quads).insert(set_to_labels(c, del.ground()));
  }
  // The four lines avoiding 7 survive, together with three complements.
  REQUIRE(triples == std::set<std::string>{"1,2,6", "1,3,5", "2,3,4", "4,5,6"});
  REQUIRE(quads.size() == 3);
}

TEST_CASE("deleting an element of U24 gives U23") {
  matroid u = fixture_matroid("u24");
  matroid del = delete_elements(u, set_of(u, {"4"}));
  REQUIRE(label_sets(circuits(del), del.ground()) == std::set<std::string>{"1,2,3"});
}

TEST_CASE("K4 minus an edge has two triangles and one 4-cycle") {
  matroid k4 = fixture_matroid("k4");
  matroid del = delete_elements(k4, set_of(k4, {"12"}));
  std::multiset<int> sizes;
  for (bits c : circuits(del)) sizes.insert(popcount(c));
  REQUIRE(sizes == std::multiset<int>{3, 3, 4});
}

TEST_CASE("deletions that kill every circuit are free results") {
  matroid k3 = fixture_matroid("k3");
  REQUIRE_THROWS_MATCHES(delete_elements(k3, set_of(k3, {"12"})), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::free_result; }));
}

TEST_CASE("contracting the line {1,2,6} in the Fano matroid") {
  matroid fano = fixture_matroid("fano");
  matroid con = contract_elements(fano, set_of(fano, {"1", "2", "6"}));
  // All six 2-subsets of the remaining ground {3,4,5,7}. Reference lists of
  // these circuits sometimes carry a stray label 1 in two entries; label 1
  // was contracted away, so {1,4,5} and {1,3,7} read {4,5} and {3,7}.
  REQUIRE(label_sets(circuits(con), con.ground()) ==
          std::set<std::string>{"3,4", "3,5", "4,5", "3,7", "4,7", "5,7"});
}

TEST_CASE("contracting a cycle edge shortens the cycle") {
  matroid c4 = fixture_matroid("c4");
  matroid con = contract_elements(c4, set_of(c4, {"e1"}));
  auto circs = circuits(con);
  REQUIRE(circs.size() == 1);
  REQUIRE(popcount(circs[0]) == 3);
}

TEST_CASE("contracting a loop is deleting it") {
  multigraph with_loop;
  with_loop.num_vertices = 3;
  with_loop.edges = {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}, {1, 1, "l"}};
  matroid m(cycle_matroid(with_loop));
  bits l = set_of(m, {"l"});
  REQUIRE(circuits(contract_elements(m, l)) == circuits(delete_elements(m, l)));
}

TEST_CASE("duality identities M*/T = (M\\T)* and M*\\T = (M/T)*") {
  matroid k4 = fixture_matroid("k4");
  for (int e = 0; e < k4.size(); ++e) REQUIRE(duality_identities_check(k4, bits(1) << e));
  matroid fano = fixture_matroid("fano");
  REQUIRE(duality_identities_check(fano, set_of(fano, {"7"})));
  matroid u = fixture_matroid("u24");
  REQUIRE(duality_identities_check(u, set_of(u, {"4"})));
}

TEST_CASE("series contraction candidates") {
  matroid c4 = fixture_matroid("c4");
  REQUIRE(series_contraction_candidates(c4) == full_mask(4));
  REQUIRE(series_contraction_candidates(fixture_matroid("fanodual")) == 0);
  REQUIRE(series_contraction_candidates(fixture_matroid("k4")) == 0);
}

TEST_CASE("the Fano retract example verifies") {
  matroid fano = fixture_matroid("fano");
  auto idx = [&](const char* l) { return *fano.ground().index_of(l); };
  auto ok = check_binary_matroidal_retract(fano.as_binary(), {idx("4"), idx("5"), idx("3")},
                                           {idx("1"), idx("2"), idx("6")});
  REQUIRE(ok.ok);

  auto not_circuit = check_binary_matroidal_retract(fano.as_binary(), {idx("4"), idx("5"), idx("3")},
                                                    {idx("1"), idx("2"), idx("7")});
  REQUIRE(!not_circuit.ok);
  REQUIRE(not_circuit.failure == retract_failure::not_a_circuit);
}

TEST_CASE("exactly the opposite-edge pairing retracts a K4 triangle") {
  // Brute force over the 7 circuits and all 6 pairings: pairing each triangle
  // edge with its vertex-disjoint partner satisfies the trace condition, and
  // no other pairing does. (Checked by hand against the definition.)
  matroid k4 = fixture_matroid("k4");
  auto idx = [&](const char* l) { return *k4.ground().index_of(l); };
  std::vector<int> eprime = {idx("12"), idx("13"), idx("23")};  // a triangle
  std::vector<int> rest = {idx("14"), idx("24"), idx("34")};
  std::sort(rest.begin(), rest.end());
  std::vector<std::vector<int>> passing;
  do {
    auto r = check_binary_matroidal_retract(k4.as_binary(), rest, eprime);
    if (r.ok) passing.push_back(rest);
  } while (std::next_permutation(rest.begin(), rest.end()));
  REQUIRE(passing == std::vector<std::vector<int>>{{idx("34"), idx("24"), idx("14")}});
}

TEST_CASE("retract enumeration finds the Fano example") {
  matroid fano = fixture_matroid("fano");
  auto idx = [&](const char* l) { return *fano.ground().index_of(l); };
  auto triples = enumerate_binary_matroidal_retracts(fano.as_binary());
  bool found = false;
  for (const auto& t : triples) {
    std::set<int> e(t.e_set.begin(), t.e_set.end());
    std::set<int> ep(t.eprime.begin(), t.eprime.end());
    if (ep == std::set<int>{idx("1"), idx("2"), idx("6")} &&
        e == std::set<int>{idx("3"), idx("4"), idx("5")})
      found = true;
  }
  REQUIRE(found);
}

TEST_CASE("K4 has exactly four retract triples, one per triangle") {
  matroid k4 = fixture_matroid("k4");
  auto triples = enumerate_binary_matroidal_retracts(k4.as_binary());
  REQUIRE(triples.size() == 4);
  for (const auto& t : triples) {
    REQUIRE(t.eprime.size() == 3);
    // The unique passing pairing matches each triangle edge with its
    // vertex-disjoint partner.
    for (size_t j = 0; j < 3; ++j) {
      const std::string& a = k4.ground().label(t.eprime[j]);
      const std::string& b = k4.ground().label(t.e_set[j]);
      REQUIRE(a[0] != b[0]);
      REQUIRE(a[0] != b[1]);
      REQUIRE(a[1] != b[0]);
      REQUIRE(a[1] != b[1]);
    }
  }
}

TEST_CASE("matroids without room for E have no retracts") {
  matroid k3 = fixture_matroid("k3");
  REQUIRE(enumerate_binary_matroidal_retracts(k3.as_binary()).empty());
  gf2_matrix pair = matrix_from_strings({"11"});
  binary_matroid u12(ground_set({"a", "b"}), pair);
  REQUIRE(enumerate_binary_matroidal_retracts(u12).empty());
}

TEST_CASE("the g-series search reaches F7/{1,2,6} through a retract") {
  matroid fano = fixture_matroid("fano");
  matroid target = contract_elements(fano, set_of(fano, {"1", "2", "6"}));
  auto witness = g_series_minor_search(fano.as_binary(), target);
  REQUIRE(witness.has_value());
  bool used_retract = false;
  for (const auto& step : witness->steps) used_retract |= step.kind == step_kind::binary_retract;
  REQUIRE(used_retract);
  REQUIRE(witness_lands_on(fano, *witness, target));

  // No deletion/series-contraction sequence reaches it.
  REQUIRE(!find_minor(fano, target, minor_kind::series).has_value());
}

TEST_CASE("M(K3) is a g-series minor of M(K4)") {
  matroid k4 = fixture_matroid("k4");
  matroid k3 = fixture_matroid("k3");
  auto witness = g_series_minor_search(k4.as_binary(), k3);
  REQUIRE(witness.has_value());
  REQUIRE(witness_lands_on(k4, *witness, k3));
}

TEST_CASE("targets larger than the source are never minors") {
  matroid k3 = fixture_matroid("k3");
  matroid k4 = fixture_matroid("k4");
  REQUIRE(!g_series_minor_search(k3.as_binary(), k4).has_value());
  REQUIRE(minor_free(k3, k4, minor_kind::general));
}

TEST_CASE("minor freeness of the Fano dual") {
  matroid fd = fixture_matroid("fanodual");
  matroid k4 = fixture_matroid("k4");
  auto witness = find_minor(fd, k4, minor_kind::general);
  REQUIRE(witness.has_value());
  REQUIRE(witness_lands_on(fd, *witness, k4));
  REQUIRE(minor_free(fd, k4, minor_kind::g_series));
}

TEST_CASE("the 5-cycle has no M(K4) minor") {
  multigraph c5 = fixture_graph("c5");
  REQUIRE(minor_free(matroid(cycle_matroid(c5)), fixture_matroid("k4"), minor_kind::general));
}

TEST_CASE("every minor of a binary matroid is binary") {
  matroid fano = fixture_matroid("fano");
  for (bits t = 1; t < (bits(1) << 7); ++t) {
    if (popcount(t) > 3) continue;
    try {
      matroid minor = contract_elements(fano, t);
      REQUIRE(is_binary(circuit_presentation(minor)));
    } catch (const error& e) {
      REQUIRE(e.code() == errc::free_result);
    }
  }
}

TEST_CASE("circuit survives or splits under binary contraction") {
  matroid k4 = fixture_matroid("k4");
  auto circs = circuits(k4);
  for (int e = 0; e < k4.size(); ++e) {
    matroid con = contract_elements(k4, bits(1) << e);
    auto sub = circuits(con);
    auto drop_index = [&](bits v) {
      bits low = v & ((bits(1) << e) - 1);
      return low | ((v >> (e + 1)) << e);
    };
    for (bits c : circs) {
      if (contains(c, e)) continue;
      bits r = drop_index(c);
      std::vector<bits> inside;
      for (bits sc : sub) {
        if ((sc & r) == sc) inside.push_back(sc);
      }
      bool whole = inside.size() == 1 && inside[0] == r;
      bool split =
          inside.size() == 2 && (inside[0] | inside[1]) == r && (inside[0] & inside[1]) == 0;
      REQUIRE((whole || split));
    }
  }
}

TEST_CASE("C - e is a circuit of M/e for |C| >= 2") {
  matroid fano = fixture_matroid("fano");
  for (bits c : circuits(fano)) {
    int e = lowest_bit(c);
    matroid con = contract_elements(fano, bits(1) << e);
    bits low = c & ((bits(1) << e) - 1);
    bits rest = low | ((c >> (e + 1)) << e);
    auto sub = circuits(con);
    REQUIRE(std::find(sub.begin(), sub.end(), rest) != sub.end());
  }
}

TEST_CASE("replay validates step preconditions") {
  matroid k4 = fixture_matroid("k4");
  minor_witness bogus;
  bogus.steps = {{step_kind::series_contract, {"12"}, {}}};
  REQUIRE_THROWS_MATCHES(replay_witness(k4, bogus), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::invalid_argument; }));
  minor_witness bogus2;
  bogus2.steps = {{step_kind::coloop_contract, {"12"}, {}}};
  REQUIRE_THROWS_AS(replay_witness(k4, bogus2), error);
}

TEST_CASE("series minors are also g-series minors") {
  matroid c4 = fixture_matroid("c4");
  matroid k3 = fixture_matroid("k3");
  auto series = find_minor(c4, k3, minor_kind::series);
  REQUIRE(series.has_value());
  REQUIRE(find_minor(c4, k3, minor_kind::g_series).has_value());
}
