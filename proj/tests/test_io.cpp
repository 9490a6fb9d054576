#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cyctest;

TEST_CASE("binary matroid files parse") {
  const std::string text =
      "# the triangle matroid\n"
      "binary 3 3\n"
      "110\n"
      "101\n"
      "011\n"
      "labels a b c\n";
  matroid m = parse_matroid_string(text);
  REQUIRE(m.is_binary_presented());
  REQUIRE(m.ground().labels() == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(circuits(m).size() == 1);
}

TEST_CASE("circuit matroid files parse") {
  const std::string text =
      "circuits 4\n"
      "ground 1 2 3 4\n"
      "1 2 3\n"
      "1 2 4\n"
      "1 3 4\n"
      "2 3 4\n";
  matroid m = parse_matroid_string(text);
  REQUIRE(!m.is_binary_presented());
  REQUIRE(circuits(m).size() == 4);
}

TEST_CASE("graph files parse with comments") {
  const std::string text =
      "graph 3  # a triangle\n"
      "0 1 a\n"
      "1 2 b\n"
      "# middle comment\n"
      "0 2 c\n";
  multigraph g = parse_graph_string(text);
  REQUIRE(g.num_vertices == 3);
  REQUIRE(g.edges.size() == 3);
}

TEST_CASE("parse errors carry the right code") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      parse_matroid_string(text);
      FAIL("expected a parse error");
    } catch (const error& e) {
      REQUIRE(e.code() == errc::parse_error);
    }
  };
  expect_parse_error("");
  expect_parse_error("banana 2 2\n");
  expect_parse_error("binary 1 3\n111\nlabels a b\n");   // label count mismatch
  expect_parse_error("binary 1 3\n12x\nlabels a b c\n"); // bad matrix characters
  expect_parse_error("circuits 2\nground a b\na q\n");   // unknown label in a circuit

  try {
    parse_graph_string("graph 2\n0 5 a\n");
    FAIL("expected a parse error");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::parse_error);
  }
}

TEST_CASE("matroid text round-trips") {
  for (const char* name : {"fano", "k4", "u24", "c4dual"}) {
    matroid m = fixture_matroid(name);
    matroid back = parse_matroid_string(matroid_to_text(m));
    REQUIRE(back.ground().labels() == m.ground().labels());
    REQUIRE(circuits(back) == circuits(m));
  }
}

TEST_CASE("graph text round-trips") {
  for (const char* name : {"k4", "theta", "trianglebridge"}) {
    multigraph g = fixture_graph(name);
    multigraph back = parse_graph_string(graph_to_text(g));
    REQUIRE(back.num_vertices == g.num_vertices);
    REQUIRE(back.edges.size() == g.edges.size());
    REQUIRE(eulerian_subgraphs(back).cycles == eulerian_subgraphs(g).cycles);
  }
}

TEST_CASE("input sniffing distinguishes graphs from matroids") {
  parsed_input as_graph = parse_input_string("graph 2\n0 1 a\n0 1 b\n");
  REQUIRE(as_graph.type == parsed_input::kind::graph_input);
  parsed_input as_matroid = parse_input_string("circuits 2\nground a b\na b\n");
  REQUIRE(as_matroid.type == parsed_input::kind::matroid_input);
}

TEST_CASE("all fixtures load") {
  for (const auto& name : fixture_names()) {
    matroid m = fixture_matroid(name);
    REQUIRE(m.size() >= 1);
    REQUIRE(!circuits(m).empty());
  }
  for (const auto& name : graph_fixture_names()) {
    multigraph g = fixture_graph(name);
    REQUIRE(g.num_vertices >= 1);
  }
  REQUIRE(is_fixture_name("fano"));
  REQUIRE(!is_fixture_name("banana"));
}

TEST_CASE("set_to_labels uses ground order") {
  matroid fano = fixture_matroid("fano");
  REQUIRE(set_to_labels(set_of(fano, {"6", "1", "2"}), fano.ground()) == "1,2,6");
}
