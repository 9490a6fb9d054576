#include "cyc/io.hpp"

#include <algorithm>
#include <sstream>

namespace cyc {

const char* errc_name(errc code) {
  switch (code) {
    case errc::parse_error: return "ParseError";
    case errc::free_matroid: return "FreeMatroid";
    case errc::free_result: return "FreeResult";
    case errc::axiom_violation: return "AxiomViolation";
    case errc::empty_circuit_list: return "EmptyCircuitList";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_applicable: return "NotApplicable";
    case errc::disconnected: return "Disconnected";
    case errc::not_two_connected: return "NotTwoConnected";
    case errc::not_a_neighborhood_minor: return "NotANeighborhoodMinor";
    case errc::property_violation: return "PropertyViolation";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

int parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(errc::parse_error, std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
}

matroid parse_matroid_lines(const std::vector<std::vector<std::string>>& lines) {
  if (lines.empty()) fail(errc::parse_error, "empty matroid input");
  const auto& header = lines[0];
  if (header[0] == "binary") {
    if (header.size() != 3) fail(errc::parse_error, "binary header must be `binary R C`");
    int rows = parse_int(header[1], "row count");
    int cols = parse_int(header[2], "column count");
    if (rows < 0 || cols < 1 || cols > 64) fail(errc::parse_error, "bad matrix dimensions");
    if (static_cast<int>(lines.size()) < rows + 2) fail(errc::parse_error, "truncated binary matroid");
    gf2_matrix m;
    m.rows = rows;
    m.cols = cols;
    m.row.assign(rows, 0);
    for (int r = 0; r < rows; ++r) {
      const auto& line = lines[1 + r];
      if (line.size() != 1 || static_cast<int>(line[0].size()) != cols)
        fail(errc::parse_error, "matrix row " + std::to_string(r) + " must be " +
                                    std::to_string(cols) + " characters of 0/1");
      for (int c = 0; c < cols; ++c) {
        if (line[0][c] == '1')
          m.set(r, c);
        else if (line[0][c] != '0')
          fail(errc::parse_error, "matrix entries must be 0 or 1");
      }
    }
    const auto& labels_line = lines[1 + rows];
    if (labels_line[0] != "labels" || static_cast<int>(labels_line.size()) != cols + 1)
      fail(errc::parse_error, "expected `labels l1 ... lC` after the matrix");
    std::vector<std::string> labels(labels_line.begin() + 1, labels_line.end());
    return matroid(from_gf2_matrix(std::move(m), ground_set(std::move(labels))));
  }
  if (header[0] == "circuits") {
    if (header.size() != 2) fail(errc::parse_error, "circuits header must be `circuits N`");
    int n = parse_int(header[1], "ground size");
    if (n < 1 || n > 64) fail(errc::parse_error, "bad ground size");
    if (lines.size() < 2 || lines[1][0] != "ground" || static_cast<int>(lines[1].size()) != n + 1)
      fail(errc::parse_error, "expected `ground l1 ... lN`");
    ground_set ground(std::vector<std::string>(lines[1].begin() + 1, lines[1].end()));
    std::vector<bits> circuits;
    for (size_t i = 2; i < lines.size(); ++i) {
      bits c = 0;
      for (const auto& label : lines[i]) {
        auto idx = ground.index_of(label);
        if (!idx) fail(errc::parse_error, "circuit uses unknown label " + label);
        c |= bits(1) << *idx;
      }
      circuits.push_back(c);
    }
    return matroid(from_circuits(std::move(circuits), std::move(ground)));
  }
  fail(errc::parse_error, "unknown matroid header `" + header[0] + "` (want binary/circuits)");
}

multigraph parse_graph_lines(const std::vector<std::vector<std::string>>& lines) {
  if (lines.empty()) fail(errc::parse_error, "empty graph input");
  const auto& header = lines[0];
  if (header[0] != "graph" || header.size() != 2)
    fail(errc::parse_error, "graph header must be `graph NV`");
  multigraph g;
  g.num_vertices = parse_int(header[1], "vertex count");
  if (g.num_vertices < 1) fail(errc::parse_error, "graph needs at least one vertex");
  std::vector<std::string> seen_labels;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 3) fail(errc::parse_error, "edge lines are `u v label`");
    int u = parse_int(lines[i][0], "edge endpoint");
    int v = parse_int(lines[i][1], "edge endpoint");
    if (u < 0 || v < 0 || u >= g.num_vertices || v >= g.num_vertices)
      fail(errc::parse_error, "edge endpoint out of range");
    const std::string& label = lines[i][2];
    if (std::find(seen_labels.begin(), seen_labels.end(), label) != seen_labels.end())
      fail(errc::parse_error, "duplicate edge label " + label);
    seen_labels.push_back(label);
    g.edges.push_back({u, v, label});
  }
  return g;
}

}  // namespace

matroid parse_matroid(std::istream& in) { return parse_matroid_lines(tokenize_lines(in)); }

matroid parse_matroid_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matroid(in);
}

std::string matroid_to_text(const matroid& m, const caps& c) {
  std::ostringstream out;
  if (m.is_binary_presented()) {
    const auto& mat = m.as_binary().matrix();
    out << "binary " << mat.rows << " " << mat.cols << "\n";
    for (int r = 0; r < mat.rows; ++r) {
      for (int col = 0; col < mat.cols; ++col) out << (mat.get(r, col) ? '1' : '0');
      out << "\n";
    }
    out << "labels";
    for (const auto& l : m.ground().labels()) out << " " << l;
    out << "\n";
    return out.str();
  }
  out << "circuits " << m.size() << "\n";
  out << "ground";
  for (const auto& l : m.ground().labels()) out << " " << l;
  out << "\n";
  for (bits circ : circuits(m, c)) {
    bool first = true;
    for (int i = 0; i < m.size(); ++i) {
      if (!contains(circ, i)) continue;
      if (!first) out << " ";
      out << m.ground().label(i);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

multigraph parse_graph(std::istream& in) { return parse_graph_lines(tokenize_lines(in)); }

multigraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string graph_to_text(const multigraph& g) {
  std::ostringstream out;
  out << "graph " << g.num_vertices << "\n";
  for (const auto& e : g.edges) out << e.u << " " << e.v << " " << e.label << "\n";
  return out.str();
}

parsed_input parse_input_string(const std::string& text) {
  std::istringstream in(text);
  auto lines = tokenize_lines(in);
  if (lines.empty()) fail(errc::parse_error, "empty input");
  parsed_input out;
  if (lines[0][0] == "graph") {
    out.type = parsed_input::kind::graph_input;
    out.graphs.push_back(parse_graph_lines(lines));
  } else {
    out.type = parsed_input::kind::matroid_input;
    out.matroids.push_back(parse_matroid_lines(lines));
  }
  return out;
}

std::string set_to_labels(bits set, const ground_set& g) {
  std::string out;
  for (int i = 0; i < g.size(); ++i) {
    if (!contains(set, i)) continue;
    if (!out.empty()) out += ",";
    out += g.label(i);
  }
  return out;
}

// -- fixtures ---------------------------------------------------------------------

namespace {

multigraph complete_graph(int n) {
  multigraph g;
  g.num_vertices = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v)
      g.edges.push_back({u, v, std::to_string(u + 1) + std::to_string(v + 1)});
  }
  return g;
}

multigraph cycle_graph(int n) {
  multigraph g;
  g.num_vertices = n;
  for (int u = 0; u < n; ++u) g.edges.push_back({u, (u + 1) % n, "e" + std::to_string(u + 1)});
  return g;
}

multigraph path_graph(int n) {
  multigraph g;
  g.num_vertices = n;
  for (int u = 0; u + 1 < n; ++u) g.edges.push_back({u, u + 1, "e" + std::to_string(u + 1)});
  return g;
}

/// Fano matroid with the circuit list {1,2,6}, {1,3,5}, {2,3,4}, {2,5,7},
/// {3,6,7}, {1,4,7}, {4,5,6} and their complements.
matroid fano() {
  gf2_matrix m;
  m.rows = 3;
  m.cols = 7;
  m.row.assign(3, 0);
  // columns 1..7 as GF(2)^3 vectors: 1=(100), 2=(010), 3=(001), 4=(011),
  // 5=(101), 6=(110), 7=(111)
  const int cols[7][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1},
                          {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  for (int j = 0; j < 7; ++j) {
    for (int r = 0; r < 3; ++r) {
      if (cols[j][r]) m.set(r, j);
    }
  }
  return matroid(from_gf2_matrix(std::move(m), ground_set::numbered(7)));
}

matroid u24() {
  std::vector<bits> circuits;
  for (bits c = 0; c < 16; ++c) {
    if (popcount(c) == 3) circuits.push_back(c);
  }
  return matroid(from_circuits(std::move(circuits), ground_set::numbered(4)));
}

multigraph triangle_bridge() {
  multigraph g;
  g.num_vertices = 4;
  g.edges = {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}, {2, 3, "d"}};
  return g;
}

multigraph theta_graph() {
  // Two vertices joined by three length-2 paths: 5 vertices, 6 edges.
  multigraph g;
  g.num_vertices = 5;
  g.edges = {{0, 2, "a1"}, {2, 1, "a2"}, {0, 3, "b1"}, {3, 1, "b2"}, {0, 4, "c1"}, {4, 1, "c2"}};
  return g;
}

multigraph k4_minus_edge() {
  multigraph g = complete_graph(4);
  g.edges.erase(g.edges.begin());  // drop edge "12"
  return g;
}

}  // namespace

std::vector<std::string> graph_fixture_names() {
  return {"k2", "k3", "k4", "k5", "c4", "c5", "p4", "k4minus", "theta", "trianglebridge"};
}

bool is_graph_fixture_name(const std::string& name) {
  auto names = graph_fixture_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

multigraph fixture_graph(const std::string& name) {
  if (name == "k2") return complete_graph(2);
  if (name == "k3") return complete_graph(3);
  if (name == "k4") return complete_graph(4);
  if (name == "k5") return complete_graph(5);
  if (name == "c4") return cycle_graph(4);
  if (name == "c5") return cycle_graph(5);
  if (name == "p4") return path_graph(4);
  if (name == "k4minus") return k4_minus_edge();
  if (name == "theta") return theta_graph();
  if (name == "trianglebridge") return triangle_bridge();
  fail(errc::invalid_argument, "unknown graph fixture " + name);
}

std::vector<std::string> fixture_names() {
  return {"fano", "fanodual", "k4",     "k4dual", "u24",    "k3",
          "c4",   "c4dual",   "c5dual", "k5dual", "theta",  "thetadual",
          "k3k3", "trianglebridge"};
}

bool is_fixture_name(const std::string& name) {
  auto names = fixture_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

matroid fixture_matroid(const std::string& name) {
  caps c;
  if (name == "fano") return fano();
  if (name == "fanodual") return dual(fano(), c);
  if (name == "k4") return matroid(cycle_matroid(fixture_graph("k4"), c));
  if (name == "k4dual") return matroid(cographic_matroid(fixture_graph("k4"), c));
  if (name == "u24") return u24();
  if (name == "k3") return matroid(cycle_matroid(fixture_graph("k3"), c));
  if (name == "c4") return matroid(cycle_matroid(fixture_graph("c4"), c));
  if (name == "c4dual") return matroid(cographic_matroid(fixture_graph("c4"), c));
  if (name == "c5dual") return matroid(cographic_matroid(fixture_graph("c5"), c));
  if (name == "k5dual") return matroid(cographic_matroid(fixture_graph("k5"), c));
  if (name == "theta") return matroid(cycle_matroid(fixture_graph("theta"), c));
  if (name == "thetadual") return matroid(cographic_matroid(fixture_graph("theta"), c));
  if (name == "k3k3")
    return direct_sum(matroid(cycle_matroid(fixture_graph("k3"), c)),
                      matroid(cycle_matroid(fixture_graph("k3"), c)), c);
  if (name == "trianglebridge") return matroid(cycle_matroid(fixture_graph("trianglebridge"), c));
  fail(errc::invalid_argument, "unknown fixture " + name);
}

}  // namespace cyc
