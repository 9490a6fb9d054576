#ifndef CYC_IO_HPP
#define CYC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cyc/graphs.hpp"
#include "cyc/matroid.hpp"

namespace cyc {

/// Matroid text format:
///   binary R C        followed by R rows of C characters from {0,1}
///   labels l1 ... lC
/// or
///   circuits N        followed by `ground l1 ... lN` and one circuit per line
/// '#' starts a comment; blank lines are ignored.
matroid parse_matroid(std::istream& in);
matroid parse_matroid_string(const std::string& text);
std::string matroid_to_text(const matroid& m, const caps& c = {});

/// Graph file format: `graph NV`, then one `u v label` line per edge
/// (0-based vertex indices); '#' comments.
multigraph parse_graph(std::istream& in);
multigraph parse_graph_string(const std::string& text);
std::string graph_to_text(const multigraph& g);

/// Either format, sniffed from the header token.
struct parsed_input {
  enum class kind { matroid_input, graph_input } type;
  std::vector<matroid> matroids;   // singleton when type == matroid_input
  std::vector<multigraph> graphs;  // singleton when type == graph_input
};
parsed_input parse_input_string(const std::string& text);

/// Built-in fixtures by name: fano, fanodual, k4, k4dual, u24, k3, c4,
/// c4dual, c5dual, k5dual, ... so the verification suite needs no files.
bool is_fixture_name(const std::string& name);
matroid fixture_matroid(const std::string& name);
std::vector<std::string> fixture_names();

/// Graph fixtures: k2, k3, k4, k5, c4, c5, k4minus, theta, trianglebridge, p4.
bool is_graph_fixture_name(const std::string& name);
multigraph fixture_graph(const std::string& name);
std::vector<std::string> graph_fixture_names();

std::string set_to_labels(bits set, const ground_set& g);

}  // namespace cyc

#endif
