#ifndef RHOCAP_GRAPH_IO_HPP
#define RHOCAP_GRAPH_IO_HPP

#include <istream>
#include <string>
#include <vector>

#include "rhocap/graph.hpp"

namespace rhocap {

// Graph text format:
//   # comment
//   p <n>
//   e <u> <v>        (1-indexed; duplicates and reversed edges tolerated)
Graph parse_graph_text(std::istream& in);

// Built-in names: "C<m>", "K<m>", "K<m>-K<d>", "U:<spec>" where spec is a
// comma-separated list of sizes with optional "<count>x<size>" repetition,
// e.g. "U:12x2,6x8". Throws std::invalid_argument on anything else.
Graph graph_from_name(const std::string& name);
bool looks_like_builtin(const std::string& name);

// Built-in name first, file path otherwise.
Graph load_graph(const std::string& source);

// Clique-union size list for "U:<spec>" names.
std::vector<int> parse_union_sizes(const std::string& spec);

// Family text format: one subset per line; members are 1-indexed vertices,
// space separated. In a power graph a vertex is a tuple "(a,b,...)" with one
// coordinate per factor; tuples map to indices by mixed radix over base_n.
// base_n is the base-graph vertex count, power the number of coordinates.
std::vector<std::vector<int>> parse_family_text(std::istream& in, int base_n,
                                                int power);

std::string format_family_text(const std::vector<std::vector<int>>& subsets,
                               int base_n, int power);

}  // namespace rhocap

#endif
