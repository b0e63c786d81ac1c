#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

using AnyGraph = std::variant<Graph, BipartiteGraph>;

// Edge-list text: header "p m n" or "g n", then "u v" lines (0-based).
// Lines starting with '#' and blank lines are ignored. Throws ParseError.
AnyGraph parse_edge_list(std::istream& in);
AnyGraph parse_edge_list_string(const std::string& text);
AnyGraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
void write_edge_list(std::ostream& out, const BipartiteGraph& g,
                     const std::vector<std::string>& comments = {});

}  // namespace extremal
