#pragma once

#include <iosfwd>
#include <string>

#include "domset/graph.hpp"

namespace domset {

enum class GraphFormat { EdgeList, Dimacs };

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// edgelist: first line "n m", then m lines "u v" (0-based).
/// dimacs: "p edge n m" header, "e u v" lines (1-based, remapped to 0-based).
/// Lines starting with "c" are comments in both formats.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph_file(const std::string& path, GraphFormat format);

void write_graph(std::ostream& out, const Graph& g, GraphFormat format);
void write_graph_file(const std::string& path, const Graph& g, GraphFormat format);

GraphFormat format_from_name(const std::string& name);  // "edgelist" | "dimacs"

}  // namespace domset
