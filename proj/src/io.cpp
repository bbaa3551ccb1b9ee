#include "domset/io.hpp"

#include <fstream>
#include <sstream>

namespace domset {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;       // blank
    if (line[i] == 'c') continue;               // comment
    return true;
  }
  return false;
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  std::string line;
  int line_no = 0;
  long long n = 0, m = 0;
  int base = 0;

  if (!next_content_line(in, line, line_no)) fail(line_no, "empty input");
  std::istringstream head(line);
  if (format == GraphFormat::EdgeList) {
    if (!(head >> n >> m)) fail(line_no, "expected header \"n m\"");
  } else {
    std::string p, kind;
    if (!(head >> p >> kind >> n >> m) || p != "p")
      fail(line_no, "expected header \"p edge n m\"");
    base = 1;
  }
  if (n < 0 || m < 0) fail(line_no, "negative counts in header");

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(size_t(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no))
      fail(line_no, "expected " + std::to_string(m) + " edges, got " +
                        std::to_string(i));
    std::istringstream ls(line);
    long long u, v;
    if (format == GraphFormat::Dimacs) {
      std::string e;
      if (!(ls >> e >> u >> v) || e != "e") fail(line_no, "expected \"e u v\"");
    } else {
      if (!(ls >> u >> v)) fail(line_no, "expected \"u v\"");
    }
    u -= base;
    v -= base;
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(line_no, "vertex out of range [" + std::to_string(base) + "," +
                        std::to_string(n - 1 + base) + "]");
    if (u == v) fail(line_no, "self-loop");
    pairs.push_back({int(u), int(v)});
  }
  Graph g = Graph::from_edge_list(int(n), pairs);
  if (g.edge_count() != m)
    throw ParseError("header announces " + std::to_string(m) + " edges but " +
                     std::to_string(g.edge_count()) + " are distinct");
  return g;
}

Graph parse_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_graph(in, format);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  int base = format == GraphFormat::Dimacs ? 1 : 0;
  if (format == GraphFormat::Dimacs)
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  else
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    if (format == GraphFormat::Dimacs) out << "e ";
    out << u + base << ' ' << v + base << '\n';
  }
}

void write_graph_file(const std::string& path, const Graph& g,
                      GraphFormat format) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_graph(out, g, format);
}

GraphFormat format_from_name(const std::string& name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw std::invalid_argument("unknown graph format: " + name);
}

}  // namespace domset
