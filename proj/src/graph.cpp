#include "domset/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace domset {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  std::set<std::pair<int, int>> uniq;
  for (const auto& [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range for n=" +
                                  std::to_string(n));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    uniq.insert({std::min(u, v), std::max(u, v)});
  }
  Graph g;
  g.n_ = n;
  g.m_ = int(uniq.size());
  g.adj_.assign(n, {});
  g.adj_bits_.assign(n, Bitset(n));
  for (const auto& [u, v] : uniq) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.adj_bits_[u].set(v);
    g.adj_bits_[v].set(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  Bitset covered = s;
  for (int v : s.to_vector()) covered |= g.neighbor_bits(v);
  return covered.count() == g.vertex_count();
}

bool is_minimal_dominating(const Graph& g, const VertexSet& s) {
  if (!is_dominating(g, s)) return false;
  for (int v : s.to_vector()) {
    VertexSet reduced = s;
    reduced.reset(v);
    if (is_dominating(g, reduced)) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v : s.to_vector())
    if (g.neighbor_bits(v).intersects(s)) return false;
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = int(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      out[id].push_back(u);
      for (int v : g.neighbors(u))
        if (comp[v] == -1) {
          comp[v] = id;
          q.push(v);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

DegreeStats degree_stats(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("degree_stats on empty graph");
  DegreeStats st{0, n, 0};
  for (int v = 0; v < n; ++v) {
    st.max_degree = std::max(st.max_degree, g.degree(v));
    st.min_degree = std::min(st.min_degree, g.degree(v));
  }
  // Diameter by BFS from every vertex; any unreached vertex means the
  // graph is disconnected and the diameter is undefined.
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] == -1)
        throw std::invalid_argument("diameter undefined: graph is disconnected");
      st.diameter = std::max(st.diameter, dist[v]);
    }
  }
  return st;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.vertex_count(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = int(i);
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (int w : g.neighbors(vertices[i]))
      if (index[w] > int(i)) pairs.push_back({int(i), index[w]});
  return Graph::from_edge_list(int(vertices.size()), pairs);
}

}  // namespace domset
