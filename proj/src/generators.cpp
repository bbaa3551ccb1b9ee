#include "domset/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace domset {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edge_list(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edge_list(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edge_list(n, e);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edge_list(leaves + 1, e);
}

Graph empty_graph(int n) { return Graph::from_edge_list(n, {}); }

Graph random_connected_graph(const RandomSpec& spec) {
  int n = spec.n;
  long long max_m = (long long)n * (n - 1) / 2;
  if (n < 1 || spec.m < n - 1 || spec.m > max_m)
    throw std::invalid_argument("infeasible random spec: n=" +
                                std::to_string(n) + " m=" +
                                std::to_string(spec.m));
  std::mt19937_64 rng(spec.seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::set<std::pair<int, int>> edges;
  auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  for (int i = 1; i < n; ++i) {
    int j = int(rng() % uint64_t(i));
    edges.insert(norm(order[i], order[j]));
  }
  if (spec.m > max_m * 3 / 4) {
    // Dense request: enumerate the complement and take a random subset.
    std::vector<std::pair<int, int>> non_edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!edges.count({u, v})) non_edges.push_back({u, v});
    std::shuffle(non_edges.begin(), non_edges.end(), rng);
    for (size_t i = 0; i < non_edges.size() && (long long)edges.size() < spec.m; ++i)
      edges.insert(non_edges[i]);
  } else {
    while ((long long)edges.size() < spec.m) {
      int u = int(rng() % uint64_t(n));
      int v = int(rng() % uint64_t(n));
      if (u != v) edges.insert(norm(u, v));
    }
  }
  return Graph::from_edge_list(
      n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

Graph corona(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<std::pair<int, int>> e = g1.edges();
  for (int i = 0; i < n1; ++i) {
    int base = n1 + i * n2;
    for (const auto& [u, v] : g2.edges()) e.push_back({base + u, base + v});
    for (int u = 0; u < n2; ++u) e.push_back({i, base + u});
  }
  return Graph::from_edge_list(n1 * (1 + n2), e);
}

Graph double_subdivision_inflate(const Graph& g, std::pair<int, int> edge, int k) {
  auto [u, v] = edge;
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() ||
      !g.has_edge(u, v))
    throw std::invalid_argument("double_subdivision_inflate: edge absent");
  if (k < 1) throw std::invalid_argument("inflation size must be >= 1");
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> e;
  for (const auto& [a, b] : g.edges())
    if (!((a == std::min(u, v)) && (b == std::max(u, v)))) e.push_back({a, b});
  for (int i = 0; i < k; ++i) {
    int w1 = n + 2 * i, w2 = n + 2 * i + 1;
    e.push_back({u, w1});
    e.push_back({w1, w2});
    e.push_back({w2, v});
  }
  return Graph::from_edge_list(n + 2 * k, e);
}

Graph add_pendants(const Graph& g, int v, int t) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("add_pendants: vertex out of range");
  if (t < 0) throw std::invalid_argument("pendant count must be >= 0");
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> e = g.edges();
  for (int i = 0; i < t; ++i) e.push_back({v, n + i});
  return Graph::from_edge_list(n + t, e);
}

Graph w_family(const Graph& h, const std::vector<int>& k_per_edge,
               const std::vector<int>& t_per_vertex) {
  auto h_edges = h.edges();
  if (k_per_edge.size() != h_edges.size() ||
      t_per_vertex.size() != size_t(h.vertex_count()))
    throw std::invalid_argument("w_family: parameter list length mismatch");
  Graph g = h;
  for (size_t i = 0; i < h_edges.size(); ++i)
    g = double_subdivision_inflate(g, h_edges[i], k_per_edge[i]);
  for (int v = 0; v < h.vertex_count(); ++v)
    g = add_pendants(g, v, t_per_vertex[v]);
  return g;
}

Graph t_family(const Graph& g, const Graph& h) {
  Graph base = corona(g, h);
  int n = g.vertex_count();
  int next = base.vertex_count();
  std::vector<std::pair<int, int>> e = base.edges();
  for (int v = 0; v < n; ++v) {
    int u = next++, w = next++;
    e.push_back({v, u});
    e.push_back({u, w});
  }
  return Graph::from_edge_list(next, e);
}

Graph t_prime_family(const Graph& g, int p) {
  int n = g.vertex_count();
  if (p <= n)
    throw std::invalid_argument("t_prime_family requires p > n(G)");
  std::vector<std::pair<int, int>> e = g.edges();
  for (int v = 0; v < n; ++v)
    for (int x = 0; x < p; ++x) e.push_back({v, n + x});
  int next = n + p;
  for (int v = 0; v < n; ++v) {
    int u = next++, w = next++;
    e.push_back({v, u});
    e.push_back({u, w});
  }
  return Graph::from_edge_list(next, e);
}

Graph fixture(const std::string& name) {
  if (name == "fig1-spider") {
    // Hub 0; mid vertices 1..4; stems 5..12 (two per mid); pendants 13..20.
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 4; ++i) {
      e.push_back({0, i});
      e.push_back({i, 2 * i + 3});
      e.push_back({i, 2 * i + 4});
    }
    for (int j = 0; j < 8; ++j) e.push_back({5 + j, 13 + j});
    return Graph::from_edge_list(21, e);
  }
  if (name == "fig2-w22c3")
    return w_family(cycle_graph(3), {2, 2, 2}, {2, 2, 0});
  if (name == "fig3-counter") {
    // Ids 0..5 carry the canonical labels 1..6 (label = id + 1); the six
    // unlabeled top vertices are 6..11.
    return Graph::from_edge_list(
        12, {{3, 4}, {4, 5}, {3, 0}, {0, 4}, {5, 1}, {1, 4},
             {0, 6}, {6, 2}, {2, 11}, {0, 7}, {7, 2},
             {0, 8}, {8, 2}, {1, 8}, {0, 9}, {9, 2}, {1, 9},
             {10, 2}, {1, 10}});
  }
  if (name == "fig5a-ring") {
    // 0 = s1, 1..6 = the six-ring s2..s7, 7 = s8, 8 = s9, 9..14 = pendants.
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 6; ++i) {
      e.push_back({i, 8 + i});                   // pendant
      e.push_back({i, i == 6 ? 1 : i + 1});      // ring
    }
    for (int x : {1, 3, 4, 6}) e.push_back({0, x});
    for (int x : {1, 2, 5, 6}) e.push_back({7, x});
    for (int x : {2, 3, 4, 5}) e.push_back({8, x});
    return Graph::from_edge_list(15, e);
  }
  if (name == "fig7-mwds") {
    // Triangle 0,1,2 (labels 1,2,3); bottom row 3..7.
    return Graph::from_edge_list(
        8, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {2, 6},
            {2, 7}, {0, 4}, {0, 5}, {0, 6}, {3, 4}, {6, 7}});
  }
  if (name == "c5-corona-k1") return corona(cycle_graph(5), complete_graph(1));
  throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"fig1-spider", "fig2-w22c3", "fig3-counter",
          "fig5a-ring", "fig7-mwds",  "c5-corona-k1"};
}

}  // namespace domset
