#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

struct RandomSpec {
  int n = 0;
  long long m = 0;
  uint64_t seed = 0;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center 0
Graph empty_graph(int n);      // null graph N_n

/// Connected simple graph with exactly n vertices and m edges: a random
/// spanning tree (random attachment over a shuffled vertex order), then
/// uniformly sampled non-edges until m. Deterministic per seed.
Graph random_connected_graph(const RandomSpec& spec);

/// One copy of g1, n1 copies of g2, vertex i of g1 joined to every vertex of
/// copy i. g1 keeps ids 0..n1-1; copy i occupies n1+i*n2 .. n1+(i+1)*n2-1.
Graph corona(const Graph& g1, const Graph& g2);

/// Removes `edge` and adds k chains u-w1i-w2i-v; new vertices are appended
/// in chain order. Requires edge present and k >= 1.
Graph double_subdivision_inflate(const Graph& g, std::pair<int, int> edge, int k);

/// t new degree-1 vertices joined to v, appended after the existing ids.
Graph add_pendants(const Graph& g, int v, int t);

/// W construction: double subdivision with inflation k_i on every edge of H
/// (edges in lexicographic (u,v) order), then t_i pendants on every original
/// vertex. List lengths must match m(H) and n(H).
Graph w_family(const Graph& h, const std::vector<int>& k_per_edge,
               const std::vector<int>& t_per_vertex);

/// corona(G,H) plus, per G-vertex v, a 2-path u-w attached by edge (v,u).
Graph t_family(const Graph& g, const Graph& h);

/// Every G-vertex joined to every vertex of the null graph N_p, plus the
/// same per-vertex 2-path; order 3n+p. Requires p > n.
Graph t_prime_family(const Graph& g, int p);

/// Hard-coded named instances: fig1-spider, fig2-w22c3,
/// fig3-counter, fig5a-ring, fig7-mwds, c5-corona-k1. Labelings are fixed so
/// greedy traces under min-index ties are reproducible.
Graph fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace domset
