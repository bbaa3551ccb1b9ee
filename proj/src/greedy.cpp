#include "domset/greedy.hpp"

#include <algorithm>

namespace domset {

int active_degree(const Graph& g, const VertexSet& covered,
                  const VertexSet& in_set, int v) {
  if (in_set.test(v))
    throw std::invalid_argument("active_degree: vertex " + std::to_string(v) +
                                " is already in the set");
  return g.neighbor_bits(v).count_and_not(covered);
}

GreedyTrace greedy_dominating_set(const Graph& g, TieBreak tie_break) {
  int n = g.vertex_count();
  GreedyTrace trace;
  trace.tie_break = tie_break;
  trace.final_set = VertexSet(n);
  if (n == 0) return trace;

  VertexSet covered(n);
  VertexSet in_set(n);
  // active[v] = number of v's uncovered neighbors; maintained incrementally
  // as vertices become covered.
  std::vector<int> active(n);
  for (int v = 0; v < n; ++v) active[v] = g.degree(v);
  int uncovered = n;

  while (uncovered > 0) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (in_set.test(v)) continue;
      if (best == -1 || active[v] > active[best] ||
          (tie_break == TieBreak::MaxIndex && active[v] == active[best]))
        best = v;
    }
    if (active[best] == 0) {
      // Only still-uncovered vertices remain to be dealt with, and none of
      // them is reachable through a positive active degree (isolated
      // vertices). Each is absorbed as its own step with S(h) = {itself}.
      for (int v = 0; v < n; ++v) {
        if (covered.test(v)) continue;
        in_set.set(v);
        covered.set(v);
        trace.order.push_back(v);
        trace.coverage.push_back({v});
      }
      break;
    }
    in_set.set(best);
    std::vector<int> newly;
    if (!covered.test(best)) newly.push_back(best);
    for (int w : g.neighbors(best))
      if (!covered.test(w)) newly.push_back(w);
    std::sort(newly.begin(), newly.end());
    for (int w : newly) {
      covered.set(w);
      for (int u : g.neighbors(w)) --active[u];
    }
    uncovered -= int(newly.size());
    trace.order.push_back(best);
    trace.coverage.push_back(std::move(newly));
  }
  trace.final_set = in_set;
  return trace;
}

Certificate certify_size_two(const GreedyTrace& trace) {
  Certificate c;
  int size = int(trace.order.size());
  if (size <= 2) {
    c.kind = Certificate::Kind::SizeAtMostTwo;
    c.detail = "|S| = " + std::to_string(size) + " <= 2, hence gamma(G) = |S|";
  }
  return c;
}

Certificate certify_independent_partition(const Graph& g, const GreedyTrace& trace) {
  Certificate c;
  const VertexSet& s = trace.final_set;
  if (!is_independent(g, s)) return c;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.test(v)) continue;
    if (g.neighbor_bits(v).intersect_count(s) >= 2) return c;
  }
  c.kind = Certificate::Kind::IndependentPartition;
  c.detail = "closed neighborhoods of S partition V, hence gamma(G) = |S|";
  return c;
}

bool tied_pair_emptiness(const Graph& g, const GreedyTrace& trace) {
  (void)g;
  for (size_t h = 0; h < trace.order.size(); ++h)
    for (int v : trace.coverage[h])
      if (v != trace.order[h] && trace.final_set.test(v)) return false;
  return true;
}

}  // namespace domset
