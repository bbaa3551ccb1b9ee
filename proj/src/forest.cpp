#include "domset/forest.hpp"

#include <algorithm>

namespace domset {

TiedPairSet tied_pairs(const Graph& g, const GreedyTrace& trace) {
  TiedPairSet out;
  for (size_t h = 0; h < trace.order.size(); ++h) {
    int vh = trace.order[h];
    for (int v : trace.coverage[h]) {
      if (v == vh || !trace.final_set.test(v)) continue;
      if (!g.has_edge(vh, v))
        throw InternalError("tied pair (" + std::to_string(vh) + "," +
                            std::to_string(v) + ") is not an edge");
      out.pairs.push_back({vh, v});
    }
  }
  return out;
}

ClusterForest build_forest(const Graph& g, const TiedPairSet& pairs,
                           const GreedyTrace& trace) {
  int n = g.vertex_count();
  std::vector<int> sel_index(n, -1);
  for (size_t h = 0; h < trace.order.size(); ++h) sel_index[trace.order[h]] = int(h);

  ClusterForest f;
  f.membership = Bitset(n);
  f.parent.assign(n, -1);
  f.children.assign(n, {});
  f.level.assign(n, -1);
  f.tree_index.assign(n, -1);
  f.preorder.assign(n, -1);

  for (const auto& p : pairs.pairs) {
    if (sel_index[p.parent] < 0 || sel_index[p.child] < 0 ||
        sel_index[p.parent] >= sel_index[p.child])
      throw InternalError("tied pair violates selection order");
    if (f.parent[p.child] != -1)
      throw InternalError("vertex " + std::to_string(p.child) +
                          " has two tied-pair parents");
    f.membership.set(p.parent);
    f.membership.set(p.child);
    f.parent[p.child] = p.parent;
    f.children[p.parent].push_back(p.child);
  }
  for (int v = 0; v < n; ++v)
    std::sort(f.children[v].begin(), f.children[v].end(),
              [&](int a, int b) { return sel_index[a] < sel_index[b]; });

  // Roots are forest vertices with no incoming pair; parent indices are
  // strictly smaller than child indices, so the structure is acyclic and the
  // root is the earliest-selected vertex of its tree.
  std::vector<int> roots;
  for (int v : f.membership.to_vector())
    if (f.parent[v] == -1) roots.push_back(v);
  std::sort(roots.begin(), roots.end(),
            [&](int a, int b) { return sel_index[a] < sel_index[b]; });
  f.roots = roots;

  for (size_t t = 0; t < roots.size(); ++t) {
    std::vector<int>& tree = f.trees.emplace_back();
    int rank = 0;
    std::vector<int> stack{roots[t]};
    f.level[roots[t]] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      f.tree_index[v] = int(t);
      f.preorder[v] = rank++;
      tree.push_back(v);
      for (auto it = f.children[v].rbegin(); it != f.children[v].rend(); ++it) {
        if (sel_index[*it] <= sel_index[v])
          throw InternalError("child precedes parent in trace order");
        f.level[*it] = f.level[v] + 1;
        stack.push_back(*it);
      }
    }
  }
  if (int(pairs.pairs.size()) != f.vertex_total() - int(roots.size()))
    throw InternalError("forest edge/vertex count mismatch");
  return f;
}

bool verify_proposition_1(const Graph& g, const GreedyTrace& trace,
                          const TiedPairSet& pairs) {
  int n = g.vertex_count();
  std::vector<int> sel_index(n, -1);
  for (size_t h = 0; h < trace.order.size(); ++h) sel_index[trace.order[h]] = int(h);
  std::vector<int> pair_parent(n, -1);
  for (const auto& p : pairs.pairs) pair_parent[p.child] = p.parent;

  for (const auto& [u, v] : g.edges()) {
    if (!trace.final_set.test(u) || !trace.final_set.test(v)) continue;
    int b = u, c = v;
    if (sel_index[b] > sel_index[c]) std::swap(b, c);
    // Need (v_b, v_c) in P_S, or (v_a, v_c) with a < b.
    int a = pair_parent[c];
    if (a == -1 || sel_index[a] > sel_index[b]) return false;
  }
  return true;
}

}  // namespace domset
