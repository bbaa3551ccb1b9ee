#include "domset/oracle.hpp"

#include <algorithm>
#include <vector>

namespace domset {

namespace {

struct Searcher {
  const std::vector<uint64_t>& closed;
  const std::vector<int>& branch_order;  // uncovered-vertex preference
  int max_closed;
  uint64_t explored = 0;
  std::vector<int> chosen;

  bool dfs(uint64_t uncovered, int remaining) {
    ++explored;
    if (uncovered == 0) return true;
    if (remaining == 0) return false;
    if (__builtin_popcountll(uncovered) > remaining * max_closed) return false;
    // Branch on the uncovered vertex with the fewest possible dominators;
    // every dominating set must contain one of its closed neighbors.
    int v = -1;
    for (int cand : branch_order)
      if (uncovered >> cand & 1) {
        v = cand;
        break;
      }
    uint64_t options = closed[v];
    while (options) {
      int u = __builtin_ctzll(options);
      options &= options - 1;
      chosen.push_back(u);
      if (dfs(uncovered & ~closed[u], remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

OracleResult exact_gamma(const Graph& g, int limit) {
  int n = g.vertex_count();
  if (n > limit || n > 63)
    throw std::invalid_argument("exact_gamma: n=" + std::to_string(n) +
                                " exceeds limit " +
                                std::to_string(std::min(limit, 63)));
  OracleResult res;
  res.witness = VertexSet(n);
  if (n == 0) return res;

  std::vector<uint64_t> closed(n);
  int max_closed = 0;
  for (int v = 0; v < n; ++v) {
    closed[v] = uint64_t{1} << v;
    for (int u : g.neighbors(v)) closed[v] |= uint64_t{1} << u;
    max_closed = std::max(max_closed, __builtin_popcountll(closed[v]));
  }
  std::vector<int> branch_order(n);
  for (int v = 0; v < n; ++v) branch_order[v] = v;
  std::sort(branch_order.begin(), branch_order.end(), [&](int a, int b) {
    return __builtin_popcountll(closed[a]) < __builtin_popcountll(closed[b]);
  });

  uint64_t full = (n == 63) ? ~uint64_t{0} >> 1 : (uint64_t{1} << n) - 1;
  int lower = std::max(1, (n + max_closed - 1) / max_closed);

  Searcher s{closed, branch_order, max_closed};
  for (int k = lower; k <= n; ++k) {
    s.chosen.clear();
    if (s.dfs(full, k)) {
      res.gamma = int(s.chosen.size());
      res.explored = s.explored;
      for (int v : s.chosen) res.witness.set(v);
      return res;
    }
  }
  throw InternalError("exact_gamma found no dominating set");  // unreachable
}

bool has_system_of_representatives(const Graph& g, const VertexSet& a,
                                   const VertexSet& b) {
  if (a.intersects(b))
    throw std::invalid_argument("representative sets must be disjoint");
  std::vector<int> left = a.to_vector();
  int n = g.vertex_count();
  std::vector<int> match(n, -1);  // b-vertex -> matched a-vertex

  std::vector<char> visited(n);
  auto augment = [&](auto&& self, int u) -> bool {
    for (int w : g.neighbors(u)) {
      if (!b.test(w) || visited[w]) continue;
      visited[w] = 1;
      if (match[w] == -1 || self(self, match[w])) {
        match[w] = u;
        return true;
      }
    }
    return false;
  };
  for (int u : left) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, u)) return false;
  }
  return true;
}

}  // namespace domset
