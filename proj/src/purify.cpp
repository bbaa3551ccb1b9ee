#include "domset/purify.hpp"

#include <algorithm>
#include <chrono>

namespace domset {

PurifyState make_purify_state(const Graph& g, const ClusterForest& forest,
                              const VertexSet& greedy_set, PurifyMode mode) {
  int n = g.vertex_count();
  PurifyState st;
  st.mode = mode;
  st.status.assign(n, VertexStatus::Pending);
  st.remaining_forest_neighbors.assign(n, 0);
  st.outside_dominated.assign(n, 0);
  VertexSet outside = greedy_set;
  for (int v : forest.membership.to_vector()) outside.reset(v);
  for (int x = 0; x < n; ++x) {
    if (forest.membership.test(x)) continue;
    st.remaining_forest_neighbors[x] =
        g.neighbor_bits(x).intersect_count(forest.membership);
    // Members of S outside the forest are never purified, so any vertex they
    // dominate keeps a dominator no matter what happens to the forest.
    st.outside_dominated[x] =
        outside.test(x) || g.neighbor_bits(x).intersects(outside);
  }
  return st;
}

bool has_semi_private_neighbor(int v, const PurifyState& state, const Graph& g,
                               const ClusterForest& forest) {
  if (state.status[v] == VertexStatus::Purified)
    throw std::invalid_argument("semi-private query on a purified vertex");
  // v itself is a non-purified forest neighbor of any such x, so a remaining
  // count of 1 means that sole neighbor is v.
  for (int x : g.neighbors(v)) {
    if (forest.membership.test(x)) continue;
    if (state.remaining_forest_neighbors[x] == 1 && !state.outside_dominated[x])
      return true;
  }
  return false;
}

namespace {

void purify_vertex(int v, PurifyState& state, const ClusterForest& forest,
                   const Graph& g) {
  if (state.status[v] != VertexStatus::Pending)
    throw InternalError("purifying a non-pending vertex " + std::to_string(v));
  state.status[v] = VertexStatus::Purified;
  for (int x : g.neighbors(v)) {
    if (forest.membership.test(x)) continue;
    if (--state.remaining_forest_neighbors[x] == 0 &&
        !state.outside_dominated[x])
      throw InternalError("vertex " + std::to_string(x) +
                          " lost its last dominator");
  }
}

void set_firm(int v, PurifyState& state) {
  if (state.status[v] == VertexStatus::Purified)
    throw InternalError("purified vertex " + std::to_string(v) +
                        " proposed as firm");
  state.status[v] = VertexStatus::Firm;
}

}  // namespace

std::optional<int> find_anchor(const std::vector<int>& tree,
                               const PurifyState& state,
                               const ClusterForest& forest) {
  std::optional<int> best;
  for (int v : tree) {
    if (state.status[v] != VertexStatus::Firm) continue;
    int p = forest.parent[v];
    if (p == -1 || state.status[p] != VertexStatus::Pending) continue;
    if (!best || forest.level[v] > forest.level[*best] ||
        (forest.level[v] == forest.level[*best] &&
         forest.preorder[v] < forest.preorder[*best]))
      best = v;
  }
  return best;
}

void purify_tree(int tree_idx, PurifyState& state, const ClusterForest& forest,
                 const Graph& g) {
  const std::vector<int>& tree = forest.trees[tree_idx];

  // Iteration 0: leaves with a semi-private neighbor become firm, the rest
  // are purified and promote their parent to firm. Left to right, with the
  // test applied at visit time since earlier purifications shrink the counts.
  for (int l : tree) {
    if (!forest.children[l].empty()) continue;
    if (has_semi_private_neighbor(l, state, g, forest)) {
      set_firm(l, state);
    } else {
      purify_vertex(l, state, forest, g);
      if (state.status[forest.parent[l]] == VertexStatus::Pending)
        set_firm(forest.parent[l], state);
    }
  }

  while (true) {
    for (int v : tree)
      if (state.status[v] == VertexStatus::Pending &&
          has_semi_private_neighbor(v, state, g, forest))
        set_firm(v, state);

    std::optional<int> anchor = find_anchor(tree, state, forest);
    if (!anchor) return;

    // Up-going chain from the anchor on the original topology; purified
    // vertices stay navigable so c may be one purified from another branch.
    int a = *anchor;
    int b = forest.parent[a];  // pending, by the anchor definition
    int c = forest.parent[b];
    int d = (c != -1) ? forest.parent[c] : -1;

    if (c != -1 && state.status[c] == VertexStatus::Pending && d != -1) {
      // Quadruple (a,b,c,d): purify b and c, promote d unless already decided.
      purify_vertex(b, state, forest, g);
      purify_vertex(c, state, forest, g);
      if (state.status[d] == VertexStatus::Pending) set_firm(d, state);
    } else if (c != -1) {
      // Trio (a,b,c): c's status is irrelevant.
      purify_vertex(b, state, forest, g);
    } else if (state.mode == PurifyMode::Extended) {
      // b is the root and a is firm below it: b is covered by a and, being
      // still pending after the semi-private pass, is removable.
      purify_vertex(b, state, forest, g);
    } else {
      return;
    }
  }
}

DominationResult purify_all(const Graph& g, const GreedyTrace& trace,
                            const ClusterForest& forest, PurifyMode mode) {
  auto t0 = std::chrono::steady_clock::now();
  int n = g.vertex_count();

  // The non-forest part of S is independent and each member
  // keeps a neighbor outside S.
  VertexSet outside(n);
  for (int v : trace.final_set.to_vector())
    if (!forest.membership.test(v)) outside.set(v);
  if (!is_independent(g, outside))
    throw InternalError("S minus forest vertices is not independent");
  for (int v : outside.to_vector()) {
    if (g.degree(v) > 0 &&
        g.neighbor_bits(v).count_and_not(trace.final_set) == 0)
      throw InternalError("non-forest S-vertex " + std::to_string(v) +
                          " has no neighbor outside S");
  }

  PurifyState state = make_purify_state(g, forest, trace.final_set, mode);
  for (size_t t = 0; t < forest.trees.size(); ++t)
    purify_tree(int(t), state, forest, g);

  DominationResult res;
  res.greedy_set = trace.final_set;
  res.purified_set = outside;
  for (int v : forest.membership.to_vector())
    if (state.status[v] != VertexStatus::Purified) res.purified_set.set(v);
  res.final_status = state.status;
  res.purified_count = res.greedy_set.count() - res.purified_set.count();
  res.size_two_cert = certify_size_two(trace);
  res.partition_cert = certify_independent_partition(g, trace);

  if (!res.purified_set.is_subset_of(res.greedy_set))
    throw InternalError("S* is not a subset of S");
  if (!is_dominating(g, res.purified_set))
    throw InternalError("purified set is not dominating");
  // Every purified vertex must keep its parent or a child (its cover).
  for (int p : forest.membership.to_vector()) {
    if (state.status[p] != VertexStatus::Purified) continue;
    bool covered = forest.parent[p] != -1 &&
                   state.status[forest.parent[p]] != VertexStatus::Purified;
    for (int ch : forest.children[p])
      covered = covered || state.status[ch] != VertexStatus::Purified;
    if (!covered)
      throw InternalError("purified vertex " + std::to_string(p) +
                          " has neither parent nor child kept");
  }
  if (n >= 2 && res.purified_set.count() > n / 2) {
    if (mode == PurifyMode::Extended)
      throw InternalError("|S*| exceeds n/2 in extended mode");
    res.strict_mode_bound_violated = true;
  }

  res.report = evaluate_bounds(g, res.greedy_set.count(),
                               res.purified_set.count());
  auto t1 = std::chrono::steady_clock::now();
  res.timings.stage_two_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return res;
}

DominationResult solve(const Graph& g, TieBreak tie_break, PurifyMode mode) {
  auto t0 = std::chrono::steady_clock::now();
  GreedyTrace trace = greedy_dominating_set(g, tie_break);
  auto t1 = std::chrono::steady_clock::now();
  TiedPairSet pairs = tied_pairs(g, trace);
  ClusterForest forest = build_forest(g, pairs, trace);
  DominationResult res = purify_all(g, trace, forest, mode);
  res.timings.stage_one_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return res;
}

VertexSet ensure_minimal(const Graph& g, const VertexSet& s) {
  if (!is_dominating(g, s))
    throw std::invalid_argument("ensure_minimal: input set is not dominating");
  VertexSet cur = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : cur.to_vector()) {
      VertexSet reduced = cur;
      reduced.reset(v);
      if (is_dominating(g, reduced)) {
        cur = reduced;
        changed = true;
        break;
      }
    }
  }
  return cur;
}

}  // namespace domset
