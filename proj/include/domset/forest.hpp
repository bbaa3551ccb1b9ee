#pragma once

#include <vector>

#include "domset/graph.hpp"
#include "domset/greedy.hpp"

namespace domset {

/// Ordered pair (v_h, v): v was first covered at the step that selected v_h
/// and later entered S itself. Always an edge of G; each child has a unique
/// parent because the S(h) are disjoint.
struct TiedPair {
  int parent;
  int child;
};

struct TiedPairSet {
  std::vector<TiedPair> pairs;
};

/// The rooted forest G(P_S). Per-vertex arrays are sized over all of G's
/// vertices; entries are meaningful only where membership holds. Children are
/// ordered by the child's greedy selection index, which defines "leftmost".
struct ClusterForest {
  Bitset membership;
  std::vector<int> parent;                  // -1 for roots and non-forest vertices
  std::vector<std::vector<int>> children;   // ascending greedy index
  std::vector<int> level;                   // root = 0; -1 outside the forest
  std::vector<int> tree_index;              // -1 outside the forest
  std::vector<int> preorder;                // left-to-right rank within the tree
  std::vector<int> roots;                   // ascending greedy index of the root
  std::vector<std::vector<int>> trees;      // vertices of each tree, preorder

  int vertex_total() const { return membership.count(); }
};

TiedPairSet tied_pairs(const Graph& g, const GreedyTrace& trace);

/// Materializes G(P_S). Throws InternalError if the pair ordering is cyclic
/// or a child precedes its parent in the trace, which would mean the trace
/// is corrupt.
ClusterForest build_forest(const Graph& g, const TiedPairSet& pairs,
                           const GreedyTrace& trace);

/// Checks that every edge between S-members (v_b, v_c), b < c, is either a
/// tied pair itself or is preempted by a pair (v_a, v_c) with a < b.
bool verify_proposition_1(const Graph& g, const GreedyTrace& trace,
                          const TiedPairSet& pairs);

}  // namespace domset
