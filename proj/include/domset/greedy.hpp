#pragma once

#include <string>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

enum class TieBreak { MinIndex, MaxIndex };

/// Full execution record of stage one: the selection order v_1..v_p and, for
/// each step h, the set S(h) of vertices newly covered at that step. A
/// selected vertex appears in its own S(h) only when it was still uncovered
/// at selection time, which keeps the S(h) mutually disjoint.
struct GreedyTrace {
  std::vector<int> order;
  std::vector<std::vector<int>> coverage;
  VertexSet final_set;
  TieBreak tie_break = TieBreak::MinIndex;
};

struct Certificate {
  enum class Kind { None, SizeAtMostTwo, IndependentPartition };
  Kind kind = Kind::None;
  std::string detail;
};

/// Number of v's neighbors that are neither in the set nor adjacent to it.
/// `covered` must equal in_set ∪ N(in_set). Throws if v is in the set.
int active_degree(const Graph& g, const VertexSet& covered,
                  const VertexSet& in_set, int v);

/// Stage one: repeatedly pick a maximum-active-degree vertex until the set
/// dominates. Remaining uncovered vertices with active degree 0 (isolated
/// vertices only) are absorbed as individual trace steps.
GreedyTrace greedy_dominating_set(const Graph& g,
                                  TieBreak tie_break = TieBreak::MinIndex);

/// |S| <= 2 implies S is minimum.
Certificate certify_size_two(const GreedyTrace& trace);

/// S independent and no outside vertex adjacent to two S-members implies the
/// closed neighborhoods of S partition V, so S is minimum.
Certificate certify_independent_partition(const Graph& g, const GreedyTrace& trace);

/// Whether the tied-pair set P_S is empty; equal to is_independent(G, S).
bool tied_pair_emptiness(const Graph& g, const GreedyTrace& trace);

}  // namespace domset
