#pragma once

#include <optional>
#include <vector>

#include "domset/bounds.hpp"
#include "domset/forest.hpp"
#include "domset/graph.hpp"
#include "domset/greedy.hpp"

namespace domset {

enum class PurifyMode { Strict, Extended };
enum class VertexStatus { Pending, Firm, Purified };

/// Mutable stage-two state shared across all trees. `remaining_forest_neighbors`
/// counts, for each non-forest vertex x, the forest neighbors of x not yet
/// purified; it realizes the semi-private-neighbor test and is kept exact
/// under every purification. `outside_dominated` marks the non-forest vertices
/// whose domination never depends on the forest (members of S outside the
/// forest, and their neighbors); such a vertex is never semi-private.
struct PurifyState {
  std::vector<VertexStatus> status;
  std::vector<int> remaining_forest_neighbors;
  std::vector<char> outside_dominated;
  PurifyMode mode = PurifyMode::Extended;
};

struct StageTimings {
  double stage_one_ms = 0;
  double stage_two_ms = 0;
};

struct DominationResult {
  VertexSet greedy_set;
  VertexSet purified_set;     // S*
  Certificate size_two_cert;
  Certificate partition_cert;
  RatioReport report;         // without gamma; callers may re-evaluate
  StageTimings timings;
  std::vector<VertexStatus> final_status;
  int purified_count = 0;     // |S| - |S*|
  // Strict mode may keep a redundant pending root and then exceed n/2 or
  // lose minimality; recorded rather than treated as an error.
  bool strict_mode_bound_violated = false;
};

PurifyState make_purify_state(const Graph& g, const ClusterForest& forest,
                              const VertexSet& greedy_set, PurifyMode mode);

/// True iff some non-forest neighbor x of v has v as its only non-purified
/// forest neighbor and no dominator in S outside the forest. v must not be
/// purified.
bool has_semi_private_neighbor(int v, const PurifyState& state, const Graph& g,
                               const ClusterForest& forest);

/// The highest-level firm vertex with a pending parent; ties at the deepest
/// level broken leftmost (smallest preorder rank). nullopt if none exists.
std::optional<int> find_anchor(const std::vector<int>& tree,
                               const PurifyState& state,
                               const ClusterForest& forest);

/// Procedure Purify for one tree: leaf pass, then the quadruple/trio rules
/// driven by the anchor. Statuses of earlier trees must already be final.
void purify_tree(int tree_idx, PurifyState& state, const ClusterForest& forest,
                 const Graph& g);

/// The overall two-stage result: S* = (S minus forest vertices) union the
/// non-purified forest vertices, trees processed in root order with the
/// shared neighbor index. Verifies domination, the n/2 bound (extended mode)
/// and the per-purified-vertex coverage property, throwing InternalError on
/// violation.
DominationResult purify_all(const Graph& g, const GreedyTrace& trace,
                            const ClusterForest& forest,
                            PurifyMode mode = PurifyMode::Extended);

/// Runs both stages end to end on a connected graph and fills the timings.
DominationResult solve(const Graph& g, TieBreak tie_break = TieBreak::MinIndex,
                       PurifyMode mode = PurifyMode::Extended);

/// Optional post-pass: drop the smallest-index redundant vertex until the
/// set is minimal. Rejects a non-dominating input set.
VertexSet ensure_minimal(const Graph& g, const VertexSet& s);

}  // namespace domset
