#pragma once

#include <cstdint>

#include "domset/graph.hpp"

namespace domset {

struct OracleResult {
  int gamma = 0;
  VertexSet witness;
  uint64_t explored = 0;  // search nodes visited
};

/// Exact gamma(G) for small instances: depth-limited search with closed
/// neighborhood bit masks, target cardinality increasing from the lower
/// bound, so the first complete cover found is optimal. Refuses n > limit.
OracleResult exact_gamma(const Graph& g, int limit = 25);

/// True iff each member of A can be assigned a distinct neighbor in B
/// (augmenting-path bipartite matching; equivalent to Hall's condition).
/// A and B must be disjoint.
bool has_system_of_representatives(const Graph& g, const VertexSet& a,
                                   const VertexSet& b);

}  // namespace domset
