#include <algorithm>

#include "doctest.h"
#include "domset/forest.hpp"
#include "domset/generators.hpp"

using namespace domset;

TEST_CASE("tied pairs on small paths") {
  Graph p4 = path_graph(4);
  GreedyTrace t4 = greedy_dominating_set(p4);
  TiedPairSet ps4 = tied_pairs(p4, t4);
  REQUIRE(ps4.pairs.size() == 1);
  CHECK(ps4.pairs[0].parent == 1);
  CHECK(ps4.pairs[0].child == 2);

  Graph p5 = path_graph(5);
  TiedPairSet ps5 = tied_pairs(p5, greedy_dominating_set(p5));
  REQUIRE(ps5.pairs.size() == 2);
  CHECK(ps5.pairs[0].parent == 1);
  CHECK(ps5.pairs[0].child == 2);
  CHECK(ps5.pairs[1].parent == 2);
  CHECK(ps5.pairs[1].child == 3);

  Graph star = star_graph(4);
  CHECK(tied_pairs(star, greedy_dominating_set(star)).pairs.empty());
}

TEST_CASE("forest of the P5 trace is a chain") {
  Graph p5 = path_graph(5);
  GreedyTrace t = greedy_dominating_set(p5);
  ClusterForest f = build_forest(p5, tied_pairs(p5, t), t);
  REQUIRE(f.roots == std::vector<int>{1});
  CHECK(f.parent[2] == 1);
  CHECK(f.parent[3] == 2);
  CHECK(f.level[1] == 0);
  CHECK(f.level[2] == 1);
  CHECK(f.level[3] == 2);
}

TEST_CASE("forest of the spider trace") {
  Graph g = fixture("fig1-spider");
  GreedyTrace t = greedy_dominating_set(g);
  ClusterForest f = build_forest(g, tied_pairs(g, t), t);
  REQUIRE(f.roots == std::vector<int>{0});
  CHECK(f.children[0].size() == 4);  // the mid vertices
  for (int mid = 1; mid <= 4; ++mid) {
    CHECK(f.parent[mid] == 0);
    CHECK(f.children[mid].size() == 2);  // its stems
  }
  for (int stem = 5; stem <= 12; ++stem) CHECK(f.level[stem] == 2);
  CHECK(f.vertex_total() == 13);
}

TEST_CASE("forest of the fig5a-ring trace has two 3-vertex trees") {
  Graph g = fixture("fig5a-ring");
  GreedyTrace t = greedy_dominating_set(g);
  ClusterForest f = build_forest(g, tied_pairs(g, t), t);
  REQUIRE(f.trees.size() == 2);
  CHECK(f.trees[0].size() == 3);
  CHECK(f.trees[1].size() == 3);
}

TEST_CASE("tied-pair cover property and structural invariants over random traces") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_connected_graph({14, 20, seed});
    GreedyTrace t = greedy_dominating_set(g);
    TiedPairSet ps = tied_pairs(g, t);
    CHECK(verify_proposition_1(g, t, ps));
    ClusterForest f = build_forest(g, ps, t);
    // edge count = |P_S|, tree count = vertices - edges
    CHECK(int(ps.pairs.size()) == f.vertex_total() - int(f.roots.size()));

    // The non-forest part of S must be independent with an
    // outside neighbor.
    VertexSet rest(g.vertex_count());
    for (int v : t.final_set.to_vector())
      if (!f.membership.test(v)) rest.set(v);
    CHECK(is_independent(g, rest));
    for (int v : rest.to_vector())
      CHECK(g.neighbor_bits(v).count_and_not(t.final_set) > 0);
  }
}
