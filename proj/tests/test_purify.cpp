#include "doctest.h"
#include "domset/generators.hpp"
#include "domset/oracle.hpp"
#include "domset/purify.hpp"

using namespace domset;

namespace {

Graph two_leg_spider() {
  // s=0, legs 0-1-3 and 0-2-4
  return Graph::from_edge_list(5, {{0, 1}, {1, 3}, {0, 2}, {2, 4}});
}

struct Pipeline {
  GreedyTrace trace;
  TiedPairSet pairs;
  ClusterForest forest;
};

Pipeline run_stage_one(const Graph& g) {
  Pipeline p;
  p.trace = greedy_dominating_set(g);
  p.pairs = tied_pairs(g, p.trace);
  p.forest = build_forest(g, p.pairs, p.trace);
  return p;
}

}  // namespace

TEST_CASE("semi-private neighbor queries") {
  Graph p4 = path_graph(4);
  Pipeline p = run_stage_one(p4);  // forest chain 1 -> 2
  PurifyState st = make_purify_state(p4, p.forest, p.trace.final_set, PurifyMode::Extended);
  CHECK(has_semi_private_neighbor(2, st, p4, p.forest));   // pendant 3
  CHECK(has_semi_private_neighbor(1, st, p4, p.forest));   // pendant 0

  Graph p5 = path_graph(5);
  Pipeline q = run_stage_one(p5);
  PurifyState st5 = make_purify_state(p5, q.forest, q.trace.final_set, PurifyMode::Extended);
  CHECK(!has_semi_private_neighbor(2, st5, p5, q.forest));  // N(2) inside forest
}

TEST_CASE("anchor selection on the P5 chain") {
  Graph p5 = path_graph(5);
  Pipeline p = run_stage_one(p5);
  PurifyState st = make_purify_state(p5, p.forest, p.trace.final_set, PurifyMode::Extended);
  st.status[3] = VertexStatus::Firm;  // after the leaf pass
  st.status[1] = VertexStatus::Firm;
  auto a = find_anchor(p.forest.trees[0], st, p.forest);
  REQUIRE(a.has_value());
  CHECK(*a == 3);  // level 2, parent 2 pending

  st.status[2] = VertexStatus::Firm;
  CHECK(!find_anchor(p.forest.trees[0], st, p.forest).has_value());
}

TEST_CASE("P5 purification keeps {1,3}") {
  Graph p5 = path_graph(5);
  Pipeline p = run_stage_one(p5);
  DominationResult r = purify_all(p5, p.trace, p.forest);
  CHECK(r.purified_set == Bitset::of(5, {1, 3}));
  CHECK(exact_gamma(p5).gamma == 2);
}

TEST_CASE("spider purification keeps the 8 stems and the hub") {
  Graph g = fixture("fig1-spider");
  Pipeline p = run_stage_one(g);
  DominationResult r = purify_all(g, p.trace, p.forest);
  CHECK(r.purified_set.count() == 9);
  VertexSet expect(21);
  expect.set(0);
  for (int stem = 5; stem <= 12; ++stem) expect.set(stem);
  CHECK(r.purified_set == expect);
}

TEST_CASE("fig5a-ring purification is optimal") {
  Graph g = fixture("fig5a-ring");
  DominationResult r = solve(g);
  CHECK(r.purified_set.count() == 6);
  CHECK(exact_gamma(g).gamma == 6);
}

TEST_CASE("corona C5.K1 attains the n/2 bound") {
  Graph g = fixture("c5-corona-k1");
  DominationResult r = solve(g);
  CHECK(r.purified_set.count() == 5);
  CHECK(exact_gamma(g).gamma == 5);
}

TEST_CASE("star needs no purification") {
  Graph star = star_graph(4);
  DominationResult r = solve(star);
  CHECK(r.purified_set == Bitset::of(5, {0}));
  CHECK(r.purified_count == 0);
}

TEST_CASE("two-leg spider: strict keeps the root, extended purifies it") {
  Graph g = two_leg_spider();
  DominationResult strict = solve(g, TieBreak::MinIndex, PurifyMode::Strict);
  CHECK(strict.purified_set == Bitset::of(5, {0, 1, 2}));
  CHECK(!is_minimal_dominating(g, strict.purified_set));
  CHECK(strict.strict_mode_bound_violated);  // 3 > floor(5/2)

  DominationResult ext = solve(g, TieBreak::MinIndex, PurifyMode::Extended);
  CHECK(ext.purified_set == Bitset::of(5, {1, 2}));
  CHECK(is_minimal_dominating(g, ext.purified_set));
}

TEST_CASE("fig7-mwds purification drops the redundant triangle apex") {
  Graph g = fixture("fig7-mwds");
  DominationResult r = solve(g);
  CHECK(r.greedy_set == Bitset::of(8, {0, 1, 2}));
  CHECK(r.purified_set == Bitset::of(8, {1, 2}));
  CHECK(exact_gamma(g).gamma == 2);
}

TEST_CASE("ensure_minimal") {
  Graph g = two_leg_spider();
  CHECK(ensure_minimal(g, Bitset::of(5, {0, 1, 2})) == Bitset::of(5, {1, 2}));
  CHECK(ensure_minimal(g, Bitset::of(5, {1, 2})) == Bitset::of(5, {1, 2}));
  Graph p3 = path_graph(3);
  CHECK(ensure_minimal(p3, Bitset::of(3, {0, 1, 2})) == Bitset::of(3, {1}));
  CHECK_THROWS_AS(ensure_minimal(p3, Bitset::of(3, {0})), std::invalid_argument);
}

TEST_CASE("random suite: purification invariants") {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = random_connected_graph({13, 17, seed});
    Pipeline p = run_stage_one(g);
    DominationResult r = purify_all(g, p.trace, p.forest);
    CHECK(r.purified_set.is_subset_of(r.greedy_set));
    CHECK(is_dominating(g, r.purified_set));
    CHECK(r.purified_set.count() <= g.vertex_count() / 2);
    CHECK(is_minimal_dominating(g, r.purified_set));
    // Each kept vertex must own a distinct representative outside S*.
    VertexSet rest(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!r.purified_set.test(v)) rest.set(v);
    CHECK(has_system_of_representatives(g, r.purified_set, rest));
    // determinism
    DominationResult r2 = purify_all(g, p.trace, p.forest);
    CHECK(r.purified_set == r2.purified_set);
  }
}
