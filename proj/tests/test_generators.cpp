#include "doctest.h"
#include "domset/generators.hpp"
#include "domset/greedy.hpp"
#include "domset/oracle.hpp"
#include "domset/purify.hpp"

using namespace domset;

TEST_CASE("random connected graph hits its parameters") {
  Graph tree = random_connected_graph({10, 9, 42});
  CHECK(tree.vertex_count() == 10);
  CHECK(tree.edge_count() == 9);
  CHECK(is_connected(tree));

  Graph k10 = random_connected_graph({10, 45, 7});
  CHECK(k10.edge_count() == 45);

  Graph big = random_connected_graph({6000, 6060, 1});
  CHECK(big.vertex_count() == 6000);
  CHECK(big.edge_count() == 6060);
  CHECK(is_connected(big));

  CHECK_THROWS_AS(random_connected_graph({10, 8, 1}), std::invalid_argument);
  CHECK_THROWS_AS(random_connected_graph({4, 7, 1}), std::invalid_argument);
}

TEST_CASE("random generation is deterministic per seed") {
  Graph a = random_connected_graph({30, 45, 99});
  Graph b = random_connected_graph({30, 45, 99});
  CHECK(a.edges() == b.edges());
  Graph c = random_connected_graph({30, 45, 100});
  CHECK(a.edges() != c.edges());
}

TEST_CASE("corona products") {
  Graph fig4 = corona(cycle_graph(5), complete_graph(1));
  CHECK(fig4.vertex_count() == 10);
  CHECK(fig4.edge_count() == 10);

  Graph tiny = corona(complete_graph(1), complete_graph(1));
  CHECK(tiny.vertex_count() == 2);
  CHECK(tiny.edge_count() == 1);

  Graph base = corona(path_graph(2), path_graph(4));
  CHECK(base.vertex_count() == 10);
}

TEST_CASE("double subdivision with inflation") {
  Graph p2 = path_graph(2);
  Graph chain = double_subdivision_inflate(p2, {0, 1}, 1);
  CHECK(chain.vertex_count() == 4);
  CHECK(chain.edge_count() == 3);

  Graph theta = double_subdivision_inflate(p2, {0, 1}, 2);
  CHECK(theta.vertex_count() == 6);
  CHECK(theta.edge_count() == 6);  // 3k

  CHECK_THROWS_AS(double_subdivision_inflate(p2, {0, 1}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(double_subdivision_inflate(path_graph(3), {0, 2}, 1),
                  std::invalid_argument);
}

TEST_CASE("pendant addition") {
  Graph star = add_pendants(complete_graph(1), 0, 4);
  CHECK(star.vertex_count() == 5);
  CHECK(star.edge_count() == 4);
  CHECK(star.degree(0) == 4);

  Graph same = add_pendants(cycle_graph(5), 2, 0);
  CHECK(same.edges() == cycle_graph(5).edges());

  // one pendant on each C5 vertex matches the corona construction
  Graph g = cycle_graph(5);
  for (int v = 0; v < 5; ++v) g = add_pendants(g, v, 1);
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 10);
  CHECK(exact_gamma(g).gamma == exact_gamma(fixture("c5-corona-k1")).gamma);
}

TEST_CASE("W family") {
  Graph fig2 = w_family(cycle_graph(3), {2, 2, 2}, {2, 2, 0});
  CHECK(fig2.vertex_count() == 19);

  // P2 with its edge doubly subdivided is a P4 up to relabeling
  Graph p4 = w_family(path_graph(2), {1}, {0, 0});
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(is_connected(p4));
  CHECK(p4.degree(0) == 1);
  CHECK(p4.degree(1) == 1);

  Graph caterpillar = w_family(path_graph(2), {1}, {1, 1});
  CHECK(caterpillar.vertex_count() == 6);

  CHECK_THROWS_AS(w_family(path_graph(2), {1, 1}, {0, 0}),
                  std::invalid_argument);
}

TEST_CASE("greedy is optimal on W-family members") {
  std::vector<Graph> members = {
      w_family(cycle_graph(3), {2, 2, 2}, {2, 2, 2}),
      w_family(path_graph(3), {1, 2}, {1, 0, 2}),
      w_family(path_graph(2), {2}, {1, 1}),
      w_family(cycle_graph(4), {1, 1, 1, 1}, {1, 1, 1, 1}),
  };
  for (const Graph& g : members) {
    REQUIRE(g.vertex_count() <= 25);
    GreedyTrace t = greedy_dominating_set(g);
    CHECK(int(t.order.size()) == exact_gamma(g).gamma);
  }
}

TEST_CASE("corona with K1 attains n/2 through the overall algorithm") {
  for (const Graph& h : {cycle_graph(5), path_graph(4), complete_graph(3)}) {
    Graph g = corona(h, complete_graph(1));
    DominationResult r = solve(g);
    CHECK(r.purified_set.count() == g.vertex_count() / 2);
    CHECK(exact_gamma(g).gamma == g.vertex_count() / 2);
  }
}

TEST_CASE("T and T-prime families") {
  Graph fig6a = t_family(path_graph(2), path_graph(4));
  CHECK(fig6a.vertex_count() == 14);

  Graph fig6b = t_prime_family(path_graph(2), 4);
  CHECK(fig6b.vertex_count() == 10);  // 3n + p

  CHECK_THROWS_AS(t_prime_family(path_graph(2), 2), std::invalid_argument);
}

TEST_CASE("fixtures are well formed") {
  CHECK(fixture("fig1-spider").vertex_count() == 21);
  CHECK(fixture("fig2-w22c3").vertex_count() == 19);
  CHECK(fixture("fig3-counter").vertex_count() == 12);
  Graph f5 = fixture("fig5a-ring");
  CHECK(f5.vertex_count() == 15);
  CHECK(f5.edge_count() == 24);
  CHECK_THROWS_AS(fixture("nope"), std::invalid_argument);
  for (const auto& name : fixture_names()) CHECK(is_connected(fixture(name)));
}
