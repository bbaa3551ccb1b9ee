#include <cmath>

#include "doctest.h"
#include "domset/bounds.hpp"
#include "domset/generators.hpp"
#include "domset/oracle.hpp"
#include "domset/purify.hpp"

using namespace domset;

TEST_CASE("gamma bounds pin small instances") {
  auto p5 = gamma_bounds(path_graph(5));
  CHECK(p5.first == 2);
  CHECK(p5.second == 2);

  auto star = gamma_bounds(star_graph(4));
  CHECK(star.first == 1);
  CHECK(star.second == 1);

  auto c4 = gamma_bounds(cycle_graph(4));
  CHECK(c4.first == 2);
  CHECK(c4.second == 2);

  CHECK_THROWS_AS(gamma_bounds(Graph::from_edge_list(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("evaluate_bounds on P5") {
  Graph p5 = path_graph(5);
  RatioReport r = evaluate_bounds(p5, 3, 2, 2);
  CHECK(r.parekh_bound == doctest::Approx(3.0));  // 6 - sqrt(9), tight for P5
  CHECK(r.eq5 == doctest::Approx(1.5));
  CHECK(*r.realized_overall_ratio == doctest::Approx(1.0));
  CHECK(*r.eq3 == doctest::Approx(std::log(2.5) + 1));
  CHECK(r.eq1.has_value());
}

TEST_CASE("fig5a-ring Parekh bound is 9") {
  Graph g = fixture("fig5a-ring");
  RatioReport r = evaluate_bounds(g, 6, 6);
  CHECK(g.vertex_count() == 15);
  CHECK(g.edge_count() == 24);
  CHECK(r.parekh_bound == doctest::Approx(9.0));  // 16 - sqrt(49)
}

TEST_CASE("piecewise-a crossover at max degree 4") {
  // Delta = 4 -> (Delta+1)/2; Delta = 5 -> ln(Delta+1)+1
  RatioReport r4 = evaluate_bounds(star_graph(4), 1, 1);
  CHECK(r4.piecewise_a == doctest::Approx(2.5));
  RatioReport r5 = evaluate_bounds(star_graph(5), 1, 1);
  CHECK(r5.piecewise_a == doctest::Approx(std::log(6.0) + 1));
}

TEST_CASE("gamma argument is validated") {
  Graph p5 = path_graph(5);
  CHECK_THROWS_AS(evaluate_bounds(p5, 3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_bounds(p5, 3, 2, 6), std::invalid_argument);
  RatioReport r = evaluate_bounds(p5, 3, 2);
  CHECK(!r.gamma.has_value());
  CHECK(!r.eq3.has_value());
  CHECK(!r.piecewise_b.has_value());
}

TEST_CASE("eq1 absent for gamma below 2") {
  RatioReport r = evaluate_bounds(star_graph(4), 1, 1, 1);
  CHECK(!r.eq1.has_value());
  CHECK(r.eq3.has_value());
}

TEST_CASE("bounds hold across a random oracle-checked suite") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_connected_graph({12, 15, seed});
    DominationResult res = solve(g);
    int gamma = exact_gamma(g).gamma;
    RatioReport r = evaluate_bounds(g, res.greedy_set.count(),
                                    res.purified_set.count(), gamma);
    CHECK(r.gamma_lower <= gamma);
    CHECK(gamma <= r.gamma_upper);
    CHECK(r.greedy_size <= r.parekh_bound + 1e-9);
    CHECK(*r.realized_greedy_ratio <= r.eq4 + 1e-9);
    CHECK(*r.realized_overall_ratio <= r.eq5 + 1e-9);
    if (gamma >= r.n / (r.max_degree + 1))
      CHECK(*r.eq3 <= r.eq4 + 1e-9);
    // selector definitions
    CHECK(r.piecewise_a ==
          (r.max_degree <= 4 ? r.eq5 : r.eq4));
    bool dense = r.n >= gamma * std::exp((r.max_degree - 1.0) / 2.0);
    CHECK(*r.piecewise_b == (dense ? r.eq5 : *r.eq3));
  }
}
