#include "domset/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace domset {

std::pair<int, int> gamma_bounds(const Graph& g) {
  DegreeStats st = degree_stats(g);  // throws on disconnected input
  int n = g.vertex_count();
  int lower = std::max((n + st.max_degree) / (st.max_degree + 1),  // ceil
                       (st.diameter + 1 + 2) / 3);
  int upper = std::min(n / 2, n - st.max_degree);
  upper = std::max(upper, 1);  // K_1 and K_2 have gamma = 1
  return {std::max(lower, 1), upper};
}

RatioReport evaluate_bounds(const Graph& g, int greedy_size, int purified_size,
                            std::optional<int> gamma) {
  if (gamma && (*gamma <= 0 || *gamma > g.vertex_count()))
    throw std::invalid_argument("gamma out of range");

  RatioReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  DegreeStats st = degree_stats(g);
  r.max_degree = st.max_degree;
  r.min_degree = st.min_degree;
  r.diameter = st.diameter;
  r.greedy_size = greedy_size;
  r.purified_size = purified_size;

  r.parekh_bound = r.n + 1 - std::sqrt(2.0 * r.m + 1.0);
  auto [lo, hi] = gamma_bounds(g);
  r.gamma_lower = lo;
  r.gamma_upper = hi;

  r.eq4 = std::log(r.max_degree + 1.0) + 1.0;
  r.eq5 = (r.max_degree + 1.0) / 2.0;
  r.piecewise_a = (r.max_degree <= 4) ? r.eq5 : r.eq4;

  if (gamma) {
    double gm = double(*gamma);
    r.gamma = gamma;
    r.eq3 = std::log(r.n / gm) + 1.0;
    if (*gamma >= 2)
      r.eq1 = std::log(r.n / gm) / (gm * std::log(gm / (gm - 1.0))) + 1.0;
    r.piecewise_b = (r.n >= gm * std::exp((r.max_degree - 1.0) / 2.0))
                        ? r.eq5
                        : *r.eq3;
    r.realized_greedy_ratio = greedy_size / gm;
    r.realized_overall_ratio = purified_size / gm;
  }
  return r;
}

}  // namespace domset
