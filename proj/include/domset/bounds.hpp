#pragma once

#include <optional>
#include <utility>

#include "domset/graph.hpp"

namespace domset {

/// Every bound and approximation ratio the solver reports for one instance.
/// The gamma-dependent fields are present only when an oracle-computed gamma
/// was supplied.
struct RatioReport {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  int diameter = 0;
  int greedy_size = 0;
  int purified_size = 0;

  double parekh_bound = 0;   // n + 1 - sqrt(2m + 1), upper bound on |S|
  int gamma_lower = 0;       // max(ceil(n/(max_degree+1)), ceil((d+1)/3))
  int gamma_upper = 0;       // min(floor(n/2), n - max_degree)

  double eq4 = 0;            // ln(max_degree + 1) + 1
  double eq5 = 0;            // (max_degree + 1) / 2
  double piecewise_a = 0;    // eq5 if max_degree <= 4, else eq4

  std::optional<int> gamma;
  std::optional<double> eq1;          // Chvatal form; gamma >= 2 only
  std::optional<double> eq3;          // ln(n/gamma) + 1
  std::optional<double> piecewise_b;  // eq5 if n >= gamma*e^((Δ-1)/2), else eq3
  std::optional<double> realized_greedy_ratio;
  std::optional<double> realized_overall_ratio;
};

/// Lower/upper bounds on gamma(G) for connected G.
std::pair<int, int> gamma_bounds(const Graph& g);

/// Evaluates all bounds for a completed run. `gamma` must come from the
/// exact oracle when supplied; 0 or > n is rejected.
RatioReport evaluate_bounds(const Graph& g, int greedy_size, int purified_size,
                            std::optional<int> gamma = std::nullopt);

}  // namespace domset
