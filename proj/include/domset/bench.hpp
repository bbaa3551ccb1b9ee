#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domset/greedy.hpp"
#include "domset/purify.hpp"

namespace domset {

struct BenchSpec {
  int count = 0;
  int n_min = 0;
  int n_max = 0;
  double m_factor = 1.0;  // m = round(m_factor * n)
  uint64_t seed = 0;
  bool with_exact = false;
  int oracle_limit = 25;
  TieBreak tie_break = TieBreak::MinIndex;
  PurifyMode mode = PurifyMode::Extended;
  int threads = 0;  // 0 = hardware concurrency
};

struct BenchRow {
  int id = 0;
  int n = 0;
  long long m = 0;
  int greedy_size = 0;
  int purified_size = 0;
  int purification = 0;           // greedy_size - purified_size
  double reduction_percent = 0;   // 100 * purification / greedy_size
  double stage_one_ms = 0;
  double stage_two_ms = 0;
  std::optional<int> gamma;
  std::optional<double> realized_greedy_ratio;
  std::optional<double> realized_overall_ratio;
  bool skipped = false;
  std::string note;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  double mean_reduction_percent = 0;  // over non-skipped rows
};

/// Generates `count` seeded random connected instances, runs both stages on
/// each (a worker pool; rows stay ordered by id), and aggregates the mean
/// reduction. Infeasible instance specs are skipped with a note.
BenchResult run_bench(const BenchSpec& spec);

}  // namespace domset
