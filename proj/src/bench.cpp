#include "domset/bench.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "domset/generators.hpp"
#include "domset/oracle.hpp"

namespace domset {

BenchResult run_bench(const BenchSpec& spec) {
  BenchResult out;
  if (spec.count <= 0) return out;
  if (spec.n_min < 1 || spec.n_max < spec.n_min)
    throw std::invalid_argument("bench: bad n range");

  // Instance parameters are drawn up front from the master seed so the
  // result is identical however many workers run.
  std::mt19937_64 master(spec.seed);
  std::vector<RandomSpec> specs(spec.count);
  for (int i = 0; i < spec.count; ++i) {
    int n = spec.n_min + int(master() % uint64_t(spec.n_max - spec.n_min + 1));
    specs[i] = {n, llround(spec.m_factor * n), master()};
  }

  out.rows.assign(spec.count, {});
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < spec.count; i = next.fetch_add(1)) {
      BenchRow& row = out.rows[i];
      row.id = i;
      row.n = specs[i].n;
      row.m = specs[i].m;
      long long max_m = (long long)specs[i].n * (specs[i].n - 1) / 2;
      if (specs[i].m < specs[i].n - 1 || specs[i].m > max_m) {
        row.skipped = true;
        row.note = "infeasible edge count";
        continue;
      }
      try {
      Graph g = random_connected_graph(specs[i]);
      DominationResult res = solve(g, spec.tie_break, spec.mode);
      row.greedy_size = res.greedy_set.count();
      row.purified_size = res.purified_set.count();
      row.purification = row.greedy_size - row.purified_size;
      row.reduction_percent =
          row.greedy_size ? 100.0 * row.purification / row.greedy_size : 0.0;
      row.stage_one_ms = res.timings.stage_one_ms;
      row.stage_two_ms = res.timings.stage_two_ms;
      if (spec.with_exact && g.vertex_count() <= spec.oracle_limit) {
        OracleResult o = exact_gamma(g, spec.oracle_limit);
        row.gamma = o.gamma;
        row.realized_greedy_ratio = double(row.greedy_size) / o.gamma;
        row.realized_overall_ratio = double(row.purified_size) / o.gamma;
      }
      } catch (const std::exception& e) {
        row.skipped = true;
        row.note = std::string("error: ") + e.what();
      }
    }
  };

  int workers = spec.threads > 0 ? spec.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, spec.count);
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  double sum = 0;
  int used = 0;
  for (const auto& row : out.rows)
    if (!row.skipped) {
      sum += row.reduction_percent;
      ++used;
    }
  out.mean_reduction_percent = used ? sum / used : 0.0;
  return out;
}

}  // namespace domset
