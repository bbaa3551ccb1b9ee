#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "domset/bench.hpp"
#include "domset/forest.hpp"
#include "domset/generators.hpp"
#include "domset/io.hpp"
#include "domset/oracle.hpp"
#include "domset/purify.hpp"
#include "json.hpp"

using namespace domset;
using nlohmann::json;

namespace {

TieBreak tie_break_from(const std::string& s) {
  if (s == "min") return TieBreak::MinIndex;
  if (s == "max") return TieBreak::MaxIndex;
  throw CLI::ValidationError("--tie-break", "expected min or max");
}

PurifyMode mode_from(const std::string& s) {
  if (s == "strict") return PurifyMode::Strict;
  if (s == "extended") return PurifyMode::Extended;
  throw CLI::ValidationError("--purify-mode", "expected strict or extended");
}

uint64_t effective_seed(uint64_t cli_seed) {
  if (const char* env = std::getenv("DOMSET_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("DOMSET_SEED is not an unsigned integer: " +
                                  std::string(env));
    }
  }
  return cli_seed;
}

Graph load_graph(const std::string& path, const std::string& format,
                 const std::string& fixture_name) {
  if (!fixture_name.empty()) return fixture(fixture_name);
  if (path.empty())
    throw std::invalid_argument("either a graph file or --fixture is required");
  if (path == "-") return parse_graph(std::cin, format_from_name(format));
  return parse_graph_file(path, format_from_name(format));
}

VertexSet parse_set(const std::string& csv, int n) {
  VertexSet s(n);
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size())
      throw std::invalid_argument("bad vertex id in --set: " + item);
    if (v < 0 || v >= n)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range 0.." + std::to_string(n - 1));
    s.set(v);
  }
  return s;
}

const char* cert_name(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::SizeAtMostTwo: return "size-at-most-two";
    case Certificate::Kind::IndependentPartition: return "independent-partition";
    default: return "none";
  }
}

json report_json(const RatioReport& r) {
  json j{{"n", r.n},
         {"m", r.m},
         {"max_degree", r.max_degree},
         {"min_degree", r.min_degree},
         {"diameter", r.diameter},
         {"greedy_size", r.greedy_size},
         {"purified_size", r.purified_size},
         {"parekh_bound", r.parekh_bound},
         {"gamma_lower", r.gamma_lower},
         {"gamma_upper", r.gamma_upper},
         {"eq4", r.eq4},
         {"eq5", r.eq5},
         {"piecewise_a", r.piecewise_a}};
  if (r.gamma) j["gamma"] = *r.gamma;
  if (r.eq1) j["eq1"] = *r.eq1;
  if (r.eq3) j["eq3"] = *r.eq3;
  if (r.piecewise_b) j["piecewise_b"] = *r.piecewise_b;
  if (r.realized_greedy_ratio) j["realized_greedy_ratio"] = *r.realized_greedy_ratio;
  if (r.realized_overall_ratio) j["realized_overall_ratio"] = *r.realized_overall_ratio;
  return j;
}

struct SolveOptions {
  std::string path, format = "edgelist", fixture_name;
  std::string tie_break = "min", mode = "extended";
  bool minimalize = false, components = false, with_exact = false, as_json = false;
  int oracle_limit = 25;
};

json solve_one(const Graph& g, const SolveOptions& opt) {
  DominationResult r = solve(g, tie_break_from(opt.tie_break), mode_from(opt.mode));
  VertexSet final_set = r.purified_set;
  if (opt.minimalize) final_set = ensure_minimal(g, final_set);

  std::optional<OracleResult> oracle;
  if (opt.with_exact && g.vertex_count() <= opt.oracle_limit) {
    oracle = exact_gamma(g, opt.oracle_limit);
    r.report = evaluate_bounds(g, int(r.greedy_set.count()),
                               int(final_set.count()), oracle->gamma);
  } else if (opt.minimalize) {
    r.report = evaluate_bounds(g, int(r.greedy_set.count()),
                               int(final_set.count()));
  }

  json j{{"n", g.vertex_count()},
         {"m", g.edge_count()},
         {"tie_break", opt.tie_break},
         {"purify_mode", opt.mode},
         {"greedy", {{"size", r.greedy_set.count()},
                     {"set", r.greedy_set.to_vector()}}},
         {"purified", {{"size", final_set.count()},
                       {"set", final_set.to_vector()}}},
         {"purification", int(r.greedy_set.count()) - int(final_set.count())},
         {"minimal", is_minimal_dominating(g, final_set)},
         {"certificate", cert_name(r.size_two_cert.kind != Certificate::Kind::None
                                       ? r.size_two_cert.kind
                                       : r.partition_cert.kind)},
         {"bounds", report_json(r.report)},
         {"timings", {{"stage_one_ms", r.timings.stage_one_ms},
                      {"stage_two_ms", r.timings.stage_two_ms}}}};
  if (r.greedy_set.count() > 0)
    j["reduction_percent"] =
        100.0 * (int(r.greedy_set.count()) - int(final_set.count())) /
        double(r.greedy_set.count());
  if (r.strict_mode_bound_violated) j["strict_mode_bound_violated"] = true;
  if (oracle) {
    j["exact"] = {{"gamma", oracle->gamma},
                  {"witness", oracle->witness.to_vector()}};
  }
  return j;
}

void print_solve_human(const json& j, std::ostream& out) {
  out << "n=" << j["n"].get<int>() << " m=" << j["m"].get<long long>() << "\n";
  auto set_line = [&](const char* label, const json& part) {
    out << label << " (" << part["size"].get<int>() << "):";
    for (int v : part["set"].get<std::vector<int>>()) out << ' ' << v;
    out << "\n";
  };
  set_line("greedy", j["greedy"]);
  set_line("purified", j["purified"]);
  out << "purified away: " << j["purification"].get<int>();
  if (j.contains("reduction_percent"))
    out << " (" << j["reduction_percent"].get<double>() << "%)";
  out << "\nminimal: " << (j["minimal"].get<bool>() ? "yes" : "no") << "\n";
  out << "certificate: " << j["certificate"].get<std::string>() << "\n";
  const json& b = j["bounds"];
  out << "parekh bound: " << b["parekh_bound"].get<double>()
      << "  gamma in [" << b["gamma_lower"].get<int>() << ", "
      << b["gamma_upper"].get<int>() << "]\n";
  if (j.contains("exact")) {
    out << "gamma: " << j["exact"]["gamma"].get<int>() << "  witness:";
    for (int v : j["exact"]["witness"].get<std::vector<int>>()) out << ' ' << v;
    out << "\n";
    if (b.contains("realized_overall_ratio"))
      out << "realized ratio: " << b["realized_overall_ratio"].get<double>()
          << "\n";
  }
  if (j.contains("strict_mode_bound_violated"))
    out << "note: strict mode exceeded the n/2 bound on this instance\n";
}

int run_solve(const SolveOptions& opt) {
  Graph g = load_graph(opt.path, opt.format, opt.fixture_name);
  if (!is_connected(g) && g.vertex_count() > 0) {
    if (!opt.components)
      throw std::invalid_argument(
          "input graph is disconnected; pass --components to solve per part");
    auto comps = connected_components(g);
    json parts = json::array();
    std::vector<int> greedy_all, purified_all;
    for (const auto& comp : comps) {
      Graph sub = induced_subgraph(g, comp);
      json one = solve_one(sub, opt);
      for (int v : one["greedy"]["set"].get<std::vector<int>>())
        greedy_all.push_back(comp[v]);
      for (int v : one["purified"]["set"].get<std::vector<int>>())
        purified_all.push_back(comp[v]);
      one["vertices"] = comp;
      parts.push_back(std::move(one));
    }
    std::sort(greedy_all.begin(), greedy_all.end());
    std::sort(purified_all.begin(), purified_all.end());
    json j{{"n", g.vertex_count()},
           {"m", g.edge_count()},
           {"components", parts},
           {"greedy", {{"size", greedy_all.size()}, {"set", greedy_all}}},
           {"purified", {{"size", purified_all.size()}, {"set", purified_all}}}};
    if (opt.as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << comps.size() << " components\n";
      std::cout << "greedy (" << greedy_all.size() << "), purified ("
                << purified_all.size() << ")\n";
    }
    return 0;
  }
  json j = solve_one(g, opt);
  if (opt.as_json)
    std::cout << j.dump(2) << "\n";
  else
    print_solve_human(j, std::cout);
  return 0;
}

int run_verify(const std::string& path, const std::string& format,
               const std::string& fixture_name, const std::string& set_csv,
               bool as_json) {
  Graph g = load_graph(path, format, fixture_name);
  VertexSet s = parse_set(set_csv, g.vertex_count());
  bool dom = is_dominating(g, s);
  bool minimal = dom && is_minimal_dominating(g, s);
  bool indep = is_independent(g, s);
  if (as_json) {
    json j{{"n", g.vertex_count()},
           {"size", s.count()},
           {"dominating", dom},
           {"minimal", minimal},
           {"independent", indep}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "size: " << s.count() << "\n"
              << "dominating: " << (dom ? "yes" : "no") << "\n"
              << "minimal: " << (minimal ? "yes" : "no") << "\n"
              << "independent: " << (indep ? "yes" : "no") << "\n";
  }
  return dom ? 0 : 1;
}

int run_exact(const std::string& path, const std::string& format,
              const std::string& fixture_name, int limit, bool as_json) {
  Graph g = load_graph(path, format, fixture_name);
  OracleResult o = exact_gamma(g, limit);
  if (as_json) {
    json j{{"n", g.vertex_count()},
           {"gamma", o.gamma},
           {"witness", o.witness.to_vector()},
           {"explored", o.explored}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "gamma: " << o.gamma << "\nwitness:";
    for (int v : o.witness.to_vector()) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return 0;
}

struct GenOptions {
  std::string family, fixture_name, format = "edgelist", output;
  int n = 0;
  long long m = 0;
  uint64_t seed = 0;
};

int run_gen(const GenOptions& opt) {
  Graph g = [&] {
    if (!opt.fixture_name.empty()) return fixture(opt.fixture_name);
    if (opt.family == "random")
      return random_connected_graph({opt.n, opt.m, effective_seed(opt.seed)});
    if (opt.family == "path") return path_graph(opt.n);
    if (opt.family == "cycle") return cycle_graph(opt.n);
    if (opt.family == "complete") return complete_graph(opt.n);
    if (opt.family == "star") return star_graph(opt.n);
    if (opt.family == "corona-k1") return corona(cycle_graph(opt.n), complete_graph(1));
    throw std::invalid_argument("unknown family: " + opt.family);
  }();
  GraphFormat fmt = format_from_name(opt.format);
  if (opt.output.empty() || opt.output == "-")
    write_graph(std::cout, g, fmt);
  else
    write_graph_file(opt.output, g, fmt);
  return 0;
}

struct BenchOptions {
  int count = 10;
  std::string n_range = "10..18";
  double m_factor = 1.3;
  uint64_t seed = 1;
  bool with_exact = false, as_json = false;
  int oracle_limit = 25, threads = 0;
  std::string tie_break = "min", mode = "extended";
};

int run_bench_cmd(const BenchOptions& opt) {
  BenchSpec spec;
  spec.count = opt.count;
  size_t dots = opt.n_range.find("..");
  if (dots == std::string::npos) {
    spec.n_min = spec.n_max = std::stoi(opt.n_range);
  } else {
    spec.n_min = std::stoi(opt.n_range.substr(0, dots));
    spec.n_max = std::stoi(opt.n_range.substr(dots + 2));
  }
  if (spec.n_min <= 0 || spec.n_max < spec.n_min)
    throw std::invalid_argument("bad --n range: " + opt.n_range);
  spec.m_factor = opt.m_factor;
  spec.seed = effective_seed(opt.seed);
  spec.with_exact = opt.with_exact;
  spec.oracle_limit = opt.oracle_limit;
  spec.tie_break = tie_break_from(opt.tie_break);
  spec.mode = mode_from(opt.mode);
  spec.threads = opt.threads;

  BenchResult res = run_bench(spec);
  if (opt.as_json) {
    json rows = json::array();
    for (const BenchRow& r : res.rows) {
      json j{{"no", r.id},
             {"n", r.n},
             {"m", r.m},
             {"greedy", r.greedy_size},
             {"purified", r.purified_size},
             {"purification", r.purification},
             {"reduction_percent", r.reduction_percent},
             {"stage_one_ms", r.stage_one_ms},
             {"stage_two_ms", r.stage_two_ms}};
      if (r.gamma) j["gamma"] = *r.gamma;
      if (r.realized_greedy_ratio) j["realized_greedy_ratio"] = *r.realized_greedy_ratio;
      if (r.realized_overall_ratio) j["realized_overall_ratio"] = *r.realized_overall_ratio;
      if (r.skipped) j["skipped"] = r.note;
      rows.push_back(std::move(j));
    }
    json out{{"rows", rows},
             {"mean_reduction_percent", res.mean_reduction_percent}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "no,n,m,greedy,purified,purification,reduction_percent,"
                 "stage_one_ms,stage_two_ms";
    if (opt.with_exact) std::cout << ",gamma,greedy_ratio,overall_ratio";
    std::cout << ",note\n";
    for (const BenchRow& r : res.rows) {
      std::cout << r.id << ',' << r.n << ',' << r.m << ',' << r.greedy_size
                << ',' << r.purified_size << ',' << r.purification << ','
                << r.reduction_percent << ',' << r.stage_one_ms << ','
                << r.stage_two_ms;
      if (opt.with_exact) {
        std::cout << ',' << (r.gamma ? std::to_string(*r.gamma) : "") << ','
                  << (r.realized_greedy_ratio
                          ? std::to_string(*r.realized_greedy_ratio) : "")
                  << ','
                  << (r.realized_overall_ratio
                          ? std::to_string(*r.realized_overall_ratio) : "");
      }
      std::cout << ',' << r.note << "\n";
    }
    std::cout << "# mean reduction: " << res.mean_reduction_percent << "%\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-stage dominating set solver: greedy selection followed by "
               "cluster-forest purification"};
  app.require_subcommand(1);

  SolveOptions so;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run both stages on a graph");
  solve_cmd->add_option("graph", so.path, "graph file (or - for stdin)");
  solve_cmd->add_option("--format", so.format, "edgelist|dimacs")->capture_default_str();
  solve_cmd->add_option("--fixture", so.fixture_name, "named built-in instance");
  solve_cmd->add_option("--tie-break", so.tie_break, "min|max")->capture_default_str();
  solve_cmd->add_option("--purify-mode", so.mode, "strict|extended")->capture_default_str();
  solve_cmd->add_flag("--ensure-minimal", so.minimalize, "post-pass to a minimal set");
  solve_cmd->add_flag("--components", so.components, "solve disconnected inputs per component");
  solve_cmd->add_flag("--exact", so.with_exact, "add oracle gamma when small enough");
  solve_cmd->add_option("--oracle-limit", so.oracle_limit)->capture_default_str();
  solve_cmd->add_flag("--json", so.as_json, "machine-readable output");

  std::string vf_path, vf_format = "edgelist", vf_fixture, vf_set;
  bool vf_json = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a vertex set against a graph");
  verify_cmd->add_option("graph", vf_path, "graph file (or - for stdin)");
  verify_cmd->add_option("--format", vf_format, "edgelist|dimacs")->capture_default_str();
  verify_cmd->add_option("--fixture", vf_fixture, "named built-in instance");
  verify_cmd->add_option("--set", vf_set, "comma-separated vertex ids")->required();
  verify_cmd->add_flag("--json", vf_json);

  std::string ex_path, ex_format = "edgelist", ex_fixture;
  int ex_limit = 25;
  bool ex_json = false;
  CLI::App* exact_cmd = app.add_subcommand("exact", "Exact domination number (small graphs)");
  exact_cmd->add_option("graph", ex_path, "graph file (or - for stdin)");
  exact_cmd->add_option("--format", ex_format, "edgelist|dimacs")->capture_default_str();
  exact_cmd->add_option("--fixture", ex_fixture, "named built-in instance");
  exact_cmd->add_option("--limit", ex_limit, "max n the oracle accepts")->capture_default_str();
  exact_cmd->add_flag("--json", ex_json);

  GenOptions go;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Emit a generated graph");
  gen_cmd->add_option("--family", go.family, "random|path|cycle|complete|star|corona-k1");
  gen_cmd->add_option("--fixture", go.fixture_name, "named built-in instance");
  gen_cmd->add_option("--n", go.n, "vertex count (or cycle length / leaf count)");
  gen_cmd->add_option("--m", go.m, "edge count (random family)");
  gen_cmd->add_option("--seed", go.seed, "random seed");
  gen_cmd->add_option("--format", go.format, "edgelist|dimacs")->capture_default_str();
  gen_cmd->add_option("--output,-o", go.output, "output file (default stdout)");

  BenchOptions bo;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Seeded random benchmark table");
  bench_cmd->add_option("--count", bo.count)->capture_default_str();
  bench_cmd->add_option("--n", bo.n_range, "range A..B")->capture_default_str();
  bench_cmd->add_option("--m-factor", bo.m_factor, "m = round(factor*n)")->capture_default_str();
  bench_cmd->add_option("--seed", bo.seed)->capture_default_str();
  bench_cmd->add_flag("--exact", bo.with_exact, "add oracle columns");
  bench_cmd->add_option("--oracle-limit", bo.oracle_limit)->capture_default_str();
  bench_cmd->add_option("--threads", bo.threads, "0 = hardware concurrency")->capture_default_str();
  bench_cmd->add_option("--tie-break", bo.tie_break, "min|max")->capture_default_str();
  bench_cmd->add_option("--purify-mode", bo.mode, "strict|extended")->capture_default_str();
  bench_cmd->add_flag("--json", bo.as_json, "JSON instead of CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(so);
    if (verify_cmd->parsed()) return run_verify(vf_path, vf_format, vf_fixture, vf_set, vf_json);
    if (exact_cmd->parsed()) return run_exact(ex_path, ex_format, ex_fixture, ex_limit, ex_json);
    if (gen_cmd->parsed()) return run_gen(go);
    if (bench_cmd->parsed()) return run_bench_cmd(bo);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
