// Command-line front end: exact pursuit-game parameters for one graph,
// throttling tables, exhaustive small-order classification, verification
// suites, and strategy simulation.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>

#include <CLI11.hpp>

#include "cnr/enumeration.hpp"
#include "cnr/families.hpp"
#include "cnr/graph6.hpp"
#include "cnr/simulate.hpp"
#include "cnr/solvers.hpp"
#include "cnr/verify.hpp"

namespace {

struct GraphSource {
  std::string g6, file, family;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--g6", g6, "graph6 string");
    cmd->add_option("--file", file,
                    "file holding one graph6 line or an edge list "
                    "(\"n <order> <u> <v> ...\")");
    cmd->add_option("--family", family,
                    "family spec, e.g. petersen, path:7, gear:4, hn:12, "
                    "gap3, spider:3,3,3");
  }

  cnr::Graph load() const {
    const int given = (!g6.empty()) + (!file.empty()) + (!family.empty());
    if (given != 1)
      throw std::invalid_argument(
          "exactly one of --g6 / --file / --family is required");
    if (!g6.empty()) return cnr::parse_graph6(g6);
    if (!family.empty()) return cnr::make_family(family);
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
      throw std::invalid_argument(file + ": empty graph file");
    if (text[first] == 'n' &&
        (first + 1 < text.size() && std::isspace(static_cast<unsigned char>(text[first + 1]))))
      return cnr::parse_edge_list(text);
    const auto eol = text.find('\n', first);
    return cnr::parse_graph6(text.substr(first, eol - first));
  }
};

std::pair<int, int> parse_k_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("--k-range expects a..b");
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

int resolve_workers(int workers) {
  if (const char* env = std::getenv("SOLVER_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return workers;
}

void print_k_param(const cnr::Graph& g, const std::string& param, int k) {
  if (k < 1 || k > g.order())
    throw std::invalid_argument("k must be in 1..n");
  if (param == "capt")
    std::cout << "capt_" << k << " = " << cnr::capture_time(g, k).to_string()
              << '\n';
  else if (param == "dmg")
    std::cout << "dmg_" << k << " = " << cnr::damage_number(g, k) << '\n';
  else
    std::cout << "rad_" << k << " = " << cnr::k_radius(g, k).to_string()
              << '\n';
}

int cmd_solve(const GraphSource& src, const std::string& param, int k,
              const std::string& k_range) {
  const cnr::Graph g = src.load();
  const bool wants_k = param == "capt" || param == "dmg" || param == "rad";
  if (wants_k) {
    int lo = k, hi = k;
    if (!k_range.empty()) std::tie(lo, hi) = parse_k_range(k_range);
    if (lo < 1) throw std::invalid_argument("--k or --k-range required");
    for (int kk = lo; kk <= hi; ++kk) print_k_param(g, param, kk);
    return 0;
  }
  if (param == "c") {
    std::cout << "c = " << cnr::cop_number(g) << '\n';
  } else if (param == "gamma") {
    std::cout << "gamma = " << cnr::domination_number(g) << '\n';
  } else if (param == "thc") {
    const auto t = cnr::cop_throttling(g);
    std::cout << "th_c = " << t.value.to_string() << " (k = " << t.witness_k
              << ")\n";
  } else if (param == "thd") {
    const auto t = cnr::damage_throttling(g);
    std::cout << "th_d = " << t.value << " (k = " << t.witness_k << ")\n";
  } else if (param == "all") {
    std::cout << "n = " << g.order() << '\n';
    std::cout << "c = " << cnr::cop_number(g) << '\n';
    std::cout << "gamma = " << cnr::domination_number(g) << '\n';
    const auto tc = cnr::cop_throttling(g);
    std::cout << "th_c = " << tc.value.to_string() << " (k = " << tc.witness_k
              << ")\n";
    const auto td = cnr::damage_throttling(g);
    std::cout << "th_d = " << td.value << " (k = " << td.witness_k << ")\n";
  } else {
    throw std::invalid_argument("unknown parameter '" + param + "'");
  }
  return 0;
}

int cmd_throttle(const GraphSource& src, const std::string& param) {
  const cnr::Graph g = src.load();
  const int gam = cnr::domination_number(g);
  if (param == "thd") {
    for (int k = 1; k <= gam; ++k) {
      const int d = cnr::damage_number(g, k);
      std::cout << "k = " << k << "  dmg_k = " << d << "  k + dmg_k = "
                << k + d << '\n';
    }
    const auto t = cnr::damage_throttling(g);
    std::cout << "th_d = " << t.value << " at k = " << t.witness_k << '\n';
  } else if (param == "thc") {
    for (int k = 1; k <= gam && k <= g.order(); ++k) {
      const auto ct = cnr::capture_time(g, k);
      std::cout << "k = " << k << "  capt_k = " << ct.to_string();
      if (ct.is_finite())
        std::cout << "  k + capt_k = " << (ct + k).to_string();
      std::cout << '\n';
    }
    const auto t = cnr::cop_throttling(g);
    std::cout << "th_c = " << t.value.to_string() << " at k = " << t.witness_k
              << '\n';
  } else {
    throw std::invalid_argument("throttle: --param must be thc or thd");
  }
  return 0;
}

int cmd_enumerate(int order, const std::string& filter_text,
                  const std::string& emit, const std::string& cache_path,
                  const std::string& output, const std::string& g6_file,
                  int workers) {
  std::vector<cnr::Graph> graphs;
  if (!g6_file.empty()) {
    std::ifstream in(g6_file);
    if (!in) throw std::invalid_argument("cannot open " + g6_file);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) graphs.push_back(cnr::parse_graph6(line));
  } else {
    graphs = cnr::generate_connected(order);
  }
  const cnr::Filter filter =
      filter_text.empty() ? cnr::Filter() : cnr::Filter::parse(filter_text);
  std::optional<cnr::ResultCache> cache;
  if (!cache_path.empty()) cache.emplace(cache_path);
  const auto records = cnr::classify(graphs, filter,
                                     cache ? &*cache : nullptr,
                                     resolve_workers(workers));
  const std::string text =
      emit == "json" ? cnr::report_json(records) : cnr::report_csv(records);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + output);
    out << text;
  }
  return 0;
}

cnr::CopConfig parse_cops(const std::string& s) {
  cnr::CopConfig c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(std::stoi(tok));
  std::sort(c.begin(), c.end());
  return c;
}

int cmd_simulate(const GraphSource& src, const std::string& cop_strategy,
                 const std::string& robber_strategy, const std::string& cops,
                 const std::string& cop_script, const std::string& robber_script,
                 int robber_start, int rounds) {
  const cnr::Graph g = src.load();
  cnr::SimConfig cfg;
  if (cop_strategy == "stationary") cfg.cop_strategy = cnr::CopStrategy::kStationary;
  else if (cop_strategy == "shadow") cfg.cop_strategy = cnr::CopStrategy::kShadow;
  else if (cop_strategy == "scripted") cfg.cop_strategy = cnr::CopStrategy::kScripted;
  else throw std::invalid_argument("unknown cop strategy '" + cop_strategy + "'");
  if (robber_strategy == "evasion") cfg.robber_strategy = cnr::RobberStrategy::kEvasion;
  else if (robber_strategy == "scripted") cfg.robber_strategy = cnr::RobberStrategy::kScripted;
  else throw std::invalid_argument("unknown robber strategy '" + robber_strategy + "'");
  if (!cops.empty()) cfg.cops = parse_cops(cops);
  if (!cop_script.empty()) {
    std::stringstream ss(cop_script);
    std::string tok;
    while (std::getline(ss, tok, ';')) cfg.cop_script.push_back(parse_cops(tok));
  }
  if (!robber_script.empty()) {
    std::stringstream ss(robber_script);
    std::string tok;
    while (std::getline(ss, tok, ';')) cfg.robber_script.push_back(std::stoi(tok));
  }
  cfg.robber_start = robber_start;
  cfg.rounds = rounds;
  std::cout << cnr::trace_json(cnr::simulate(g, cfg));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for pursuit-game graph parameters"};
  app.require_subcommand(1);

  GraphSource solve_src, throttle_src, sim_src;
  std::string param = "all", k_range;
  int k = 0;
  auto* solve = app.add_subcommand("solve", "parameters of a single graph");
  solve_src.add_flags(solve);
  solve->add_option("--param,--params", param,
                    "c|gamma|capt|dmg|rad|thc|thd|all");
  solve->add_option("--k", k, "k for capt/dmg/rad");
  solve->add_option("--k-range", k_range, "inclusive range a..b");

  std::string throttle_param = "thd";
  auto* throttle = app.add_subcommand("throttle", "per-k throttling table");
  throttle_src.add_flags(throttle);
  throttle->add_option("--param", throttle_param, "thc|thd");

  int order = 0, workers = 1;
  std::string filter_text, emit = "csv", cache_path, output, g6_file;
  auto* enumerate = app.add_subcommand("enumerate",
                                       "classify all connected graphs of one order");
  enumerate->add_option("--order", order, "graph order (1..8)");
  enumerate->add_option("--filter", filter_text,
                        "e.g. \"gamma=3 & gap>=2\"");
  enumerate->add_option("--emit", emit, "csv|json");
  enumerate->add_option("--cache", cache_path, "JSON-lines result cache");
  enumerate->add_option("--output", output, "output file (default stdout)");
  enumerate->add_option("--g6-file", g6_file,
                        "read graphs from a graph6 list instead of generating");
  enumerate->add_option("--workers", workers,
                        "worker threads (SOLVER_WORKERS overrides)");

  std::string suite = "paper";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "paper|quick");

  std::string cop_strategy = "stationary", robber_strategy = "evasion";
  std::string cops, cop_script, robber_script;
  int robber_start = -1, rounds = 20;
  auto* simulate = app.add_subcommand("simulate", "scripted-strategy simulator");
  sim_src.add_flags(simulate);
  simulate->add_option("--cop-strategy", cop_strategy,
                       "stationary|shadow|scripted");
  simulate->add_option("--robber-strategy", robber_strategy,
                       "evasion|scripted");
  simulate->add_option("--cops", cops, "initial cop vertices, e.g. 0,4");
  simulate->add_option("--cop-script", cop_script,
                       "per-round configs, e.g. 1;2;3 (round 0 first)");
  simulate->add_option("--robber-script", robber_script,
                       "per-round vertices, e.g. 3;3;3 (round 0 first)");
  simulate->add_option("--robber-start", robber_start, "initial robber vertex");
  simulate->add_option("--rounds", rounds, "round budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_src, param, k, k_range);
    if (throttle->parsed()) return cmd_throttle(throttle_src, throttle_param);
    if (enumerate->parsed())
      return cmd_enumerate(order, filter_text, emit, cache_path, output,
                           g6_file, workers);
    if (verify->parsed()) {
      bool ok;
      try {
        ok = cnr::print_suite(suite, std::cout);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
      }
      return ok ? 0 : 1;
    }
    if (simulate->parsed())
      return cmd_simulate(sim_src, cop_strategy, robber_strategy, cops,
                          cop_script, robber_script, robber_start, rounds);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
