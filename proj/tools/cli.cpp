#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "zdmd/bs_partition.hpp"
#include "zdmd/distance.hpp"
#include "zdmd/graph.hpp"
#include "zdmd/graph_io.hpp"
#include "zdmd/random_graphs.hpp"
#include "zdmd/resolving.hpp"
#include "zdmd/ring.hpp"
#include "zdmd/solver.hpp"
#include "zdmd/verify.hpp"

namespace zdmd::cli {
namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ZDMD_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string_view(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("ZDMD_BUDGET must be a positive integer, got '") + env + "'");
  }
  return kDefaultBudget;
}

std::string graph_as_text(const Graph& g, const std::string& title) {
  std::ostringstream os;
  os << title << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  for (const auto& [u, v] : g.edges()) os << "  " << g.name(u) << " -- " << g.name(v) << '\n';
  return os.str();
}

std::string export_graph(const Graph& g, const std::string& format, const std::string& title) {
  if (format == "dot") return to_dot(g);
  if (format == "json") return to_json(g) + "\n";
  if (format == "csv") {
    std::string out = "u,v\n";
    for (const auto& [u, v] : g.edges()) out += g.name(u) + "," + g.name(v) + "\n";
    return out;
  }
  return graph_as_text(g, title);
}

Graph bs_of_ring(std::uint64_t n) {
  if (const auto pq = split_two_primes(n); pq && pq->first != pq->second) {
    return build_labeled_bs(pq->first, pq->second).graph;
  }
  return barycentric_subdivision(zero_divisor_graph(Modulus(n))).graph;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected N or A..B");
  }
}

std::string witness_names(const Graph& g, const std::vector<Vertex>& w) {
  std::string out;
  for (Vertex v : w) out += (out.empty() ? "" : " ") + g.name(v);
  return out;
}

struct Options {
  std::string format = "text";
  std::string out_path;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
};

int cmd_zdg(std::uint64_t n, const Options& opt, std::string& sink, std::ostream& err) {
  const Graph g = zero_divisor_graph(Modulus(n));
  const std::string title = "Gamma(Z_" + std::to_string(n) + ")";
  if (g.vertex_count() == 0) {
    const std::string notice =
        title + " is empty: " + std::to_string(n) + " has no nonzero zero divisors\n";
    if (opt.format == "text") {
      sink = notice;
      return kExitOk;
    }
    err << notice;
  }
  sink = export_graph(g, opt.format, title);
  return kExitOk;
}

int cmd_bs(std::uint64_t n, const Options& opt, std::string& sink, std::ostream& err) {
  Modulus m(n);
  const Graph g = bs_of_ring(m.value());
  if (g.vertex_count() == 0) err << "Gamma(Z_" << n << ") is empty, so is its subdivision\n";
  sink = export_graph(g, opt.format, "BS(Gamma(Z_" + std::to_string(n) + "))");
  return kExitOk;
}

struct MdArgs {
  std::optional<std::uint64_t> n;
  std::string file;
  std::string graph_kind = "bs";
  std::string mode = "bnb";
  bool independent = false;
};

int cmd_md(const MdArgs& args, const Options& opt, std::uint64_t budget, std::string& sink) {
  Graph g;
  std::string title;
  std::vector<Vertex> family;
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw UsageError("cannot read " + args.file);
    std::stringstream buf;
    buf << in.rdbuf();
    g = graph_from_json(buf.str());
    title = args.file;
  } else if (args.n) {
    if (args.graph_kind == "zdg") {
      g = zero_divisor_graph(Modulus(*args.n));
      title = "Gamma(Z_" + std::to_string(*args.n) + ")";
    } else {
      g = bs_of_ring(*args.n);
      title = "BS(Gamma(Z_" + std::to_string(*args.n) + "))";
      if (const auto pq = split_two_primes(*args.n); pq && pq->first != pq->second) {
        family = BsPartition(pq->first, pq->second).a_family();
      }
    }
  } else {
    throw UsageError("md needs --n or --file");
  }

  const auto start = std::chrono::steady_clock::now();
  DimensionReport report;
  if (args.independent) {
    if (args.mode == "bnb") {
      BnbOptions o;
      o.budget = budget;
      o.independent = true;
      report = min_resolving_bnb(g, o);
    } else {
      report = independent_min_resolving(g, g.vertex_count(), budget);
    }
  } else if (args.mode == "exhaustive") {
    report = min_resolving_exhaustive(g, g.vertex_count(), budget);
  } else if (args.mode == "bnb") {
    BnbOptions o;
    o.budget = budget;
    o.family = family;
    report = min_resolving_bnb(g, o);
  } else {
    // Bounds only: greedy upper bound, equidistant-family lower bound.
    if (g.vertex_count() < 2 || !is_connected(g)) {
      throw std::invalid_argument("metric dimension needs a connected graph on >= 2 vertices");
    }
    const auto dm = bfs_all_pairs(g);
    auto greedy = greedy_upper_bound(dm);
    report.lower = family.empty() ? 1 : std::max<std::size_t>(1, equidistant_family_bound(dm, family));
    report.upper = greedy.size();
    report.exact = report.lower == report.upper;
    report.witness = std::move(greedy);
    report.method = Method::greedy;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string what = args.independent ? "independent metric dimension" : "metric dimension";
  if (opt.format == "json") {
    json j{{"graph", title},
           {"quantity", what},
           {"lower", report.lower},
           {"upper", report.upper},
           {"exact", report.exact},
           {"feasible", report.feasible},
           {"method", std::string(to_string(report.method))},
           {"work", report.work},
           {"budget_exhausted", report.budget_exhausted},
           {"elapsed_ms", ms}};
    if (report.witness) {
      json w = json::array();
      for (Vertex v : *report.witness) w.push_back(g.name(v));
      j["witness"] = w;
    }
    sink = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << title << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    if (!report.feasible) {
      os << what << ": no independent resolving set exists\n";
    } else if (report.exact) {
      os << what << ": exact " << report.upper << '\n';
    } else {
      os << what << ": between " << report.lower << " and " << report.upper << '\n';
    }
    if (report.witness) os << "witness: " << witness_names(g, *report.witness) << '\n';
    os << "method: " << to_string(report.method) << ", work " << report.work;
    if (report.budget_exhausted) os << " (budget " << budget << " exhausted)";
    os << ", " << static_cast<long long>(ms) << " ms\n";
    sink = os.str();
  }
  return report.budget_exhausted ? kExitFailed : kExitOk;
}

struct VerifyArgs {
  std::string p_range;
  std::string q_range;
  std::string mode = "fast";
  unsigned jobs = 1;
};

int cmd_verify(const VerifyArgs& args, const Options& opt, std::uint64_t budget, std::string& sink,
               std::ostream& err) {
  const auto [p_lo, p_hi] = parse_range(args.p_range);
  const auto [q_lo, q_hi] = parse_range(args.q_range);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (auto p = p_lo; p <= p_hi; ++p) {
    if (!is_prime(p)) continue;
    for (auto q = std::max(q_lo, p + 1); q <= q_hi; ++q) {
      if (is_prime(q)) pairs.emplace_back(p, q);
    }
  }
  if (pairs.empty()) throw UsageError("no prime pairs p < q in the given ranges");

  const VerifyMode mode = args.mode == "full" ? VerifyMode::full : VerifyMode::fast;
  std::vector<VerificationReport> reports(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      reports[i] = verify_theorem(pairs[i].first, pairs[i].second, mode, budget);
    }
  };
  const unsigned jobs = std::clamp<unsigned>(args.jobs, 1, 64);
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::vector<CheckRow> rows;
  bool ok = true;
  for (auto& r : reports) {
    ok = ok && r.ok();
    rows.insert(rows.end(), r.rows.begin(), r.rows.end());
  }
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"p", r.p},
                     {"q", r.q},
                     {"check", r.check},
                     {"status", std::string(to_string(r.status))},
                     {"detail", r.detail}});
    }
    sink = arr.dump(2) + "\n";
  } else if (opt.format == "text") {
    sink = to_text(rows);
  } else {
    sink = to_csv(rows);
  }

  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& r : rows) ++counts[static_cast<int>(r.status)];
  err << pairs.size() << " pair(s), " << rows.size() << " checks: " << counts[0] << " pass, "
      << counts[1] << " fail, " << counts[2] << " skip, " << counts[3] << " budget\n";
  return ok ? kExitOk : kExitFailed;
}

struct RandomArgs {
  std::string kind = "tree";
  std::size_t n = 10;
  double extra = 0.2;
};

int cmd_random(const RandomArgs& args, const Options& opt, std::string& sink) {
  std::mt19937_64 rng(opt.seed);
  const Graph g = args.kind == "graph" ? random_connected_graph(args.n, args.extra, rng)
                                       : random_tree(args.n, rng);
  sink = export_graph(g, opt.format == "text" ? "json" : opt.format,
                      "random " + args.kind);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-divisor graphs of Z_n, their barycentric subdivisions and metric dimension",
               "zdmd"};
  app.require_subcommand(1);

  Options opt;
  std::uint64_t budget_flag = 0;
  // The first format listed is the one a subcommand uses when --format is absent.
  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    const std::string shown = formats.front();
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)))
        ->default_str(shown);
    sub->add_option("--out", opt.out_path, "Write output to this file");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget_flag,
                    "Search budget (subsets or nodes); env ZDMD_BUDGET sets the default")
        ->check(CLI::PositiveNumber);
  };

  std::uint64_t n = 0;
  auto* zdg = app.add_subcommand("zdg", "Zero-divisor graph of Z_n");
  zdg->add_option("n,--n", n, "Modulus (>= 2)")->required();
  add_common(zdg, {"text", "csv", "json", "dot"});

  auto* bs = app.add_subcommand("bs", "Barycentric subdivision of the zero-divisor graph of Z_n");
  bs->add_option("n,--n", n, "Modulus (>= 2)")->required();
  add_common(bs, {"text", "csv", "json", "dot"});

  MdArgs md_args;
  std::uint64_t md_n = 0;
  auto* md = app.add_subcommand("md", "Metric dimension of BS(Gamma(Z_n)) or a JSON graph");
  auto* md_n_opt = md->add_option("--n", md_n, "Modulus");
  auto* md_file = md->add_option("--file", md_args.file, "Graph in JSON ({\"n\":..,\"edges\":..})");
  md_n_opt->excludes(md_file);
  md->add_option("--graph", md_args.graph_kind, "Graph built from --n")
      ->check(CLI::IsMember({"bs", "zdg"}))
      ->capture_default_str();
  md->add_option("--mode", md_args.mode, "Solver")
      ->check(CLI::IsMember({"exhaustive", "bnb", "bounds"}))
      ->capture_default_str();
  md->add_flag("--independent", md_args.independent, "Independent metric dimension");
  add_budget(md);
  add_common(md, {"text", "json"});

  VerifyArgs v_args;
  auto* verify = app.add_subcommand("verify", "Check the constructions for prime pairs p < q");
  verify->add_option("--p", v_args.p_range, "p or range A..B")->required();
  verify->add_option("--q", v_args.q_range, "q or range A..B")->required();
  verify->add_option("--mode", v_args.mode, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();
  verify->add_option("--jobs", v_args.jobs, "Worker threads; output order is fixed")
      ->check(CLI::PositiveNumber);
  add_budget(verify);
  opt.format = "text";
  add_common(verify, {"csv", "text", "json"});

  RandomArgs r_args;
  auto* random = app.add_subcommand("random", "Seeded random tree or connected graph");
  random->add_option("--kind", r_args.kind, "tree or graph")
      ->check(CLI::IsMember({"tree", "graph"}))
      ->capture_default_str();
  random->add_option("--n", r_args.n, "Vertex count")->check(CLI::PositiveNumber);
  random->add_option("--extra", r_args.extra, "Extra edge probability for graphs")
      ->check(CLI::Range(0.0, 1.0));
  random->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  add_common(random, {"json", "dot", "csv", "text"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  // verify defaults to CSV, the other commands to text.
  if (verify->parsed() && verify->count("--format") == 0) opt.format = "csv";

  std::string sink;
  int code = kExitOk;
  try {
    const std::uint64_t budget = budget_flag ? budget_flag : default_budget();
    if (zdg->parsed()) {
      code = cmd_zdg(n, opt, sink, err);
    } else if (bs->parsed()) {
      code = cmd_bs(n, opt, sink, err);
    } else if (md->parsed()) {
      if (md->count("--n")) md_args.n = md_n;
      code = cmd_md(md_args, opt, budget, sink);
    } else if (verify->parsed()) {
      code = cmd_verify(v_args, opt, budget, sink, err);
    } else if (random->parsed()) {
      code = cmd_random(r_args, opt, sink);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path);
    if (!file) {
      err << "error: cannot write " << opt.out_path << '\n';
      return kExitUsage;
    }
    file << sink;
  } else {
    out << sink;
  }
  return code;
}

}  // namespace zdmd::cli
