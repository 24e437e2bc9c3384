// majority: command-line front end over the C API.
//
// stdout carries only the command's JSON result. The run manifest and any
// error go to stderr as single JSON lines (or the manifest to --manifest).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "majority/majority.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit {
  kOk = 0,
  kFailure = 1,
  kAlmost = 2,
  kViolations = 3,
  kUsage = 64,
  kDataErr = 65,
  kNoInput = 66,
  kTempFail = 75,
};

// Failure carrying an exit code; turned into a stderr JSON line in main.
struct CliError {
  int exit;
  std::string kind;
  std::string message;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

int exit_of(mec_status s) {
  switch (s) {
    case MEC_OK: return kOk;
    case MEC_PARSE:
    case MEC_INVALID_ARGUMENT: return kDataErr;
    case MEC_BUDGET_EXHAUSTED: return kTempFail;
    default: return kFailure;
  }
}

void check(mec_status s) {
  if (s != MEC_OK) throw CliError{exit_of(s), mec_status_name(s), mec_last_error()};
}

// Owns a string handed out by the library.
struct Owned {
  char* p = nullptr;
  ~Owned() { mec_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GraphHandle {
  mec_graph* g = nullptr;
  ~GraphHandle() { mec_graph_free(g); }
};

struct Run {
  std::string subcommand;
  Json inputs = Json::object();
  std::optional<std::uint64_t> seed;
  Json budget;
  std::string output;
  std::string stats;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kNoInput, "io", "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(Run& run, const std::string& name, const std::string& path) {
  std::string text = slurp(path);
  run.inputs[name] = "fnv1a:" + hex(fnv1a(text));
  return text;
}

void load_graph(Run& run, const std::string& path, GraphHandle& out) {
  const std::string text = read_input(run, "graph", path);
  check(mec_graph_from_json(text.c_str(), &out.g));
}

// "0..4" or "0,2,5" into a JSON array of colors.
std::string color_range(const std::string& spec) {
  Json arr = Json::array();
  const auto dots = spec.find("..");
  try {
    if (dots != std::string::npos) {
      const unsigned long lo = std::stoul(spec.substr(0, dots));
      const unsigned long hi = std::stoul(spec.substr(dots + 2));
      if (hi < lo || hi - lo > 1'000'000) throw std::invalid_argument("range");
      for (unsigned long c = lo; c <= hi; ++c) arr.push_back(c);
    } else {
      std::stringstream ss(spec);
      std::string item;
      while (std::getline(ss, item, ',')) arr.push_back(std::stoul(item));
    }
  } catch (const std::exception&) {
    throw CliError{kUsage, "usage", "bad color set '" + spec + "' (use a..b or a,b,c)"};
  }
  return arr.dump();
}

struct BudgetOpts {
  std::uint64_t nodes = 0;
  double secs = 0;
  unsigned threads = 1;

  void add(CLI::App* cmd) {
    cmd->add_option("--budget-nodes", nodes, "search node limit (default 10000000)");
    cmd->add_option("--budget-secs", secs, "search time limit in seconds");
    cmd->add_option("--threads", threads, "worker threads for the search")->check(CLI::Range(1u, 256u));
  }

  mec_budget get(Run& run) const {
    mec_budget b = mec_default_budget();
    if (nodes > 0) b.node_limit = nodes;
    b.time_limit_secs = secs;
    b.threads = threads;
    run.budget = Json{{"nodes", b.node_limit}, {"secs", secs}, {"threads", threads}};
    return b;
  }
};

int verdict_exit(const Json& report) {
  const std::string v = report.at("verdict").get<std::string>();
  if (v == "AllMajority") return kOk;
  if (v == "AlmostOnly") return kAlmost;
  return kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majority edge-colorings: constructions, verifiers and exhaustive oracles"};
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "write the run manifest here instead of stderr");

  Run run;
  std::function<int()> action;

  std::string graph_path, lists_path, coloring_path, universe, palette, family, predicate = "majority";
  std::uint64_t n = 0, m = 0, delta = 2, seed = 0;
  std::int64_t start_edge = -1, from = -1;
  bool partial = false, decide = false, vertex_mode = false, dot = false;
  unsigned depth = 1, lookahead = 1;
  int conjecture = 2;
  std::size_t n_max = 7, trials = 100;
  BudgetOpts budget;

  auto graph_opt = [&](CLI::App* c) {
    c->add_option("--graph", graph_path, "graph JSON file ('-' for stdin)")->required();
  };

  auto* gen = app.add_subcommand("gen", "emit a graph family as JSON");
  gen->add_option("--family", family,
                  "cycle|path|complete|star|petersen|gadget|even|mindeg")->required();
  gen->add_option("--n", n, "vertex count (cycle, complete, even, mindeg; leaves for star; "
                            "cycle length for gadget)");
  gen->add_option("--m", m, "edge count (path, even, mindeg)");
  gen->add_option("--delta", delta, "minimum degree (mindeg)");
  auto* gen_seed = gen->add_option("--seed", seed, "seed, required for even and mindeg");
  gen->add_flag("--dot", dot, "emit Graphviz instead of JSON");
  gen->callback([&] {
    action = [&] {
      const bool random = family == "even" || family == "mindeg";
      if (random && gen_seed->count() == 0) {
        throw CliError{kUsage, "usage", "--seed is required for family " + family};
      }
      if (random) run.seed = seed;
      run.inputs["family"] = family;
      run.inputs["n"] = n;
      run.inputs["m"] = m;
      run.inputs["delta"] = delta;
      GraphHandle g;
      check(mec_generate(family.c_str(), n, m, delta, seed, &g.g));
      Owned out;
      check(dot ? mec_graph_to_dot(g.g, nullptr, &out.p) : mec_graph_to_json(g.g, &out.p));
      run.output = out.str();
      return static_cast<int>(kOk);
    };
  });

  auto* euler = app.add_subcommand("euler", "Euler tour as a sequence of edge ids");
  graph_opt(euler);
  euler->add_option("--start-edge", start_edge, "first edge of the tour");
  euler->add_option("--from", from, "vertex the first edge leaves from");
  euler->callback([&] {
    action = [&] {
      GraphHandle g;
      load_graph(run, graph_path, g);
      Owned out;
      check(mec_euler(g.g, start_edge, from, &out.p));
      run.output = out.str();
      return static_cast<int>(kOk);
    };
  });

  auto* color2 = app.add_subcommand("color2", "majority coloring from 2-lists");
  graph_opt(color2);
  color2->add_option("--lists", lists_path, "lists JSON file")->required();
  color2->add_option("--universe", universe, "auxiliary color pool, a..b or a,b,...");
  color2->callback([&] {
    action = [&] {
      GraphHandle g;
      load_graph(run, graph_path, g);
      const std::string lists = read_input(run, "lists", lists_path);
      std::string uni;
      if (!universe.empty()) {
        uni = color_range(universe);
        run.inputs["universe"] = uni;
      }
      Owned out;
      check(mec_color2(g.g, lists.c_str(), universe.empty() ? nullptr : uni.c_str(), &out.p));
      run.output = out.str();
      return verdict_exit(Json::parse(run.output).at("report"));
    };
  });

  auto* decide2 = app.add_subcommand("decide2", "whether a 2-color majority coloring exists");
  graph_opt(decide2);
  decide2->callback([&] {
    action = [&] {
      GraphHandle g;
      load_graph(run, graph_path, g);
      Owned out;
      check(mec_decide2(g.g, &out.p));
      run.output = out.str();
      return static_cast<int>(kOk);
    };
  });

  auto* color3 = app.add_subcommand("color3", "majority 3-edge-coloring by exact search");
  graph_opt(color3);
  color3->add_flag("--partial", partial, "only vertices of degree >= 4 must be majority");
  color3->add_flag("--decide", decide, "decide existence (any minimum degree)");
  budget.add(color3);
  color3->callback([&] {
    action = [&] {
      GraphHandle g;
      load_graph(run, graph_path, g);
      run.inputs["partial"] = partial;
      run.inputs["decide"] = decide;
      const mec_budget b = budget.get(run);
      Owned out, stats;
      check(mec_color3(g.g, partial, decide, b, &out.p, &stats.p));
      run.output = out.str();
      run.stats = stats.str();
      if (decide) return static_cast<int>(kOk);
      if (partial) return static_cast<int>(kOk);
      return verdict_exit(Json::parse(run.output).at("report"));
    };
  });

  auto* color4 = app.add_subcommand("color4", "majority coloring from 4-lists");
  graph_opt(color4);
  color4->add_option("--lists", lists_path, "lists JSON file")->required();
  color4->callback([&] {
    action = [&] {
      GraphHandle g;
      load_graph(run, graph_path, g);
      const std::string lists = read_input(run, "lists", lists_path);
      Owned out;
      check(mec_color4(g.g, lists.c_str(), &out.p));
      run.output = out.str();
      return verdict_exit(Json::parse(run.output).at("report"));
    };
  });

  auto* linegraph = app.add_subcommand("linegraph", "majority vertex coloring of a line graph");
  graph_opt(linegraph);
  linegraph->add_option("--lists", lists_path, "2-lists on the edges of the graph")->required();
  linegraph->add_option("--universe", universe, "auxiliary color pool, a..b or a,b,...");
  linegraph->callback([&] {
    action = [&] {
      GraphHandle g;
      load_graph(run, graph_path, g);
      const std::string lists = read_input(run, "lists", lists_path);
      std::string uni;
      if (!universe.empty()) {
        uni = color_range(universe);
        run.inputs["universe"] = uni;
      }
      Owned out;
      check(mec_linegraph(g.g, lists.c_str(), universe.empty() ? nullptr : uni.c_str(), &out.p));
      run.output = out.str();
      return verdict_exit(Json::parse(run.output).at("report"));
    };
  });

  auto* ball = app.add_subcommand("ball", "colored ball of an infinite graph");
  ball->add_option("--family", family, "grid|tree4")->required()->check(CLI::IsMember({"grid", "tree4"}));
  ball->add_option("--depth", depth, "ball radius")->required();
  ball->add_option("--lookahead", lookahead, "extra radius searched before restricting");
  budget.add(ball);
  ball->callback([&] {
    action = [&] {
      run.inputs["family"] = family;
      run.inputs["depth"] = depth;
      run.inputs["lookahead"] = lookahead;
      const mec_budget b = budget.get(run);
      Owned out, stats;
      check(mec_ball(family.c_str(), depth, lookahead, b, &out.p, &stats.p));
      run.output = out.str();
      run.stats = stats.str();
      const Json j = Json::parse(run.output);
      bool ok = j.at("member").get<bool>();
      for (const auto& level : j.at("levels")) ok = ok && level.at("member").get<bool>();
      return static_cast<int>(ok ? kOk : kViolations);
    };
  });

  auto* verify = app.add_subcommand("verify", "check a coloring");
  graph_opt(verify);
  verify->add_option("--coloring", coloring_path, "coloring JSON file")->required();
  verify->add_flag("--vertex", vertex_mode, "the coloring is on vertices (vertex majority)");
  verify->add_flag("--dot", dot, "emit Graphviz with edge colors instead of the report");
  verify->callback([&] {
    action = [&] {
      GraphHandle g;
      load_graph(run, graph_path, g);
      const std::string c = read_input(run, "coloring", coloring_path);
      Owned report;
      check(vertex_mode ? mec_verify_vertices(g.g, c.c_str(), &report.p)
                        : mec_verify_edges(g.g, c.c_str(), &report.p));
      if (dot) {
        if (vertex_mode) throw CliError{kUsage, "usage", "--dot needs an edge coloring"};
        Owned out;
        check(mec_graph_to_dot(g.g, c.c_str(), &out.p));
        run.output = out.str();
      } else {
        run.output = report.str();
      }
      return verdict_exit(Json::parse(report.str()));
    };
  });

  auto* oracle = app.add_subcommand("oracle", "exhaustive existence check");
  graph_opt(oracle);
  oracle->add_option("--predicate", predicate, "majority|proper")->check(CLI::IsMember({"majority", "proper"}));
  auto* o_lists = oracle->add_option("--lists", lists_path, "lists JSON file");
  auto* o_pal = oracle->add_option("--palette", palette, "same colors on every edge, a..b or a,b,...");
  o_lists->excludes(o_pal);
  oracle->callback([&] {
    action = [&] {
      if (lists_path.empty() == palette.empty()) {
        throw CliError{kUsage, "usage", "give exactly one of --lists and --palette"};
      }
      GraphHandle g;
      load_graph(run, graph_path, g);
      std::string lists, pal;
      if (!lists_path.empty()) lists = read_input(run, "lists", lists_path);
      if (!palette.empty()) {
        pal = color_range(palette);
        run.inputs["palette"] = pal;
      }
      run.inputs["predicate"] = predicate;
      Owned out;
      check(mec_oracle(g.g, predicate.c_str(), lists_path.empty() ? nullptr : lists.c_str(),
                       palette.empty() ? nullptr : pal.c_str(), &out.p));
      run.output = out.str();
      return static_cast<int>(kOk);
    };
  });

  auto* chi = app.add_subcommand("chi-prime", "chromatic index by exhaustion");
  graph_opt(chi);
  chi->callback([&] {
    action = [&] {
      GraphHandle g;
      load_graph(run, graph_path, g);
      std::size_t k = 0;
      check(mec_chromatic_index(g.g, &k));
      run.output = Json{{"chromatic_index", k}}.dump();
      return static_cast<int>(kOk);
    };
  });

  auto* hunt = app.add_subcommand("hunt", "look for counterexamples to the open conjectures");
  hunt->add_option("--conjecture", conjecture, "1 or 2")->check(CLI::IsMember({1, 2}));
  hunt->add_option("--n-max", n_max, "largest vertex count tried");
  hunt->add_option("--trials", trials, "number of random instances");
  auto* hunt_seed = hunt->add_option("--seed", seed, "seed for random instances");
  auto* hunt_graph = hunt->add_option("--graph", graph_path, "check this graph instead");
  hunt->add_option("--lists", lists_path, "3-lists for --graph (conjecture 2)");
  budget.add(hunt);
  hunt->callback([&] {
    action = [&] {
      run.inputs["conjecture"] = conjecture;
      const mec_budget b = budget.get(run);
      Owned out;
      if (hunt_graph->count() > 0) {
        GraphHandle g;
        load_graph(run, graph_path, g);
        std::string lists;
        if (!lists_path.empty()) lists = read_input(run, "lists", lists_path);
        check(mec_hunt_instance(conjecture, g.g, lists_path.empty() ? nullptr : lists.c_str(), b,
                                &out.p));
      } else {
        if (hunt_seed->count() == 0) throw CliError{kUsage, "usage", "--seed is required"};
        run.seed = seed;
        run.inputs["n_max"] = n_max;
        run.inputs["trials"] = trials;
        check(mec_hunt(conjecture, n_max, trials, seed, b, &out.p));
      }
      run.output = out.str();
      return static_cast<int>(kOk);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }
  run.subcommand = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    code = action();
  } catch (const CliError& e) {
    std::cerr << Json{{"error", e.kind}, {"message", e.message}, {"exit", e.exit}}.dump() << "\n";
    code = e.exit;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    code = kFailure;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!run.output.empty()) {
    std::cout << run.output;
    if (run.output.back() != '\n') std::cout << '\n';
    std::cout.flush();
  }

  Json manifest{{"subcommand", run.subcommand},
                {"inputs", run.inputs},
                {"seed", run.seed ? Json(*run.seed) : Json(nullptr)},
                {"budget", run.budget},
                {"version", mec_version()},
                {"exit", code},
                {"output_digest", "fnv1a:" + hex(fnv1a(run.output))},
                {"wall_time_secs", wall}};
  if (!run.stats.empty()) manifest["search"] = Json::parse(run.stats);
  if (manifest_path.empty()) {
    std::cerr << Json{{"manifest", manifest}}.dump() << "\n";
  } else {
    std::ofstream(manifest_path) << manifest.dump() << "\n";
  }
  return code;
}
