#include "majority/majority.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "majority/compactness.hpp"
#include "majority/error.hpp"
#include "majority/euler.hpp"
#include "majority/generators.hpp"
#include "majority/json_io.hpp"
#include "majority/linegraph.hpp"
#include "majority/list4.hpp"
#include "majority/majority2.hpp"
#include "majority/majority3.hpp"
#include "majority/oracle.hpp"
#include "majority/verify.hpp"

struct mec_graph {
  majority::Multigraph g;
};

namespace {

using majority::ErrorCode;
using majority::io::Json;
namespace io = majority::io;

thread_local std::string last_error;

mec_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return MEC_INVALID_ARGUMENT;
    case ErrorCode::kPrecondition: return MEC_PRECONDITION;
    case ErrorCode::kNotFound: return MEC_NOT_FOUND;
    case ErrorCode::kBudgetExhausted: return MEC_BUDGET_EXHAUSTED;
    case ErrorCode::kCapExceeded: return MEC_CAP_EXCEEDED;
    case ErrorCode::kParse: return MEC_PARSE;
    case ErrorCode::kInternal: return MEC_INTERNAL;
  }
  return MEC_INTERNAL;
}

template <class F>
mec_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return MEC_OK;
  } catch (const majority::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return MEC_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MEC_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return MEC_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(const Json& j, char** out) {
  if (!out) majority::fail(ErrorCode::kInvalidArgument, "null output pointer");
  *out = copy_out(io::dump(j));
}

const majority::Multigraph& graph(const mec_graph* g) {
  if (!g) majority::fail(ErrorCode::kInvalidArgument, "null graph");
  return g->g;
}

Json parse(const char* text, const char* what) {
  if (!text) majority::fail(ErrorCode::kInvalidArgument, std::string("missing ") + what);
  return io::parse(text);
}

majority::ColorList colors_from(const Json& j) {
  if (!j.is_array()) majority::fail(ErrorCode::kParse, "color list must be an array");
  majority::ColorList out;
  for (const Json& c : j) {
    if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
      majority::fail(ErrorCode::kParse, "colors must be non-negative integers");
    }
    out.push_back(c.get<majority::Color>());
  }
  return out;
}

majority::SearchBudget budget_of(const mec_budget& b) {
  majority::SearchBudget out;
  if (b.node_limit > 0) out.node_limit = b.node_limit;
  if (b.time_limit_secs > 0) out.time_limit = std::chrono::duration<double>(b.time_limit_secs);
  out.threads = b.threads == 0 ? 1 : b.threads;
  return out;
}

Json stats_json(const majority::SearchStats& s) {
  return Json{{"nodes", s.nodes}, {"tree_closed", s.tree_closed}};
}

Json vertex_list(const std::vector<majority::VertexId>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(v.value);
  return out;
}

}  // namespace

extern "C" {

const char* mec_version(void) { return "0.1.0"; }

const char* mec_status_name(mec_status status) {
  switch (status) {
    case MEC_OK: return "ok";
    case MEC_INVALID_ARGUMENT: return "invalid_argument";
    case MEC_PRECONDITION: return "precondition";
    case MEC_NOT_FOUND: return "not_found";
    case MEC_BUDGET_EXHAUSTED: return "budget_exhausted";
    case MEC_CAP_EXCEEDED: return "cap_exceeded";
    case MEC_PARSE: return "parse";
    case MEC_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* mec_last_error(void) { return last_error.c_str(); }

void mec_string_free(char* s) { std::free(s); }

mec_budget mec_default_budget(void) {
  const majority::SearchBudget d;
  return mec_budget{d.node_limit, 0.0, d.threads};
}

mec_status mec_graph_from_json(const char* json, mec_graph** out) {
  return guarded([&] {
    if (!out) majority::fail(ErrorCode::kInvalidArgument, "null output pointer");
    *out = new mec_graph{io::graph_from_json(parse(json, "graph"))};
  });
}

void mec_graph_free(mec_graph* g) { delete g; }

mec_status mec_graph_to_json(const mec_graph* g, char** out) {
  return guarded([&] { emit(io::to_json(graph(g)), out); });
}

mec_status mec_graph_to_dot(const mec_graph* g, const char* coloring_json, char** out) {
  return guarded([&] {
    if (!out) majority::fail(ErrorCode::kInvalidArgument, "null output pointer");
    std::optional<majority::EdgeColoring> c;
    if (coloring_json) c = io::coloring_from_json(io::parse(coloring_json));
    *out = copy_out(io::to_dot(graph(g), c ? &*c : nullptr));
  });
}

size_t mec_graph_vertex_count(const mec_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t mec_graph_edge_count(const mec_graph* g) { return g ? g->g.edge_count() : 0; }

mec_status mec_generate(const char* family, uint64_t n, uint64_t m, uint64_t delta,
                        uint64_t seed, mec_graph** out) {
  return guarded([&] {
    namespace gen = majority::gen;
    if (!family || !out) majority::fail(ErrorCode::kInvalidArgument, "null argument");
    const std::string f = family;
    majority::Multigraph g;
    if (f == "cycle") {
      g = gen::cycle(n);
    } else if (f == "path") {
      g = gen::path(m);
    } else if (f == "complete") {
      g = gen::complete(n);
    } else if (f == "star") {
      g = gen::star(n);
    } else if (f == "petersen") {
      g = gen::petersen();
    } else if (f == "gadget") {
      g = gen::class2_gadget(gen::cycle(n), majority::VertexId{0});
    } else if (f == "even") {
      g = gen::random_even_graph(n, m, seed);
    } else if (f == "mindeg") {
      g = gen::random_graph_min_degree(n, m, delta, seed);
    } else {
      majority::fail(ErrorCode::kInvalidArgument, "unknown family '" + f + "'");
    }
    *out = new mec_graph{std::move(g)};
  });
}

mec_status mec_euler(const mec_graph* g, int64_t start_edge, int64_t from, char** out) {
  return guarded([&] {
    majority::TourStart start;
    if (start_edge >= 0) start.edge = majority::EdgeId{static_cast<std::uint32_t>(start_edge)};
    if (from >= 0) start.from = majority::VertexId{static_cast<std::uint32_t>(from)};
    emit(io::to_json(majority::euler_tour(graph(g), start)), out);
  });
}

mec_status mec_decide2(const mec_graph* g, char** out) {
  return guarded([&] {
    const auto d = majority::decide_majority2(graph(g));
    Json j{{"admits", d.admits}};
    if (d.odd_vertex) j["odd_vertex"] = d.odd_vertex->value;
    if (!d.odd_component.empty()) {
      j["odd_component"] = vertex_list(d.odd_component);
      j["odd_component_size"] = d.odd_component_size;
    }
    emit(j, out);
  });
}

mec_status mec_color2(const mec_graph* g, const char* lists_json, const char* universe_json,
                      char** out) {
  return guarded([&] {
    const auto lists = io::lists_from_json(parse(lists_json, "lists"));
    const auto universe =
        universe_json ? colors_from(io::parse(universe_json)) : majority::universe_of(lists);
    const auto r = majority::color_finite(graph(g), lists, universe);
    Json pivots = Json::array();
    for (const auto& p : r.pivots) {
      pivots.push_back(Json{{"component", vertex_list(p.component)}, {"pivot", p.pivot.value}});
    }
    emit(Json{{"coloring", io::to_json(r.coloring)},
              {"report", io::to_json(r.report)},
              {"pivots", std::move(pivots)}},
         out);
  });
}

mec_status mec_color3(const mec_graph* g, int partial, int decide, mec_budget budget,
                      char** out, char** stats_out) {
  return guarded([&] {
    const auto& h = graph(g);
    const auto b = budget_of(budget);
    majority::SearchStats stats;
    Json j;
    if (decide) {
      const auto r = majority::exists_majority3(h, b);
      stats = r.stats;
      j = Json{{"exists", r.exists()}};
      if (r.coloring) j["coloring"] = io::to_json(*r.coloring);
    } else {
      const auto c = partial ? majority::color_partial_min4(h, b, &stats)
                             : majority::color_min_degree4(h, b, &stats);
      j = Json{{"coloring", io::to_json(c)},
               {"report", io::to_json(majority::verify_edge_majority(h, c))}};
    }
    emit(j, out);
    if (stats_out) emit(stats_json(stats), stats_out);
  });
}

mec_status mec_color4(const mec_graph* g, const char* lists_json, char** out) {
  return guarded([&] {
    const auto lists = io::lists_from_json(parse(lists_json, "lists"));
    const auto c = majority::majority_4list(graph(g), lists);
    emit(Json{{"coloring", io::to_json(c)},
              {"report", io::to_json(majority::verify_edge_majority(graph(g), c))}},
         out);
  });
}

mec_status mec_linegraph(const mec_graph* g, const char* lists_json, const char* universe_json,
                         char** out) {
  return guarded([&] {
    const auto lists = io::lists_from_json(parse(lists_json, "lists"));
    const auto universe =
        universe_json ? colors_from(io::parse(universe_json)) : majority::universe_of(lists);
    const auto r = majority::majority_vertex_color_linegraph(graph(g), lists, universe);
    Json map = Json::object();
    for (const auto& [e, v] : r.line.map.pairs) map[std::to_string(e.value)] = v.value;
    emit(Json{{"line", io::to_json(r.line.graph)},
              {"map", std::move(map)},
              {"coloring", io::to_json(r.coloring)},
              {"report", io::to_json(r.report)}},
         out);
  });
}

mec_status mec_ball(const char* family, unsigned depth, unsigned lookahead, mec_budget budget,
                    char** out, char** stats_out) {
  return guarded([&] {
    if (!family) majority::fail(ErrorCode::kInvalidArgument, "null family");
    const std::string f = family;
    majority::LazyGraph lazy;
    if (f == "grid") {
      lazy = majority::grid_graph();
    } else if (f == "tree4") {
      lazy = majority::tree4_graph();
    } else {
      majority::fail(ErrorCode::kInvalidArgument, "unknown family '" + f + "'");
    }
    const auto tower = majority::color_ball_tower(lazy, depth, lookahead, budget_of(budget));
    const auto& ball = tower.ball;

    // Every level below the top: restrict the one coloring down and check it.
    Json levels = Json::array();
    for (std::size_t n = depth; n-- > 0;) {
      const auto smaller = majority::extract_ball(lazy, n);
      const auto c = majority::restrict_to_ball(ball, tower.coloring, smaller);
      const auto member = majority::check_membership(smaller, c);
      levels.push_back(Json{{"depth", n}, {"member", member.ok}});
    }
    Json lazy_ids = Json::array();
    for (auto v : ball.lazy) lazy_ids.push_back(v);
    Json interior = Json::array();
    for (bool b : ball.interior) interior.push_back(b);
    emit(Json{{"family", f},
              {"depth", depth},
              {"lookahead", lookahead},
              {"ball", io::to_json(ball.graph)},
              {"lazy", std::move(lazy_ids)},
              {"interior", std::move(interior)},
              {"coloring", io::to_json(tower.coloring)},
              {"member", majority::check_membership(ball, tower.coloring).ok},
              {"levels", std::move(levels)},
              {"report", io::to_json(majority::verify_edge_majority(ball.graph, tower.coloring))}},
         out);
    if (stats_out) emit(stats_json(tower.stats), stats_out);
  });
}

mec_status mec_verify_edges(const mec_graph* g, const char* coloring_json, char** out) {
  return guarded([&] {
    const auto c = io::coloring_from_json(parse(coloring_json, "coloring"));
    emit(io::to_json(majority::verify_edge_majority(graph(g), c)), out);
  });
}

mec_status mec_verify_vertices(const mec_graph* g, const char* coloring_json, char** out) {
  return guarded([&] {
    const auto c = io::vertex_coloring_from_json(parse(coloring_json, "coloring"));
    emit(io::to_json(majority::verify_vertex_majority(graph(g), c)), out);
  });
}

mec_status mec_oracle(const mec_graph* g, const char* predicate, const char* lists_json,
                      const char* palette_json, char** out) {
  return guarded([&] {
    namespace oracle = majority::oracle;
    const std::string p = predicate ? predicate : "";
    oracle::Predicate pred;
    if (p == "majority") {
      pred = oracle::Predicate::kMajority;
    } else if (p == "proper") {
      pred = oracle::Predicate::kProper;
    } else {
      majority::fail(ErrorCode::kInvalidArgument, "predicate must be 'majority' or 'proper'");
    }
    if ((lists_json == nullptr) == (palette_json == nullptr)) {
      majority::fail(ErrorCode::kInvalidArgument, "give exactly one of lists and palette");
    }
    const auto r = lists_json
                       ? oracle::exists_coloring(graph(g), io::lists_from_json(io::parse(lists_json)), pred)
                       : oracle::exists_coloring(graph(g), colors_from(io::parse(palette_json)), pred);
    Json j{{"exists", r.exists}};
    if (r.witness) j["witness"] = io::to_json(*r.witness);
    j["nodes"] = r.nodes;
    emit(j, out);
  });
}

mec_status mec_chromatic_index(const mec_graph* g, size_t* out) {
  return guarded([&] {
    if (!out) majority::fail(ErrorCode::kInvalidArgument, "null output pointer");
    *out = majority::oracle::chromatic_index(graph(g));
  });
}

mec_status mec_hunt(int conjecture, size_t n_max, size_t trials, uint64_t seed,
                    mec_budget budget, char** out) {
  return guarded([&] {
    const auto r = majority::oracle::search_counterexample(conjecture, n_max, trials, seed,
                                                           budget_of(budget));
    Json j{{"conjecture", r.conjecture},
           {"trials_run", r.trials_run},
           {"instances_checked", r.instances_checked},
           {"found", r.found.has_value()}};
    if (r.found) {
      Json ce{{"graph", io::to_json(r.found->graph)},
              {"trial", r.found->trial},
              {"graph_seed", r.found->graph_seed}};
      if (r.found->lists) ce["lists"] = io::to_json(*r.found->lists);
      j["counterexample"] = std::move(ce);
    }
    j["notes"] = r.notes;
    emit(j, out);
  });
}

mec_status mec_hunt_instance(int conjecture, const mec_graph* g, const char* lists_json,
                             mec_budget budget, char** out) {
  return guarded([&] {
    namespace oracle = majority::oracle;
    Json j{{"conjecture", conjecture}};
    if (conjecture == 1) {
      const auto r = oracle::check_conjecture1(graph(g), budget_of(budget));
      j["has_majority3"] = r.has_majority3;
      j["explanation"] = r.explanation ? vertex_list(*r.explanation) : Json(nullptr);
      j["found"] = r.counterexample();
      j["notes"] = Json::array(
          {"the degree condition on H is read as: some vertex of H has the same degree in H "
           "and in G, and that degree is at most 3"});
    } else if (conjecture == 2) {
      const auto lists = io::lists_from_json(parse(lists_json, "lists"));
      majority::check_lists(graph(g), lists, 3, true);
      const bool ok = oracle::majority_list_colorable(graph(g), lists);
      j["colorable"] = ok;
      j["found"] = !ok;
    } else {
      majority::fail(ErrorCode::kInvalidArgument, "conjecture must be 1 or 2");
    }
    emit(j, out);
  });
}

}  // extern "C"
