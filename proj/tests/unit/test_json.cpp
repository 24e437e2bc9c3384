#include <doctest.h>

#include "majority/error.hpp"
#include "majority/euler.hpp"
#include "majority/generators.hpp"
#include "majority/json_io.hpp"
#include "majority/verify.hpp"
#include "support.hpp"

using namespace majority;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("graph round trip keeps ids") {
  const auto c4 = gen::cycle(4);
  const auto j = io::to_json(c4);
  CHECK(io::dump(j) ==
        R"({"vertices":[0,1,2,3],"edges":[{"id":0,"u":0,"v":1},{"id":1,"u":1,"v":2},{"id":2,"u":2,"v":3},{"id":3,"u":3,"v":0}]})");
  CHECK(io::graph_from_json(j) == c4);

  // Sparse ids survive a deletion.
  const VertexId drop[] = {VertexId{1}};
  const auto h = gen::petersen().without_vertices(drop);
  const auto back = io::graph_from_json(io::parse(io::dump(io::to_json(h))));
  CHECK(back == h);
  CHECK(io::dump(io::to_json(back)) == io::dump(io::to_json(h)));

  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_simple(1 + rng.below(10), rng.below(1000), rng);
    CHECK(io::graph_from_json(io::parse(io::dump(io::to_json(g)))) == g);
  }
}

TEST_CASE("colorings and lists round trip") {
  const auto k4 = gen::complete(4);
  Rng rng(8);
  const auto lists = testing::random_lists(k4, 3, 6, rng);
  CHECK(io::lists_from_json(io::parse(io::dump(io::to_json(lists)))) == lists);

  EdgeColoring c;
  for (const Edge& e : k4.edges()) c[e.id] = e.id.value % 3;
  CHECK(io::coloring_from_json(io::to_json(c)) == c);
  CHECK(io::dump(io::to_json(c)) == R"({"0":0,"1":1,"2":2,"3":0,"4":1,"5":2})");

  VertexColoring vc{{VertexId{2}, 7}, {VertexId{10}, 1}};
  CHECK(io::vertex_coloring_from_json(io::to_json(vc)) == vc);
}

TEST_CASE("report and trail shapes") {
  const auto c3 = gen::cycle(3);
  EdgeColoring c{{EdgeId{0}, 1}, {EdgeId{1}, 1}, {EdgeId{2}, 2}};
  const auto j = io::to_json(verify_edge_majority(c3, c));
  CHECK(j["verdict"] == "AlmostOnly");
  CHECK(j["vertices"]["1"]["status"] == "AlmostMajority");
  CHECK(j["vertices"]["1"]["color"] == 1);
  CHECK(j["vertices"]["1"]["excess"] == 2);
  CHECK(io::dump(j["vertices"]["0"]) == R"({"status":"Majority"})");

  const auto t = io::to_json(euler_tour(gen::cycle(3)));
  CHECK(t["closed"] == true);
  CHECK(t["edges"].size() == 3);
  CHECK(t["vertices"].size() == 4);
}

TEST_CASE("malformed input is a parse error") {
  CHECK(code_of([] { io::parse("{\"vertices\":"); }) == ErrorCode::kParse);
  CHECK(code_of([] { io::graph_from_json(io::parse("{}")); }) == ErrorCode::kParse);
  CHECK(code_of([] { io::graph_from_json(io::parse(R"({"vertices":[0,-1],"edges":[]})")); }) ==
        ErrorCode::kParse);
  CHECK(code_of([] { io::graph_from_json(io::parse(R"({"vertices":[0,1],"edges":[{"id":0,"u":0}]})")); }) ==
        ErrorCode::kParse);
  CHECK(code_of([] { io::coloring_from_json(io::parse(R"({"x":1})")); }) == ErrorCode::kParse);
  CHECK(code_of([] { io::coloring_from_json(io::parse(R"({"-1":1})")); }) == ErrorCode::kParse);
  CHECK(code_of([] { io::lists_from_json(io::parse(R"({"0":3})")); }) == ErrorCode::kParse);
  CHECK(code_of([] { io::coloring_from_json(io::parse("[1,2]")); }) == ErrorCode::kParse);
  // Well-formed JSON, invalid graph: that is the graph's complaint, not the parser's.
  CHECK(code_of([] { io::graph_from_json(io::parse(R"({"vertices":[0],"edges":[{"id":0,"u":0,"v":0}]})")); }) !=
        ErrorCode::kParse);
}

TEST_CASE("dot output") {
  const auto p = gen::path(1);
  EdgeColoring c{{EdgeId{0}, 4}};
  CHECK(io::to_dot(p) == "graph G {\n  0;\n  1;\n  0 -- 1 [id=0];\n}\n");
  CHECK(io::to_dot(p, &c) == "graph G {\n  0;\n  1;\n  0 -- 1 [id=0, label=\"4\"];\n}\n");
}
