#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "majority/coloring.hpp"
#include "majority/euler.hpp"
#include "majority/graph.hpp"
#include "majority/verify.hpp"

namespace majority::io {

using Json = nlohmann::ordered_json;

/// {"vertices":[0,1,...],"edges":[{"id":0,"u":0,"v":1},...]}
Json to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

/// {"<edge id>":[colors...],...}
Json to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const Json& j);

/// {"<edge id>":color,...}
Json to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const Json& j);

/// {"<vertex id>":color,...}
Json to_json(const VertexColoring& c);
VertexColoring vertex_coloring_from_json(const Json& j);

/// {"verdict":"...","vertices":{"<id>":{"status":"Majority"} |
///   {"status":"AlmostMajority"|"Violating","color":c,"excess":k},...}}
Json to_json(const VerificationReport& report);

/// {"edges":[...],"vertices":[...],"closed":bool}
Json to_json(const Trail& t);

/// Parses text; throws Error(kParse) on malformed JSON.
Json parse(std::string_view text);

/// Compact serialization; this is the canonical byte form.
std::string dump(const Json& j);

/// Graphviz rendering; edges are labelled with their color when given.
std::string to_dot(const Multigraph& g, const EdgeColoring* coloring = nullptr);

}  // namespace majority::io
