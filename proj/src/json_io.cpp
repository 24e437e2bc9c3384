#include "majority/json_io.hpp"

#include <limits>
#include <sstream>

#include "majority/error.hpp"

namespace majority::io {

namespace {

std::uint32_t as_id(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail(ErrorCode::kParse, std::string(what) + " must be a non-negative integer");
  }
  const auto v = j.get<std::uint64_t>();
  if (v > std::numeric_limits<std::uint32_t>::max()) {
    fail(ErrorCode::kParse, std::string(what) + " is out of range");
  }
  return static_cast<std::uint32_t>(v);
}

std::uint32_t key_id(const std::string& key, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size() || key[0] == '-' || v > std::numeric_limits<std::uint32_t>::max()) {
    fail(ErrorCode::kParse, std::string(what) + " key '" + key + "' is not an id");
  }
  return static_cast<std::uint32_t>(v);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    fail(ErrorCode::kParse, std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) fail(ErrorCode::kParse, std::string(what) + " must be a JSON object");
}

}  // namespace

Json to_json(const Multigraph& g) {
  Json vertices = Json::array();
  for (VertexId v : g.vertices()) vertices.push_back(v.value);
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(Json{{"id", e.id.value}, {"u", e.u.value}, {"v", e.v.value}});
  }
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Multigraph graph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  const Json& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) fail(ErrorCode::kParse, "vertices and edges must be arrays");
  std::vector<VertexId> vertices;
  for (const Json& v : vs) vertices.push_back(VertexId{as_id(v, "vertex id")});
  std::vector<Edge> edges;
  for (const Json& e : es) {
    edges.push_back(Edge{EdgeId{as_id(field(e, "id"), "edge id")}, VertexId{as_id(field(e, "u"), "u")},
                         VertexId{as_id(field(e, "v"), "v")}});
  }
  return Multigraph::build(std::move(vertices), std::move(edges));
}

Json to_json(const ListAssignment& lists) {
  Json out = Json::object();
  for (const auto& [e, l] : lists) out[std::to_string(e.value)] = l;
  return out;
}

ListAssignment lists_from_json(const Json& j) {
  require_object(j, "lists");
  ListAssignment out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_array()) fail(ErrorCode::kParse, "list of edge " + key + " must be an array");
    ColorList l;
    for (const Json& c : value) l.push_back(as_id(c, "color"));
    out[EdgeId{key_id(key, "lists")}] = l;
  }
  return out;
}

Json to_json(const EdgeColoring& c) {
  Json out = Json::object();
  for (const auto& [e, color] : c) out[std::to_string(e.value)] = color;
  return out;
}

EdgeColoring coloring_from_json(const Json& j) {
  require_object(j, "coloring");
  EdgeColoring out;
  for (const auto& [key, value] : j.items()) out[EdgeId{key_id(key, "coloring")}] = as_id(value, "color");
  return out;
}

Json to_json(const VertexColoring& c) {
  Json out = Json::object();
  for (const auto& [v, color] : c) out[std::to_string(v.value)] = color;
  return out;
}

VertexColoring vertex_coloring_from_json(const Json& j) {
  require_object(j, "vertex coloring");
  VertexColoring out;
  for (const auto& [key, value] : j.items()) {
    out[VertexId{key_id(key, "vertex coloring")}] = as_id(value, "color");
  }
  return out;
}

Json to_json(const VerificationReport& report) {
  Json vertices = Json::object();
  for (const auto& [v, s] : report.vertices) {
    Json entry{{"status", std::string(to_string(s.kind))}};
    if (s.kind != StatusKind::kMajority) {
      entry["color"] = s.color;
      entry["excess"] = s.excess;
    }
    vertices[std::to_string(v.value)] = std::move(entry);
  }
  return Json{{"verdict", std::string(to_string(report.verdict))}, {"vertices", std::move(vertices)}};
}

Json to_json(const Trail& t) {
  Json edges = Json::array();
  for (EdgeId e : t.edges) edges.push_back(e.value);
  Json vertices = Json::array();
  for (VertexId v : t.vertices) vertices.push_back(v.value);
  return Json{{"edges", std::move(edges)}, {"vertices", std::move(vertices)}, {"closed", t.closed}};
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, e.what());
  }
}

std::string dump(const Json& j) { return j.dump(); }

std::string to_dot(const Multigraph& g, const EdgeColoring* coloring) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.vertices()) out << "  " << v.value << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u.value << " -- " << e.v.value << " [id=" << e.id.value;
    if (coloring) {
      auto it = coloring->find(e.id);
      if (it != coloring->end()) out << ", label=\"" << it->second << "\"";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace majority::io
