#include "dpo/json_io.hpp"

namespace dpo {

namespace {

Rational coordinate_from_json(const nlohmann::json& value, const std::string& id) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  fail(ErrorKind::InvalidInput,
       "coordinate of point \"" + id + "\" must be a rational string or an integer");
}

}  // namespace

std::vector<Point2> points_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    fail(ErrorKind::InvalidInput, "expected an object with a \"points\" array");
  }
  std::vector<Point2> points;
  points.reserve(doc["points"].size());
  for (const auto& entry : doc["points"]) {
    if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string() ||
        !entry.contains("x") || !entry.contains("y")) {
      fail(ErrorKind::InvalidInput, "each point needs an \"id\" string and \"x\", \"y\" coordinates");
    }
    const std::string id = entry["id"].get<std::string>();
    points.push_back({id, coordinate_from_json(entry["x"], id), coordinate_from_json(entry["y"], id)});
  }
  return points;
}

nlohmann::ordered_json points_to_json(const std::vector<Point2>& points) {
  nlohmann::ordered_json doc;
  doc["points"] = nlohmann::ordered_json::array();
  for (const auto& p : points) {
    doc["points"].push_back({{"id", p.id}, {"x", p.x.str()}, {"y", p.y.str()}});
  }
  return doc;
}

Hypergraph hypergraph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array() ||
      !doc.contains("edges") || !doc["edges"].is_array()) {
    fail(ErrorKind::InvalidInput, "expected an object with \"vertices\" and \"edges\" arrays");
  }
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) fail(ErrorKind::InvalidInput, "vertices must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::vector<std::string>> edges;
  for (const auto& edge : doc["edges"]) {
    if (!edge.is_array()) fail(ErrorKind::InvalidInput, "each edge must be an array of vertices");
    std::vector<std::string> members;
    for (const auto& m : edge) {
      if (!m.is_string()) fail(ErrorKind::InvalidInput, "edge members must be strings");
      members.push_back(m.get<std::string>());
    }
    edges.push_back(std::move(members));
  }
  return Hypergraph::make(std::move(vertices), edges);
}

nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h) {
  nlohmann::ordered_json doc;
  doc["vertices"] = h.vertices();
  doc["edges"] = h.edges();
  return doc;
}

Graph graph_from_json(const nlohmann::json& doc) {
  const Hypergraph h = hypergraph_from_json(doc);
  std::vector<std::array<std::string, 2>> pairs;
  pairs.reserve(h.edge_count());
  for (const auto& edge : h.edges()) {
    if (edge.size() != 2) {
      fail(ErrorKind::InvalidInput, "graph edges must have exactly two members");
    }
    pairs.push_back({edge[0], edge[1]});
  }
  return Graph::make(h.vertices(), pairs);
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertices;
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges) doc["edges"].push_back({a, b});
  return doc;
}

nlohmann::json parse_json_text(const std::string& text, const std::string& source_name) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::InvalidInput, source_name + ": " + e.what());
  }
}

}  // namespace dpo
