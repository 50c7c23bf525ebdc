#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dpo/geometry.hpp"
#include "dpo/hypergraph.hpp"

namespace dpo {

/// Point-set document: {"points": [{"id": "a0", "x": "0", "y": "2"}, ...]}
/// with coordinates in rational text form. Extra object fields are ignored.
std::vector<Point2> points_from_json(const nlohmann::json& doc);
nlohmann::ordered_json points_to_json(const std::vector<Point2>& points);

/// Hypergraph document: {"vertices": ["v1", ...], "edges": [["v1","v2"], ...]}.
/// Members and edges may appear in any order; parsing canonicalizes.
Hypergraph hypergraph_from_json(const nlohmann::json& doc);
nlohmann::ordered_json hypergraph_to_json(const Hypergraph& h);

/// Graphs reuse the hypergraph document with every edge of size 2.
Graph graph_from_json(const nlohmann::json& doc);
nlohmann::ordered_json graph_to_json(const Graph& g);

/// Parses a document from text, mapping JSON syntax errors to InvalidInput.
nlohmann::json parse_json_text(const std::string& text, const std::string& source_name);

}  // namespace dpo
