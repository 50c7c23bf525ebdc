#include "dpo/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

namespace dpo {

Hypergraph Hypergraph::make(std::vector<std::string> vertices,
                            const std::vector<std::vector<std::string>>& edges) {
  std::unordered_set<std::string> known;
  for (const auto& v : vertices) {
    if (!known.insert(v).second) fail(ErrorKind::DuplicateVertex, "duplicate vertex \"" + v + "\"");
  }

  std::vector<std::vector<std::string>> canonical;
  canonical.reserve(edges.size());
  for (const auto& edge : edges) {
    std::vector<std::string> members(edge);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() < 2) {
      fail(ErrorKind::SingletonEdge, "hyperedge with fewer than two distinct members");
    }
    for (const auto& m : members) {
      if (!known.count(m)) fail(ErrorKind::UnknownVertex, "edge member \"" + m + "\" is not a vertex");
    }
    canonical.push_back(std::move(members));
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());

  Hypergraph h;
  h.vertices_ = std::move(vertices);
  h.edges_ = std::move(canonical);
  return h;
}

bool Hypergraph::has_vertex(const std::string& label) const {
  return std::find(vertices_.begin(), vertices_.end(), label) != vertices_.end();
}

Graph Graph::make(std::vector<std::string> vertices,
                  const std::vector<std::array<std::string, 2>>& edges) {
  std::unordered_set<std::string> known;
  for (const auto& v : vertices) {
    if (!known.insert(v).second) fail(ErrorKind::DuplicateVertex, "duplicate vertex \"" + v + "\"");
  }
  std::vector<std::array<std::string, 2>> canonical;
  canonical.reserve(edges.size());
  for (auto edge : edges) {
    if (edge[0] == edge[1]) fail(ErrorKind::SingletonEdge, "loop at vertex \"" + edge[0] + "\"");
    for (const auto& m : edge) {
      if (!known.count(m)) fail(ErrorKind::UnknownVertex, "edge member \"" + m + "\" is not a vertex");
    }
    if (edge[1] < edge[0]) std::swap(edge[0], edge[1]);
    canonical.push_back(std::move(edge));
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());

  Graph g;
  g.vertices = std::move(vertices);
  g.edges = std::move(canonical);
  return g;
}

Hypergraph trace_subhypergraph(const Hypergraph& h, const std::vector<std::string>& subset) {
  std::unordered_set<std::string> keep;
  for (const auto& label : subset) {
    if (!h.has_vertex(label)) fail(ErrorKind::UnknownVertex, "subset member \"" + label + "\" is not a vertex");
    keep.insert(label);
  }

  std::vector<std::string> vertices;
  for (const auto& v : h.vertices()) {
    if (keep.count(v)) vertices.push_back(v);
  }

  std::vector<std::vector<std::string>> edges;
  for (const auto& edge : h.edges()) {
    std::vector<std::string> cut;
    for (const auto& m : edge) {
      if (keep.count(m)) cut.push_back(m);
    }
    if (cut.size() >= 2) edges.push_back(std::move(cut));
  }
  return Hypergraph::make(std::move(vertices), edges);
}

Graph two_section(const Hypergraph& h) {
  std::vector<std::array<std::string, 2>> pairs;
  for (const auto& edge : h.edges()) {
    for (std::size_t i = 0; i < edge.size(); ++i) {
      for (std::size_t j = i + 1; j < edge.size(); ++j) {
        pairs.push_back({edge[i], edge[j]});
      }
    }
  }
  return Graph::make(h.vertices(), pairs);
}

std::vector<std::string> isolated_vertices(const Hypergraph& h) {
  std::unordered_set<std::string> covered;
  for (const auto& edge : h.edges()) covered.insert(edge.begin(), edge.end());

  std::vector<std::string> isolated;
  for (const auto& v : h.vertices()) {
    if (!covered.count(v)) isolated.push_back(v);
  }
  return isolated;
}

}  // namespace dpo
