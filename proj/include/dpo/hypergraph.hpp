#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpo/error.hpp"

namespace dpo {

/// Finite hypergraph without loops and without multiple hyperedges.
///
/// Storage is canonical: every edge keeps its members sorted
/// lexicographically and the edge list itself is sorted, so operator==
/// is structural equality. Vertex order is preserved as given.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and canonicalizes. Duplicate edges collapse to one;
  /// edges of size < 2, unknown members, and repeated vertex labels
  /// are rejected.
  static Hypergraph make(std::vector<std::string> vertices,
                         const std::vector<std::vector<std::string>>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::vector<std::string>>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_vertex(const std::string& label) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<std::string>> edges_;
};

/// Simple graph; edges are canonical sorted pairs, list sorted.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 2>> edges;

  static Graph make(std::vector<std::string> vertices,
                    const std::vector<std::array<std::string, 2>>& edges);

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Vertex bijection between two hypergraphs, by label.
using VertexMap = std::map<std::string, std::string>;

struct ChordalityReport {
  bool chordal = true;
  /// When not chordal: a cycle v_0 ... v_k (k >= 3) with no two
  /// nonconsecutive vertices adjacent, and the k+1 distinct hyperedges
  /// supporting its consecutive pairs ({v_0,v_1}, ..., {v_k,v_0}).
  std::vector<std::string> cycle;
  std::vector<std::vector<std::string>> support;
};

/// Subhypergraph on `subset`: edges are the intersections e ∩ subset of
/// size >= 2, deduplicated. Vertex order follows the host's order.
Hypergraph trace_subhypergraph(const Hypergraph& h, const std::vector<std::string>& subset);

/// Vertex bijection carrying E(a) exactly onto E(b), or nullopt.
/// Backtracking with per-vertex incident-edge-size signatures for pruning.
std::optional<VertexMap> isomorphism(const Hypergraph& a, const Hypergraph& b);

/// Checks that `map` is a bijection V(a) -> V(b) mapping E(a) onto E(b).
bool is_isomorphism(const Hypergraph& a, const Hypergraph& b, const VertexMap& map);

/// u,v adjacent iff some hyperedge contains both.
Graph two_section(const Hypergraph& h);

/// Exhaustive chordality decision; throws TooLarge above `max_vertices`.
ChordalityReport is_chordal(const Hypergraph& h, std::size_t max_vertices = 16);

/// Vertices belonging to no hyperedge, in vertex order.
std::vector<std::string> isolated_vertices(const Hypergraph& h);

}  // namespace dpo
