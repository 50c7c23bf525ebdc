#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dpo/geometry.hpp"
#include "dpo/hypergraph.hpp"

namespace dpo {

/// Digraph on a labeled planar point set with an arc u -> v exactly when
/// v's point is strictly dominated by u's point. Arcs are derived from the
/// coordinates on demand, never stored.
class DoublyPartialOrder {
 public:
  static DoublyPartialOrder build(std::vector<Point2> points);

  const std::vector<Point2>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point2& point(const std::string& id) const;
  bool has_point(const std::string& id) const;

  /// Ids of all points strictly dominating v's point, sorted.
  std::vector<std::string> in_neighborhood(const std::string& id) const;

 private:
  std::vector<Point2> points_;
};

struct CompetitionResult {
  /// Hypergraph on all point ids; edges are the distinct in-neighborhoods
  /// of size >= 2.
  Hypergraph hypergraph;
  /// Per canonical edge, the sorted ids of the points whose in-neighborhood
  /// equals that edge. Ordered like hypergraph.edges().
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> witnesses;
};

CompetitionResult competition_hypergraph(const DoublyPartialOrder& d);

/// u,v adjacent iff some point is strictly dominated by both.
Graph competition_graph(const DoublyPartialOrder& d);

struct LemmaViolation {
  std::string lemma;  // "L1".."L4"
  std::vector<std::string> vertices;

  friend bool operator==(const LemmaViolation&, const LemmaViolation&) = default;
};

/// Checks the four structural facts relating ≺, ↘ and the competition
/// hyperedges over all applicable vertex tuples:
///   L1: separated edge pair for x,y forces x↘y or y↘x
///   L2: x↘y↘z puts y and y's dominators into every edge holding x and z
///   L3: x↘y, z≺x, z⊀y forces z↘y
///   L4: x↘y, z≺y, z⊀x forces x↘z
/// A doubly partial order never violates any of them.
std::vector<LemmaViolation> verify_structure_lemmas(const DoublyPartialOrder& d);

/// Seeded generator for the property suites: 1..max_points distinct points
/// with integer coordinates on a square grid of side 4 * point count.
DoublyPartialOrder random_dpo(std::uint64_t seed, int max_points);

}  // namespace dpo
