#include "dpo/competition.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "dpo/rng.hpp"

namespace dpo {

DoublyPartialOrder DoublyPartialOrder::build(std::vector<Point2> points) {
  std::unordered_set<std::string> ids;
  for (const auto& p : points) {
    if (!ids.insert(p.id).second) fail(ErrorKind::DuplicateId, "duplicate point id \"" + p.id + "\"");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (same_coordinates(points[i], points[j])) {
        fail(ErrorKind::DuplicatePoint, "points \"" + points[i].id + "\" and \"" + points[j].id +
                                            "\" share coordinates (" + points[i].x.str() + ", " +
                                            points[i].y.str() + ")");
      }
    }
  }
  DoublyPartialOrder d;
  d.points_ = std::move(points);
  return d;
}

const Point2& DoublyPartialOrder::point(const std::string& id) const {
  for (const auto& p : points_) {
    if (p.id == id) return p;
  }
  fail(ErrorKind::UnknownVertex, "no point with id \"" + id + "\"");
}

bool DoublyPartialOrder::has_point(const std::string& id) const {
  for (const auto& p : points_) {
    if (p.id == id) return true;
  }
  return false;
}

std::vector<std::string> DoublyPartialOrder::in_neighborhood(const std::string& id) const {
  const Point2& v = point(id);
  std::vector<std::string> dominators;
  for (const auto& u : points_) {
    if (strictly_dominated(v, u)) dominators.push_back(u.id);
  }
  std::sort(dominators.begin(), dominators.end());
  return dominators;
}

CompetitionResult competition_hypergraph(const DoublyPartialOrder& d) {
  std::map<std::vector<std::string>, std::vector<std::string>> witnesses_by_edge;
  for (const auto& p : d.points()) {
    auto hood = d.in_neighborhood(p.id);
    if (hood.size() >= 2) witnesses_by_edge[std::move(hood)].push_back(p.id);
  }

  std::vector<std::string> vertices;
  vertices.reserve(d.size());
  for (const auto& p : d.points()) vertices.push_back(p.id);

  std::vector<std::vector<std::string>> edges;
  edges.reserve(witnesses_by_edge.size());
  for (const auto& [edge, _] : witnesses_by_edge) edges.push_back(edge);

  CompetitionResult result;
  result.hypergraph = Hypergraph::make(std::move(vertices), edges);
  for (const auto& edge : result.hypergraph.edges()) {
    auto witnesses = witnesses_by_edge.at(edge);
    std::sort(witnesses.begin(), witnesses.end());
    result.witnesses.emplace_back(edge, std::move(witnesses));
  }
  return result;
}

Graph competition_graph(const DoublyPartialOrder& d) {
  const auto& pts = d.points();
  std::vector<std::string> vertices;
  vertices.reserve(pts.size());
  for (const auto& p : pts) vertices.push_back(p.id);

  std::vector<std::array<std::string, 2>> edges;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (const auto& w : pts) {
        if (strictly_dominated(w, pts[i]) && strictly_dominated(w, pts[j])) {
          edges.push_back({pts[i].id, pts[j].id});
          break;
        }
      }
    }
  }
  return Graph::make(std::move(vertices), edges);
}

std::vector<LemmaViolation> verify_structure_lemmas(const DoublyPartialOrder& d) {
  const auto& pts = d.points();
  const std::size_t n = pts.size();
  const auto ch = competition_hypergraph(d);
  const auto& edges = ch.hypergraph.edges();

  const auto member = [](const std::vector<std::string>& edge, const std::string& id) {
    return std::binary_search(edge.begin(), edge.end(), id);
  };

  std::vector<LemmaViolation> violations;

  // L1: a hyperedge with x but not y plus one with y but not x force x, y
  // to be ↘-comparable.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& x = pts[i];
      const auto& y = pts[j];
      bool edge_x = false, edge_y = false;
      for (const auto& e : edges) {
        const bool has_x = member(e, x.id);
        const bool has_y = member(e, y.id);
        edge_x = edge_x || (has_x && !has_y);
        edge_y = edge_y || (has_y && !has_x);
      }
      if (edge_x && edge_y && !down_right(x, y) && !down_right(y, x)) {
        violations.push_back({"L1", {x.id, y.id}});
      }
    }
  }

  // L2: x↘y↘z implies every hyperedge containing x and z also contains y
  // and every dominator of y.
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      if (!down_right(x, y)) continue;
      for (const auto& z : pts) {
        if (!down_right(y, z)) continue;
        bool violated = false;
        for (const auto& e : edges) {
          if (!member(e, x.id) || !member(e, z.id)) continue;
          if (!member(e, y.id)) {
            violated = true;
            break;
          }
          for (const auto& u : pts) {
            if (strictly_dominated(y, u) && !member(e, u.id)) {
              violated = true;
              break;
            }
          }
          if (violated) break;
        }
        if (violated) violations.push_back({"L2", {x.id, y.id, z.id}});
      }
    }
  }

  // L3 and L4: pure coordinate facts about ≺ and ↘.
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      if (!down_right(x, y)) continue;
      for (const auto& z : pts) {
        if (strictly_dominated(z, x) && !strictly_dominated(z, y) && !down_right(z, y)) {
          violations.push_back({"L3", {x.id, y.id, z.id}});
        }
        if (strictly_dominated(z, y) && !strictly_dominated(z, x) && !down_right(x, z)) {
          violations.push_back({"L4", {x.id, y.id, z.id}});
        }
      }
    }
  }

  return violations;
}

DoublyPartialOrder random_dpo(std::uint64_t seed, int max_points) {
  if (max_points < 1) fail(ErrorKind::BadParameter, "max_points must be >= 1");
  Rng rng(seed);
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_points)));
  const int side = 4 * n;
  const auto cells = rng.sample_distinct(static_cast<std::uint32_t>(side * side),
                                         static_cast<std::uint32_t>(n));
  std::vector<Point2> points;
  points.reserve(n);
  for (int i = 0; i < n; ++i) {
    points.push_back({"p" + std::to_string(i), Rational(cells[i] % side), Rational(cells[i] / side)});
  }
  return DoublyPartialOrder::build(std::move(points));
}

}  // namespace dpo
