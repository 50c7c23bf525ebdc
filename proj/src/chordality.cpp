#include <bit>
#include <cstdint>
#include <functional>

#include "dpo/hypergraph.hpp"
#include "indexed.hpp"

namespace dpo {

namespace {

using detail::Indexed;

// Kuhn's augmenting-path matching between the cycle's consecutive pairs and
// the hyperedges containing them. A perfect matching on the pair side is the
// system of k+1 distinct hyperedges the cycle definition requires.
struct PairMatcher {
  const std::vector<std::vector<int>>& options;  // pair -> candidate edge indices
  std::vector<int> edge_owner;                   // edge -> pair or -1
  std::vector<char> visited;

  bool augment(int pair) {
    for (const int e : options[pair]) {
      if (visited[e]) continue;
      visited[e] = 1;
      if (edge_owner[e] < 0 || augment(edge_owner[e])) {
        edge_owner[e] = pair;
        return true;
      }
    }
    return false;
  }
};

std::optional<std::vector<int>> match_pairs_to_edges(const std::vector<std::vector<int>>& options,
                                                     std::size_t edge_count) {
  PairMatcher m{options, std::vector<int>(edge_count, -1), {}};
  for (std::size_t pair = 0; pair < options.size(); ++pair) {
    m.visited.assign(edge_count, 0);
    if (!m.augment(static_cast<int>(pair))) return std::nullopt;
  }
  std::vector<int> chosen(options.size(), -1);
  for (std::size_t e = 0; e < edge_count; ++e) {
    if (m.edge_owner[e] >= 0) chosen[m.edge_owner[e]] = static_cast<int>(e);
  }
  return chosen;
}

}  // namespace

ChordalityReport is_chordal(const Hypergraph& h, std::size_t max_vertices) {
  const std::size_t n = h.vertex_count();
  if (n > max_vertices) {
    fail(ErrorKind::TooLarge, "chordality check limited to " + std::to_string(max_vertices) +
                                  " vertices, got " + std::to_string(n));
  }

  const Indexed idx(h);
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto mask : idx.edge_masks) {
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1) adj[v] |= mask & ~(std::uint64_t{1} << v);
    }
  }

  const auto adjacent = [&](int u, int v) { return (adj[u] >> v & 1) != 0; };

  // Try to complete the chordless path `path` (started at its minimum vertex)
  // into a cycle of length >= 4 whose consecutive pairs admit a system of
  // distinct hyperedges. Returns the report of the first such cycle.
  std::optional<ChordalityReport> found;
  std::vector<int> path;

  const auto edge_system = [&](const std::vector<int>& cycle) -> std::optional<ChordalityReport> {
    const std::size_t k = cycle.size();
    std::vector<std::vector<int>> options(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t pair = (std::uint64_t{1} << cycle[i]) | (std::uint64_t{1} << cycle[(i + 1) % k]);
      for (std::size_t e = 0; e < idx.edge_masks.size(); ++e) {
        if ((idx.edge_masks[e] & pair) == pair) options[i].push_back(static_cast<int>(e));
      }
    }
    const auto chosen = match_pairs_to_edges(options, idx.edge_masks.size());
    if (!chosen) return std::nullopt;
    ChordalityReport report;
    report.chordal = false;
    for (const int v : cycle) report.cycle.push_back(idx.labels[v]);
    for (const int e : *chosen) report.support.push_back(idx.to_labels(idx.edge_masks[e]));
    return report;
  };

  std::function<bool()> extend = [&]() -> bool {
    const int s = path.front();
    const int tail = path.back();
    for (int w = s + 1; w < static_cast<int>(n); ++w) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      if (!adjacent(tail, w)) continue;
      if (path.size() == 1) {
        // Second cycle vertex; adjacency to s is consecutive, not a chord.
        path.push_back(w);
        if (extend()) return true;
        path.pop_back();
        continue;
      }
      bool chord = false;
      for (std::size_t j = 1; j + 1 < path.size(); ++j) {
        if (adjacent(path[j], w)) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (adjacent(s, w)) {
        // Closing: cycle s, path[1..], w. Each cycle appears once with
        // path[1] < w; shorter closings are triangles, not cycles >= 4.
        if (path.size() >= 3 && path[1] < w) {
          path.push_back(w);
          if (auto report = edge_system(path)) {
            found = std::move(report);
            return true;
          }
          path.pop_back();
        }
        continue;
      }
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
    }
    return false;
  };

  for (int s = 0; s < static_cast<int>(n) && !found; ++s) {
    path.assign(1, s);
    extend();
  }

  return found.value_or(ChordalityReport{});
}

}  // namespace dpo
