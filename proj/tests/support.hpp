#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "dpo/hypergraph.hpp"
#include "dpo/rng.hpp"

namespace support {

inline dpo::Hypergraph hg(std::vector<std::string> vertices,
                          const std::vector<std::vector<std::string>>& edges) {
  return dpo::Hypergraph::make(std::move(vertices), edges);
}

inline std::vector<std::string> labels(int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

/// Random hypergraph on 2..max_vertices vertices; duplicate edges collapse.
inline dpo::Hypergraph random_hypergraph(std::uint64_t seed, int max_vertices) {
  dpo::Rng rng(seed);
  const int n = 2 + static_cast<int>(rng.below(max_vertices - 1));
  const auto names = labels(n);
  const int edge_count = static_cast<int>(rng.below(7));
  std::vector<std::vector<std::string>> edges;
  for (int e = 0; e < edge_count; ++e) {
    std::uint64_t mask = rng.below(std::uint64_t{1} << n);
    while (std::popcount(mask) < 2) mask = rng.below(std::uint64_t{1} << n);
    std::vector<std::string> edge;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) edge.push_back(names[v]);
    }
    edges.push_back(std::move(edge));
  }
  return hg(names, edges);
}

/// Random hypergraph that is interval by construction: edges are blocks of
/// consecutive positions in a hidden shuffled ordering. Always has >= 1 edge.
inline dpo::Hypergraph random_interval_hypergraph(std::uint64_t seed, int max_vertices) {
  dpo::Rng rng(seed);
  const int n = 2 + static_cast<int>(rng.below(max_vertices - 1));
  const auto names = labels(n);

  std::vector<int> hidden(n);
  std::iota(hidden.begin(), hidden.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(hidden[i], hidden[rng.below(i + 1)]);
  }

  const int edge_count = 1 + static_cast<int>(rng.below(5));
  std::vector<std::vector<std::string>> edges;
  for (int e = 0; e < edge_count; ++e) {
    const int lo = static_cast<int>(rng.below(n - 1));
    const int hi = lo + 1 + static_cast<int>(rng.below(n - lo - 1 + 1));
    std::vector<std::string> edge;
    for (int i = lo; i <= hi && i < n; ++i) edge.push_back(names[hidden[i]]);
    edges.push_back(std::move(edge));
  }
  return hg(names, edges);
}

/// Chordality oracle by full enumeration: every cyclic vertex sequence of
/// length >= 4, every injective assignment of supporting hyperedges.
inline bool naive_chordal(const dpo::Hypergraph& h) {
  const int n = static_cast<int>(h.vertex_count());
  const auto& verts = h.vertices();

  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> in_edge(h.edge_count(), std::vector<bool>(n, false));
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    for (int u = 0; u < n; ++u) {
      const bool has_u =
          std::find(h.edges()[e].begin(), h.edges()[e].end(), verts[u]) != h.edges()[e].end();
      in_edge[e][u] = has_u;
    }
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && in_edge[e][u] && in_edge[e][v]) adjacent[u][v] = true;
      }
    }
  }

  // Distinct supporting edges for the cycle's consecutive pairs.
  const auto supportable = [&](const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    std::vector<bool> used(h.edge_count(), false);
    std::vector<int> pair_order(k);
    std::iota(pair_order.begin(), pair_order.end(), 0);
    const std::function<bool(int)> assign = [&](int i) {
      if (i == k) return true;
      const int u = cycle[i];
      const int v = cycle[(i + 1) % k];
      for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (used[e] || !in_edge[e][u] || !in_edge[e][v]) continue;
        used[e] = true;
        if (assign(i + 1)) return true;
        used[e] = false;
      }
      return false;
    };
    return assign(0);
  };

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    if (std::popcount(subset) < 4) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (subset >> v & 1) members.push_back(v);
    }
    std::sort(members.begin(), members.end());
    // Rotation-canonical: the smallest member leads every arrangement.
    std::vector<int> rest(members.begin() + 1, members.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> cycle;
      cycle.push_back(members[0]);
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      const int k = static_cast<int>(cycle.size());
      bool consecutive_ok = true;
      for (int i = 0; i < k && consecutive_ok; ++i) {
        consecutive_ok = adjacent[cycle[i]][cycle[(i + 1) % k]];
      }
      if (!consecutive_ok) continue;
      bool chord = false;
      for (int i = 0; i < k && !chord; ++i) {
        for (int j = i + 1; j < k && !chord; ++j) {
          const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
          if (!consecutive && adjacent[cycle[i]][cycle[j]]) chord = true;
        }
      }
      if (chord) continue;
      if (supportable(cycle)) return false;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return true;
}

/// Interval-graph oracle: enumerate maximal cliques naively and try every
/// clique ordering. Only for tiny graphs.
inline bool naive_interval_graph(const dpo::Graph& g) {
  const int n = static_cast<int>(g.vertices.size());
  if (n == 0) return true;
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  const auto index_of = [&](const std::string& label) {
    return static_cast<int>(
        std::find(g.vertices.begin(), g.vertices.end(), label) - g.vertices.begin());
  };
  for (const auto& [a, b] : g.edges) {
    adjacent[index_of(a)][index_of(b)] = true;
    adjacent[index_of(b)][index_of(a)] = true;
  }

  std::vector<std::uint64_t> cliques;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    bool clique = true;
    for (int u = 0; u < n && clique; ++u) {
      for (int v = u + 1; v < n && clique; ++v) {
        if ((s >> u & 1) && (s >> v & 1) && !adjacent[u][v]) clique = false;
      }
    }
    if (!clique) continue;
    bool maximal = true;
    for (int w = 0; w < n && maximal; ++w) {
      if (s >> w & 1) continue;
      bool extends = true;
      for (int u = 0; u < n && extends; ++u) {
        if ((s >> u & 1) && !adjacent[u][w]) extends = false;
      }
      if (extends) maximal = false;
    }
    if (maximal) cliques.push_back(s);
  }

  std::vector<int> order(cliques.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end());
  do {
    bool valid = true;
    for (int v = 0; v < n && valid; ++v) {
      int lo = -1, hi = -1;
      int count = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (cliques[order[i]] >> v & 1) {
          if (lo < 0) lo = static_cast<int>(i);
          hi = static_cast<int>(i);
          ++count;
        }
      }
      if (count > 0 && hi - lo + 1 != count) valid = false;
    }
    if (valid) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace support
