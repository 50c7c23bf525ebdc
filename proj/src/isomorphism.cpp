#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "dpo/hypergraph.hpp"
#include "indexed.hpp"

namespace dpo {

namespace {

using detail::Indexed;

// Sorted multiset of incident-edge sizes; vertices can only map to vertices
// with an identical signature.
std::vector<int> signature(const Indexed& h, int v) {
  std::vector<int> sizes;
  for (const auto mask : h.edge_masks) {
    if (mask >> v & 1) sizes.push_back(std::popcount(mask));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

struct Searcher {
  const Indexed& a;
  const Indexed& b;
  std::vector<std::vector<int>> candidates;  // per a-vertex, same-signature b-vertices
  std::vector<int> order;                    // a-vertices, most constrained first
  std::vector<int> image;                    // a-vertex -> b-vertex or -1
  std::uint64_t assigned_a = 0;
  std::uint64_t assigned_b = 0;

  // Every a-edge must still have some same-size b-edge that contains the
  // images of its assigned members and avoids the images of assigned
  // non-members.
  bool consistent() const {
    for (const auto ea : a.edge_masks) {
      std::uint64_t image_inside = 0;
      std::uint64_t image_outside = 0;
      for (int v = 0; v < static_cast<int>(a.labels.size()); ++v) {
        if (!(assigned_a >> v & 1)) continue;
        const std::uint64_t bit = std::uint64_t{1} << image[v];
        if (ea >> v & 1) {
          image_inside |= bit;
        } else {
          image_outside |= bit;
        }
      }
      const int size = std::popcount(ea);
      bool feasible = false;
      for (const auto eb : b.edge_masks) {
        if (std::popcount(eb) != size) continue;
        if ((image_inside & ~eb) || (image_outside & eb)) continue;
        feasible = true;
        break;
      }
      if (!feasible) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (const int w : candidates[v]) {
      if (assigned_b >> w & 1) continue;
      image[v] = w;
      assigned_a |= std::uint64_t{1} << v;
      assigned_b |= std::uint64_t{1} << w;
      if (consistent() && extend(depth + 1)) return true;
      assigned_a &= ~(std::uint64_t{1} << v);
      assigned_b &= ~(std::uint64_t{1} << w);
      image[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphism(const Hypergraph& a, const Hypergraph& b, const VertexMap& map) {
  if (map.size() != a.vertex_count() || a.vertex_count() != b.vertex_count()) return false;
  std::unordered_set<std::string> targets;
  for (const auto& [from, to] : map) {
    if (!a.has_vertex(from) || !b.has_vertex(to)) return false;
    if (!targets.insert(to).second) return false;
  }
  std::vector<std::vector<std::string>> mapped;
  mapped.reserve(a.edge_count());
  for (const auto& edge : a.edges()) {
    std::vector<std::string> out;
    out.reserve(edge.size());
    for (const auto& m : edge) out.push_back(map.at(m));
    std::sort(out.begin(), out.end());
    mapped.push_back(std::move(out));
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == b.edges();
}

std::optional<VertexMap> isomorphism(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;

  const Indexed ia(a);
  const Indexed ib(b);

  std::vector<int> sizes_a, sizes_b;
  for (const auto m : ia.edge_masks) sizes_a.push_back(std::popcount(m));
  for (const auto m : ib.edge_masks) sizes_b.push_back(std::popcount(m));
  std::sort(sizes_a.begin(), sizes_a.end());
  std::sort(sizes_b.begin(), sizes_b.end());
  if (sizes_a != sizes_b) return std::nullopt;

  const int n = static_cast<int>(ia.labels.size());
  std::vector<std::vector<int>> sig_a(n), sig_b(n);
  for (int v = 0; v < n; ++v) {
    sig_a[v] = signature(ia, v);
    sig_b[v] = signature(ib, v);
  }

  Searcher s{ia, ib, {}, {}, std::vector<int>(n, -1), 0, 0};
  s.candidates.resize(n);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (sig_a[v] == sig_b[w]) s.candidates[v].push_back(w);
    }
    if (s.candidates[v].empty()) return std::nullopt;
  }

  s.order.resize(n);
  for (int v = 0; v < n; ++v) s.order[v] = v;
  std::stable_sort(s.order.begin(), s.order.end(), [&](int u, int v) {
    return s.candidates[u].size() < s.candidates[v].size();
  });

  if (!s.extend(0)) return std::nullopt;

  VertexMap map;
  for (int v = 0; v < n; ++v) map.emplace(ia.labels[v], ib.labels[s.image[v]]);
  return is_isomorphism(a, b, map) ? std::optional<VertexMap>(map) : std::nullopt;
}

}  // namespace dpo
