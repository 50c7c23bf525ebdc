#include "dpo/interval.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "indexed.hpp"

namespace dpo {

namespace detail {

namespace {

// Union-find over columns; constraints glue their members together.
struct Components {
  std::vector<int> parent;

  explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

constexpr int kMaxComponent = 22;

// A prefix S of a valid column order can stop an edge only at its boundary:
// once a constraint is started but unfinished, the next column must belong
// to it. Searching over prefix sets under that rule is exact.
std::optional<std::vector<int>> order_component(const std::vector<int>& columns,
                                                const std::vector<std::uint64_t>& constraints) {
  const int k = static_cast<int>(columns.size());
  if (k == 1) return std::vector<int>{columns[0]};
  if (k > kMaxComponent) {
    fail(ErrorKind::TooLarge, "consecutive-ones component with " + std::to_string(k) +
                                  " vertices exceeds the " + std::to_string(kMaxComponent) +
                                  "-vertex search limit");
  }

  std::vector<std::uint64_t> local(constraints.size(), 0);
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    for (int i = 0; i < k; ++i) {
      if (constraints[c] >> columns[i] & 1) local[c] |= std::uint64_t{1} << i;
    }
  }

  const std::uint64_t full = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  // state -> local column appended last to reach it
  std::unordered_map<std::uint64_t, int> parent;
  parent.reserve(1024);
  parent.emplace(0, -1);
  std::vector<std::uint64_t> frontier{0};

  while (!frontier.empty() && !parent.count(full)) {
    std::vector<std::uint64_t> next;
    for (const auto state : frontier) {
      for (int i = 0; i < k && !parent.count(full); ++i) {
        if (state >> i & 1) continue;
        bool ok = true;
        for (const auto mask : local) {
          const std::uint64_t started = mask & state;
          if (started != 0 && started != mask && !(mask >> i & 1)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        const std::uint64_t grown = state | (std::uint64_t{1} << i);
        if (parent.emplace(grown, i).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }

  const auto done = parent.find(full);
  if (done == parent.end()) return std::nullopt;

  std::vector<int> order(k);
  std::uint64_t state = full;
  for (int pos = k - 1; pos >= 0; --pos) {
    const int i = parent.at(state);
    order[pos] = columns[i];
    state &= ~(std::uint64_t{1} << i);
  }
  return order;
}

}  // namespace

std::optional<std::vector<int>> consecutive_ones_order(int columns,
                                                       const std::vector<std::uint64_t>& constraints) {
  Components comps(columns);
  for (const auto mask : constraints) {
    int first = -1;
    for (int v = 0; v < columns; ++v) {
      if (!(mask >> v & 1)) continue;
      if (first < 0) {
        first = v;
      } else {
        comps.unite(first, v);
      }
    }
  }

  std::vector<std::vector<int>> groups(columns);
  for (int v = 0; v < columns; ++v) groups[comps.find(v)].push_back(v);

  std::vector<int> order;
  order.reserve(columns);
  for (int root = 0; root < columns; ++root) {
    const auto& members = groups[root];
    if (members.empty()) continue;
    if (members.size() == 1) {
      order.push_back(members[0]);
      continue;
    }
    std::vector<std::uint64_t> relevant;
    for (const auto mask : constraints) {
      if (mask != 0 && comps.find(std::countr_zero(mask)) == root) relevant.push_back(mask);
    }
    const auto sub = order_component(members, relevant);
    if (!sub) return std::nullopt;
    order.insert(order.end(), sub->begin(), sub->end());
  }
  return order;
}

}  // namespace detail

bool ordering_makes_consecutive(const Hypergraph& h, const std::vector<std::string>& ordering) {
  if (ordering.size() != h.vertex_count()) return false;
  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    if (!h.has_vertex(ordering[i])) return false;
    if (!position.emplace(ordering[i], i).second) return false;
  }
  for (const auto& edge : h.edges()) {
    std::size_t lo = ordering.size(), hi = 0;
    for (const auto& m : edge) {
      lo = std::min(lo, position.at(m));
      hi = std::max(hi, position.at(m));
    }
    if (hi - lo + 1 != edge.size()) return false;
  }
  return true;
}

IntervalCertificate is_interval(const Hypergraph& h) {
  if (h.edge_count() == 0) return {true, h.vertices()};

  const detail::Indexed idx(h);
  const auto order = detail::consecutive_ones_order(static_cast<int>(idx.labels.size()),
                                                    idx.edge_masks);
  if (!order) return {false, {}};

  IntervalCertificate cert{true, {}};
  cert.ordering.reserve(order->size());
  for (const int v : *order) cert.ordering.push_back(idx.labels[v]);
  if (!ordering_makes_consecutive(h, cert.ordering)) {
    fail(ErrorKind::BadParameter, "internal: solver produced a non-consecutive ordering");
  }
  return cert;
}

IntervalCertificate is_interval_bruteforce(const Hypergraph& h, std::size_t max_vertices) {
  const std::size_t n = h.vertex_count();
  if (n > max_vertices) {
    fail(ErrorKind::TooLarge, "brute-force interval check limited to " +
                                  std::to_string(max_vertices) + " vertices, got " +
                                  std::to_string(n));
  }
  if (h.edge_count() == 0) return {true, h.vertices()};

  const detail::Indexed idx(h);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> position(n);
  do {
    for (std::size_t i = 0; i < n; ++i) position[perm[i]] = static_cast<int>(i);
    bool valid = true;
    for (const auto mask : idx.edge_masks) {
      int lo = static_cast<int>(n), hi = -1, count = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(mask >> v & 1)) continue;
        lo = std::min(lo, position[v]);
        hi = std::max(hi, position[v]);
        ++count;
      }
      if (hi - lo + 1 != count) {
        valid = false;
        break;
      }
    }
    if (valid) {
      IntervalCertificate cert{true, {}};
      for (std::size_t i = 0; i < n; ++i) cert.ordering.push_back(idx.labels[perm[i]]);
      return cert;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {false, {}};
}

namespace {

// Bron-Kerbosch with pivoting.
void maximal_cliques(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                     std::uint64_t x, std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  const std::uint64_t px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for (std::uint64_t rest = px; rest; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    const int gain = std::popcount(p & adj[u]);
    if (gain > best) {
      best = gain;
      pivot = u;
    }
  }
  for (std::uint64_t work = p & ~adj[pivot]; work; work &= work - 1) {
    const int v = std::countr_zero(work);
    const std::uint64_t bit = std::uint64_t{1} << v;
    maximal_cliques(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

bool is_interval_graph(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertices.size();
  if (n > max_vertices) {
    fail(ErrorKind::TooLarge, "interval-graph check limited to " + std::to_string(max_vertices) +
                                  " vertices, got " + std::to_string(n));
  }
  if (n == 0) return true;

  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(g.vertices[i], static_cast<int>(i));
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [a, b] : g.edges) {
    adj[index.at(a)] |= std::uint64_t{1} << index.at(b);
    adj[index.at(b)] |= std::uint64_t{1} << index.at(a);
  }

  std::vector<std::uint64_t> cliques;
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  maximal_cliques(adj, 0, all, 0, cliques);

  // Chordal graphs have at most n maximal cliques; more means not interval.
  if (cliques.size() > n) return false;

  std::vector<std::uint64_t> vertex_in_cliques(n, 0);
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    for (std::size_t v = 0; v < n; ++v) {
      if (cliques[c] >> v & 1) vertex_in_cliques[v] |= std::uint64_t{1} << c;
    }
  }
  return detail::consecutive_ones_order(static_cast<int>(cliques.size()), vertex_in_cliques)
      .has_value();
}

}  // namespace dpo
