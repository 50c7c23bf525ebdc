#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpo/hypergraph.hpp"

namespace dpo {

struct IntervalCertificate {
  bool interval = false;
  /// Permutation of all vertices under which every hyperedge occupies a
  /// contiguous block; empty when interval is false.
  std::vector<std::string> ordering;
};

/// True iff every hyperedge's members are consecutive in `ordering` with no
/// non-member inside the block. `ordering` must be a permutation of V(h).
bool ordering_makes_consecutive(const Hypergraph& h, const std::vector<std::string>& ordering);

/// Consecutive-ones decision with certificate. Exact; exponential-state
/// search per connected component (components beyond 22 vertices are
/// rejected as too large).
IntervalCertificate is_interval(const Hypergraph& h);

/// Oracle: tries all vertex permutations in lexicographic order of the
/// stored vertex list; first valid ordering wins.
IntervalCertificate is_interval_bruteforce(const Hypergraph& h, std::size_t max_vertices = 10);

/// Interval-graph test: enumerates maximal cliques and asks for a clique
/// ordering in which each vertex's cliques are consecutive.
bool is_interval_graph(const Graph& g, std::size_t max_vertices = 20);

namespace detail {

/// Core consecutive-ones solver: a permutation of columns 0..columns-1
/// making every constraint mask a contiguous block, or nullopt.
std::optional<std::vector<int>> consecutive_ones_order(int columns,
                                                       const std::vector<std::uint64_t>& constraints);

}  // namespace detail

}  // namespace dpo
