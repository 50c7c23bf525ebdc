#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dpo/hypergraph.hpp"

namespace dpo::detail {

/// Bitmask view of a hypergraph for the search algorithms. Bit i of an edge
/// mask refers to labels[i]; holds up to 64 vertices.
struct Indexed {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<std::uint64_t> edge_masks;

  explicit Indexed(const Hypergraph& h) : labels(h.vertices()) {
    if (labels.size() > 64) {
      fail(ErrorKind::TooLarge, "more than 64 vertices (" + std::to_string(labels.size()) + ")");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<int>(i));
    edge_masks.reserve(h.edge_count());
    for (const auto& edge : h.edges()) {
      std::uint64_t mask = 0;
      for (const auto& m : edge) mask |= std::uint64_t{1} << index.at(m);
      edge_masks.push_back(mask);
    }
  }

  std::vector<std::string> to_labels(std::uint64_t mask) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (mask >> i & 1) out.push_back(labels[i]);
    }
    return out;
  }
};

}  // namespace dpo::detail
