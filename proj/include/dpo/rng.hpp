#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace dpo {

/// splitmix64 generator. Used instead of <random> engines so that seeded
/// runs produce identical streams on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  /// First `count` entries of a uniform shuffle of {0, ..., universe-1}.
  std::vector<std::uint32_t> sample_distinct(std::uint32_t universe, std::uint32_t count) {
    std::vector<std::uint32_t> cells(universe);
    std::iota(cells.begin(), cells.end(), 0u);
    for (std::uint32_t i = 0; i < count; ++i) {
      const auto j = i + static_cast<std::uint32_t>(below(universe - i));
      std::swap(cells[i], cells[j]);
    }
    cells.resize(count);
    return cells;
  }

 private:
  std::uint64_t state_;
};

/// Stable derivation of an independent stream, e.g. one per search trial.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  Rng r(seed ^ (0x9E3779B97F4A7C15ull + index * 0xBF58476D1CE4E5B9ull));
  return r.next();
}

}  // namespace dpo
