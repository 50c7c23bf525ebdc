#include "dpo/patterns.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "dpo/interval.hpp"
#include "dpo/rng.hpp"
#include "indexed.hpp"

namespace dpo {

namespace {

std::vector<std::string> numbered_labels(int count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (int i = 1; i <= count; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

}  // namespace

std::string pattern_name(const PatternKind& kind) {
  switch (kind.family) {
    case PatternFamily::C:
      return "c" + std::to_string(kind.n);
    case PatternFamily::M:
      return "m" + std::to_string(kind.n);
    case PatternFamily::F:
      return "f" + std::to_string(kind.n);
    case PatternFamily::O1:
      return "o1";
    case PatternFamily::O2:
      return "o2";
  }
  fail(ErrorKind::BadParameter, "unknown pattern family");
}

PatternKind parse_pattern_name(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "o1") return {PatternFamily::O1, 0};
  if (lower == "o2") return {PatternFamily::O2, 0};
  if (lower.size() >= 2 && lower.size() <= 7 && (lower[0] == 'c' || lower[0] == 'm' || lower[0] == 'f')) {
    const std::string digits = lower.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
      const int n = std::stoi(digits);
      const PatternFamily family = lower[0] == 'c'   ? PatternFamily::C
                                   : lower[0] == 'm' ? PatternFamily::M
                                                     : PatternFamily::F;
      const PatternKind kind{family, n};
      generate_pattern(kind);  // validates the parameter range
      return kind;
    }
  }
  fail(ErrorKind::BadParameter, "unknown pattern name \"" + name + "\"");
}

Hypergraph generate_pattern(const PatternKind& kind) {
  switch (kind.family) {
    case PatternFamily::C: {
      if (kind.n < 3) fail(ErrorKind::BadParameter, "C_n requires n >= 3");
      auto labels = numbered_labels(kind.n);
      std::vector<std::vector<std::string>> edges;
      for (int i = 0; i < kind.n; ++i) {
        edges.push_back({labels[i], labels[(i + 1) % kind.n]});
      }
      return Hypergraph::make(std::move(labels), edges);
    }
    case PatternFamily::M:
    case PatternFamily::F: {
      if (kind.n < 1) fail(ErrorKind::BadParameter, "M_n and F_n require n >= 1");
      auto labels = numbered_labels(kind.n + 3);
      std::vector<std::vector<std::string>> edges;
      for (int i = 0; i + 1 <= kind.n + 1; ++i) {
        edges.push_back({labels[i], labels[i + 1]});
      }
      const auto all_but = [&](std::initializer_list<int> skip) {
        std::vector<std::string> edge;
        for (int i = 0; i < kind.n + 3; ++i) {
          if (std::find(skip.begin(), skip.end(), i + 1) == skip.end()) edge.push_back(labels[i]);
        }
        return edge;
      };
      if (kind.family == PatternFamily::M) {
        edges.push_back(all_but({1, kind.n + 2}));
      } else {
        edges.push_back(all_but({1}));
        edges.push_back(all_but({kind.n + 2}));
      }
      return Hypergraph::make(std::move(labels), edges);
    }
    case PatternFamily::O1:
      return Hypergraph::make({"x", "x'", "y", "y'", "z", "z'"},
                              {{"x", "x'"}, {"y", "y'"}, {"z", "z'"}, {"x", "y", "z"}});
    case PatternFamily::O2:
      return Hypergraph::make({"x", "y", "z", "w", "v"},
                              {{"x", "y"}, {"z", "w"}, {"x", "y", "z", "w"}, {"y", "z", "v"}});
  }
  fail(ErrorKind::BadParameter, "unknown pattern family");
}

Staircase generate_staircase(int n) {
  if (n < 1) fail(ErrorKind::BadParameter, "staircase requires n >= 1");
  Staircase s;
  for (int i = 0; i <= n + 1; ++i) {
    s.a.push_back({"a" + std::to_string(i), Rational(i), Rational(n - i + 1)});
  }
  for (int i = 0; i <= n; ++i) {
    s.b.push_back({"b" + std::to_string(i), Rational(3 * i - 1, 3), Rational(3 * (n - i) - 1, 3)});
  }
  return s;
}

std::vector<Point2> gadget_dpo(PatternFamily kind, int n) {
  if (kind != PatternFamily::M && kind != PatternFamily::F) {
    fail(ErrorKind::BadParameter, "gadget kinds are M and F");
  }
  if (n < 1) fail(ErrorKind::BadParameter, "gadget requires n >= 1");

  auto staircase = generate_staircase(n);
  std::vector<Point2> points = std::move(staircase.a);
  points.insert(points.end(), staircase.b.begin(), staircase.b.end());

  std::vector<Point2> extra;
  if (kind == PatternFamily::M) {
    if (n == 1) {
      extra = {{"c0", Rational(0), Rational(0)}, {"c1", Rational(2, 3), Rational(2, 3)}};
    } else {
      extra = {{"c0", Rational(0), Rational(0)}};
    }
  } else {
    if (n == 1) {
      extra = {{"c0", Rational(2, 3), Rational(2, 3)},
               {"c1", Rational(-1), Rational(0)},
               {"c2", Rational(0), Rational(-1)}};
    } else {
      extra = {{"c0", Rational(0), Rational(-1)}, {"c1", Rational(-1), Rational(0)}};
    }
  }
  points.insert(points.end(), extra.begin(), extra.end());
  return points;
}

std::vector<Point2> embed_interval_hypergraph(const Hypergraph& h,
                                              const std::vector<std::string>& ordering) {
  if (h.edge_count() == 0) {
    fail(ErrorKind::BadParameter, "embedding requires at least one hyperedge");
  }
  if (!ordering_makes_consecutive(h, ordering)) {
    fail(ErrorKind::NotContiguous, "ordering does not make every hyperedge contiguous");
  }

  const int n = static_cast<int>(ordering.size());
  std::unordered_map<std::string, int> position;  // 1-based
  for (int i = 0; i < n; ++i) position.emplace(ordering[i], i + 1);

  std::vector<Point2> points;
  for (int i = 1; i <= n; ++i) {
    points.push_back({ordering[i - 1], Rational(i), Rational(n + 1 - i)});
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto& edge = h.edges()[e];
    int lo = n + 1, hi = 0;
    for (const auto& m : edge) {
      lo = std::min(lo, position.at(m));
      hi = std::max(hi, position.at(m));
    }
    std::string id = "e" + std::to_string(e);
    while (h.has_vertex(id)) id = "_" + id;
    points.push_back({std::move(id), Rational(lo - 1), Rational(n - hi)});
  }
  return points;
}

namespace {

// Candidate patterns for a trace of `size` vertices, in family order.
std::vector<PatternKind> candidates_for_size(const std::set<PatternFamily>& families,
                                             std::size_t size) {
  std::vector<PatternKind> kinds;
  if (families.count(PatternFamily::C) && size >= 3) {
    kinds.push_back({PatternFamily::C, static_cast<int>(size)});
  }
  if (families.count(PatternFamily::M) && size >= 4) {
    kinds.push_back({PatternFamily::M, static_cast<int>(size) - 3});
  }
  if (families.count(PatternFamily::F) && size >= 4) {
    kinds.push_back({PatternFamily::F, static_cast<int>(size) - 3});
  }
  if (families.count(PatternFamily::O1) && size == 6) kinds.push_back({PatternFamily::O1, 0});
  if (families.count(PatternFamily::O2) && size == 5) kinds.push_back({PatternFamily::O2, 0});
  return kinds;
}

std::pair<std::size_t, std::vector<std::size_t>> edge_signature(const Hypergraph& h) {
  std::vector<std::size_t> sizes;
  sizes.reserve(h.edge_count());
  for (const auto& e : h.edges()) sizes.push_back(e.size());
  std::sort(sizes.begin(), sizes.end());
  return {h.edge_count(), sizes};
}

// Enumerates size-k subsets of the sorted host labels in lexicographic
// order and reports the first trace isomorphic to one of the candidates.
std::optional<PatternWitness> scan_subsets(const Hypergraph& h,
                                           const std::vector<std::string>& sorted_labels,
                                           std::size_t k,
                                           const std::vector<PatternKind>& kinds) {
  struct Candidate {
    PatternKind kind;
    Hypergraph pattern;
    std::pair<std::size_t, std::vector<std::size_t>> signature;
  };
  std::vector<Candidate> candidates;
  for (const auto& kind : kinds) {
    auto pattern = generate_pattern(kind);
    auto sig = edge_signature(pattern);
    candidates.push_back({kind, std::move(pattern), std::move(sig)});
  }

  const std::size_t n = sorted_labels.size();
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;

  while (true) {
    std::vector<std::string> subset;
    subset.reserve(k);
    for (const auto i : pick) subset.push_back(sorted_labels[i]);

    const auto trace = trace_subhypergraph(h, subset);
    const auto sig = edge_signature(trace);
    for (const auto& c : candidates) {
      if (sig != c.signature) continue;
      if (auto map = isomorphism(c.pattern, trace)) {
        return PatternWitness{c.kind, subset, std::move(*map)};
      }
    }

    // next combination
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace

std::optional<PatternWitness> find_forbidden_witness(const Hypergraph& h,
                                                     const std::set<PatternFamily>& families,
                                                     std::size_t max_subset,
                                                     std::size_t max_vertices) {
  const std::size_t n = h.vertex_count();
  if (n > max_vertices) {
    fail(ErrorKind::TooLarge, "witness search limited to " + std::to_string(max_vertices) +
                                  " vertices, got " + std::to_string(n));
  }
  std::vector<std::string> sorted_labels(h.vertices());
  std::sort(sorted_labels.begin(), sorted_labels.end());

  const std::size_t top = std::min(max_subset, n);
  for (std::size_t k = 3; k <= top; ++k) {
    const auto kinds = candidates_for_size(families, k);
    if (kinds.empty()) continue;
    if (auto witness = scan_subsets(h, sorted_labels, k, kinds)) return witness;
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_pattern_witness(const Hypergraph& h, const PatternKind& target,
                                                   std::size_t max_vertices) {
  const std::size_t n = h.vertex_count();
  if (n > max_vertices) {
    fail(ErrorKind::TooLarge, "witness search limited to " + std::to_string(max_vertices) +
                                  " vertices, got " + std::to_string(n));
  }
  const auto pattern = generate_pattern(target);
  if (pattern.vertex_count() > n) return std::nullopt;

  std::vector<std::string> sorted_labels(h.vertices());
  std::sort(sorted_labels.begin(), sorted_labels.end());
  return scan_subsets(h, sorted_labels, pattern.vertex_count(), {target});
}

namespace {

// The vertices covered by some edge, with all edges, as a hypergraph.
Hypergraph covered_core(const Hypergraph& h) {
  std::unordered_set<std::string> covered;
  for (const auto& e : h.edges()) covered.insert(e.begin(), e.end());
  std::vector<std::string> vertices;
  for (const auto& v : h.vertices()) {
    if (covered.count(v)) vertices.push_back(v);
  }
  return Hypergraph::make(std::move(vertices), h.edges());
}

}  // namespace

RealizationReport check_realization(const std::vector<Point2>& points, const Hypergraph& h) {
  const auto dpo = DoublyPartialOrder::build(points);
  const auto ch = competition_hypergraph(dpo).hypergraph;

  RealizationReport report;
  report.points = points;

  if (h.vertex_count() > points.size()) return report;
  if (edge_signature(ch) != edge_signature(h)) return report;

  const auto core_h = covered_core(h);
  const auto core_ch = covered_core(ch);
  if (core_h.vertex_count() != core_ch.vertex_count()) return report;

  const auto iso = isomorphism(core_h, core_ch);
  if (!iso) return report;

  // Isolated hypergraph vertices go to isolated points, in sorted order.
  const std::size_t spare_needed = h.vertex_count() - core_h.vertex_count();
  auto spare_points = isolated_vertices(ch);
  std::sort(spare_points.begin(), spare_points.end());
  if (spare_needed > spare_points.size()) return report;

  report.realized = true;
  report.embedding = *iso;
  auto spare_vertices = isolated_vertices(h);
  std::sort(spare_vertices.begin(), spare_vertices.end());
  for (std::size_t i = 0; i < spare_needed; ++i) {
    report.embedding.emplace(spare_vertices[i], spare_points[i]);
  }

  std::unordered_set<std::string> image;
  for (const auto& [_, id] : report.embedding) image.insert(id);
  for (const auto& p : points) {
    if (!image.count(p.id)) report.isolated.push_back(p.id);
  }
  std::sort(report.isolated.begin(), report.isolated.end());
  return report;
}

namespace {

std::optional<RealizationReport> realization_trial(const Hypergraph& h, int grid, int extra,
                                                   std::uint64_t trial_seed) {
  const int side = grid + 1;
  const auto total = static_cast<std::uint32_t>(h.vertex_count()) + static_cast<std::uint32_t>(extra);
  Rng rng(trial_seed);
  const auto cells = rng.sample_distinct(static_cast<std::uint32_t>(side * side), total);
  std::vector<Point2> points;
  points.reserve(total);
  for (std::uint32_t i = 0; i < total; ++i) {
    points.push_back({"p" + std::to_string(i), Rational(cells[i] % side), Rational(cells[i] / side)});
  }
  auto report = check_realization(points, h);
  if (!report.realized) return std::nullopt;
  return report;
}

}  // namespace

RealizationReport search_realization(const Hypergraph& h, const RealizationSearchParams& params) {
  if (params.grid < 1) fail(ErrorKind::BadParameter, "grid must be >= 1");
  if (params.extra < 0) fail(ErrorKind::BadParameter, "extra must be >= 0");
  if (params.budget < 0) fail(ErrorKind::BadParameter, "budget must be >= 0");

  const std::uint64_t cells = static_cast<std::uint64_t>(params.grid + 1) * (params.grid + 1);
  if (cells > (std::uint64_t{1} << 20)) {
    fail(ErrorKind::TooLarge, "grid " + std::to_string(params.grid) + " is too large to sample");
  }
  if (h.vertex_count() + static_cast<std::uint64_t>(params.extra) > cells) {
    return RealizationReport{};  // more points than grid cells; no placement exists
  }

  const int threads = std::max(1, params.threads);
  if (threads == 1) {
    for (long long trial = 0; trial < params.budget; ++trial) {
      if (auto report = realization_trial(h, params.grid, params.extra,
                                          derive_seed(params.seed, static_cast<std::uint64_t>(trial)))) {
        return *report;
      }
    }
    return RealizationReport{};
  }

  // Workers walk interleaved trial indices; the lowest successful index wins
  // so the outcome matches the sequential order.
  std::atomic<long long> best_trial{params.budget};
  std::mutex mutex;
  RealizationReport best;
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w]() {
      for (long long trial = w; trial < params.budget; trial += threads) {
        if (trial >= best_trial.load(std::memory_order_acquire)) break;
        auto report = realization_trial(h, params.grid, params.extra,
                                        derive_seed(params.seed, static_cast<std::uint64_t>(trial)));
        if (!report) continue;
        std::lock_guard<std::mutex> lock(mutex);
        if (trial < best_trial.load(std::memory_order_acquire)) {
          best_trial.store(trial, std::memory_order_release);
          best = std::move(*report);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  return best;
}

Hypergraph counterexample_hypergraph() {
  return Hypergraph::make({"v1", "v2", "v3", "v4", "v5", "v6"},
                          {{"v1", "v2"},
                           {"v2", "v3"},
                           {"v3", "v4"},
                           {"v4", "v5"},
                           {"v5", "v6"},
                           {"v2", "v3", "v4", "v5"}});
}

}  // namespace dpo
