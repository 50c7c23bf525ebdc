#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dpo/competition.hpp"
#include "dpo/geometry.hpp"
#include "dpo/hypergraph.hpp"

namespace dpo {

enum class PatternFamily { C, M, F, O1, O2 };

/// One concrete forbidden hypergraph: C_n (n >= 3), M_n or F_n (n >= 1),
/// or the fixed O_1 / O_2. The parameter is ignored for O_1 and O_2.
struct PatternKind {
  PatternFamily family;
  int n = 0;

  friend bool operator==(const PatternKind&, const PatternKind&) = default;
};

/// CLI spelling: c3, c4, ..., m1, ..., f1, ..., o1, o2 (case-insensitive).
std::string pattern_name(const PatternKind& kind);
PatternKind parse_pattern_name(const std::string& name);

/// The pattern hypergraph on canonical labels: v1..v_{n+3} for M_n and F_n,
/// v1..vn for C_n, and the letter labels for O_1 and O_2.
Hypergraph generate_pattern(const PatternKind& kind);

/// The two staircase antichains: A has the n+2 points (i, n-i+1) labeled
/// a0..a{n+1}; B has the n+1 points (i-1/3, n-i-1/3) labeled b0..bn.
struct Staircase {
  std::vector<Point2> a;
  std::vector<Point2> b;
};
Staircase generate_staircase(int n);

/// Point set whose competition hypergraph contains M_n (kind M) or F_n
/// (kind F) as a trace subhypergraph: the staircase plus one or two extra
/// low points (c0, c1, ...), with special sets at n = 1.
std::vector<Point2> gadget_dpo(PatternFamily kind, int n);

/// Point set realizing an interval hypergraph inside a competition
/// hypergraph: a-points (i, n+1-i) labeled by the i-th ordered vertex, and
/// one b-point (min(e)-1, n-max(e)) per hyperedge. The ordering must make
/// every edge contiguous.
std::vector<Point2> embed_interval_hypergraph(const Hypergraph& h,
                                              const std::vector<std::string>& ordering);

struct PatternWitness {
  PatternKind pattern;
  std::vector<std::string> subset;  // sorted host labels
  VertexMap map;                    // pattern label -> host label
};

/// First vertex subset (by size, then lexicographically) whose trace is
/// isomorphic to a member of one of the requested families. Subset sizes run
/// up to max_subset; hosts beyond max_vertices are rejected.
std::optional<PatternWitness> find_forbidden_witness(const Hypergraph& h,
                                                     const std::set<PatternFamily>& families,
                                                     std::size_t max_subset,
                                                     std::size_t max_vertices = 14);

/// Same search restricted to one concrete pattern (so only subsets of its
/// exact size are visited).
std::optional<PatternWitness> find_pattern_witness(const Hypergraph& h, const PatternKind& target,
                                                   std::size_t max_vertices = 16);

struct RealizationReport {
  bool realized = false;
  std::vector<Point2> points;
  VertexMap embedding;                // hypergraph vertex -> point id
  std::vector<std::string> isolated;  // point ids outside the embedding image
};

/// Decides whether the competition hypergraph of `points` is exactly `h`
/// plus isolated vertices, under some injection of V(h) into the point ids.
RealizationReport check_realization(const std::vector<Point2>& points, const Hypergraph& h);

struct RealizationSearchParams {
  int grid = 8;                    // points are sampled from {0..grid}^2
  int extra = 2;                   // isolated-vertex budget
  long long budget = 100000;       // number of sampled placements
  std::uint64_t seed = 1;
  int threads = 1;
};

/// Seeded random search for a realizing placement of |V(h)| + extra
/// distinct grid points; first success in trial order wins, independent of
/// thread count.
RealizationReport search_realization(const Hypergraph& h, const RealizationSearchParams& params);

/// The 6-vertex interval hypergraph whose path edges plus one 4-vertex edge
/// admit no DPO realization even after adding isolated vertices.
Hypergraph counterexample_hypergraph();

}  // namespace dpo
