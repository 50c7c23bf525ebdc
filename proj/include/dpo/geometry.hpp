#pragma once

#include <string>

#include "dpo/error.hpp"
#include "dpo/rational.hpp"

namespace dpo {

/// A labeled point with exact rational coordinates. The label is the vertex
/// identity; the coordinates drive every order relation.
struct Point2 {
  std::string id;
  Rational x;
  Rational y;
};

inline bool same_coordinates(const Point2& p, const Point2& q) { return p.x == q.x && p.y == q.y; }

/// p ≺ q: strict dominance in both coordinates.
inline bool strictly_dominated(const Point2& p, const Point2& q) { return p.x < q.x && p.y < q.y; }

/// p ↘ q: p lies weakly left of and weakly above q, and the points differ.
inline bool down_right(const Point2& p, const Point2& q) {
  return !same_coordinates(p, q) && p.x <= q.x && p.y >= q.y;
}

enum class PairClass { PrecForward, PrecBackward, DownRightForward, DownRightBackward };

/// Exactly one class holds for every pair of distinct points: the two points
/// are dominance-comparable one way, or down-right related one way.
inline PairClass classify_pair(const Point2& p, const Point2& q) {
  if (same_coordinates(p, q)) {
    fail(ErrorKind::EqualPoints, "cannot classify a point against itself: (" + p.x.str() + ", " +
                                     p.y.str() + ")");
  }
  if (strictly_dominated(p, q)) return PairClass::PrecForward;
  if (strictly_dominated(q, p)) return PairClass::PrecBackward;
  if (down_right(p, q)) return PairClass::DownRightForward;
  return PairClass::DownRightBackward;
}

}  // namespace dpo
