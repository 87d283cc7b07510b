#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

using Coord = std::int64_t;

struct Interval {
  Coord left = 0;
  Coord right = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/**
   Closed intervals, one per vertex, with integral and pairwise distinct
   endpoints (so left < right for every interval).
 */
class IntervalRepresentation {
 public:
  IntervalRepresentation() = default;
  /// Throws InputError unless every left < right and all 2n endpoints differ.
  explicit IntervalRepresentation(std::vector<Interval> intervals);

  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](Vertex v) const { return intervals_[static_cast<std::size_t>(v)]; }
  Coord left(Vertex v) const { return (*this)[v].left; }
  Coord right(Vertex v) const { return (*this)[v].right; }
  std::span<const Interval> intervals() const { return intervals_; }

  bool intersect(Vertex u, Vertex v) const {
    return left(u) <= right(v) && left(v) <= right(u);
  }

  friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// How interval u sits relative to interval v.
enum class Relation {
  LeftOf,           // r(u) < l(v)
  RightOf,          // r(v) < l(u)
  NestedIn,         // l(v) < l(u), r(u) < r(v)
  Contains,         // l(u) < l(v), r(v) < r(u)
  LeftIntersects,   // l(u) < l(v) < r(u) < r(v)
  RightIntersects,  // l(v) < l(u) < r(v) < r(u)
};

std::string_view to_string(Relation r);
Relation mirror(Relation r);

/**
   Rank-compress raw closed intervals (l <= r allowed to touch or be points)
   to endpoints 1..2n. At equal raw coordinates left endpoints come first, so
   touching intervals keep intersecting; ties within a kind go by vertex id.
   Throws InputError if some l > r.
 */
IntervalRepresentation normalize_representation(std::span<const Interval> raw);

/// Throws InputError when u == v.
Relation classify_relation(const IntervalRepresentation& rep, Vertex u, Vertex v);

/// Sweep over sorted endpoints. O(n log n + m).
Graph intersection_graph(const IntervalRepresentation& rep);

/**
   Checks that along `path` every v_{i+1} right-intersects v_i and v_{i+2} is
   disjoint from v_i. Requires a shortest path in the intersection graph with
   r(first) < r(last); throws InputError otherwise.
 */
bool check_shortest_path_structure(const IntervalRepresentation& rep,
                                   std::span<const Vertex> path);

}  // namespace reconf
