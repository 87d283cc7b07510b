#include "reconf/interval.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "reconf/errors.hpp"

namespace reconf {

IntervalRepresentation::IntervalRepresentation(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  std::vector<Coord> endpoints;
  endpoints.reserve(2 * intervals_.size());
  for (std::size_t v = 0; v < intervals_.size(); ++v) {
    const auto& iv = intervals_[v];
    if (iv.left >= iv.right) {
      throw InputError("interval of vertex " + std::to_string(v) + " is [" +
                       std::to_string(iv.left) + ", " + std::to_string(iv.right) +
                       "]; need left < right");
    }
    endpoints.push_back(iv.left);
    endpoints.push_back(iv.right);
  }
  std::sort(endpoints.begin(), endpoints.end());
  if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end()) {
    throw InputError("interval endpoints are not pairwise distinct");
  }
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::LeftOf: return "left-of";
    case Relation::RightOf: return "right-of";
    case Relation::NestedIn: return "nested-in";
    case Relation::Contains: return "contains";
    case Relation::LeftIntersects: return "left-intersects";
    case Relation::RightIntersects: return "right-intersects";
  }
  return "?";
}

Relation mirror(Relation r) {
  switch (r) {
    case Relation::LeftOf: return Relation::RightOf;
    case Relation::RightOf: return Relation::LeftOf;
    case Relation::NestedIn: return Relation::Contains;
    case Relation::Contains: return Relation::NestedIn;
    case Relation::LeftIntersects: return Relation::RightIntersects;
    case Relation::RightIntersects: return Relation::LeftIntersects;
  }
  return r;
}

IntervalRepresentation normalize_representation(std::span<const Interval> raw) {
  struct Endpoint {
    Coord coord;
    int kind;  // 0 = left, 1 = right
    Vertex v;
  };
  std::vector<Endpoint> events;
  events.reserve(2 * raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    if (raw[v].left > raw[v].right) {
      throw InputError("interval of vertex " + std::to_string(v) + " has left > right");
    }
    events.push_back({raw[v].left, 0, static_cast<Vertex>(v)});
    events.push_back({raw[v].right, 1, static_cast<Vertex>(v)});
  }
  std::sort(events.begin(), events.end(), [](const Endpoint& a, const Endpoint& b) {
    return std::tie(a.coord, a.kind, a.v) < std::tie(b.coord, b.kind, b.v);
  });
  std::vector<Interval> ranked(raw.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    auto& iv = ranked[static_cast<std::size_t>(events[i].v)];
    (events[i].kind == 0 ? iv.left : iv.right) = static_cast<Coord>(i + 1);
  }
  IntervalRepresentation rep(std::move(ranked));

  // The raw closed intervals must induce the same graph: every ranked edge is
  // a raw edge, and the raw edge count (pairs minus disjoint pairs) matches.
  const Graph ranked_graph = intersection_graph(rep);
  for (const auto& [u, v] : ranked_graph.edges()) {
    const auto& a = raw[static_cast<std::size_t>(u)];
    const auto& b = raw[static_cast<std::size_t>(v)];
    if (!(a.left <= b.right && b.left <= a.right)) {
      throw InternalError("normalize_representation added an intersection");
    }
  }
  std::vector<Coord> rights;
  rights.reserve(raw.size());
  for (const auto& iv : raw) rights.push_back(iv.right);
  std::sort(rights.begin(), rights.end());
  std::size_t disjoint = 0;
  for (const auto& iv : raw) {
    disjoint += static_cast<std::size_t>(std::lower_bound(rights.begin(), rights.end(), iv.left) -
                                         rights.begin());
  }
  const std::size_t n = raw.size();
  if ((n == 0 ? 0 : n * (n - 1) / 2) - disjoint != ranked_graph.edge_count()) {
    throw InternalError("normalize_representation lost an intersection");
  }
  return rep;
}

Relation classify_relation(const IntervalRepresentation& rep, Vertex u, Vertex v) {
  if (u == v) throw InputError("classify_relation needs two distinct vertices");
  const Interval& a = rep[u];
  const Interval& b = rep[v];
  if (a.right < b.left) return Relation::LeftOf;
  if (b.right < a.left) return Relation::RightOf;
  if (b.left < a.left && a.right < b.right) return Relation::NestedIn;
  if (a.left < b.left && b.right < a.right) return Relation::Contains;
  if (a.left < b.left) return Relation::LeftIntersects;
  return Relation::RightIntersects;
}

Graph intersection_graph(const IntervalRepresentation& rep) {
  const std::size_t n = rep.size();
  std::vector<Vertex> by_left(n);
  std::iota(by_left.begin(), by_left.end(), 0);
  std::sort(by_left.begin(), by_left.end(),
            [&](Vertex a, Vertex b) { return rep.left(a) < rep.left(b); });

  // Active intervals kept in a vector; expired ones are dropped lazily.
  std::vector<Edge> edges;
  std::vector<Vertex> active;
  for (Vertex v : by_left) {
    const Coord l = rep.left(v);
    std::erase_if(active, [&](Vertex a) { return rep.right(a) < l; });
    for (Vertex a : active) edges.emplace_back(std::min(a, v), std::max(a, v));
    active.push_back(v);
  }
  return Graph(n, edges);
}

bool check_shortest_path_structure(const IntervalRepresentation& rep,
                                   std::span<const Vertex> path) {
  const std::size_t k = path.size();
  if (k < 2) throw InputError("shortest path check needs at least two vertices");
  for (Vertex v : path) {
    if (v < 0 || static_cast<std::size_t>(v) >= rep.size()) {
      throw InputError("path vertex " + std::to_string(v) + " out of range");
    }
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!rep.intersect(path[i], path[i + 1]) || path[i] == path[i + 1]) {
      throw InputError("consecutive path vertices are not adjacent");
    }
  }
  const auto dist = distances_from(intersection_graph(rep), path.front());
  if (dist[static_cast<std::size_t>(path.back())] != static_cast<Count>(k - 1)) {
    throw InputError("path is not a shortest path");
  }
  if (!(rep.right(path.front()) < rep.right(path.back()))) {
    throw InputError("path must run from smaller to larger right endpoint");
  }
  for (std::size_t i = 0; i + 2 < k; ++i) {
    if (classify_relation(rep, path[i + 1], path[i]) != Relation::RightIntersects) return false;
    if (rep.intersect(path[i], path[i + 2])) return false;
  }
  return true;
}

}  // namespace reconf
