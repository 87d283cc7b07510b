#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace reconf {

using Vertex = int;
using Count = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Distance value used for vertex pairs in different components.
inline constexpr Count kUnreachable = std::numeric_limits<Count>::max();

/**
   Simple undirected graph on vertices 0..n-1.

   Adjacency lists are sorted, symmetric, free of self-loops and duplicates.
   Immutable after construction.
 */
class Graph {
 public:
  Graph() = default;

  /**
     Build from an edge list. Duplicate edges (in either orientation) collapse.
     Throws InputError on out-of-range endpoints or self-loops.

     Time complexity: O(n + m log m)
   */
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }

  /// O(log deg(u)).
  bool adjacent(Vertex u, Vertex v) const;

  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < size(); }

  /// Each edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// BFS distances from `source`; kUnreachable for other components.
std::vector<Count> distances_from(const Graph& g, Vertex source);

/**
   Neighbors of u lying on some shortest u-v path, in increasing id order.
   Empty when u == v. Throws DomainError when v is unreachable from u.
 */
std::vector<Vertex> succ_set(const Graph& g, Vertex u, Vertex v);

/// All-pairs BFS distances, for the solvers that query succ sets repeatedly.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);

  Count operator()(Vertex u, Vertex v) const {
    return table_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }

  /// Same contract as succ_set.
  std::vector<Vertex> successors(Vertex u, Vertex v) const;

  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_;
  std::size_t n_;
  std::vector<Count> table_;
};

/**
   A tree rooted at `root`, with parent/depth tables and a reverse-topological
   vertex order (decreasing depth, ties by increasing id).
 */
class RootedTree {
 public:
  /// Throws InputError unless `base` is connected with exactly n-1 edges.
  explicit RootedTree(Graph base, Vertex root = 0);

  const Graph& graph() const { return base_; }
  std::size_t size() const { return base_.size(); }
  Vertex root() const { return root_; }

  /// The root is its own parent.
  Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
  Count depth(Vertex v) const { return depth_[static_cast<std::size_t>(v)]; }

  /// Every vertex appears before its parent.
  std::span<const Vertex> order() const { return order_; }

 private:
  Graph base_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<Count> depth_;
  std::vector<Vertex> order_;
};

}  // namespace reconf
