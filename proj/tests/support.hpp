#pragma once

// Shared builders and independent reference implementations for the tests.

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "reconf/feasibility.hpp"
#include "reconf/generate.hpp"
#include "reconf/graph.hpp"
#include "reconf/interval.hpp"
#include "reconf/moves.hpp"
#include "reconf/multiset.hpp"
#include "reconf/oracle.hpp"

namespace testing {

using namespace reconf;

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  }
  return Graph(n, edges);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.emplace_back(0, static_cast<Vertex>(v));
  return Graph(leaves + 1, edges);
}

inline Graph triangle() { return cycle_graph(3); }

/// Intervals whose intersection graph is P4.
inline IntervalRepresentation p4_intervals() {
  return IntervalRepresentation({{1, 4}, {3, 6}, {5, 8}, {7, 10}});
}

inline TokenMultiset tokens(std::size_t n, std::initializer_list<Vertex> vs) {
  return TokenMultiset::from_vertices(n, vs);
}

/// Connected random graph: random spanning tree plus extra edges.
inline Graph random_connected_graph(std::size_t n, double extra, Rng& rng) {
  std::vector<Edge> edges = random_tree_edges(n, rng);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (static_cast<double>(rng.below(1000)) < extra * 1000) {
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return Graph(n, edges);
}

inline TokenMultiset random_multiset(std::size_t n, std::size_t k, Rng& rng) {
  TokenMultiset d(n);
  for (std::size_t i = 0; i < k; ++i) d.add(static_cast<Vertex>(rng.below(n)));
  return d;
}

/// Two feasible endpoints of a common random size <= k_max: random minimal
/// feasible sets (a few attempts each), padded with tokens on empty vertices.
inline std::optional<std::pair<TokenMultiset, TokenMultiset>> random_endpoints(
    std::size_t n, const FeasibilityPredicate& pred, std::size_t k_max, Rng& rng) {
  auto draw = [&]() -> std::optional<TokenMultiset> {
    for (int attempt = 0; attempt < 8; ++attempt) {
      auto d = random_minimal_feasible_set(n, pred, rng);
      if (static_cast<std::size_t>(d.total()) <= k_max) return d;
    }
    return std::nullopt;
  };
  auto a = draw();
  auto b = draw();
  if (!a || !b) return std::nullopt;
  const auto lo = static_cast<std::size_t>(std::max(a->total(), b->total()));
  const std::size_t hi = std::min(k_max, n);
  if (lo > hi) return std::nullopt;
  const std::size_t k = lo + rng.below(hi - lo + 1);
  return std::make_pair(pad_to(std::move(*a), k, rng), pad_to(std::move(*b), k, rng));
}

/// All-pairs distances by Floyd–Warshall on the adjacency matrix.
inline std::vector<std::vector<Count>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.size();
  constexpr Count inf = std::numeric_limits<Count>::max() / 4;
  std::vector<std::vector<Count>> d(n, std::vector<Count>(n, inf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) d[u][static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = kUnreachable;
  return d;
}

/// Dominating check straight from the definition, over the support.
inline bool dominates_by_definition(const Graph& g, const TokenMultiset& d) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool ok = d.contains(static_cast<Vertex>(v));
    for (std::size_t u = 0; u < g.size() && !ok; ++u) {
      ok = d.contains(static_cast<Vertex>(u)) && g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!ok) return false;
  }
  return true;
}

/// Replays unit moves, returning the configuration after each one.
inline std::vector<TokenMultiset> replay(const TokenMultiset& start, const MoveSequence& seq) {
  std::vector<TokenMultiset> states{start};
  for (auto [u, v] : expand_moves(seq)) states.push_back(slide(states.back(), u, v));
  return states;
}

}  // namespace testing
