#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "reconf/graph.hpp"
#include "reconf/instance.hpp"
#include "reconf/interval.hpp"
#include "reconf/multiset.hpp"
#include "reconf/oracle.hpp"

namespace reconf {

/**
   Seeded generator with platform-independent output: std::mt19937_64
   (fully specified by the standard) plus our own bounded sampling by
   rejection, since the std distributions are implementation-defined.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Random recursive tree with shuffled labels; n - 1 edges.
std::vector<Edge> random_tree_edges(std::size_t n, Rng& rng);

/**
   n intervals with distinct endpoints 1..2n and shuffled vertex labels.
   When `connected`, each interval (in order of left endpoint) starts inside
   the union of the earlier ones, so the intersection graph is connected.
 */
std::vector<Interval> random_intervals(std::size_t n, Rng& rng, bool connected = true);

/// Randomly grown connected vertex sets of a tree.
std::vector<std::vector<Vertex>> random_subtree_family(const Graph& tree, std::size_t count,
                                                       Rng& rng);

/// Highest-gain greedy dominating set (ties by smallest id).
TokenMultiset greedy_dominating_set(const Graph& g);

/**
   Starts from all vertices and drops them in random order while `pred`
   still holds, stopping at k. nullopt when the removal gets stuck above k.
 */
std::optional<TokenMultiset> random_feasible_set(std::size_t n, const FeasibilityPredicate& pred,
                                                 std::size_t k, Rng& rng);

/// Drops vertices in random order while `pred` holds, down to a minimal set.
TokenMultiset random_minimal_feasible_set(std::size_t n, const FeasibilityPredicate& pred,
                                          Rng& rng);

/// Adds tokens on random empty vertices until |d| = k (no-op if already there).
TokenMultiset pad_to(TokenMultiset d, std::size_t k, Rng& rng);

/**
   Path 0-1-...-(n-1) where the source fills the left half and thins out to
   every third vertex on the right, and the target is its mirror image. About
   n/3 tokens must cross the middle, so c* grows quadratically in n.
 */
Instance path_transfer_instance(std::size_t n);

/// Up to `steps` random feasible slides that never stack two tokens.
TokenMultiset random_feasible_walk(const Graph& g, const FeasibilityPredicate& pred,
                                   TokenMultiset start, std::size_t steps, Rng& rng);

/**
   Deterministic instance for the CLI `gen` command: a random structure and
   two endpoints, each a random minimal dominating set (or the greedy one if
   that is too large) padded to k tokens and shuffled by a random walk of
   feasible slides. Retries fresh structures when greedy needs more than k
   tokens; throws InputError after the retry cap or k > n.
 */
Instance generate_instance(StructureKind kind, std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace reconf
