#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reconf/feasibility.hpp"
#include "reconf/graph.hpp"
#include "reconf/moves.hpp"
#include "reconf/multiset.hpp"

namespace reconf {

/// Which configurations count as feasible. Holds references; the graph or
/// set system must outlive the predicate.
class FeasibilityPredicate {
 public:
  enum class Kind { Dominating, Hitting, IndependentSet };

  static FeasibilityPredicate dominating(const Graph& g) { return {Kind::Dominating, &g, nullptr}; }
  static FeasibilityPredicate hitting(const SetSystem& s) { return {Kind::Hitting, nullptr, &s}; }
  static FeasibilityPredicate independent_set(const Graph& g) {
    return {Kind::IndependentSet, &g, nullptr};
  }

  Kind kind() const { return kind_; }
  bool operator()(const TokenMultiset& d) const;

 private:
  FeasibilityPredicate(Kind kind, const Graph* g, const SetSystem* s)
      : kind_(kind), graph_(g), system_(s) {}

  Kind kind_;
  const Graph* graph_;
  const SetSystem* system_;
};

/// Canonical visited-set key: sorted (vertex, multiplicity) pairs.
struct ConfigurationKey {
  std::vector<std::pair<Vertex, Count>> entries;

  static ConfigurationKey of(const TokenMultiset& d);
  TokenMultiset to_multiset(std::size_t universe) const;

  friend bool operator==(const ConfigurationKey&, const ConfigurationKey&) = default;
  friend auto operator<=>(const ConfigurationKey&, const ConfigurationKey&) = default;
};

struct ConfigurationKeyHash {
  std::size_t operator()(const ConfigurationKey& key) const;
};

inline constexpr std::size_t kDefaultStateCap = 2'000'000;

struct BfsResult {
  enum class Status { Reached, Unreachable, CapExceeded };
  Status status = Status::Unreachable;
  Count distance = 0;       // meaningful when Reached
  std::size_t visited = 0;  // configurations discovered
};

/**
   Exact distance in the reconfiguration graph by breadth-first search over
   multiset configurations; neighbors are all single slides along edges that
   satisfy `pred`. Throws SizeError / FeasibilityError on bad endpoints.
 */
BfsResult reconfig_distance_bfs(const Graph& g, const FeasibilityPredicate& pred,
                                const TokenMultiset& start, const TokenMultiset& goal,
                                std::size_t cap = kDefaultStateCap);

struct VerifyResult {
  bool ok = false;
  TokenMultiset final_state;          // after the last valid unit move
  std::optional<std::string> failure;
};

/// Replays the expanded moves, checking each slide and each configuration.
VerifyResult verify_sequence(const Graph& g, const FeasibilityPredicate& pred,
                             const TokenMultiset& start, const MoveSequence& seq);

/// Thrown by certify_optimality when the search budget runs out.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
   True iff seq is a valid sequence from start ending at goal whose length
   equals both the BFS distance and the minimum matching cost.
 */
bool certify_optimality(const Graph& g, const FeasibilityPredicate& pred,
                        const TokenMultiset& start, const TokenMultiset& goal,
                        const MoveSequence& seq, std::size_t cap = kDefaultStateCap);

/// DOT rendering of the component of `start` in the reconfiguration graph.
/// Throws CapExceededError past `cap` configurations.
std::string reconfiguration_graph_dot(const Graph& g, const FeasibilityPredicate& pred,
                                      const TokenMultiset& start, std::size_t cap = 5000);

}  // namespace reconf
