#pragma once

#include <vector>

#include "reconf/graph.hpp"
#include "reconf/multiset.hpp"

namespace reconf {

/**
   A family of non-empty vertex sets. Sets are stored sorted and deduplicated.

   `on_tree` additionally checks that every set induces a connected subtree.
 */
class SetSystem {
 public:
  SetSystem() = default;
  /// Throws InputError on an empty set or a negative vertex id.
  explicit SetSystem(std::vector<std::vector<Vertex>> sets);

  /// Throws InputError if some set leaves the tree or induces a disconnected subgraph.
  static SetSystem on_tree(const RootedTree& tree, std::vector<std::vector<Vertex>> sets);

  std::size_t size() const { return sets_.size(); }
  const std::vector<std::vector<Vertex>>& sets() const { return sets_; }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::vector<std::vector<Vertex>> sets_;
};

/// Throws InputError naming the first offending set. O(sum |S|).
void validate_subtrees(const RootedTree& tree, const SetSystem& system);

bool is_dominating(const Graph& g, const TokenMultiset& d);
bool is_hitting(const SetSystem& system, const TokenMultiset& h);

/// Support is an independent set and no vertex holds two tokens.
bool is_independent(const Graph& g, const TokenMultiset& d);

/// One closed neighborhood N[v] per vertex, in vertex order.
SetSystem closed_neighborhood_system(const RootedTree& tree);
SetSystem closed_neighborhood_system(const Graph& g);

}  // namespace reconf
