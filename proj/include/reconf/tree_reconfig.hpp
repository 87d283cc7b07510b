#pragma once

#include "reconf/feasibility.hpp"
#include "reconf/graph.hpp"
#include "reconf/moves.hpp"
#include "reconf/multiset.hpp"

namespace reconf {

/**
   Shortest token-sliding sequence between two hitting multisets of a family
   of subtrees.

   Vertices are visited once in decreasing depth (ties by id). When the
   multiplicities at v still differ, every surplus token on the h_s side
   slides to p(v) as one compressed move; a surplus on the h_t side is handled
   by sliding h_t instead and emitting the reversed move at the back of the
   sequence. The result has total_length = c*(h_s, h_t) and at most n - 1
   compressed moves.

   Throws SizeError on |h_s| != |h_t|, FeasibilityError if either endpoint
   misses a set, InputError if a set is not a subtree.

   Time complexity: O(n + sum |S|)
 */
MoveSequence reconf_tree(const RootedTree& tree, const SetSystem& system, const TokenMultiset& h_s,
                         const TokenMultiset& h_t);

/// reconf_tree over the closed neighborhoods of the tree.
MoveSequence reconf_tree_dominating(const RootedTree& tree, const TokenMultiset& d_s,
                                    const TokenMultiset& d_t);

}  // namespace reconf
