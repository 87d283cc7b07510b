#pragma once

#include "reconf/interval.hpp"
#include "reconf/matching.hpp"
#include "reconf/multiset.hpp"

namespace reconf {

/**
   Greedy minimum-cost matching on an interval graph.

   Shared tokens (a ∩ b) are matched to themselves first. The rest is swept by
   increasing right endpoint: a token with an opposite token in its closed
   neighborhood is matched to the one with the smallest right endpoint,
   otherwise all tokens on the vertex slide to the neighbor reaching furthest
   right. The reported cost is the number of slides plus one per cross-edge
   match; tokens that cannot reach an opposite token make the cost infinite.

   Throws SizeError when |a| != |b|. Time complexity: O(n log n + |a|).
 */
MatchingResult fast_match_intervals(const IntervalRepresentation& rep, const TokenMultiset& a,
                                    const TokenMultiset& b);

}  // namespace reconf
