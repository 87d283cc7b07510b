#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "reconf/graph.hpp"
#include "reconf/interval.hpp"
#include "reconf/matching.hpp"
#include "reconf/moves.hpp"
#include "reconf/multiset.hpp"

namespace reconf {

/// A slide of one token one step toward its match that keeps domination.
struct GreedyMove {
  enum class Side { Source, Target };
  Side side = Side::Source;
  Vertex from = 0;     // vertex losing the token
  Vertex to = 0;       // vertex gaining it
  Vertex partner = 0;  // the match of `from` (on the other side)

  friend bool operator==(const GreedyMove&, const GreedyMove&) = default;
};

/**
   First greedy move under m, scanning pairs (u, v) in increasing order and
   successors in increasing id: source-side slides u -> u' in succ(u, v)
   first, then target-side slides v -> v' in succ(v, u).
   Both d_s and d_t must be dominating in g.
 */
std::optional<GreedyMove> find_greedy_move(const Graph& g, const TokenMultiset& d_s,
                                           const TokenMultiset& d_t, const Matching& m);

/**
   Matching repair used when no greedy move exists.

   Takes v in d_s △ d_t with the smallest right endpoint (working on the
   transposed instance when v carries a surplus d_t token) and searches
   y in d_t \ d_s adjacent to v by increasing right endpoint, then v' in M(v)
   and y' in M^{-1}(y), for the first combination where slide(d_s, v, y) is
   dominating and
     M' = (M \ {(v, v'), (y', y)}) ∪ {(v, y), (y', v')}
   costs no more than m. M' then admits the greedy move v -> y.

   Requires d_s != d_t, m a minimum-cost matching with every shared token
   matched to itself, and no greedy move under m (ContractError otherwise).
   Throws InternalError if the search finds nothing.
 */
Matching fix_matching(const IntervalRepresentation& rep, const Graph& g, const TokenMultiset& d_s,
                      const TokenMultiset& d_t, const Matching& m);

enum class ReconfStatus { Solved, Unreachable };

/// Passed to IntervalReconfOptions::on_repair for every fix_matching call.
struct RepairEvent {
  const TokenMultiset& d_s;
  const TokenMultiset& d_t;
  const Matching& before;
  const Matching& after;
};

struct IntervalReconfOptions {
  std::function<void(const RepairEvent&)> on_repair;
};

struct IntervalReconfResult {
  ReconfStatus status = ReconfStatus::Solved;
  MoveSequence moves;
  /// c*(d_s, d_t); infinite exactly when status is Unreachable.
  MatchCost initial_cost;
  std::size_t repairs = 0;
};

/**
   Shortest token-sliding sequence between two dominating multisets of an
   interval graph.

   Keeps a minimum-cost matching M between the current configurations and
   repeatedly slides one token one step toward its match (from either end,
   target-side moves emitted reversed at the back), repairing M when no such
   move keeps domination. Every move lowers c* by one, so the output length
   equals c*(d_s, d_t).

   Throws SizeError on |d_s| != |d_t| and FeasibilityError if an endpoint is
   not dominating. Returns status Unreachable when tokens would have to
   change components.
 */
IntervalReconfResult reconf_interval(const IntervalRepresentation& rep, const TokenMultiset& d_s,
                                     const TokenMultiset& d_t,
                                     const IntervalReconfOptions& options = {});

}  // namespace reconf
