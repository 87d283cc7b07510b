#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reconf/graph.hpp"
#include "reconf/multiset.hpp"

namespace reconf {

/**
   Multiset of ordered pairs (u, v): u carries a source token, v a target token.

   Pairs are kept in lexicographic (u, v) order; stored multiplicities are >= 1.
 */
class Matching {
 public:
  using PairMap = std::map<std::pair<Vertex, Vertex>, Count>;

  void add(Vertex u, Vertex v, Count c = 1);
  /// Throws ContractError if (u, v) has fewer than c copies.
  void remove(Vertex u, Vertex v, Count c = 1);

  Count count(Vertex u, Vertex v) const;
  /// M(u): (v, multiplicity) for every pair (u, v), v increasing.
  std::vector<std::pair<Vertex, Count>> matches_of(Vertex u) const;
  /// M^{-1}(v): (u, multiplicity) for every pair (u, v), u increasing. O(|M|).
  std::vector<std::pair<Vertex, Count>> matched_to(Vertex v) const;

  /// M^{-1}.
  Matching inverse() const;

  const PairMap& pairs() const { return pairs_; }
  Count total() const { return total_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  PairMap pairs_;
  Count total_ = 0;
};

/// Weighted distance sum, or infinite when some pair is unreachable.
struct MatchCost {
  Count value = 0;
  bool infinite = false;

  static MatchCost unreachable() { return {0, true}; }
  bool finite() const { return !infinite; }

  friend bool operator==(const MatchCost&, const MatchCost&) = default;
};

std::string to_string(const MatchCost& c);

struct MatchingResult {
  Matching matching;
  MatchCost cost;
};

/// Σ d(u, v) · M(u, v).
MatchCost matching_cost(const Matching& m, const Graph& g);
MatchCost matching_cost(const Matching& m, const DistanceTable& dist);

/// Row sums equal a, column sums equal b.
bool satisfies_matching_condition(const Matching& m, const TokenMultiset& a,
                                  const TokenMultiset& b);

/**
   Exact minimum-cost matching between a and b under graph distance.

   Tokens are expanded to unit rows/columns and solved with a shortest
   augmenting path assignment solver (O(k^3) for k tokens) on BFS distances.
   An infinite cost is returned, not thrown, when no finite matching exists.
   Throws SizeError when |a| != |b|.
 */
MatchingResult min_cost_matching(const Graph& g, const TokenMultiset& a, const TokenMultiset& b);
MatchingResult min_cost_matching(const DistanceTable& dist, const TokenMultiset& a,
                                 const TokenMultiset& b);

/**
   Rewrites a minimum-cost matching so that every v in a ∩ b is matched to
   itself (a ∩ b)(v) times, by repeated exchange
   (M \ {(x,v),(v,y)}) ∪ {(v,v),(x,y)}. Cost never increases.
   Throws ContractError if m is not a matching between a and b.
 */
Matching normalize_matching(const Graph& g, const Matching& m, const TokenMultiset& a,
                            const TokenMultiset& b);

/**
   (m \ {(u, target)}) ∪ {(u_next, target)}: bookkeeping after sliding a
   source token from u one step toward its match.
   Throws ContractError if (u, target) is absent or u_next is not in succ(u, target).
 */
Matching rematch_after_slide(const Graph& g, const Matching& m, Vertex u, Vertex u_next,
                             Vertex target);

/// Union of succ(u, v) over the matches v != u of u.
std::vector<Vertex> succ_toward_matches(const Graph& g, const Matching& m, Vertex u);

/// Largest token count brute_force_matching accepts.
inline constexpr Count kBruteForceMatchingLimit = 8;

/**
   Minimum over all bijections between the token expansions of a and b.
   Throws OracleScaleError above kBruteForceMatchingLimit tokens.
 */
MatchCost brute_force_matching(const Graph& g, const TokenMultiset& a, const TokenMultiset& b);

}  // namespace reconf
