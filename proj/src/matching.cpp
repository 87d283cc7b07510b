#include "reconf/matching.hpp"

#include <algorithm>
#include <functional>

#include "assignment.hpp"
#include "reconf/errors.hpp"

namespace reconf {

namespace {

using DistanceFn = std::function<Count(Vertex, Vertex)>;

void require_equal_size(const TokenMultiset& a, const TokenMultiset& b, const char* what) {
  if (a.total() != b.total()) {
    throw SizeError(std::string(what) + ": |a| = " + std::to_string(a.total()) +
                    " differs from |b| = " + std::to_string(b.total()));
  }
}

MatchCost cost_with(const Matching& m, const DistanceFn& dist) {
  MatchCost out;
  for (const auto& [key, mult] : m.pairs()) {
    const Count d = dist(key.first, key.second);
    if (d == kUnreachable) return MatchCost::unreachable();
    out.value += d * mult;
  }
  return out;
}

MatchingResult solve_expanded(const TokenMultiset& a, const TokenMultiset& b,
                              const DistanceFn& dist, std::size_t n) {
  require_equal_size(a, b, "min_cost_matching");
  const auto rows = a.expand();
  const auto cols = b.expand();
  const std::size_t k = rows.size();

  // Any assignment using an unreachable pair costs more than every finite one.
  const Count big = static_cast<Count>(k) * static_cast<Count>(n + 1) + 1;
  std::vector<Count> cost(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Count d = dist(rows[i], cols[j]);
      cost[i * k + j] = d == kUnreachable ? big : d;
    }
  }
  const auto assignment = detail::solve_assignment(cost, k);

  MatchingResult out;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex u = rows[i];
    const Vertex v = cols[assignment[i]];
    out.matching.add(u, v);
  }
  out.cost = cost_with(out.matching, dist);
  return out;
}

}  // namespace

void Matching::add(Vertex u, Vertex v, Count c) {
  if (c <= 0) return;
  pairs_[{u, v}] += c;
  total_ += c;
}

void Matching::remove(Vertex u, Vertex v, Count c) {
  auto it = pairs_.find({u, v});
  if (it == pairs_.end() || it->second < c || c < 0) {
    throw ContractError("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") not in matching with multiplicity " + std::to_string(c));
  }
  it->second -= c;
  total_ -= c;
  if (it->second == 0) pairs_.erase(it);
}

Count Matching::count(Vertex u, Vertex v) const {
  auto it = pairs_.find({u, v});
  return it == pairs_.end() ? 0 : it->second;
}

std::vector<std::pair<Vertex, Count>> Matching::matches_of(Vertex u) const {
  std::vector<std::pair<Vertex, Count>> out;
  for (auto it = pairs_.lower_bound({u, std::numeric_limits<Vertex>::min()});
       it != pairs_.end() && it->first.first == u; ++it) {
    out.emplace_back(it->first.second, it->second);
  }
  return out;
}

std::vector<std::pair<Vertex, Count>> Matching::matched_to(Vertex v) const {
  std::vector<std::pair<Vertex, Count>> out;
  for (const auto& [key, mult] : pairs_) {
    if (key.second == v) out.emplace_back(key.first, mult);
  }
  return out;
}

Matching Matching::inverse() const {
  Matching out;
  for (const auto& [key, mult] : pairs_) out.add(key.second, key.first, mult);
  return out;
}

std::string to_string(const MatchCost& c) {
  return c.infinite ? std::string("inf") : std::to_string(c.value);
}

MatchCost matching_cost(const Matching& m, const Graph& g) {
  // One BFS per distinct left endpoint.
  std::map<Vertex, std::vector<Count>> rows;
  return cost_with(m, [&](Vertex u, Vertex v) {
    auto it = rows.find(u);
    if (it == rows.end()) it = rows.emplace(u, distances_from(g, u)).first;
    return it->second[static_cast<std::size_t>(v)];
  });
}

MatchCost matching_cost(const Matching& m, const DistanceTable& dist) {
  return cost_with(m, [&](Vertex u, Vertex v) { return dist(u, v); });
}

bool satisfies_matching_condition(const Matching& m, const TokenMultiset& a,
                                  const TokenMultiset& b) {
  if (a.universe() != b.universe()) return false;
  std::vector<Count> rows(a.universe(), 0), cols(b.universe(), 0);
  for (const auto& [key, mult] : m.pairs()) {
    const auto [u, v] = key;
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= a.universe() ||
        static_cast<std::size_t>(v) >= b.universe() || mult <= 0) {
      return false;
    }
    rows[static_cast<std::size_t>(u)] += mult;
    cols[static_cast<std::size_t>(v)] += mult;
  }
  for (std::size_t v = 0; v < a.universe(); ++v) {
    if (rows[v] != a.counts()[v] || cols[v] != b.counts()[v]) return false;
  }
  return true;
}

MatchingResult min_cost_matching(const Graph& g, const TokenMultiset& a, const TokenMultiset& b) {
  std::vector<std::vector<Count>> rows(g.size());
  return solve_expanded(
      a, b,
      [&](Vertex u, Vertex v) {
        auto& row = rows[static_cast<std::size_t>(u)];
        if (row.empty()) row = distances_from(g, u);
        return row[static_cast<std::size_t>(v)];
      },
      g.size());
}

MatchingResult min_cost_matching(const DistanceTable& dist, const TokenMultiset& a,
                                 const TokenMultiset& b) {
  return solve_expanded(a, b, [&](Vertex u, Vertex v) { return dist(u, v); },
                        dist.graph().size());
}

Matching normalize_matching(const Graph& g, const Matching& m, const TokenMultiset& a,
                            const TokenMultiset& b) {
  (void)g;  // the exchange needs no distances
  if (!satisfies_matching_condition(m, a, b)) {
    throw ContractError("normalize_matching: m is not a matching between a and b");
  }
  Matching out = m;
  for (std::size_t idx = 0; idx < a.universe(); ++idx) {
    const auto v = static_cast<Vertex>(idx);
    const Count want = std::min(a[v], b[v]);
    while (out.count(v, v) < want) {
      // Both exist: v has an unmatched-to-itself source token and target token.
      Vertex x = -1;
      for (const auto& [u, mult] : out.matched_to(v)) {
        if (u != v) {
          x = u;
          break;
        }
      }
      Vertex y = -1;
      for (const auto& [w, mult] : out.matches_of(v)) {
        if (w != v) {
          y = w;
          break;
        }
      }
      if (x < 0 || y < 0) throw InternalError("normalize_matching: exchange partners missing");
      out.remove(x, v);
      out.remove(v, y);
      out.add(v, v);
      out.add(x, y);
    }
  }
  return out;
}

Matching rematch_after_slide(const Graph& g, const Matching& m, Vertex u, Vertex u_next,
                             Vertex target) {
  if (m.count(u, target) < 1) {
    throw ContractError("rematch_after_slide: pair (" + std::to_string(u) + ", " +
                        std::to_string(target) + ") not in matching");
  }
  const auto succ = succ_set(g, u, target);
  if (!std::binary_search(succ.begin(), succ.end(), u_next)) {
    throw ContractError("rematch_after_slide: " + std::to_string(u_next) +
                        " does not follow " + std::to_string(u) + " toward " +
                        std::to_string(target));
  }
  Matching out = m;
  out.remove(u, target);
  out.add(u_next, target);
  return out;
}

std::vector<Vertex> succ_toward_matches(const Graph& g, const Matching& m, Vertex u) {
  std::vector<Vertex> out;
  for (const auto& [v, mult] : m.matches_of(u)) {
    if (v == u) continue;
    auto s = succ_set(g, u, v);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MatchCost brute_force_matching(const Graph& g, const TokenMultiset& a, const TokenMultiset& b) {
  require_equal_size(a, b, "brute_force_matching");
  if (a.total() > kBruteForceMatchingLimit) {
    throw OracleScaleError("brute_force_matching: " + std::to_string(a.total()) +
                           " tokens exceed the enumeration limit of " +
                           std::to_string(kBruteForceMatchingLimit));
  }
  const auto rows = a.expand();
  auto cols = b.expand();  // sorted, so next_permutation enumerates every arrangement once
  std::vector<std::vector<Count>> dist;
  dist.reserve(rows.size());
  for (Vertex u : rows) dist.push_back(distances_from(g, u));

  bool found = false;
  Count best = 0;
  do {
    Count total = 0;
    bool ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Count d = dist[i][static_cast<std::size_t>(cols[i])];
      if (d == kUnreachable) {
        ok = false;
        break;
      }
      total += d;
    }
    if (ok && (!found || total < best)) {
      best = total;
      found = true;
    }
  } while (std::next_permutation(cols.begin(), cols.end()));
  return found ? MatchCost{best, false} : MatchCost::unreachable();
}

}  // namespace reconf
