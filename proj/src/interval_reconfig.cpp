#include "reconf/interval_reconfig.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "reconf/errors.hpp"
#include "reconf/feasibility.hpp"
#include "reconf/log.hpp"

namespace reconf {

namespace {

/// Number of support vertices in N[x], for every x.
class Coverage {
 public:
  Coverage(const Graph& g, const TokenMultiset& d) : g_(&g), cover_(g.size(), 0) {
    for (Vertex u : d.support()) bump(u, +1);
  }

  /// Whether slide(d, u, to) stays dominating; d itself must be dominating.
  bool slide_keeps_domination(const TokenMultiset& d, Vertex u, Vertex to) const {
    if (d[u] >= 2) return true;
    auto lost = [&](Vertex x) {
      return cover_[static_cast<std::size_t>(x)] == 1 && x != to && !g_->adjacent(x, to);
    };
    if (lost(u)) return false;
    for (Vertex x : g_->neighbors(u)) {
      if (lost(x)) return false;
    }
    return true;
  }

  /// Call before d is updated.
  void apply_slide(const TokenMultiset& d, Vertex u, Vertex to) {
    if (d[u] == 1) bump(u, -1);
    if (d[to] == 0) bump(to, +1);
  }

 private:
  void bump(Vertex u, int delta) {
    cover_[static_cast<std::size_t>(u)] += delta;
    for (Vertex x : g_->neighbors(u)) cover_[static_cast<std::size_t>(x)] += delta;
  }

  const Graph* g_;
  std::vector<int> cover_;
};

std::optional<GreedyMove> scan_greedy(const DistanceTable& dist, const TokenMultiset& d_s,
                                      const TokenMultiset& d_t, const Coverage& cov_s,
                                      const Coverage& cov_t, const Matching& m) {
  for (const auto& [key, mult] : m.pairs()) {
    const auto [u, v] = key;
    if (u == v) continue;
    for (Vertex next : dist.successors(u, v)) {
      if (cov_s.slide_keeps_domination(d_s, u, next)) {
        return GreedyMove{GreedyMove::Side::Source, u, next, v};
      }
    }
  }
  for (const auto& [key, mult] : m.pairs()) {
    const auto [u, v] = key;
    if (u == v) continue;
    for (Vertex next : dist.successors(v, u)) {
      if (cov_t.slide_keeps_domination(d_t, v, next)) {
        return GreedyMove{GreedyMove::Side::Target, v, next, u};
      }
    }
  }
  return std::nullopt;
}

bool is_normalized(const Matching& m, const TokenMultiset& d_s, const TokenMultiset& d_t) {
  for (std::size_t i = 0; i < d_s.universe(); ++i) {
    const auto v = static_cast<Vertex>(i);
    if (m.count(v, v) != std::min(d_s[v], d_t[v])) return false;
  }
  return true;
}

/// Repair with the minimum-r vertex v on the `src` side (src(v) > tgt(v)).
std::optional<Matching> repair_from(const IntervalRepresentation& rep, const DistanceTable& dist,
                                    const TokenMultiset& src, const TokenMultiset& tgt,
                                    const Coverage& cov_src, const Matching& m, Vertex v) {
  const Graph& g = dist.graph();
  std::vector<Vertex> candidates;
  for (Vertex y : g.neighbors(v)) {
    if (tgt[y] > src[y]) candidates.push_back(y);
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](Vertex a, Vertex b) { return rep.right(a) < rep.right(b); });

  const auto v_matches = m.matches_of(v);
  for (Vertex y : candidates) {
    if (!cov_src.slide_keeps_domination(src, v, y)) continue;
    const auto y_matches = m.matched_to(y);
    for (const auto& [v_partner, vm] : v_matches) {
      if (v_partner == v || v_partner == y) continue;
      for (const auto& [y_partner, ym] : y_matches) {
        if (y_partner == y || y_partner == v) continue;
        const Count before = dist(v, v_partner) + dist(y_partner, y);
        const Count after = dist(v, y) + dist(y_partner, v_partner);
        if (after > before) continue;
        Matching out = m;
        out.remove(v, v_partner);
        out.remove(y_partner, y);
        out.add(v, y);
        out.add(y_partner, v_partner);
        if (log::debug_enabled()) {
          std::ostringstream os;
          os << "fix_matching: v=" << v << " y=" << y << " v'=" << v_partner
             << " y'=" << y_partner << " delta=" << (after - before);
          log::debug(os.str());
        }
        return out;
      }
    }
  }
  return std::nullopt;
}

Matching repair(const IntervalRepresentation& rep, const DistanceTable& dist,
                const TokenMultiset& d_s, const TokenMultiset& d_t, const Coverage& cov_s,
                const Coverage& cov_t, const Matching& m) {
  Vertex v = -1;
  for (std::size_t i = 0; i < d_s.universe(); ++i) {
    const auto u = static_cast<Vertex>(i);
    if (d_s[u] != d_t[u] && (v < 0 || rep.right(u) < rep.right(v))) v = u;
  }
  if (v < 0) throw ContractError("fix_matching: d_s equals d_t");

  std::optional<Matching> out;
  if (d_s[v] > d_t[v]) {
    out = repair_from(rep, dist, d_s, d_t, cov_s, m, v);
  } else {
    // Same search with the roles of d_s and d_t exchanged.
    auto swapped = repair_from(rep, dist, d_t, d_s, cov_t, m.inverse(), v);
    if (swapped) out = swapped->inverse();
  }
  if (!out) {
    throw InternalError("fix_matching: no repair candidate for vertex " + std::to_string(v) +
                        " (d_s=" + to_string(d_s) + ", d_t=" + to_string(d_t) + ")");
  }
  return *out;
}

void require_instance(const IntervalRepresentation& rep, const Graph& g, const TokenMultiset& d_s,
                      const TokenMultiset& d_t) {
  if (g.size() != rep.size() || d_s.universe() != rep.size() || d_t.universe() != rep.size()) {
    throw InputError("graph, representation and token universes disagree in size");
  }
  if (d_s.total() != d_t.total()) {
    throw SizeError("|d_s| = " + std::to_string(d_s.total()) + " but |d_t| = " +
                    std::to_string(d_t.total()));
  }
  if (!is_dominating(g, d_s)) throw FeasibilityError("d_s is not dominating");
  if (!is_dominating(g, d_t)) throw FeasibilityError("d_t is not dominating");
}

}  // namespace

std::optional<GreedyMove> find_greedy_move(const Graph& g, const TokenMultiset& d_s,
                                           const TokenMultiset& d_t, const Matching& m) {
  if (!is_dominating(g, d_s) || !is_dominating(g, d_t)) {
    throw FeasibilityError("find_greedy_move: both configurations must be dominating");
  }
  const DistanceTable dist(g);
  return scan_greedy(dist, d_s, d_t, Coverage(g, d_s), Coverage(g, d_t), m);
}

Matching fix_matching(const IntervalRepresentation& rep, const Graph& g, const TokenMultiset& d_s,
                      const TokenMultiset& d_t, const Matching& m) {
  require_instance(rep, g, d_s, d_t);
  if (d_s == d_t) throw ContractError("fix_matching: d_s equals d_t");
  if (!satisfies_matching_condition(m, d_s, d_t)) {
    throw ContractError("fix_matching: m is not a matching between d_s and d_t");
  }
  if (!is_normalized(m, d_s, d_t)) {
    throw ContractError("fix_matching: shared tokens must be matched to themselves");
  }
  const DistanceTable dist(g);
  const Coverage cov_s(g, d_s), cov_t(g, d_t);
  if (scan_greedy(dist, d_s, d_t, cov_s, cov_t, m)) {
    throw ContractError("fix_matching: a greedy move exists; no repair needed");
  }
  return repair(rep, dist, d_s, d_t, cov_s, cov_t, m);
}

IntervalReconfResult reconf_interval(const IntervalRepresentation& rep, const TokenMultiset& d_s,
                                     const TokenMultiset& d_t,
                                     const IntervalReconfOptions& options) {
  const Graph g = intersection_graph(rep);
  require_instance(rep, g, d_s, d_t);
  const DistanceTable dist(g);

  IntervalReconfResult result;
  auto initial = min_cost_matching(dist, d_s, d_t);
  result.initial_cost = initial.cost;
  if (initial.cost.infinite) {
    result.status = ReconfStatus::Unreachable;
    return result;
  }

  TokenMultiset source = d_s;
  TokenMultiset target = d_t;
  Matching m = normalize_matching(g, initial.matching, source, target);
  Coverage cov_s(g, source), cov_t(g, target);
  std::vector<Move> back;
  Count emitted = 0;

  while (source != target) {
    auto move = scan_greedy(dist, source, target, cov_s, cov_t, m);
    if (!move) {
      Matching normalized = normalize_matching(g, m, source, target);
      if (!(normalized == m)) {
        m = std::move(normalized);
        continue;
      }
      Matching fixed = repair(rep, dist, source, target, cov_s, cov_t, m);
      ++result.repairs;
      if (options.on_repair) options.on_repair(RepairEvent{source, target, m, fixed});
      m = std::move(fixed);
      move = scan_greedy(dist, source, target, cov_s, cov_t, m);
      if (!move) throw InternalError("reconf_interval: repaired matching admits no greedy move");
    }

    if (move->side == GreedyMove::Side::Source) {
      cov_s.apply_slide(source, move->from, move->to);
      source = slide(source, move->from, move->to);
      m.remove(move->from, move->partner);
      m.add(move->to, move->partner);
      result.moves.push_back({move->from, move->to, 1});
    } else {
      cov_t.apply_slide(target, move->from, move->to);
      target = slide(target, move->from, move->to);
      m.remove(move->partner, move->from);
      m.add(move->partner, move->to);
      back.push_back({move->to, move->from, 1});
    }
    if (log::debug_enabled()) {
      std::ostringstream os;
      os << "greedy " << (move->side == GreedyMove::Side::Source ? "source" : "target") << ' '
         << move->from << " -> " << move->to << " (match " << move->partner << ')';
      log::debug(os.str());
    }
    if (++emitted > result.initial_cost.value) {
      throw InternalError("reconf_interval: more moves than the matching lower bound");
    }
  }
  result.moves.append_reversed(back);
  return result;
}

}  // namespace reconf
