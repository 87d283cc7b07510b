#include "reconf/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "reconf/errors.hpp"
#include "reconf/matching.hpp"

namespace reconf {

namespace {

void require_endpoints(const FeasibilityPredicate& pred, const TokenMultiset& start,
                       const TokenMultiset& goal) {
  if (start.universe() != goal.universe()) throw InputError("start and goal universes differ");
  if (start.total() != goal.total()) {
    throw SizeError("start has " + std::to_string(start.total()) + " tokens, goal has " +
                    std::to_string(goal.total()));
  }
  if (!pred(start)) throw FeasibilityError("start configuration is infeasible");
  if (!pred(goal)) throw FeasibilityError("goal configuration is infeasible");
}

/// Calls visit(next) for every feasible configuration one slide away from d.
template <typename Visit>
void for_each_neighbor(const Graph& g, const FeasibilityPredicate& pred, const TokenMultiset& d,
                       Visit&& visit) {
  for (Vertex u : d.support()) {
    for (Vertex w : g.neighbors(u)) {
      TokenMultiset next = slide(d, u, w);
      if (pred(next)) visit(next);
    }
  }
}

}  // namespace

bool FeasibilityPredicate::operator()(const TokenMultiset& d) const {
  switch (kind_) {
    case Kind::Dominating: return is_dominating(*graph_, d);
    case Kind::Hitting: return is_hitting(*system_, d);
    case Kind::IndependentSet: return is_independent(*graph_, d);
  }
  return false;
}

ConfigurationKey ConfigurationKey::of(const TokenMultiset& d) {
  ConfigurationKey key;
  for (Vertex v : d.support()) key.entries.emplace_back(v, d[v]);
  return key;
}

TokenMultiset ConfigurationKey::to_multiset(std::size_t universe) const {
  TokenMultiset out(universe);
  for (const auto& [v, c] : entries) out.add(v, c);
  return out;
}

std::size_t ConfigurationKeyHash::operator()(const ConfigurationKey& key) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, c] : key.entries) {
    h ^= std::hash<std::int64_t>{}((static_cast<std::int64_t>(v) << 20) ^ c) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

BfsResult reconfig_distance_bfs(const Graph& g, const FeasibilityPredicate& pred,
                                const TokenMultiset& start, const TokenMultiset& goal,
                                std::size_t cap) {
  require_endpoints(pred, start, goal);
  BfsResult result;
  if (start == goal) {
    result.status = BfsResult::Status::Reached;
    result.visited = 1;
    return result;
  }
  const auto goal_key = ConfigurationKey::of(goal);
  std::unordered_map<ConfigurationKey, Count, ConfigurationKeyHash> seen;
  std::deque<TokenMultiset> queue;
  seen.emplace(ConfigurationKey::of(start), 0);
  queue.push_back(start);
  while (!queue.empty()) {
    TokenMultiset current = std::move(queue.front());
    queue.pop_front();
    const Count d = seen.at(ConfigurationKey::of(current));
    bool found = false;
    for_each_neighbor(g, pred, current, [&](const TokenMultiset& next) {
      if (found || result.status == BfsResult::Status::CapExceeded) return;
      auto key = ConfigurationKey::of(next);
      if (seen.contains(key)) return;
      if (key == goal_key) {
        found = true;
        return;
      }
      if (seen.size() >= cap) {
        result.status = BfsResult::Status::CapExceeded;
        return;
      }
      seen.emplace(std::move(key), d + 1);
      queue.push_back(next);
    });
    if (found) {
      result.status = BfsResult::Status::Reached;
      result.distance = d + 1;
      result.visited = seen.size() + 1;
      return result;
    }
    if (result.status == BfsResult::Status::CapExceeded) {
      result.visited = seen.size();
      return result;
    }
  }
  result.status = BfsResult::Status::Unreachable;
  result.visited = seen.size();
  return result;
}

VerifyResult verify_sequence(const Graph& g, const FeasibilityPredicate& pred,
                             const TokenMultiset& start, const MoveSequence& seq) {
  VerifyResult result;
  result.final_state = start;
  if (start.universe() != g.size()) {
    result.failure = "configuration universe differs from the graph";
    return result;
  }
  if (!pred(start)) {
    result.failure = "start configuration is infeasible";
    return result;
  }
  Count step = 0;
  for (const Move& m : seq.moves()) {
    for (Count i = 0; i < m.count; ++i, ++step) {
      const std::string where = "unit move " + std::to_string(step) + " (" +
                                std::to_string(m.from) + ", " + std::to_string(m.to) + ")";
      if (!g.adjacent(m.from, m.to)) {
        result.failure = where + ": not an edge";
        return result;
      }
      if (!result.final_state.contains(m.from)) {
        result.failure = where + ": no token on " + std::to_string(m.from);
        return result;
      }
      TokenMultiset next = slide(result.final_state, m.from, m.to);
      if (!pred(next)) {
        result.failure = where + ": resulting configuration is infeasible";
        return result;
      }
      result.final_state = std::move(next);
    }
  }
  result.ok = true;
  return result;
}

bool certify_optimality(const Graph& g, const FeasibilityPredicate& pred,
                        const TokenMultiset& start, const TokenMultiset& goal,
                        const MoveSequence& seq, std::size_t cap) {
  const auto replay = verify_sequence(g, pred, start, seq);
  if (!replay.ok || !(replay.final_state == goal)) return false;
  const auto bfs = reconfig_distance_bfs(g, pred, start, goal, cap);
  if (bfs.status == BfsResult::Status::CapExceeded) {
    throw CapExceededError("certify_optimality: more than " + std::to_string(cap) +
                           " configurations");
  }
  if (bfs.status != BfsResult::Status::Reached || bfs.distance != seq.total_length()) return false;
  const auto lower = min_cost_matching(g, start, goal).cost;
  return lower.finite() && lower.value == seq.total_length();
}

std::string reconfiguration_graph_dot(const Graph& g, const FeasibilityPredicate& pred,
                                      const TokenMultiset& start, std::size_t cap) {
  if (!pred(start)) throw FeasibilityError("start configuration is infeasible");
  std::map<ConfigurationKey, std::size_t> ids;
  std::vector<TokenMultiset> states;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  ids.emplace(ConfigurationKey::of(start), 0);
  states.push_back(start);
  for (std::size_t head = 0; head < states.size(); ++head) {
    const TokenMultiset current = states[head];
    for_each_neighbor(g, pred, current, [&](const TokenMultiset& next) {
      auto key = ConfigurationKey::of(next);
      auto it = ids.find(key);
      if (it == ids.end()) {
        if (states.size() >= cap) {
          throw CapExceededError("reconfiguration graph exceeds " + std::to_string(cap) +
                                 " configurations");
        }
        it = ids.emplace(std::move(key), states.size()).first;
        states.push_back(next);
      }
      if (head < it->second) edges.emplace_back(head, it->second);
    });
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::ostringstream os;
  os << "graph reconfiguration {\n";
  for (std::size_t i = 0; i < states.size(); ++i) {
    os << "  s" << i << " [label=\"";
    bool first = true;
    for (Vertex v : states[i].expand()) {
      os << (first ? "" : " ") << v;
      first = false;
    }
    os << "\"];\n";
  }
  for (const auto& [a, b] : edges) os << "  s" << a << " -- s" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace reconf
