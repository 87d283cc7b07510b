#include "reconf/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "reconf/errors.hpp"
#include "reconf/feasibility.hpp"

namespace reconf {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::vector<Edge> random_tree_edges(std::size_t n, Rng& rng) {
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const auto parent = static_cast<std::size_t>(rng.below(i));
    edges.emplace_back(label[parent], label[i]);
  }
  return edges;
}

std::vector<Interval> random_intervals(std::size_t n, Rng& rng, bool connected) {
  std::vector<Interval> out;
  out.reserve(n);
  const auto span = static_cast<std::int64_t>(std::max<std::size_t>(n, 2));
  std::int64_t reach = 0;
  std::int64_t cursor = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t left;
    if (connected && i > 0) {
      left = rng.between(cursor, std::max(cursor, reach - 1));
    } else {
      left = rng.between(0, 3 * span);
    }
    const bool short_interval = rng.below(3) != 0;
    const std::int64_t length = short_interval ? rng.between(1, 4) : rng.between(2, span / 2 + 2);
    out.push_back({left, left + length});
    cursor = left;
    reach = std::max(reach, left + length);
  }
  // Rank-compress to distinct endpoints, then relabel vertices randomly.
  auto rep = normalize_representation(out);
  std::vector<Interval> distinct(rep.intervals().begin(), rep.intervals().end());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<Interval> shuffled(n);
  for (std::size_t i = 0; i < n; ++i) shuffled[order[i]] = distinct[i];
  return shuffled;
}

std::vector<std::vector<Vertex>> random_subtree_family(const Graph& tree, std::size_t count,
                                                       Rng& rng) {
  const std::size_t n = tree.size();
  std::vector<std::vector<Vertex>> family;
  std::vector<char> in(n, 0);
  for (std::size_t s = 0; s < count; ++s) {
    const auto seed = static_cast<Vertex>(rng.below(n));
    const auto target = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(std::min<std::size_t>(n, 4))));
    std::vector<Vertex> members{seed};
    in[static_cast<std::size_t>(seed)] = 1;
    while (members.size() < target) {
      std::vector<Vertex> frontier;
      for (Vertex u : members) {
        for (Vertex w : tree.neighbors(u)) {
          if (!in[static_cast<std::size_t>(w)]) frontier.push_back(w);
        }
      }
      if (frontier.empty()) break;
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
      const Vertex pick = frontier[rng.below(frontier.size())];
      in[static_cast<std::size_t>(pick)] = 1;
      members.push_back(pick);
    }
    for (Vertex v : members) in[static_cast<std::size_t>(v)] = 0;
    std::sort(members.begin(), members.end());
    family.push_back(std::move(members));
  }
  return family;
}

TokenMultiset greedy_dominating_set(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<char> dominated(n, 0);
  std::size_t remaining = n;
  TokenMultiset out(n);
  while (remaining > 0) {
    Vertex best = -1;
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<Vertex>(i);
      if (out.contains(v)) continue;
      std::size_t gain = dominated[i] ? 0 : 1;
      for (Vertex w : g.neighbors(v)) gain += dominated[static_cast<std::size_t>(w)] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    out.add(best);
    if (!dominated[static_cast<std::size_t>(best)]) {
      dominated[static_cast<std::size_t>(best)] = 1;
      --remaining;
    }
    for (Vertex w : g.neighbors(best)) {
      if (!dominated[static_cast<std::size_t>(w)]) {
        dominated[static_cast<std::size_t>(w)] = 1;
        --remaining;
      }
    }
  }
  return out;
}

std::optional<TokenMultiset> random_feasible_set(std::size_t n, const FeasibilityPredicate& pred,
                                                 std::size_t k, Rng& rng) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  TokenMultiset current = TokenMultiset::from_vertices(n, all);
  if (!pred(current) || k > n) return std::nullopt;
  rng.shuffle(all);
  for (Vertex v : all) {
    if (static_cast<std::size_t>(current.total()) == k) break;
    current.remove(v);
    if (!pred(current)) current.add(v);
  }
  if (static_cast<std::size_t>(current.total()) != k) return std::nullopt;
  return current;
}

TokenMultiset random_minimal_feasible_set(std::size_t n, const FeasibilityPredicate& pred,
                                          Rng& rng) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  TokenMultiset current = TokenMultiset::from_vertices(n, all);
  rng.shuffle(all);
  for (Vertex v : all) {
    current.remove(v);
    if (!pred(current)) current.add(v);
  }
  return current;
}

TokenMultiset pad_to(TokenMultiset d, std::size_t k, Rng& rng) {
  std::vector<Vertex> empty;
  for (std::size_t v = 0; v < d.universe(); ++v) {
    if (!d.contains(static_cast<Vertex>(v))) empty.push_back(static_cast<Vertex>(v));
  }
  rng.shuffle(empty);
  for (std::size_t i = 0; static_cast<std::size_t>(d.total()) < k; ++i) {
    d.add(i < empty.size() ? empty[i] : static_cast<Vertex>(rng.below(d.universe())));
  }
  return d;
}

Instance path_transfer_instance(std::size_t n) {
  if (n < 2) throw InputError("path_transfer_instance: need n >= 2");
  Instance inst;
  inst.kind = StructureKind::Tree;
  inst.n = n;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    inst.edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  std::vector<Vertex> tokens;
  const std::size_t half = n / 2;
  for (std::size_t v = 0; v < half; ++v) tokens.push_back(static_cast<Vertex>(v));
  std::size_t last = half;
  for (std::size_t v = half + 1; v < n; v += 3) {
    tokens.push_back(static_cast<Vertex>(v));
    last = v;
  }
  if (last + 1 < n - 1) tokens.push_back(static_cast<Vertex>(n - 1));
  inst.source = TokenMultiset::from_vertices(n, tokens);
  inst.target = TokenMultiset(n);
  for (Vertex v : tokens) inst.target.add(static_cast<Vertex>(n - 1) - v);
  return inst;
}

TokenMultiset random_feasible_walk(const Graph& g, const FeasibilityPredicate& pred,
                                   TokenMultiset start, std::size_t steps, Rng& rng) {
  for (std::size_t s = 0; s < steps; ++s) {
    const auto support = start.support();
    if (support.empty()) break;
    const Vertex u = support[rng.below(support.size())];
    const auto nb = g.neighbors(u);
    if (nb.empty()) continue;
    const Vertex w = nb[rng.below(nb.size())];
    if (start.contains(w)) continue;
    TokenMultiset next = slide(start, u, w);
    if (pred(next)) start = std::move(next);
  }
  return start;
}

Instance generate_instance(StructureKind kind, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0) throw InputError("gen: n must be positive");
  if (k > n) throw InputError("gen: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  if (kind == StructureKind::Graph) throw InputError("gen: only tree and interval instances");
  Rng rng(seed);
  constexpr int kRetries = 64;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Instance inst;
    inst.kind = kind;
    inst.n = n;
    if (kind == StructureKind::Tree) {
      inst.edges = random_tree_edges(n, rng);
    } else {
      inst.intervals = random_intervals(n, rng, true);
    }
    const Graph g = instance_graph(inst);
    TokenMultiset base = greedy_dominating_set(g);
    if (static_cast<std::size_t>(base.total()) > k) continue;
    std::vector<Vertex> spare;
    for (std::size_t v = 0; v < n; ++v) {
      if (!base.contains(static_cast<Vertex>(v))) spare.push_back(static_cast<Vertex>(v));
    }
    rng.shuffle(spare);
    for (std::size_t i = 0; static_cast<std::size_t>(base.total()) < k; ++i) base.add(spare[i]);

    const auto pred = FeasibilityPredicate::dominating(g);
    auto endpoint = [&] {
      TokenMultiset d = random_minimal_feasible_set(n, pred, rng);
      if (static_cast<std::size_t>(d.total()) > k) d = base;
      return random_feasible_walk(g, pred, pad_to(std::move(d), k, rng), 4 * n, rng);
    };
    inst.source = endpoint();
    inst.target = endpoint();
    return inst;
  }
  throw InputError("gen: no dominating set of size " + std::to_string(k) + " found after " +
                   std::to_string(kRetries) + " structures");
}

}  // namespace reconf
