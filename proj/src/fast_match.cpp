#include "reconf/fast_match.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "reconf/errors.hpp"

namespace reconf {

namespace {

/// Point-update / prefix-min over right-endpoint ranks.
class PrefixMinTree {
 public:
  using Key = std::uint32_t;
  static constexpr Key kEmpty = std::numeric_limits<Key>::max();

  explicit PrefixMinTree(std::size_t n) : size_(std::max<std::size_t>(1, n)), tree_(2 * size_, kEmpty) {}

  /// Fill all leaves at once; O(n).
  template <typename F>
  void build(F&& leaf) {
    for (std::size_t i = 0; i < size_; ++i) tree_[size_ + i] = leaf(i);
    for (std::size_t pos = size_ - 1; pos >= 1; --pos) {
      tree_[pos] = std::min(tree_[2 * pos], tree_[2 * pos + 1]);
    }
  }

  void set(std::size_t pos, Key key) {
    pos += size_;
    tree_[pos] = key;
    for (pos /= 2; pos >= 1; pos /= 2) tree_[pos] = std::min(tree_[2 * pos], tree_[2 * pos + 1]);
  }

  /// Minimum over positions [0, end).
  Key prefix_min(std::size_t end) const {
    Key best = kEmpty;
    for (std::size_t lo = size_, hi = end + size_; lo < hi; lo /= 2, hi /= 2) {
      if (lo & 1) best = std::min(best, tree_[lo++]);
      if (hi & 1) best = std::min(best, tree_[--hi]);
    }
    return best;
  }

 private:
  std::size_t size_;
  std::vector<Key> tree_;
};

/// FIFO queues of tokens per vertex, linked through a shared index array so
/// that moving a whole queue to another vertex is O(1).
class TokenQueues {
 public:
  explicit TokenQueues(std::size_t n) : head_(n, -1), tail_(n, -1), size_(n, 0) {}

  bool empty(std::size_t v) const { return head_[v] < 0; }
  Vertex front_origin(std::size_t v) const { return origin_[static_cast<std::size_t>(head_[v])]; }
  std::size_t size(std::size_t v) const { return size_[v]; }

  void push(std::size_t v, Vertex origin) {
    const int t = static_cast<int>(origin_.size());
    origin_.push_back(origin);
    next_.push_back(-1);
    if (tail_[v] < 0) {
      head_[v] = t;
    } else {
      next_[static_cast<std::size_t>(tail_[v])] = t;
    }
    tail_[v] = t;
    ++size_[v];
  }

  void pop(std::size_t v) {
    const int t = head_[v];
    head_[v] = next_[static_cast<std::size_t>(t)];
    if (head_[v] < 0) tail_[v] = -1;
    --size_[v];
  }

  /// Appends the queue at `from` to the one at `to`, leaving `from` empty.
  void splice(std::size_t from, std::size_t to) {
    if (head_[from] < 0) return;
    if (tail_[to] < 0) {
      head_[to] = head_[from];
    } else {
      next_[static_cast<std::size_t>(tail_[to])] = head_[from];
    }
    tail_[to] = tail_[from];
    head_[from] = tail_[from] = -1;
    size_[to] += size_[from];
    size_[from] = 0;
  }

  template <typename F>
  void drain(std::size_t v, F&& each) {
    for (; !empty(v); pop(v)) each(front_origin(v));
  }

 private:
  std::vector<int> head_, tail_, next_;
  std::vector<std::size_t> size_;
  std::vector<Vertex> origin_;
};

/// (coordinate, vertex) pairs sorted by coordinate. Counting sort when the
/// coordinates span a small range (always so after normalization).
std::vector<std::pair<Coord, Vertex>> sorted_by_coordinate(std::vector<std::pair<Coord, Vertex>> keyed) {
  if (keyed.empty()) return keyed;
  const auto [lo, hi] = std::minmax_element(keyed.begin(), keyed.end());
  const Coord low = lo->first;
  const auto span = static_cast<std::uint64_t>(hi->first - low);
  if (span >= 4 * static_cast<std::uint64_t>(keyed.size())) {
    std::sort(keyed.begin(), keyed.end());
    return keyed;
  }
  std::vector<std::uint32_t> start(span + 2, 0);
  for (const auto& [c, v] : keyed) ++start[static_cast<std::size_t>(c - low) + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<std::pair<Coord, Vertex>> out(keyed.size());
  for (const auto& entry : keyed) out[start[static_cast<std::size_t>(entry.first - low)]++] = entry;
  return out;
}

}  // namespace

MatchingResult fast_match_intervals(const IntervalRepresentation& rep, const TokenMultiset& a,
                                    const TokenMultiset& b) {
  if (a.total() != b.total()) {
    throw SizeError("fast_match_intervals: |a| = " + std::to_string(a.total()) +
                    " differs from |b| = " + std::to_string(b.total()));
  }
  if (a.universe() != rep.size() || b.universe() != rep.size()) {
    throw InputError("fast_match_intervals: token universe does not match the representation");
  }
  const std::size_t n = rep.size();
  MatchingResult out;

  auto sorted_by = [&](Coord (IntervalRepresentation::*end)(Vertex) const) {
    std::vector<std::pair<Coord, Vertex>> keyed(n);
    for (std::size_t i = 0; i < n; ++i) {
      keyed[i] = {(rep.*end)(static_cast<Vertex>(i)), static_cast<Vertex>(i)};
    }
    return sorted_by_coordinate(std::move(keyed));
  };
  // The sweep works on positions p = rank of r(v), so it walks memory in order.
  const auto rights = sorted_by(&IntervalRepresentation::right);
  const auto lefts = sorted_by(&IntervalRepresentation::left);
  std::vector<PrefixMinTree::Key> position(n);
  for (std::size_t p = 0; p < n; ++p) {
    position[static_cast<std::size_t>(rights[p].second)] = static_cast<PrefixMinTree::Key>(p);
  }
  // left_rank[p]: index of position p in left-endpoint order.
  // furthest[i]: largest position among the first i + 1 intervals by left endpoint.
  std::vector<std::size_t> left_rank(n);
  std::vector<std::size_t> furthest(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = position[static_cast<std::size_t>(lefts[i].second)];
    left_rank[p] = i;
    furthest[i] = i > 0 ? std::max(furthest[i - 1], p) : p;
  }

  // Side 0 holds a-tokens, side 1 b-tokens; each token remembers its origin.
  // Pairs are collected as (a-origin, b-origin) and aggregated at the end.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  TokenQueues tokens[2] = {TokenQueues(n), TokenQueues(n)};
  for (std::size_t p = 0; p < n; ++p) {
    const Vertex v = rights[p].second;
    const Count shared = std::min(a[v], b[v]);
    for (Count c = shared; c < a[v]; ++c) tokens[0].push(p, v);
    for (Count c = shared; c < b[v]; ++c) tokens[1].push(p, v);
    for (Count c = 0; c < shared; ++c) pairs.emplace_back(v, v);
  }

  PrefixMinTree holders[2] = {PrefixMinTree(n), PrefixMinTree(n)};
  for (int side = 0; side < 2; ++side) {
    std::vector<PrefixMinTree::Key> leaves(n, PrefixMinTree::kEmpty);
    for (std::size_t p = 0; p < n; ++p) {
      if (!tokens[side].empty(p)) leaves[left_rank[p]] = static_cast<PrefixMinTree::Key>(p);
    }
    holders[side].build([&](std::size_t i) { return i < n ? leaves[i] : PrefixMinTree::kEmpty; });
  }
  auto refresh = [&](int side, std::size_t p) {
    holders[side].set(left_rank[p], tokens[side].empty(p) ? PrefixMinTree::kEmpty
                                                          : static_cast<PrefixMinTree::Key>(p));
  };
  auto record = [&](int side, Vertex mine, Vertex theirs) {
    if (side == 0) {
      pairs.emplace_back(mine, theirs);
    } else {
      pairs.emplace_back(theirs, mine);
    }
  };

  Count cost = 0;
  bool stranded = false;
  std::vector<Vertex> leftover[2];
  std::size_t reach = 0;  // number of intervals with l <= r(p); grows with the sweep
  for (std::size_t p = 0; p < n; ++p) {
    const Coord right = rights[p].first;
    while (reach < n && lefts[reach].first <= right) ++reach;
    while (!tokens[0].empty(p) && !tokens[1].empty(p)) {
      pairs.emplace_back(tokens[0].front_origin(p), tokens[1].front_origin(p));
      tokens[0].pop(p);
      tokens[1].pop(p);
    }
    for (int side = 0; side < 2; ++side) {
      auto& mine = tokens[side];
      if (mine.empty(p)) continue;
      const int other = 1 - side;
      // Positions still holding tokens are >= p; adjacency reduces to l <= r(p).
      while (!mine.empty(p)) {
        const auto x = holders[other].prefix_min(reach);
        if (x == PrefixMinTree::kEmpty) break;
        record(side, mine.front_origin(p), tokens[other].front_origin(x));
        mine.pop(p);
        tokens[other].pop(x);
        cost += 1;
        if (tokens[other].empty(x)) refresh(other, x);
      }
      if (!mine.empty(p)) {
        const std::size_t w = furthest[reach - 1];
        if (w <= p) {
          stranded = true;
          mine.drain(p, [&](Vertex origin) { leftover[side].push_back(origin); });
        } else {
          cost += static_cast<Count>(mine.size(p));
          mine.splice(p, w);
          refresh(side, w);
        }
      }
      refresh(side, p);
    }
  }

  if (stranded) {
    // Pair the stranded tokens in sweep order just to keep a valid matching.
    for (std::size_t j = 0; j < leftover[0].size(); ++j) {
      pairs.emplace_back(leftover[0][j], leftover[1][j]);
    }
    out.cost = MatchCost::unreachable();
  } else {
    out.cost = MatchCost{cost, false};
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t j = 0; j < pairs.size();) {
    std::size_t k = j;
    while (k < pairs.size() && pairs[k] == pairs[j]) ++k;
    out.matching.add(pairs[j].first, pairs[j].second, static_cast<Count>(k - j));
    j = k;
  }
  return out;
}

}  // namespace reconf
