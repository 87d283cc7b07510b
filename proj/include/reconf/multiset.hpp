#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

/**
   Token placement: a multiplicity function over vertices 0..universe-1.

   The cardinality is cached; multiplicities never go negative.
 */
class TokenMultiset {
 public:
  TokenMultiset() = default;
  explicit TokenMultiset(std::size_t universe) : counts_(universe, 0) {}

  /// Each listed vertex contributes one token; repeats stack.
  static TokenMultiset from_vertices(std::size_t universe, std::span<const Vertex> tokens);
  static TokenMultiset from_vertices(std::size_t universe, std::initializer_list<Vertex> tokens) {
    return from_vertices(universe, std::span<const Vertex>(tokens.begin(), tokens.size()));
  }
  /// (vertex, multiplicity) pairs.
  static TokenMultiset from_counts(std::size_t universe,
                                   std::initializer_list<std::pair<Vertex, Count>> counts);

  std::size_t universe() const { return counts_.size(); }
  Count total() const { return total_; }
  bool empty() const { return total_ == 0; }

  Count operator[](Vertex v) const { return counts_[static_cast<std::size_t>(v)]; }
  bool contains(Vertex v) const { return counts_[static_cast<std::size_t>(v)] > 0; }

  void add(Vertex v, Count c = 1);
  /// Throws TokenError if v holds fewer than c tokens.
  void remove(Vertex v, Count c = 1);

  /// Vertices with multiplicity >= 1, increasing.
  std::vector<Vertex> support() const;
  /// Every token listed once, increasing (vertex v appears (*this)[v] times).
  std::vector<Vertex> expand() const;

  std::span<const Count> counts() const { return counts_; }

  friend bool operator==(const TokenMultiset&, const TokenMultiset&) = default;

 private:
  void check(Vertex v) const;

  std::vector<Count> counts_;
  Count total_ = 0;
};

/// Pointwise sum; |a ∪ b| = |a| + |b|.
TokenMultiset multiset_union(const TokenMultiset& a, const TokenMultiset& b);
/// Pointwise min.
TokenMultiset multiset_intersection(const TokenMultiset& a, const TokenMultiset& b);
/// Pointwise max(a - b, 0).
TokenMultiset multiset_difference(const TokenMultiset& a, const TokenMultiset& b);
/// (a \ b) ∪ (b \ a).
TokenMultiset multiset_symmetric_difference(const TokenMultiset& a, const TokenMultiset& b);

/**
   (d \ {u}) ∪ {v}. Adjacency of u and v is the caller's business.
   Throws TokenError when d(u) = 0.
 */
TokenMultiset slide(const TokenMultiset& d, Vertex u, Vertex v);

/// Human-readable "{0:1, 3:2}".
std::string to_string(const TokenMultiset& d);

}  // namespace reconf
