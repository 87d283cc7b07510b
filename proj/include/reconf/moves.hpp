#pragma once

#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

/// `count` consecutive slides of a token from `from` to `to`.
struct Move {
  Vertex from = 0;
  Vertex to = 0;
  Count count = 1;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Compressed move list; total_length is the number of unit slides.
class MoveSequence {
 public:
  MoveSequence() = default;
  explicit MoveSequence(std::vector<Move> moves);

  void push_back(Move m);
  /// Appends `back` in reverse order.
  void append_reversed(const std::vector<Move>& back);

  const std::vector<Move>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  Count total_length() const { return total_length_; }

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;

 private:
  std::vector<Move> moves_;
  Count total_length_ = 0;
};

/// Each (u, v, c) becomes c consecutive copies of (u, v).
std::vector<Edge> expand_moves(const MoveSequence& seq);

}  // namespace reconf
