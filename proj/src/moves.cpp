#include "reconf/moves.hpp"

#include "reconf/errors.hpp"

namespace reconf {

MoveSequence::MoveSequence(std::vector<Move> moves) {
  moves_.reserve(moves.size());
  for (const Move& m : moves) push_back(m);
}

void MoveSequence::push_back(Move m) {
  if (m.count < 1) throw InputError("move multiplicity must be at least 1");
  moves_.push_back(m);
  total_length_ += m.count;
}

void MoveSequence::append_reversed(const std::vector<Move>& back) {
  for (auto it = back.rbegin(); it != back.rend(); ++it) push_back(*it);
}

std::vector<Edge> expand_moves(const MoveSequence& seq) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(seq.total_length()));
  for (const Move& m : seq.moves()) {
    for (Count i = 0; i < m.count; ++i) out.emplace_back(m.from, m.to);
  }
  return out;
}

}  // namespace reconf
