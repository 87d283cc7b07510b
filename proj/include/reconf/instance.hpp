#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "reconf/errors.hpp"
#include "reconf/graph.hpp"
#include "reconf/interval.hpp"
#include "reconf/moves.hpp"
#include "reconf/multiset.hpp"

namespace reconf {

enum class StructureKind { Tree, Graph, Intervals };

std::string_view to_string(StructureKind kind);

/**
   A reconfiguration instance as stored on disk.

     # comment
     tree 4                 | graph N | intervals N
     0 1                    edges "u v" (tree: exactly N-1), or "id l r" per vertex
     1 2
     2 3
     set 2: 1 2             optional subtree family (tree/graph only)
     tokens 2: 0 2          source, repeats stack tokens
     tokens 2: 1 3          target

   Interval endpoints are kept raw; solvers normalize them.
 */
struct Instance {
  StructureKind kind = StructureKind::Tree;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<Interval> intervals;
  std::vector<std::vector<Vertex>> sets;
  TokenMultiset source;
  TokenMultiset target;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Syntax or semantic error at a 1-based line and column.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Instance parse_instance(std::string_view text);
/// Canonical text; parse_instance(emit_instance(x)) == x.
std::string emit_instance(const Instance& instance);

/// "moves M" followed by M lines "u v c".
MoveSequence parse_moves(std::string_view text);
std::string emit_moves(const MoveSequence& seq);

/// Edge graph for trees and graphs; intersection graph of the normalized
/// representation for interval instances.
Graph instance_graph(const Instance& instance);

}  // namespace reconf
