#include "reconf/tree_reconfig.hpp"

#include <string>

#include "reconf/errors.hpp"

namespace reconf {

namespace {

void require_tokens(const RootedTree& tree, const TokenMultiset& h, const char* name) {
  if (h.universe() != tree.size()) {
    throw InputError(std::string(name) + " is over " + std::to_string(h.universe()) +
                     " vertices, tree has " + std::to_string(tree.size()));
  }
}

}  // namespace

MoveSequence reconf_tree(const RootedTree& tree, const SetSystem& system, const TokenMultiset& h_s,
                         const TokenMultiset& h_t) {
  require_tokens(tree, h_s, "h_s");
  require_tokens(tree, h_t, "h_t");
  if (h_s.total() != h_t.total()) {
    throw SizeError("reconf_tree: |h_s| = " + std::to_string(h_s.total()) + " but |h_t| = " +
                    std::to_string(h_t.total()));
  }
  validate_subtrees(tree, system);
  if (!is_hitting(system, h_s)) throw FeasibilityError("reconf_tree: h_s is not a hitting set");
  if (!is_hitting(system, h_t)) throw FeasibilityError("reconf_tree: h_t is not a hitting set");

  std::vector<Count> source(h_s.counts().begin(), h_s.counts().end());
  std::vector<Count> target(h_t.counts().begin(), h_t.counts().end());
  MoveSequence out;
  std::vector<Move> back;
  for (Vertex v : tree.order()) {
    if (v == tree.root()) continue;
    const auto i = static_cast<std::size_t>(v);
    const Vertex p = tree.parent(v);
    const auto pi = static_cast<std::size_t>(p);
    if (source[i] > target[i]) {
      const Count surplus = source[i] - target[i];
      out.push_back({v, p, surplus});
      source[pi] += surplus;
      source[i] = target[i];
    } else if (source[i] < target[i]) {
      const Count surplus = target[i] - source[i];
      back.push_back({p, v, surplus});
      target[pi] += surplus;
      target[i] = source[i];
    }
  }
  out.append_reversed(back);
  return out;
}

MoveSequence reconf_tree_dominating(const RootedTree& tree, const TokenMultiset& d_s,
                                    const TokenMultiset& d_t) {
  return reconf_tree(tree, closed_neighborhood_system(tree), d_s, d_t);
}

}  // namespace reconf
