#include "reconf/feasibility.hpp"

#include <algorithm>
#include <string>

#include "reconf/errors.hpp"

namespace reconf {

SetSystem::SetSystem(std::vector<std::vector<Vertex>> sets) : sets_(std::move(sets)) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& s = sets_[i];
    if (s.empty()) throw InputError("set " + std::to_string(i) + " is empty");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.front() < 0) throw InputError("set " + std::to_string(i) + " has a negative vertex");
  }
}

SetSystem SetSystem::on_tree(const RootedTree& tree, std::vector<std::vector<Vertex>> sets) {
  SetSystem out(std::move(sets));
  validate_subtrees(tree, out);
  return out;
}

void validate_subtrees(const RootedTree& tree, const SetSystem& system) {
  // A vertex subset of a tree is connected iff exactly one member has its
  // parent outside the subset.
  std::vector<char> member(tree.size(), 0);
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& s = system.sets()[i];
    for (Vertex v : s) {
      if (v < 0 || static_cast<std::size_t>(v) >= tree.size()) {
        throw InputError("set " + std::to_string(i) + " contains vertex " + std::to_string(v) +
                         " outside the tree");
      }
      member[static_cast<std::size_t>(v)] = 1;
    }
    std::size_t tops = 0;
    for (Vertex v : s) {
      const Vertex p = tree.parent(v);
      if (p == v || !member[static_cast<std::size_t>(p)]) ++tops;
    }
    for (Vertex v : s) member[static_cast<std::size_t>(v)] = 0;
    if (tops != 1) {
      throw InputError("set " + std::to_string(i) + " does not induce a subtree");
    }
  }
}

bool is_dominating(const Graph& g, const TokenMultiset& d) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto vv = static_cast<Vertex>(v);
    if (d.contains(vv)) continue;
    const auto nb = g.neighbors(vv);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return d.contains(w); })) return false;
  }
  return true;
}

bool is_hitting(const SetSystem& system, const TokenMultiset& h) {
  return std::all_of(system.sets().begin(), system.sets().end(), [&](const auto& s) {
    return std::any_of(s.begin(), s.end(), [&](Vertex v) {
      return static_cast<std::size_t>(v) < h.universe() && h.contains(v);
    });
  });
}

bool is_independent(const Graph& g, const TokenMultiset& d) {
  for (Vertex v : d.support()) {
    if (d[v] > 1) return false;
    for (Vertex w : g.neighbors(v)) {
      if (d.contains(w)) return false;
    }
  }
  return true;
}

SetSystem closed_neighborhood_system(const Graph& g) {
  std::vector<std::vector<Vertex>> sets(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto nb = g.neighbors(static_cast<Vertex>(v));
    sets[v].assign(nb.begin(), nb.end());
    sets[v].push_back(static_cast<Vertex>(v));
  }
  return SetSystem(std::move(sets));
}

SetSystem closed_neighborhood_system(const RootedTree& tree) {
  return closed_neighborhood_system(tree.graph());
}

}  // namespace reconf
