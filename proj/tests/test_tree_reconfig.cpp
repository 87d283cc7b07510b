#include <chrono>

#include "doctest.h"
#include "reconf/errors.hpp"
#include "reconf/matching.hpp"
#include "reconf/oracle.hpp"
#include "reconf/tree_reconfig.hpp"
#include "support.hpp"

using namespace reconf;
using namespace testing;

namespace {

struct RecursiveTrace {
  std::vector<Edge> moves;
  std::vector<Count> chosen_depths;
};

/// Direct recursion: find the deepest mismatched vertex (ties by id), move
/// one token, recurse. Unit moves, no compression.
void reconf_recursive(const RootedTree& tree, TokenMultiset hs, TokenMultiset ht,
                      RecursiveTrace& trace) {
  std::vector<Edge> back;
  while (!(hs == ht)) {
    Vertex best = -1;
    for (std::size_t i = 0; i < tree.size(); ++i) {
      const Vertex v = static_cast<Vertex>(i);
      if (hs[v] == ht[v]) continue;
      if (best < 0 || tree.depth(v) > tree.depth(best)) best = v;
    }
    trace.chosen_depths.push_back(tree.depth(best));
    const Vertex p = tree.parent(best);
    if (hs[best] > ht[best]) {
      trace.moves.emplace_back(best, p);
      hs = slide(hs, best, p);
    } else {
      back.emplace_back(p, best);
      ht = slide(ht, best, p);
    }
  }
  trace.moves.insert(trace.moves.end(), back.rbegin(), back.rend());
}

}  // namespace

TEST_CASE("equal endpoints give an empty sequence") {
  const RootedTree star(star_graph(3));
  CHECK(reconf_tree_dominating(star, tokens(4, {0}), tokens(4, {0})).empty());
  const RootedTree p6(path_graph(6));
  CHECK(reconf_tree_dominating(p6, tokens(6, {1, 4}), tokens(6, {1, 4})).empty());
}

TEST_CASE("P4 dominating sets") {
  const RootedTree p4(path_graph(4));
  const auto seq = reconf_tree_dominating(p4, tokens(4, {0, 2}), tokens(4, {1, 3}));
  CHECK(seq.moves() == std::vector<Move>{{0, 1, 1}, {2, 3, 1}});
  CHECK(seq.total_length() == 2);
  const auto states = replay(tokens(4, {0, 2}), seq);
  CHECK(states[1] == tokens(4, {1, 2}));
  CHECK(states[2] == tokens(4, {1, 3}));
  for (const auto& s : states) CHECK(is_dominating(p4.graph(), s));
}

TEST_CASE("P3 vertex cover") {
  const RootedTree p3(path_graph(3));
  const auto system = SetSystem::on_tree(p3, {{0, 1}, {1, 2}});
  const auto seq = reconf_tree(p3, system, tokens(3, {0, 2}), tokens(3, {0, 1}));
  CHECK(seq.moves() == std::vector<Move>{{2, 1, 1}});
  const auto pred = FeasibilityPredicate::hitting(system);
  CHECK(reconfig_distance_bfs(p3.graph(), pred, tokens(3, {0, 2}), tokens(3, {0, 1})).distance == 1);
  CHECK(min_cost_matching(p3.graph(), tokens(3, {0, 2}), tokens(3, {0, 1})).cost.value == 1);
}

TEST_CASE("input validation order") {
  const RootedTree p4(path_graph(4));
  const auto system = closed_neighborhood_system(p4);
  CHECK_THROWS_AS(reconf_tree(p4, system, tokens(4, {1}), tokens(4, {1, 2})), SizeError);
  CHECK_THROWS_AS(reconf_tree(p4, system, tokens(4, {1}), tokens(4, {2})), FeasibilityError);
  CHECK_THROWS_AS(reconf_tree(p4, SetSystem({{0, 2}}), tokens(4, {0}), tokens(4, {2})), InputError);
  CHECK_THROWS_AS(reconf_tree(p4, system, tokens(5, {1, 3}), tokens(5, {1, 3})), InputError);
}

TEST_CASE("expand_moves") {
  CHECK(expand_moves(MoveSequence({{0, 1, 2}})) == std::vector<Edge>{{0, 1}, {0, 1}});
  CHECK(expand_moves(MoveSequence()).empty());
  CHECK(expand_moves(MoveSequence({{2, 3, 1}, {0, 1, 1}})) == std::vector<Edge>{{2, 3}, {0, 1}});
  MoveSequence seq;
  CHECK_THROWS_AS(seq.push_back({0, 1, 0}), InputError);
  seq.append_reversed({{1, 2, 1}, {3, 4, 2}});
  CHECK(seq.moves() == std::vector<Move>{{3, 4, 2}, {1, 2, 1}});
  CHECK(seq.total_length() == 3);
}

TEST_CASE("single pass equals the literal recursion") {
  Rng rng(77);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng.below(12);
    const Vertex root = static_cast<Vertex>(rng.below(n));
    const RootedTree tree(Graph(n, random_tree_edges(n, rng)), root);
    const bool dominating = rng.below(2) == 0;
    const SetSystem system = dominating ? closed_neighborhood_system(tree)
                                        : SetSystem::on_tree(tree, random_subtree_family(
                                                                       tree.graph(), 1 + rng.below(5), rng));
    const auto pred = FeasibilityPredicate::hitting(system);
    const std::size_t k = std::min<std::size_t>(n, 1 + rng.below(4));
    auto hs = random_feasible_set(n, pred, k, rng);
    auto ht = random_feasible_set(n, pred, k, rng);
    if (!hs || !ht) continue;
    if (rng.below(3) == 0) {
      hs = random_feasible_walk(tree.graph(), pred, *hs, 6, rng);
      hs->add(hs->support().front());
      ht->add(ht->support().back());
    }
    const auto seq = reconf_tree(tree, system, *hs, *ht);
    RecursiveTrace trace;
    reconf_recursive(tree, *hs, *ht, trace);
    CHECK(expand_moves(seq) == trace.moves);
    CHECK(seq.size() < std::max<std::size_t>(n, 1));
    for (std::size_t i = 1; i < trace.chosen_depths.size(); ++i) {
      CHECK(trace.chosen_depths[i] <= trace.chosen_depths[i - 1]);
    }
    const auto states = replay(*hs, seq);
    CHECK(states.back() == *ht);
    for (const auto& s : states) CHECK(is_hitting(system, s));
    CHECK(seq.total_length() == min_cost_matching(tree.graph(), *hs, *ht).cost.value);
  }
}

TEST_CASE("tree sequences match the reconfiguration distance") {
  Rng rng(78);
  int checked = 0;
  while (checked < 120) {
    const std::size_t n = 2 + rng.below(9);
    const RootedTree tree(Graph(n, random_tree_edges(n, rng)));
    const auto pred = FeasibilityPredicate::dominating(tree.graph());
    const std::size_t k = std::min<std::size_t>(n, 1 + rng.below(3));
    const auto ds = random_feasible_set(n, pred, k, rng);
    const auto dt = random_feasible_set(n, pred, k, rng);
    if (!ds || !dt) continue;
    const auto seq = reconf_tree_dominating(tree, *ds, *dt);
    CHECK(certify_optimality(tree.graph(), pred, *ds, *dt, seq));
    ++checked;
  }
}

TEST_CASE("path transfer compresses to at most n triples") {
  for (std::size_t n : {2u, 3u, 10u, 101u, 1000u}) {
    const Instance inst = path_transfer_instance(n);
    const RootedTree tree(Graph(n, inst.edges));
    const auto seq = reconf_tree_dominating(tree, inst.source, inst.target);
    CHECK(seq.size() <= n);
    CHECK(seq.total_length() == min_cost_matching(tree.graph(), inst.source, inst.target).cost.value);
    if (n <= 101) {
      const auto pred = FeasibilityPredicate::dominating(tree.graph());
      const auto check = verify_sequence(tree.graph(), pred, inst.source, seq);
      CHECK(check.ok);
      CHECK(check.final_state == inst.target);
    }
  }
}

TEST_CASE("path transfer time grows linearly") {
  auto best_seconds = [](std::size_t n) {
    const Instance inst = path_transfer_instance(n);
    const RootedTree tree(Graph(n, inst.edges));
    double best = 1e9;
    for (int round = 0; round < 5; ++round) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto seq = reconf_tree_dominating(tree, inst.source, inst.target);
      best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      CHECK(seq.size() <= n);
    }
    return best;
  };
  const double small = best_seconds(200'000);
  const double large = best_seconds(400'000);
  CAPTURE(small);
  CAPTURE(large);
  CHECK(large / small < 2.5);
}
