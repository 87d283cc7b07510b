// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_support.hpp"
#include "reconf/errors.hpp"
#include "reconf/fast_match.hpp"
#include "reconf/instance.hpp"
#include "reconf/interval_reconfig.hpp"
#include "reconf/matching.hpp"
#include "reconf/oracle.hpp"
#include "reconf/tree_reconfig.hpp"
#include "support.hpp"

using namespace reconf;
using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

/// Counts failures and keeps the first few descriptions.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 3) first_ << (first_.tellp() > 0 ? "; " : "") << what;
  }
  bool clean() const { return failures_ == 0; }
  int failures() const { return failures_; }
  std::string first() const { return first_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream first_;
};

/// length == BFS distance == c*, plus a valid replay ending at the goal.
bool triple_equality(const Graph& g, const FeasibilityPredicate& pred, const TokenMultiset& s,
                     const TokenMultiset& t, const MoveSequence& seq, std::string& why) {
  const auto replay = verify_sequence(g, pred, s, seq);
  if (!replay.ok) {
    why = *replay.failure;
    return false;
  }
  if (!(replay.final_state == t)) {
    why = "sequence ends at " + to_string(replay.final_state);
    return false;
  }
  const auto bfs = reconfig_distance_bfs(g, pred, s, t);
  const auto lower = min_cost_matching(g, s, t).cost;
  if (bfs.status != BfsResult::Status::Reached || bfs.distance != seq.total_length() ||
      lower != MatchCost{seq.total_length(), false}) {
    std::ostringstream os;
    os << "length " << seq.total_length() << ", bfs "
       << (bfs.status == BfsResult::Status::Reached ? std::to_string(bfs.distance) : "n/a")
       << ", c* " << to_string(lower);
    why = os.str();
    return false;
  }
  return true;
}

Outcome tree_optimality() {
  const auto t0 = Clock::now();
  Rng rng(1001);
  Tally tally;
  int done = 0;
  Count total_length = 0;
  while (done < 500) {
    const std::size_t n = 4 + rng.below(9);
    const RootedTree tree(Graph(n, random_tree_edges(n, rng)));
    const auto pred = FeasibilityPredicate::dominating(tree.graph());
    const auto ends = random_endpoints(n, pred, 4, rng);
    if (!ends) continue;
    const auto& [ds, dt] = *ends;
    ++done;
    total_length += min_cost_matching(tree.graph(), ds, dt).cost.value;
    std::string why;
    if (!triple_equality(tree.graph(), pred, ds, dt, reconf_tree_dominating(tree, ds, dt), why)) {
      tally.fail("instance " + std::to_string(done) + ": " + why);
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << done - tally.failures() << "/" << done << " exact (" << total_length
     << " moves in total), " << secs << " s (limit 60 s)";
  if (!tally.clean()) os << "; " << tally.first();
  return {tally.clean() && secs < 60.0, os.str()};
}

Outcome hitting_optimality() {
  Rng rng(1002);
  Tally tally;
  int done = 0;
  while (done < 200) {
    const std::size_t n = 4 + rng.below(9);
    const RootedTree tree(Graph(n, random_tree_edges(n, rng)));
    const SetSystem system =
        SetSystem::on_tree(tree, random_subtree_family(tree.graph(), 1 + rng.below(6), rng));
    const auto pred = FeasibilityPredicate::hitting(system);
    const auto ends = random_endpoints(n, pred, 4, rng);
    if (!ends) continue;
    const auto& [hs, ht] = *ends;
    ++done;
    std::string why;
    if (!triple_equality(tree.graph(), pred, hs, ht, reconf_tree(tree, system, hs, ht), why)) {
      tally.fail("instance " + std::to_string(done) + ": " + why);
    }
  }
  std::ostringstream os;
  os << done - tally.failures() << "/" << done << " exact";
  if (!tally.clean()) os << "; " << tally.first();
  return {tally.clean(), os.str()};
}

Outcome interval_optimality() {
  Rng rng(1003);
  Tally tally;
  int done = 0, repairs = 0;
  Count total_length = 0;
  while (done < 300) {
    const std::size_t n = 3 + rng.below(8);
    const IntervalRepresentation rep(random_intervals(n, rng, true));
    const Graph g = intersection_graph(rep);
    const auto pred = FeasibilityPredicate::dominating(g);
    const auto ends = random_endpoints(n, pred, 3, rng);
    if (!ends) continue;
    const auto& [ds, dt] = *ends;
    ++done;
    IntervalReconfOptions options;
    options.on_repair = [&](const RepairEvent& e) {
      ++repairs;
      const MatchCost after = matching_cost(e.after, g);
      if (!satisfies_matching_condition(e.after, e.d_s, e.d_t) ||
          after != brute_force_matching(g, e.d_s, e.d_t)) {
        tally.fail("repair output not minimum-cost on instance " + std::to_string(done));
      }
    };
    const auto result = reconf_interval(rep, ds, dt, options);
    total_length += result.moves.total_length();
    std::string why;
    if (result.status != ReconfStatus::Solved ||
        !triple_equality(g, pred, ds, dt, result.moves, why)) {
      tally.fail("instance " + std::to_string(done) + ": " + why);
    }
  }
  // Stalls are rare at this size, so mine extra ones to exercise the repair check.
  int mined = 0;
  Rng stall_rng(2003);
  for (int round = 0; round < 400000 && mined < 5; ++round) {
    const std::size_t n = 3 + stall_rng.below(8);
    const IntervalRepresentation rep(random_intervals(n, stall_rng, true));
    const Graph g = intersection_graph(rep);
    const auto pred = FeasibilityPredicate::dominating(g);
    const auto ends = random_endpoints(n, pred, 3, stall_rng);
    if (!ends) continue;
    IntervalReconfOptions options;
    options.on_repair = [&](const RepairEvent& e) {
      ++mined;
      if (!satisfies_matching_condition(e.after, e.d_s, e.d_t) ||
          matching_cost(e.after, g) != brute_force_matching(g, e.d_s, e.d_t) ||
          !find_greedy_move(g, e.d_s, e.d_t, e.after)) {
        tally.fail("mined repair " + std::to_string(mined) + " not minimum-cost");
      }
    };
    const auto result = reconf_interval(rep, ends->first, ends->second, options);
    std::string why;
    if (!triple_equality(g, pred, ends->first, ends->second, result.moves, why)) {
      tally.fail("mined round " + std::to_string(round) + ": " + why);
    }
  }
  if (mined < 5) tally.fail("found only " + std::to_string(mined) + " stalls to re-certify");
  std::ostringstream os;
  os << done - tally.failures() << "/" << done << " exact (" << total_length
     << " moves in total), " << repairs << " matching repairs re-certified, plus " << mined
     << " from mined stalls";
  if (!tally.clean()) os << "; " << tally.first();
  return {tally.clean(), os.str()};
}

Outcome lower_bound() {
  Rng rng(1004);
  Tally tally;
  int solved = 0, equal_on_structured = 0, structured = 0;
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng.below(9);
    const int family = round % 3;
    Graph g;
    if (family == 0) {
      g = random_connected_graph(n, 0.25, rng);
    } else if (family == 1) {
      g = Graph(n, random_tree_edges(n, rng));
    } else {
      g = intersection_graph(IntervalRepresentation(random_intervals(n, rng, true)));
    }
    const auto pred = FeasibilityPredicate::dominating(g);
    const auto ends = random_endpoints(n, pred, 4, rng);
    if (!ends) continue;
    const auto& [a, b] = *ends;
    const auto bfs = reconfig_distance_bfs(g, pred, a, b);
    if (bfs.status != BfsResult::Status::Reached) continue;
    ++solved;
    const Count lower = min_cost_matching(g, a, b).cost.value;
    if (bfs.distance < lower) tally.fail("d_R < c* on round " + std::to_string(round));
    if (family != 0) {
      ++structured;
      if (bfs.distance == lower) {
        ++equal_on_structured;
      } else {
        tally.fail("d_R != c* on a tree/interval instance, round " + std::to_string(round));
      }
    }
  }
  const Graph c4 = cycle_graph(4);
  const auto c4_result = reconfig_distance_bfs(c4, FeasibilityPredicate::independent_set(c4),
                                               tokens(4, {0, 2}), tokens(4, {1, 3}));
  const bool c4_ok = c4_result.status == BfsResult::Status::Unreachable;
  if (!c4_ok) tally.fail("C4 independent sets not reported unreachable");
  std::ostringstream os;
  os << solved << " oracle-solved instances with d_R >= c*, " << equal_on_structured << "/"
     << structured << " tree/interval equal, C4 independent-set "
     << (c4_ok ? "unreachable" : "NOT unreachable");
  if (!tally.clean()) os << "; " << tally.first();
  return {tally.clean(), os.str()};
}

Outcome matching_lemmas() {
  Rng rng(1005);
  Tally tally;
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng.below(10);
    const Graph g = random_connected_graph(n, 0.2, rng);
    const std::size_t k = 1 + rng.below(6);
    const auto a = random_multiset(n, k, rng);
    const auto b = random_multiset(n, k, rng);
    const auto exact = min_cost_matching(g, a, b);
    const Matching m = normalize_matching(g, exact.matching, a, b);
    bool ok = matching_cost(m, g) == exact.cost && satisfies_matching_condition(m, a, b);
    const auto shared = multiset_intersection(a, b);
    for (std::size_t v = 0; v < n; ++v) {
      ok = ok && m.count(static_cast<Vertex>(v), static_cast<Vertex>(v)) == shared[static_cast<Vertex>(v)];
    }
    if (!ok) tally.fail("normalize round " + std::to_string(round));
  }
  int slides = 0;
  while (slides < 100) {
    const std::size_t n = 2 + rng.below(9);
    const Graph g = random_connected_graph(n, 0.2, rng);
    const std::size_t k = 1 + rng.below(5);
    const auto a = random_multiset(n, k, rng);
    const auto b = random_multiset(n, k, rng);
    const auto exact = min_cost_matching(g, a, b);
    std::vector<std::pair<Vertex, Vertex>> moving;
    for (const auto& [key, mult] : exact.matching.pairs()) {
      if (key.first != key.second) moving.push_back(key);
    }
    if (moving.empty()) continue;
    const auto [u, v] = moving[rng.below(moving.size())];
    const auto succ = succ_set(g, u, v);
    const Vertex next = succ[rng.below(succ.size())];
    const Matching m2 = rematch_after_slide(g, exact.matching, u, next, v);
    const Count recomputed = min_cost_matching(g, slide(a, u, next), b).cost.value;
    if (matching_cost(m2, g).value != exact.cost.value - 1 || recomputed != exact.cost.value - 1) {
      tally.fail("rematch slide " + std::to_string(slides));
    }
    ++slides;
  }
  std::ostringstream os;
  os << "200 normalizations and " << slides << " rematch slides checked, " << tally.failures()
     << " failures";
  if (!tally.clean()) os << "; " << tally.first();
  return {tally.clean(), os.str()};
}

double time_fast_match(std::size_t n, Rng& rng) {
  const IntervalRepresentation rep(random_intervals(n, rng, true));
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  rng.shuffle(order);
  TokenMultiset a(n), b(n);
  for (std::size_t i = 0; i < n / 4; ++i) {
    a.add(order[i]);
    b.add(order[n / 4 + i]);
  }
  double best = 1e9;
  for (int rep_i = 0; rep_i < 5; ++rep_i) {
    const auto t0 = Clock::now();
    const auto result = fast_match_intervals(rep, a, b);
    best = std::min(best, seconds_since(t0));
    if (!result.cost.finite()) return -1;
  }
  return best;
}

Outcome fast_matcher() {
  Rng rng(1006);
  Tally tally;
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng.below(14);
    const IntervalRepresentation rep(random_intervals(n, rng, rng.below(4) != 0));
    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
    rng.shuffle(order);
    const std::size_t k = 1 + rng.below(n / 2);
    TokenMultiset a(n), b(n);
    for (std::size_t i = 0; i < k; ++i) {
      a.add(order[i]);
      b.add(order[k + i]);
    }
    const auto fast = fast_match_intervals(rep, a, b).cost;
    const auto exact = min_cost_matching(intersection_graph(rep), a, b).cost;
    if (fast != exact) {
      tally.fail("round " + std::to_string(round) + ": fast " + to_string(fast) + " vs exact " +
                 to_string(exact));
    }
  }
  const double small = time_fast_match(10'000, rng);
  const double large = time_fast_match(100'000, rng);
  const double ratio = large / small;
  std::ostringstream os;
  os << 300 - tally.failures() << "/300 equal to the exact solver; time ratio n=1e5/n=1e4 = "
     << ratio << " (limit 15)";
  if (!tally.clean()) os << "; " << tally.first();
  return {tally.clean() && small > 0 && large > 0 && ratio < 15.0, os.str()};
}

Outcome tree_scaling() {
  const std::size_t n = 100'000;
  const Instance inst = path_transfer_instance(n);
  const RootedTree tree(Graph(n, inst.edges));
  const auto t0 = Clock::now();
  const auto seq = reconf_tree_dominating(tree, inst.source, inst.target);
  const double secs = seconds_since(t0);
  // On a path the sorted pairing is a minimum-cost matching.
  const auto a = inst.source.expand();
  const auto b = inst.target.expand();
  Count lower = 0;
  for (std::size_t i = 0; i < a.size(); ++i) lower += std::abs(a[i] - b[i]);
  std::ostringstream os;
  os << "n=" << n << ", " << inst.source.total() << " tokens, " << secs << " s (limit 1 s), "
     << seq.size() << " triples (limit " << n << "), " << seq.total_length()
     << " unit moves (need > 1e6, c* " << lower << ")";
  return {secs < 1.0 && seq.size() <= n && seq.total_length() > 1'000'000 &&
              seq.total_length() == lower,
          os.str()};
}

Outcome interval_scaling() {
  Rng rng(1008);
  double worst = 0;
  Count longest = 0;
  bool ok = true;
  for (int round = 0; round < 5; ++round) {
    const std::size_t n = 200;
    const IntervalRepresentation rep(random_intervals(n, rng, true));
    const Graph g = intersection_graph(rep);
    const auto pred = FeasibilityPredicate::dominating(g);
    auto ds = random_minimal_feasible_set(n, pred, rng);
    auto dt = random_minimal_feasible_set(n, pred, rng);
    const auto k = static_cast<std::size_t>(std::max(ds.total(), dt.total()));
    ds = pad_to(std::move(ds), k, rng);
    dt = pad_to(std::move(dt), k, rng);
    const auto t0 = Clock::now();
    const auto result = reconf_interval(rep, ds, dt);
    const double secs = seconds_since(t0);
    worst = std::max(worst, secs);
    longest = std::max(longest, result.moves.total_length());
    const auto replay = verify_sequence(g, pred, ds, result.moves);
    ok = ok && secs < 10.0 && replay.ok && replay.final_state == dt &&
         result.moves.total_length() == min_cost_matching(g, ds, dt).cost.value;
  }
  std::ostringstream os;
  os << "5 instances n=200, slowest " << worst << " s (limit 10 s), longest sequence " << longest;
  return {ok, os.str()};
}

Outcome shortest_path_structure() {
  Rng rng(1009);
  int paths = 0, passed = 0, nested_start = 0;
  while (paths < 100) {
    const std::size_t n = 3 + rng.below(14);
    const IntervalRepresentation rep(random_intervals(n, rng, true));
    const Graph g = intersection_graph(rep);
    Vertex a = static_cast<Vertex>(rng.below(n));
    Vertex b = static_cast<Vertex>(rng.below(n));
    const Count d = distances_from(g, a)[static_cast<std::size_t>(b)];
    if (d == kUnreachable || d < 2) continue;
    if (rep.right(a) > rep.right(b)) std::swap(a, b);
    std::vector<Vertex> path{a};
    while (path.back() != b) {
      const auto s = succ_set(g, path.back(), b);
      path.push_back(s[rng.below(s.size())]);
    }
    ++paths;
    if (check_shortest_path_structure(rep, path)) {
      ++passed;
    } else if (classify_relation(rep, path[1], path[0]) == Relation::Contains) {
      ++nested_start;
    }
  }
  std::ostringstream os;
  os << passed << "/" << paths << " paths pass";
  if (passed != paths) {
    os << "; " << nested_start << " of the " << paths - passed
       << " failures have the first interval nested inside the second";
  }
  return {passed == paths, os.str()};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome end_to_end() {
  Tally tally;
  int solved = 0;
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    for (const char* kind : {"tree", "interval"}) {
      const std::size_t n = 4 + seed % 7;
      // Small k can exceed what the random structures allow; move up until gen succeeds.
      std::string args;
      CommandResult gen;
      for (std::size_t k = 2 + seed % 2; k <= 4 && gen.exit_code != 0; ++k) {
        args = std::string("gen --kind ") + kind + " --n " + std::to_string(n) + " --k " +
               std::to_string(k) + " --seed " + std::to_string(seed);
        gen = run_cli(args);
      }
      if (gen.exit_code != 0) {
        tally.fail(args + " exited " + std::to_string(gen.exit_code));
        continue;
      }
      const std::string stem = std::string(kind) + "_" + std::to_string(seed);
      const auto instance = scratch_file(stem + ".txt", gen.out);
      const auto solve = run_cli("solve " + instance.string());
      const auto moves = scratch_file(stem + ".moves", solve.out);
      const auto verify = run_cli("verify " + instance.string() + " " + moves.string() + " --optimal");
      ++solved;
      if (solve.exit_code != 0 || verify.exit_code != 0 ||
          verify.out.find("note:") != std::string::npos) {
        tally.fail(stem + ": solve exit " + std::to_string(solve.exit_code) + ", verify exit " +
                   std::to_string(verify.exit_code));
      }
    }
  }
  int fixtures = 0;
  for (const char* name : {"p4_tree.txt", "two_intervals.txt", "c4_graph.txt",
                           "p3_vertex_cover.txt", "p4_intervals.txt"}) {
    ++fixtures;
    const std::string text = read_text(fixture(name));
    if (emit_instance(parse_instance(text)) != text) tally.fail(std::string(name) + " round trip");
  }
  const std::string moves = read_text(fixture("p4_tree.moves"));
  if (emit_moves(parse_moves(moves)) != moves) tally.fail("p4_tree.moves round trip");
  std::ostringstream os;
  os << solved << " generated instances solved and verified optimal, " << fixtures + 1
     << " fixtures round-trip";
  if (!tally.clean()) os << "; " << tally.first();
  return {tally.clean(), os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"tree optimality", tree_optimality},
      {"hitting-set optimality", hitting_optimality},
      {"interval optimality", interval_optimality},
      {"matching lower bound", lower_bound},
      {"matching lemmas", matching_lemmas},
      {"fast interval matcher", fast_matcher},
      {"tree scaling", tree_scaling},
      {"interval scaling", interval_scaling},
      {"shortest path structure", shortest_path_structure},
      {"end to end", end_to_end},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " ("
              << criteria[i].first << "): " << outcome.detail << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
