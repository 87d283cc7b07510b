// reconf: shortest token-sliding reconfiguration of dominating / hitting sets.
//
// Exit codes: 0 ok, 1 invalid input, 2 infeasible / unreachable / failed verification.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reconf/errors.hpp"
#include "reconf/fast_match.hpp"
#include "reconf/feasibility.hpp"
#include "reconf/generate.hpp"
#include "reconf/instance.hpp"
#include "reconf/interval_reconfig.hpp"
#include "reconf/log.hpp"
#include "reconf/matching.hpp"
#include "reconf/oracle.hpp"
#include "reconf/tree_reconfig.hpp"

using namespace reconf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;

/// Thrown for outcomes that map to exit code 2 without being input errors.
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

/// Feasibility predicate for an instance plus the objects it refers to.
struct Problem {
  Graph graph;
  SetSystem sets;
  bool hitting = false;

  explicit Problem(const Instance& inst) : graph(instance_graph(inst)), hitting(!inst.sets.empty()) {
    if (hitting) sets = SetSystem(inst.sets);
  }

  FeasibilityPredicate predicate() const {
    return hitting ? FeasibilityPredicate::hitting(sets) : FeasibilityPredicate::dominating(graph);
  }
};

MoveSequence solve(const Instance& inst, Vertex root) {
  switch (inst.kind) {
    case StructureKind::Tree: {
      const RootedTree tree(Graph(inst.n, inst.edges), root);
      if (inst.sets.empty()) return reconf_tree_dominating(tree, inst.source, inst.target);
      return reconf_tree(tree, SetSystem::on_tree(tree, inst.sets), inst.source, inst.target);
    }
    case StructureKind::Intervals: {
      const auto result =
          reconf_interval(normalize_representation(inst.intervals), inst.source, inst.target);
      if (result.status == ReconfStatus::Unreachable) {
        throw Infeasible("unreachable: tokens cannot move between components");
      }
      return result.moves;
    }
    case StructureKind::Graph:
      break;
  }
  throw InputError("solve supports tree and interval instances; use 'oracle' for general graphs");
}

int cmd_solve(const std::string& file, Vertex root) {
  const Instance inst = load_instance(file);
  std::cout << emit_moves(solve(inst, root));
  return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& moves_file, bool optimal,
               std::size_t cap) {
  const Instance inst = load_instance(file);
  const MoveSequence seq = parse_moves(read_file(moves_file));
  const Problem problem(inst);
  const auto pred = problem.predicate();
  const auto replay = verify_sequence(problem.graph, pred, inst.source, seq);
  if (!replay.ok) {
    std::cout << "invalid: " << *replay.failure << '\n';
    return kExitInfeasible;
  }
  if (!(replay.final_state == inst.target)) {
    std::cout << "invalid: sequence ends at " << to_string(replay.final_state) << '\n';
    return kExitInfeasible;
  }
  if (optimal) {
    const auto lower = min_cost_matching(problem.graph, inst.source, inst.target).cost;
    try {
      if (!certify_optimality(problem.graph, pred, inst.source, inst.target, seq, cap)) {
        std::cout << "suboptimal: length " << seq.total_length() << ", matching bound "
                  << to_string(lower) << '\n';
        return kExitInfeasible;
      }
    } catch (const CapExceededError&) {
      // Beyond oracle scale the matching bound alone certifies optimality.
      if (!lower.finite() || lower.value != seq.total_length()) {
        std::cout << "suboptimal: length " << seq.total_length() << ", matching bound "
                  << to_string(lower) << '\n';
        return kExitInfeasible;
      }
      std::cout << "note: state cap reached, certified by the matching bound only\n";
    }
    std::cout << "ok optimal length " << seq.total_length() << '\n';
    return kExitOk;
  }
  std::cout << "ok length " << seq.total_length() << '\n';
  return kExitOk;
}

int cmd_oracle(const std::string& file, const std::string& pred_name, std::size_t cap, bool dot) {
  const Instance inst = load_instance(file);
  const Problem problem(inst);
  std::optional<FeasibilityPredicate> pred;
  if (pred_name.empty()) {
    pred = problem.predicate();
  } else if (pred_name == "dominating") {
    pred = FeasibilityPredicate::dominating(problem.graph);
  } else if (pred_name == "independent") {
    pred = FeasibilityPredicate::independent_set(problem.graph);
  } else if (pred_name == "hitting") {
    if (!problem.hitting) throw InputError("--pred hitting needs 'set' lines in the instance");
    pred = FeasibilityPredicate::hitting(problem.sets);
  } else {
    throw InputError("unknown predicate '" + pred_name + "'");
  }
  if (!(*pred)(inst.source) || !(*pred)(inst.target)) {
    std::cout << "infeasible endpoint\n";
    return kExitInfeasible;
  }
  if (dot) {
    std::cout << reconfiguration_graph_dot(problem.graph, *pred, inst.source, cap);
    return kExitOk;
  }
  const auto result = reconfig_distance_bfs(problem.graph, *pred, inst.source, inst.target, cap);
  switch (result.status) {
    case BfsResult::Status::Reached:
      std::cout << result.distance << '\n';
      return kExitOk;
    case BfsResult::Status::Unreachable:
      std::cout << "unreachable\n";
      return kExitInfeasible;
    case BfsResult::Status::CapExceeded:
      std::cout << "cap exceeded after " << result.visited << " configurations\n";
      return kExitInfeasible;
  }
  return kExitInfeasible;
}

int cmd_match(const std::string& file, bool fast) {
  const Instance inst = load_instance(file);
  MatchingResult result;
  if (fast) {
    if (inst.kind != StructureKind::Intervals) throw InputError("--fast needs an interval instance");
    result = fast_match_intervals(normalize_representation(inst.intervals), inst.source, inst.target);
  } else {
    result = min_cost_matching(instance_graph(inst), inst.source, inst.target);
  }
  std::cout << "cost " << to_string(result.cost) << '\n';
  std::cout << "pairs " << result.matching.pairs().size() << '\n';
  for (const auto& [key, mult] : result.matching.pairs()) {
    std::cout << key.first << ' ' << key.second << ' ' << mult << '\n';
  }
  return result.cost.finite() ? kExitOk : kExitInfeasible;
}

StructureKind parse_kind(const std::string& kind) {
  if (kind == "tree") return StructureKind::Tree;
  if (kind == "interval" || kind == "intervals") return StructureKind::Intervals;
  throw InputError("unknown kind '" + kind + "' (tree|interval)");
}

int cmd_gen(const std::string& kind, std::size_t n, std::size_t k, std::uint64_t seed) {
  std::cout << emit_instance(generate_instance(parse_kind(kind), n, k, seed));
  return kExitOk;
}

int cmd_bench(const std::string& kind, const std::vector<std::size_t>& sizes, std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  auto ms_since = [](Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };
  std::cout << "n,total_moves,wall_ms\n";
  Rng rng(seed);
  for (std::size_t n : sizes) {
    Count total = 0;
    double wall = 0;
    if (kind == "tree") {
      const Instance inst = path_transfer_instance(n);
      const RootedTree tree(Graph(inst.n, inst.edges));
      const auto t0 = Clock::now();
      total = reconf_tree_dominating(tree, inst.source, inst.target).total_length();
      wall = ms_since(t0);
    } else if (kind == "interval") {
      const IntervalRepresentation rep(random_intervals(n, rng, true));
      const Graph g = intersection_graph(rep);
      const auto pred = FeasibilityPredicate::dominating(g);
      auto s = random_minimal_feasible_set(n, pred, rng);
      auto t = random_minimal_feasible_set(n, pred, rng);
      const auto k = static_cast<std::size_t>(std::max(s.total(), t.total()));
      s = pad_to(std::move(s), k, rng);
      t = pad_to(std::move(t), k, rng);
      const auto t0 = Clock::now();
      total = reconf_interval(rep, s, t).moves.total_length();
      wall = ms_since(t0);
    } else if (kind == "match") {
      const IntervalRepresentation rep(random_intervals(n, rng, true));
      std::vector<Vertex> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
      rng.shuffle(order);
      TokenMultiset a(n), b(n);
      for (std::size_t i = 0; i < n / 4; ++i) {
        a.add(order[i]);
        b.add(order[n / 4 + i]);
      }
      const auto t0 = Clock::now();
      total = fast_match_intervals(rep, a, b).cost.value;
      wall = ms_since(t0);
    } else {
      throw InputError("unknown bench kind '" + kind + "' (tree|interval|match)");
    }
    std::cout << n << ',' << total << ',' << wall << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest token-sliding reconfiguration on trees and interval graphs"};
  app.require_subcommand(1);

  std::string file, moves_file, pred_name, kind = "tree";
  Vertex root = 0;
  bool optimal = false, dot = false, fast = false;
  std::size_t cap = kDefaultStateCap, n = 0, k = 0;
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes{1000, 2000, 4000};

  auto* solve_cmd = app.add_subcommand("solve", "Print a shortest move sequence");
  solve_cmd->add_option("file", file, "Instance file")->required();
  solve_cmd->add_option("--root", root, "Root vertex for tree instances");

  auto* verify_cmd = app.add_subcommand("verify", "Check a move sequence against an instance");
  verify_cmd->add_option("file", file, "Instance file")->required();
  verify_cmd->add_option("moves", moves_file, "Move file (output of solve)")->required();
  verify_cmd->add_flag("--optimal", optimal, "Also require a shortest sequence");
  verify_cmd->add_option("--cap", cap, "State cap for the optimality search");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive BFS distance");
  oracle_cmd->add_option("file", file, "Instance file")->required();
  oracle_cmd->add_option("--pred", pred_name, "dominating|independent|hitting");
  oracle_cmd->add_option("--cap", cap, "Maximum configurations to visit");
  oracle_cmd->add_flag("--dot", dot, "Print the reconfiguration graph component as DOT");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--kind", kind, "tree|interval")->required();
  gen_cmd->add_option("--n", n, "Vertices")->required();
  gen_cmd->add_option("--k", k, "Tokens")->required();
  gen_cmd->add_option("--seed", seed, "Seed");

  auto* bench_cmd = app.add_subcommand("bench", "Time solvers over a size ladder (CSV)");
  bench_cmd->add_option("--kind", kind, "tree|interval|match")->required();
  bench_cmd->add_option("--sizes", sizes, "Comma-separated sizes")->delimiter(',');
  bench_cmd->add_option("--seed", seed, "Seed");

  auto* match_cmd = app.add_subcommand("match", "Minimum-cost matching between the token sets");
  match_cmd->add_option("file", file, "Instance file")->required();
  match_cmd->add_flag("--fast", fast, "Greedy interval matcher");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(file, root);
    if (*verify_cmd) return cmd_verify(file, moves_file, optimal, cap);
    if (*oracle_cmd) return cmd_oracle(file, pred_name, cap, dot);
    if (*gen_cmd) return cmd_gen(kind, n, k, seed);
    if (*bench_cmd) return cmd_bench(kind, sizes, seed);
    if (*match_cmd) return cmd_match(file, fast);
  } catch (const Infeasible& e) {
    std::cout << e.what() << '\n';
    return kExitInfeasible;
  } catch (const FeasibilityError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const CapExceededError& e) {
    std::cerr << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
