#include "treeinv/interdiction.hpp"

#include <vector>

#include "treeinv/feasibility.hpp"

namespace treeinv {

ShortestPathResult shortest_root_leaf(const Instance& inst, const WeightAssignment& wa) {
  if (wa.weights.size() != static_cast<std::size_t>(inst.edge_count())) {
    throw InputError("assignment dimension does not match the edge count");
  }
  const RootedTree& tree = inst.tree;
  std::vector<Value> depth_sum(tree.node_count(), 0);
  for (NodeId v : tree.bfs_order) {
    if (v == tree.root) continue;
    depth_sum[v] = depth_sum[tree.parent[v]] + wa.weights[tree.parent_edge[v]];
  }
  ShortestPathResult best{tree.leaves.front(), depth_sum[tree.leaves.front()]};
  for (NodeId leaf : tree.leaves) {
    if (depth_sum[leaf] < best.value) best = ShortestPathResult{leaf, depth_sum[leaf]};
  }
  return best;
}

WeightAssignment solve_mspit(const Instance& inst, Value budget) {
  WeightAssignment wa;
  wa.weights.reserve(inst.edge_count());
  for (const EdgeAttributes& a : inst.attrs) {
    wa.weights.push_back(a.c <= budget ? a.u : a.w);
  }
  return wa;
}

InterdictionReport solve_mcspit(const Instance& inst) {
  const CostLadder ladder = build_cost_ladder(inst);
  InterdictionReport report;
  // Level 0 means no budget at all; positive levels index the ladder.
  auto reach = [&](int k) {
    ++report.iterations;
    Value budget = k == 0 ? 0 : ladder.rung_value(k);
    return shortest_root_leaf(inst, solve_mspit(inst, budget)).value;
  };

  const Value reach_now = reach(0);
  if (inst.target <= reach_now) {
    report.status = SolveStatus::AlreadyOptimal;
    report.objective = 0;
    report.assignment = current_weights(inst);
    report.achieved_shortest = reach_now;
    return report;
  }
  int lo = 0;
  int hi = ladder.rung_count();
  const Value reach_all = reach(hi);
  if (inst.target > reach_all) {
    report.status = SolveStatus::Infeasible;
    report.achieved_shortest = reach_all;
    return report;
  }
  // Invariant: reach(lo) < target <= reach(hi).
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    if (reach(mid) < inst.target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  WeightAssignment wa = solve_mspit(inst, ladder.rung_value(hi));
  report.status = SolveStatus::Solved;
  report.objective = ladder.rung_value(hi);
  report.achieved_shortest = shortest_root_leaf(inst, wa).value;
  report.changed_edges = changed_edges(inst, wa);
  report.assignment = std::move(wa);
  return report;
}

}  // namespace treeinv
