#include "treeinv/riovspt.hpp"

namespace treeinv {

SolveReport solve_riovspt(const Instance& inst) {
  if (!inst.t0.has_value()) {
    throw InputError("solve_riovspt needs an instance with the designated leaf t0");
  }

  const CostLadder ladder = build_cost_ladder(inst);
  SolveReport report;
  auto feasible = [&](int k) {
    ++report.iterations;
    return is_feasible_cost(inst, restricted_edge_set(ladder, k));
  };

  // Level 0 first: the unmodified weights may already be optimal.
  if (feasible(0)) {
    report.status = SolveStatus::AlreadyOptimal;
    report.objective = 0;
    report.assignment = current_weights(inst);
    return report;
  }
  int lo = 0;
  int hi = ladder.rung_count();
  if (!feasible(hi)) {
    report.status = SolveStatus::Infeasible;
    return report;
  }
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  WeightAssignment wa = construct_riovspt_solution(inst, restricted_edge_set(ladder, hi));
  report.status = SolveStatus::Solved;
  report.objective = ladder.rung_value(hi);
  report.changed_edges = changed_edges(inst, wa);
  report.assignment = std::move(wa);
  return report;
}

}  // namespace treeinv
