#pragma once

#include <optional>
#include <vector>

#include "treeinv/feasibility.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

struct SolveReport {
  SolveStatus status = SolveStatus::Infeasible;
  Value objective = 0;  // 0 when already optimal; meaningless when infeasible
  std::optional<WeightAssignment> assignment;
  std::vector<ChangedEdge> changed_edges;
  int iterations = 0;  // feasibility checks performed
};

// Minimizes the largest cost among changed edges such that, within the
// per-edge bounds, every root-leaf path sums to at least the target and the
// designated path sums to it exactly. Binary search over the cost ladder
// with the invariant "level a infeasible, level b feasible", seeded by the
// empty-set sentinel at level 0; O(n log n) total.
SolveReport solve_riovspt(const Instance& inst);

}  // namespace treeinv
