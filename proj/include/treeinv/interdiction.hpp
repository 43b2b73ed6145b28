#pragma once

#include <optional>
#include <vector>

#include "treeinv/tree.hpp"

namespace treeinv {

struct ShortestPathResult {
  NodeId leaf = -1;
  Value value = 0;
};

// The minimum root-leaf path sum under the given weights, with the
// minimizing leaf (ties go to the first leaf in canonical order). O(n).
ShortestPathResult shortest_root_leaf(const Instance& inst, const WeightAssignment& wa);

// Optimal upgrade under a bottleneck budget: every edge whose cost fits the
// budget rises to its upper bound, everything else keeps its weight. O(n).
WeightAssignment solve_mspit(const Instance& inst, Value budget);

struct InterdictionReport {
  SolveStatus status = SolveStatus::Infeasible;
  Value objective = 0;
  std::optional<WeightAssignment> assignment;
  Value achieved_shortest = 0;  // shortest root-leaf value of the outcome
  std::vector<ChangedEdge> changed_edges;
  int iterations = 0;  // shortest-path evaluations performed
};

// Minimizes the largest cost among upgraded edges (upgrades only, within
// [w, u]) such that the shortest root-leaf path reaches the target. Binary
// search for the least cost level whose full upgrade reaches the target,
// using the monotonicity of the achieved shortest path in the level;
// O(n log n) total. The designated leaf, if any, is ignored.
InterdictionReport solve_mcspit(const Instance& inst);

}  // namespace treeinv
