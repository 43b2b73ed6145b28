#pragma once

#include <vector>

#include "treeinv/tree.hpp"

namespace treeinv {

// Distinct edge costs sorted ascending. Rung indices are 1-based; index 0 is
// reserved for the empty restricted set.
struct CostLadder {
  std::vector<Value> rungs;
  std::vector<int> rung_of_edge;  // per edge: k with rung_value(k) == c(e)

  int rung_count() const { return static_cast<int>(rungs.size()); }
  Value rung_value(int k) const { return rungs[k - 1]; }
};

CostLadder build_cost_ladder(const Instance& inst);

// The edges allowed to change at cost level k: c(e) <= rung_value(k).
// rung 0 is the empty set, rung_count() the full edge set.
struct RestrictedEdgeSet {
  int rung = 0;
  std::vector<char> member;  // per edge

  bool contains(EdgeId e) const { return member[e] != 0; }
  int size() const;
};

RestrictedEdgeSet restricted_edge_set(const CostLadder& ladder, int k);

// Per-leaf aggregates for a fixed restricted set, all computed in one pass:
//   lo0    = l(P0 ∩ Ek) + w(P0 \ Ek)
//   hi[i]  = u(Pi ∩ Ek) + w(Pi \ Ek)
//   mix[i] = l(Pi ∩ P0 ∩ Ek) + u((Pi \ P0) ∩ Ek) + w(Pi \ Ek)
// hi/mix are indexed like Instance::tree.leaves.
struct MixedPathSums {
  Value lo0 = 0;
  std::vector<Value> hi;
  std::vector<Value> mix;
};

MixedPathSums compute_mixed_path_sums(const Instance& inst, const RestrictedEdgeSet& set);

// Whether some weight vector changing only edges of the restricted set makes
// the designated path sum to the target exactly while every root-leaf path
// reaches at least the target. O(n) per call.
bool is_feasible_cost(const Instance& inst, const RestrictedEdgeSet& set);

// Builds such a weight vector for a feasible restricted set: the edges of
// the set are pushed to their upper bound, except along the tail of the
// designated path where they drop to their lower bound, with one interior
// "delta" edge absorbing the remainder so the designated path hits the
// target exactly. ContractError when the set is infeasible.
WeightAssignment construct_riovspt_solution(const Instance& inst, const RestrictedEdgeSet& set);

}  // namespace treeinv
