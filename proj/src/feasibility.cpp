#include "treeinv/feasibility.hpp"

#include <algorithm>
#include <cassert>

namespace treeinv {

CostLadder build_cost_ladder(const Instance& inst) {
  CostLadder ladder;
  ladder.rungs.reserve(inst.edge_count());
  for (const EdgeAttributes& a : inst.attrs) ladder.rungs.push_back(a.c);
  std::sort(ladder.rungs.begin(), ladder.rungs.end());
  ladder.rungs.erase(std::unique(ladder.rungs.begin(), ladder.rungs.end()), ladder.rungs.end());

  ladder.rung_of_edge.reserve(inst.edge_count());
  for (const EdgeAttributes& a : inst.attrs) {
    auto it = std::lower_bound(ladder.rungs.begin(), ladder.rungs.end(), a.c);
    ladder.rung_of_edge.push_back(static_cast<int>(it - ladder.rungs.begin()) + 1);
  }
  return ladder;
}

int RestrictedEdgeSet::size() const {
  return static_cast<int>(std::count(member.begin(), member.end(), char{1}));
}

RestrictedEdgeSet restricted_edge_set(const CostLadder& ladder, int k) {
  if (k < 0 || k > ladder.rung_count()) {
    throw InputError("cost level index " + std::to_string(k) + " out of range [0, " +
                     std::to_string(ladder.rung_count()) + "]");
  }
  RestrictedEdgeSet set;
  set.rung = k;
  set.member.reserve(ladder.rung_of_edge.size());
  for (int rung : ladder.rung_of_edge) set.member.push_back(rung <= k ? 1 : 0);
  return set;
}

MixedPathSums compute_mixed_path_sums(const Instance& inst, const RestrictedEdgeSet& set) {
  if (!inst.t0.has_value()) {
    throw InputError("this operation needs the designated leaf t0");
  }
  if (set.member.size() != static_cast<std::size_t>(inst.edge_count())) {
    throw InputError("restricted set does not match the instance's edge count");
  }
  const RootedTree& tree = inst.tree;
  const int n = tree.node_count();

  // Prefix aggregates from the root, one visit per node.
  std::vector<Value> hi_at(n, 0);
  std::vector<Value> mix_at(n, 0);
  for (NodeId v : tree.bfs_order) {
    if (v == tree.root) continue;
    EdgeId e = tree.parent_edge[v];
    NodeId p = tree.parent[v];
    const EdgeAttributes& a = inst.attrs[e];
    if (set.contains(e)) {
      hi_at[v] = hi_at[p] + a.u;
      mix_at[v] = mix_at[p] + (inst.on_p0[e] ? a.l : a.u);
    } else {
      hi_at[v] = hi_at[p] + a.w;
      mix_at[v] = mix_at[p] + a.w;
    }
  }

  MixedPathSums sums;
  for (NodeId v = *inst.t0; v != tree.root; v = tree.parent[v]) {
    EdgeId e = tree.parent_edge[v];
    sums.lo0 += set.contains(e) ? inst.attrs[e].l : inst.attrs[e].w;
  }
  sums.hi.reserve(tree.leaves.size());
  sums.mix.reserve(tree.leaves.size());
  for (NodeId leaf : tree.leaves) {
    sums.hi.push_back(hi_at[leaf]);
    sums.mix.push_back(mix_at[leaf]);
  }
  return sums;
}

bool is_feasible_cost(const Instance& inst, const RestrictedEdgeSet& set) {
  MixedPathSums sums = compute_mixed_path_sums(inst, set);
  if (sums.lo0 > inst.target) return false;
  for (Value hi : sums.hi) {
    if (inst.target > hi) return false;
  }
  for (Value mix : sums.mix) {
    if (sums.lo0 > mix) return false;
  }
  return true;
}

WeightAssignment construct_riovspt_solution(const Instance& inst, const RestrictedEdgeSet& set) {
  if (!is_feasible_cost(inst, set)) {
    throw ContractError("cost level " + std::to_string(set.rung) +
                        " is infeasible; no solution can be constructed from it");
  }

  const PathView p0 = root_leaf_path(inst, *inst.t0);
  const int m = inst.edge_count();

  // Position of each designated-path edge, root side first.
  std::vector<int> pos_on_p0(m, -1);
  for (std::size_t i = 0; i < p0.edges.size(); ++i) pos_on_p0[p0.edges[i]] = static_cast<int>(i);

  bool any_member_on_p0 = false;
  for (EdgeId e : p0.edges) any_member_on_p0 |= set.contains(e);

  WeightAssignment wa;
  wa.weights.resize(m);

  if (!any_member_on_p0) {
    // Degenerate case: feasibility forces w(P0) == target already, so the
    // designated path keeps its weights and every other member edge rises.
    for (EdgeId e = 0; e < m; ++e) {
      wa.weights[e] = (set.contains(e) && pos_on_p0[e] < 0) ? inst.attrs[e].u : inst.attrs[e].w;
    }
    return wa;
  }

  // Walk the designated path and find the first member edge where pushing the
  // prefix up and the suffix down brackets the target.
  Value prefix_up = 0;   // u over members, w otherwise, for edges before the cursor
  Value suffix_down = 0; // l over members, w otherwise, for edges from the cursor on
  for (EdgeId e : p0.edges) {
    suffix_down += set.contains(e) ? inst.attrs[e].l : inst.attrs[e].w;
  }

  int delta_pos = -1;
  Value delta = 0;
  for (std::size_t i = 0; i < p0.edges.size(); ++i) {
    EdgeId e = p0.edges[i];
    const EdgeAttributes& a = inst.attrs[e];
    if (set.contains(e)) {
      Value low = prefix_up + suffix_down;
      Value high = prefix_up + a.u + (suffix_down - a.l);
      if (low <= inst.target && inst.target <= high) {
        delta_pos = static_cast<int>(i);
        delta = inst.target - prefix_up - (suffix_down - a.l);
        assert(a.l <= delta && delta <= a.u);
        break;
      }
      prefix_up += a.u;
      suffix_down -= a.l;
    } else {
      prefix_up += a.w;
      suffix_down -= a.w;
    }
  }
  if (delta_pos < 0) {
    throw std::logic_error("internal error: feasible level has no bracketing edge");
  }

  for (EdgeId e = 0; e < m; ++e) {
    const EdgeAttributes& a = inst.attrs[e];
    if (!set.contains(e)) {
      wa.weights[e] = a.w;
    } else if (pos_on_p0[e] < 0 || pos_on_p0[e] < delta_pos) {
      wa.weights[e] = a.u;
    } else if (pos_on_p0[e] == delta_pos) {
      wa.weights[e] = delta;
    } else {
      wa.weights[e] = a.l;
    }
  }
  return wa;
}

}  // namespace treeinv
