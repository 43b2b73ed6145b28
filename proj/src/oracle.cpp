#include "treeinv/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <string>
#include <vector>

namespace treeinv {

namespace {

// rng() % span is deterministic across platforms, unlike the standard
// distributions; bias is irrelevant for test-instance generation.
Value draw(std::mt19937_64& rng, Value lo, Value hi) {
  return lo + static_cast<Value>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string label_of(int one_based) { return "v" + std::to_string(one_based); }

// Leaf path sums computed directly from parent walks; the oracles and the
// generator deliberately avoid the solver modules.
std::vector<Value> leaf_sums(const Instance& inst, const std::vector<Value>& weights) {
  std::vector<Value> sums;
  sums.reserve(inst.tree.leaves.size());
  for (NodeId leaf : inst.tree.leaves) {
    Value s = 0;
    for (NodeId v = leaf; v != inst.tree.root; v = inst.tree.parent[v]) {
      s += weights[inst.tree.parent_edge[v]];
    }
    sums.push_back(s);
  }
  return sums;
}

Value min_of(const std::vector<Value>& xs) {
  Value m = xs.front();
  for (Value x : xs) m = std::min(m, x);
  return m;
}

}  // namespace

Instance generate_instance(const GeneratorConfig& config) {
  if (config.node_count < 2) throw InputError("generator needs at least 2 nodes");
  if (config.node_count > kNodeLimit) throw InputError("generator node count too large");
  if (config.weight_range.lo < 0 || config.weight_range.hi < config.weight_range.lo ||
      config.weight_range.hi > kValueLimit / kNodeLimit) {
    throw InputError("generator weight_range is invalid");
  }
  if (config.slack_range.lo < 0 || config.slack_range.hi < config.slack_range.lo) {
    throw InputError("generator slack_range is invalid");
  }
  if (config.cost_range.lo < 1 || config.cost_range.hi < config.cost_range.lo ||
      config.cost_range.hi > kValueLimit) {
    throw InputError("generator cost_range must be positive");
  }
  if (config.infeasible_percent < 0 || config.zero_cost_percent < 0 ||
      config.infeasible_percent + config.zero_cost_percent > 100) {
    throw InputError("generator regime percentages are invalid");
  }

  std::mt19937_64 rng(config.seed);
  const int n = config.node_count;

  // Parents for nodes 2..n (1-based), per shape.
  std::vector<int> parent_1b(n + 1, 0);
  const int spine = std::max(2, (n + 1) / 2);
  for (int i = 2; i <= n; ++i) {
    switch (config.shape) {
      case TreeShape::Path:
        parent_1b[i] = i - 1;
        break;
      case TreeShape::Star:
        parent_1b[i] = 1;
        break;
      case TreeShape::RandomAttachment:
        parent_1b[i] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(i - 1));
        break;
      case TreeShape::Caterpillar:
        if (i <= spine) {
          parent_1b[i] = i - 1;
        } else {
          parent_1b[i] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(spine));
        }
        break;
    }
  }

  std::vector<EdgeRecord> records;
  records.reserve(n - 1);
  for (int i = 2; i <= n; ++i) {
    EdgeRecord r;
    r.parent = label_of(parent_1b[i]);
    r.child = label_of(i);
    r.w = draw(rng, config.weight_range.lo, config.weight_range.hi);
    r.l = std::max(config.weight_range.lo, r.w - draw(rng, config.slack_range.lo, config.slack_range.hi));
    r.u = std::min(config.weight_range.hi, r.w + draw(rng, config.slack_range.lo, config.slack_range.hi));
    r.c = draw(rng, config.cost_range.lo, config.cost_range.hi);
    records.push_back(std::move(r));
  }

  Instance shapeless = build_instance(records, "v1", std::nullopt, 0);
  const NodeId t0 =
      shapeless.tree.leaves[rng() % static_cast<std::uint64_t>(shapeless.tree.leaves.size())];

  std::vector<Value> w_vec;
  std::vector<Value> u_vec;
  for (const EdgeAttributes& a : shapeless.attrs) {
    w_vec.push_back(a.w);
    u_vec.push_back(a.u);
  }
  const Value reach_now = min_of(leaf_sums(shapeless, w_vec));
  const Value reach_max = min_of(leaf_sums(shapeless, u_vec));

  Value target = 0;
  const Value regime = draw(rng, 0, 99);
  if (regime < config.infeasible_percent) {
    target = reach_max + 1 + draw(rng, 0, 3);
  } else if (regime < config.infeasible_percent + config.zero_cost_percent) {
    target = reach_now - draw(rng, 0, 3);
  } else {
    target = draw(rng, reach_now, reach_max);
  }

  return build_instance(records, "v1", shapeless.labels[t0], target);
}

SolveReport brute_force_riovspt(const Instance& inst, std::int64_t budget) {
  if (!inst.t0.has_value()) {
    throw InputError("brute_force_riovspt needs an instance with the designated leaf t0");
  }
  const int m = inst.edge_count();

  std::int64_t combinations = 1;
  for (const EdgeAttributes& a : inst.attrs) {
    const Value span = a.u - a.l + 1;
    if (combinations > budget / span) {
      throw OracleScaleError("bound-span product exceeds the oracle budget of " +
                             std::to_string(budget) + " combinations");
    }
    combinations *= span;
  }

  // Incidence of edges in leaf paths, so the odometer can update sums
  // incrementally.
  const std::vector<NodeId>& leaves = inst.tree.leaves;
  const int n_leaves = static_cast<int>(leaves.size());
  std::vector<std::vector<int>> edge_leaves(m);
  int t0_index = -1;
  for (int li = 0; li < n_leaves; ++li) {
    if (leaves[li] == *inst.t0) t0_index = li;
    for (NodeId v = leaves[li]; v != inst.tree.root; v = inst.tree.parent[v]) {
      edge_leaves[inst.tree.parent_edge[v]].push_back(li);
    }
  }
  assert(t0_index >= 0);

  // Track the costs of changed edges as counts per ladder level so the
  // bottleneck objective of the current vector is a short scan.
  std::vector<Value> cost_levels;
  for (const EdgeAttributes& a : inst.attrs) cost_levels.push_back(a.c);
  std::sort(cost_levels.begin(), cost_levels.end());
  cost_levels.erase(std::unique(cost_levels.begin(), cost_levels.end()), cost_levels.end());
  std::vector<int> level_of_edge(m);
  for (int e = 0; e < m; ++e) {
    level_of_edge[e] = static_cast<int>(
        std::lower_bound(cost_levels.begin(), cost_levels.end(), inst.attrs[e].c) -
        cost_levels.begin());
  }
  std::vector<int> changed_at_level(cost_levels.size(), 0);

  std::vector<Value> vals(m);
  std::vector<Value> sums(n_leaves, 0);
  for (int e = 0; e < m; ++e) {
    vals[e] = inst.attrs[e].l;
    if (vals[e] != inst.attrs[e].w) changed_at_level[level_of_edge[e]] += 1;
  }
  for (int li = 0; li < n_leaves; ++li) {
    for (NodeId v = leaves[li]; v != inst.tree.root; v = inst.tree.parent[v]) {
      sums[li] += vals[inst.tree.parent_edge[v]];
    }
  }

  auto shift_edge = [&](int e, Value delta) {
    const bool was_changed = vals[e] != inst.attrs[e].w;
    vals[e] += delta;
    const bool now_changed = vals[e] != inst.attrs[e].w;
    if (was_changed != now_changed) {
      changed_at_level[level_of_edge[e]] += now_changed ? 1 : -1;
    }
    for (int li : edge_leaves[e]) sums[li] += delta;
  };
  auto current_objective = [&]() {
    for (int lv = static_cast<int>(cost_levels.size()) - 1; lv >= 0; --lv) {
      if (changed_at_level[lv] > 0) return cost_levels[lv];
    }
    return Value{0};
  };

  SolveReport report;
  bool found = false;
  Value best = 0;
  std::vector<Value> best_vals;
  std::int64_t evaluated = 0;

  while (true) {
    ++evaluated;
    if (sums[t0_index] == inst.target) {
      bool ok = true;
      for (Value s : sums) {
        if (s < inst.target) {
          ok = false;
          break;
        }
      }
      if (ok) {
        const Value objective = current_objective();
        if (!found || objective < best) {
          found = true;
          best = objective;
          best_vals = vals;
          if (best == 0) break;  // nothing beats an unchanged feasible vector
        }
      }
    }
    // Advance the odometer.
    int e = 0;
    while (e < m && vals[e] == inst.attrs[e].u) {
      shift_edge(e, inst.attrs[e].l - inst.attrs[e].u);
      ++e;
    }
    if (e == m) break;
    shift_edge(e, 1);
  }

  report.iterations = static_cast<int>(std::min<std::int64_t>(evaluated, INT32_MAX));
  if (!found) {
    report.status = SolveStatus::Infeasible;
    return report;
  }
  report.status = best == 0 ? SolveStatus::AlreadyOptimal : SolveStatus::Solved;
  report.objective = best;
  WeightAssignment wa{std::move(best_vals)};
  report.changed_edges = changed_edges(inst, wa);
  report.assignment = std::move(wa);
  return report;
}

InterdictionReport brute_force_mcspit(const Instance& inst, std::int64_t budget) {
  const int m = inst.edge_count();

  std::vector<Value> thresholds{0};
  for (const EdgeAttributes& a : inst.attrs) thresholds.push_back(a.c);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  auto upgraded = [&](Value threshold) {
    std::vector<Value> weights;
    weights.reserve(m);
    for (const EdgeAttributes& a : inst.attrs) weights.push_back(a.c <= threshold ? a.u : a.w);
    return weights;
  };

  InterdictionReport report;
  bool found = false;
  std::vector<Value> found_weights;
  Value reach_at_full = 0;
  for (Value threshold : thresholds) {
    std::vector<Value> weights = upgraded(threshold);
    const Value reach = min_of(leaf_sums(inst, weights));
    reach_at_full = reach;  // thresholds ascend, the last one is the full upgrade
    ++report.iterations;
    if (!found && reach >= inst.target) {
      found = true;
      found_weights = std::move(weights);
    }
  }

  // Cross-check against every upgrade subset: no partial selection may beat
  // the full upgrade below its threshold.
  if (m < 62 && (std::int64_t{1} << m) <= budget) {
    bool subset_found = false;
    Value subset_best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<Value> weights;
      weights.reserve(m);
      Value objective = 0;
      for (int e = 0; e < m; ++e) {
        if (mask & (std::uint64_t{1} << e)) {
          weights.push_back(inst.attrs[e].u);
          if (inst.attrs[e].u != inst.attrs[e].w) objective = std::max(objective, inst.attrs[e].c);
        } else {
          weights.push_back(inst.attrs[e].w);
        }
      }
      if (min_of(leaf_sums(inst, weights)) >= inst.target) {
        if (!subset_found || objective < subset_best) {
          subset_found = true;
          subset_best = objective;
        }
      }
    }
    Value threshold_best = 0;
    if (found) {
      threshold_best = bottleneck_objective(inst, WeightAssignment{found_weights});
    }
    if (subset_found != found || (found && subset_best != threshold_best)) {
      throw std::logic_error("oracle cross-check failed: subset enumeration disagrees with the threshold scan");
    }
  }

  if (!found) {
    report.status = SolveStatus::Infeasible;
    report.achieved_shortest = reach_at_full;
    return report;
  }
  WeightAssignment wa{std::move(found_weights)};
  report.objective = bottleneck_objective(inst, wa);
  report.status = report.objective == 0 ? SolveStatus::AlreadyOptimal : SolveStatus::Solved;
  report.achieved_shortest = min_of(leaf_sums(inst, wa.weights));
  report.changed_edges = changed_edges(inst, wa);
  report.assignment = std::move(wa);
  return report;
}

}  // namespace treeinv
