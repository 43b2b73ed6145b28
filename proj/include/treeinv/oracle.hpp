#pragma once

#include <cstdint>

#include "treeinv/interdiction.hpp"
#include "treeinv/riovspt.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

enum class TreeShape { RandomAttachment, Path, Star, Caterpillar };

struct IntRange {
  Value lo = 0;
  Value hi = 0;
};

// Deterministic instance generator: the same config always yields the same
// instance, byte for byte after serialization. Lower/upper bounds are the
// weight offset by a slack draw, clamped into weight_range so attributes
// stay inside that envelope.
struct GeneratorConfig {
  int node_count = 8;
  std::uint64_t seed = 0;
  IntRange weight_range{0, 10};
  IntRange slack_range{0, 10};
  IntRange cost_range{1, 10};
  TreeShape shape = TreeShape::RandomAttachment;
  // Target regimes: above the best achievable shortest path (infeasible),
  // at or below the current one (zero cost), or in between.
  int infeasible_percent = 10;
  int zero_cost_percent = 10;
};

Instance generate_instance(const GeneratorConfig& config);

inline constexpr std::int64_t kDefaultOracleBudget = 10'000'000;

// Reference solver by exhaustive enumeration of every integer weight vector
// inside the per-edge bounds; shares nothing with the fast solver beyond the
// tree model. OracleScaleError when the product of bound spans exceeds the
// budget.
SolveReport brute_force_riovspt(const Instance& inst,
                                std::int64_t budget = kDefaultOracleBudget);

// Reference interdiction solver: scans every candidate bottleneck threshold
// ascending and, as a cross-check, enumerates every upgrade subset when 2^m
// fits the budget.
InterdictionReport brute_force_mcspit(const Instance& inst,
                                      std::int64_t budget = kDefaultOracleBudget);

}  // namespace treeinv
