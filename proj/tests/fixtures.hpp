#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "treeinv/oracle.hpp"
#include "treeinv/tree.hpp"

namespace treeinv::testing {

// The 17-node bandwidth pricing network bundled with the repo (also shipped
// as data/bandwidth17.json). Root v1; the designated leaf path runs
// v1 -> v9 -> v10 -> v11 and the traded price target is 39.
inline std::vector<EdgeRecord> bandwidth17_records() {
  return {
      {"v1", "v2", 7, 3, 9, 7},     {"v2", "v3", 12, 7, 18, 2},   {"v3", "v4", 8, 4, 12, 4},
      {"v4", "v5", 6, 3, 9, 14},    {"v5", "v6", 1, 0, 7, 3},     {"v3", "v7", 12, 6, 14, 13},
      {"v7", "v8", 14, 4, 16, 9},   {"v1", "v9", 19, 16, 22, 8},  {"v9", "v10", 11, 10, 20, 2},
      {"v10", "v11", 11, 3, 14, 7}, {"v10", "v12", 17, 13, 26, 2}, {"v12", "v13", 9, 5, 12, 1},
      {"v12", "v14", 38, 37, 48, 15}, {"v1", "v15", 10, 9, 14, 12}, {"v15", "v16", 14, 8, 16, 13},
      {"v16", "v17", 17, 9, 20, 14},
  };
}

inline Instance bandwidth17(Value target = 39) {
  return build_instance(bandwidth17_records(), "v1", std::string("v11"), target);
}

inline Instance single_edge(Value w, Value l, Value u, Value c, Value target,
                            bool with_t0 = true) {
  std::optional<std::string> t0;
  if (with_t0) t0 = "v2";
  return build_instance({{"v1", "v2", w, l, u, c}}, "v1", t0, target);
}

// v1 - v2 - v3 chain; t0 is the single leaf v3.
inline Instance chain3(Value w1, Value w2, Value target, Value u1 = -1, Value u2 = -1) {
  if (u1 < 0) u1 = w1;
  if (u2 < 0) u2 = w2;
  return build_instance(
      {{"v1", "v2", w1, 0, u1, 1}, {"v2", "v3", w2, 0, u2, 2}}, "v1", std::string("v3"), target);
}

// Small random instance with attributes in [0, 10]; shape rotates with the
// case index for variety.
inline Instance random_instance(std::mt19937_64& rng, int min_n, int max_n) {
  const TreeShape shapes[] = {TreeShape::RandomAttachment, TreeShape::Path, TreeShape::Star,
                              TreeShape::Caterpillar};
  GeneratorConfig config;
  config.node_count =
      min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
  config.seed = rng();
  config.shape = shapes[rng() % 4];
  return generate_instance(config);
}

}  // namespace treeinv::testing
