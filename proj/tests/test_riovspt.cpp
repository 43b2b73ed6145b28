#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "treeinv/interdiction.hpp"
#include "treeinv/io.hpp"
#include "treeinv/riovspt.hpp"

using namespace treeinv;
using treeinv::testing::bandwidth17;
using treeinv::testing::random_instance;
using treeinv::testing::single_edge;

namespace {

// Reference: least feasible level by scanning the ladder from below.
int least_feasible_level(const Instance& inst) {
  CostLadder ladder = build_cost_ladder(inst);
  for (int k = 0; k <= ladder.rung_count(); ++k) {
    if (is_feasible_cost(inst, restricted_edge_set(ladder, k))) return k;
  }
  return -1;
}

}  // namespace

TEST_CASE("bandwidth17 solves at objective 7") {
  Instance inst = bandwidth17();
  SolveReport report = solve_riovspt(inst);
  REQUIRE(report.status == SolveStatus::Solved);
  CHECK(report.objective == 7);
  REQUIRE(report.assignment.has_value());
  CHECK(report.assignment->weights ==
        std::vector<Value>{9, 18, 12, 6, 7, 12, 14, 19, 17, 3, 26, 12, 38, 10, 14, 17});
  CHECK(report.changed_edges.size() == 8);
  for (const ChangedEdge& ce : report.changed_edges) {
    CHECK(inst.attrs[ce.edge].c <= 7);
  }
  CHECK(bottleneck_objective(inst, *report.assignment) == 7);
}

TEST_CASE("already-optimal and infeasible gates") {
  SUBCASE("weights already meet the target") {
    Instance inst = single_edge(5, 3, 9, 2, 5);
    SolveReport report = solve_riovspt(inst);
    CHECK(report.status == SolveStatus::AlreadyOptimal);
    CHECK(report.objective == 0);
    REQUIRE(report.assignment.has_value());
    CHECK(report.assignment->weights == std::vector<Value>{5});
    CHECK(report.changed_edges.empty());
  }
  SUBCASE("target above the upper bound") {
    Instance inst = single_edge(5, 3, 9, 2, 10);
    SolveReport report = solve_riovspt(inst);
    CHECK(report.status == SolveStatus::Infeasible);
    CHECK_FALSE(report.assignment.has_value());
  }
  SUBCASE("target below the lower bound") {
    Instance inst = single_edge(5, 3, 9, 2, 2);
    CHECK(solve_riovspt(inst).status == SolveStatus::Infeasible);
  }
  SUBCASE("missing t0") {
    Instance inst = build_instance({{"v1", "v2", 5, 3, 9, 2}}, "v1", std::nullopt, 5);
    CHECK_THROWS_AS(solve_riovspt(inst), InputError);
  }
}

TEST_CASE("binary search equals the linear scan") {
  std::mt19937_64 rng(41u);
  for (int i = 0; i < 200; ++i) {
    Instance inst = random_instance(rng, 2, 12);
    SolveReport report = solve_riovspt(inst);
    int scan = least_feasible_level(inst);
    if (scan < 0) {
      CHECK(report.status == SolveStatus::Infeasible);
    } else if (scan == 0) {
      CHECK(report.status == SolveStatus::AlreadyOptimal);
      CHECK(report.objective == 0);
    } else {
      REQUIRE(report.status == SolveStatus::Solved);
      CHECK(report.objective == build_cost_ladder(inst).rung_value(scan));
    }
  }
}

TEST_CASE("iteration count stays within the search bound") {
  std::mt19937_64 rng(43u);
  for (int i = 0; i < 100; ++i) {
    Instance inst = random_instance(rng, 2, 40);
    SolveReport report = solve_riovspt(inst);
    int rungs = build_cost_ladder(inst).rung_count();
    int bound = static_cast<int>(std::ceil(std::log2(std::max(rungs, 1)))) + 2;
    CHECK(report.iterations <= bound);
  }
}

TEST_CASE("reports are deterministic") {
  Instance inst = bandwidth17();
  SolveReport a = solve_riovspt(inst);
  SolveReport b = solve_riovspt(inst);
  CHECK(a.status == b.status);
  CHECK(a.objective == b.objective);
  CHECK(a.iterations == b.iterations);
  CHECK(a.assignment->weights == b.assignment->weights);
  CHECK(a.changed_edges == b.changed_edges);
  CHECK(serialize_report(inst, a) == serialize_report(inst, b));
}

TEST_CASE("a solved assignment that only raises weights is interdiction-feasible") {
  std::mt19937_64 rng(47u);
  int observed = 0;
  for (int i = 0; i < 300; ++i) {
    Instance inst = random_instance(rng, 2, 10);
    SolveReport report = solve_riovspt(inst);
    if (report.status != SolveStatus::Solved) continue;
    bool raises_only = true;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
      raises_only &= report.assignment->weights[e] >= inst.attrs[e].w;
    }
    if (!raises_only) continue;
    ++observed;
    CHECK(shortest_root_leaf(inst, *report.assignment).value >= inst.target);
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
      CHECK(report.assignment->weights[e] <= inst.attrs[e].u);
    }
  }
  CHECK(observed > 0);
}

TEST_CASE("solved objective is realized by some changed edge") {
  std::mt19937_64 rng(53u);
  for (int i = 0; i < 200; ++i) {
    Instance inst = random_instance(rng, 2, 12);
    SolveReport report = solve_riovspt(inst);
    if (report.status != SolveStatus::Solved) continue;
    CHECK(bottleneck_objective(inst, *report.assignment) == report.objective);
  }
}
