#include "doctest.h"
#include "fixtures.hpp"
#include "treeinv/interdiction.hpp"
#include "treeinv/io.hpp"
#include "treeinv/oracle.hpp"
#include "treeinv/riovspt.hpp"

using namespace treeinv;
using treeinv::testing::single_edge;

TEST_CASE("generator basics") {
  SUBCASE("two nodes") {
    GeneratorConfig config;
    config.node_count = 2;
    config.seed = 1;
    Instance inst = generate_instance(config);
    CHECK(inst.edge_count() == 1);
    CHECK(inst.t0.has_value());
  }
  SUBCASE("same config, same bytes") {
    GeneratorConfig config;
    config.node_count = 8;
    config.seed = 42;
    CHECK(serialize_instance(generate_instance(config)) ==
          serialize_instance(generate_instance(config)));
  }
  SUBCASE("different seeds differ") {
    GeneratorConfig a;
    a.node_count = 8;
    a.seed = 1;
    GeneratorConfig b = a;
    b.seed = 2;
    CHECK(serialize_instance(generate_instance(a)) != serialize_instance(generate_instance(b)));
  }
  SUBCASE("large random-attachment tree builds") {
    GeneratorConfig config;
    config.node_count = 5000;
    config.seed = 7;
    Instance inst = generate_instance(config);
    CHECK(inst.edge_count() == 4999);
  }
  SUBCASE("node count below two is rejected") {
    GeneratorConfig config;
    config.node_count = 1;
    CHECK_THROWS_AS(generate_instance(config), InputError);
  }
  SUBCASE("every shape yields valid instances") {
    for (TreeShape shape : {TreeShape::RandomAttachment, TreeShape::Path, TreeShape::Star,
                            TreeShape::Caterpillar}) {
      for (std::uint64_t seed = 0; seed < 24; ++seed) {
        GeneratorConfig config;
        config.node_count = 2 + static_cast<int>(seed % 9);
        config.seed = seed;
        config.shape = shape;
        Instance inst = generate_instance(config);
        for (const EdgeAttributes& a : inst.attrs) {
          CHECK(a.l <= a.w);
          CHECK(a.w <= a.u);
          CHECK(a.l >= 0);
          CHECK(a.u <= 10);
          CHECK(a.c >= 1);
          CHECK(a.c <= 10);
        }
      }
    }
  }
}

TEST_CASE("brute-force reference on tiny instances") {
  SUBCASE("forced single-edge change") {
    SolveReport report = brute_force_riovspt(single_edge(5, 3, 9, 2, 7));
    REQUIRE(report.status == SolveStatus::Solved);
    CHECK(report.objective == 2);
    CHECK(report.assignment->weights == std::vector<Value>{7});
  }
  SUBCASE("no change needed") {
    SolveReport report = brute_force_riovspt(single_edge(5, 3, 9, 2, 5));
    CHECK(report.status == SolveStatus::AlreadyOptimal);
    CHECK(report.objective == 0);
  }
  SUBCASE("unreachable target") {
    CHECK(brute_force_riovspt(single_edge(5, 3, 9, 2, 11)).status == SolveStatus::Infeasible);
  }
  SUBCASE("interdiction upgrade") {
    InterdictionReport report = brute_force_mcspit(single_edge(5, 3, 9, 2, 8));
    REQUIRE(report.status == SolveStatus::Solved);
    CHECK(report.objective == 2);
  }
  SUBCASE("interdiction beyond the upper bound") {
    CHECK(brute_force_mcspit(single_edge(5, 3, 9, 2, 10)).status == SolveStatus::Infeasible);
  }
  SUBCASE("budget guard") {
    GeneratorConfig config;
    config.node_count = 9;
    config.seed = 3;
    Instance inst = generate_instance(config);
    CHECK_THROWS_AS(brute_force_riovspt(inst, 100), OracleScaleError);
  }
}

TEST_CASE("solvers agree with the oracles") {
  std::mt19937_64 rng(99u);
  const TreeShape shapes[] = {TreeShape::RandomAttachment, TreeShape::Path, TreeShape::Star,
                              TreeShape::Caterpillar};
  for (int i = 0; i < 80; ++i) {
    GeneratorConfig config;
    config.node_count = 2 + static_cast<int>(rng() % 7);
    config.seed = rng();
    config.shape = shapes[i % 4];
    Instance inst = generate_instance(config);
    CAPTURE(serialize_instance(inst));

    SolveReport fast = solve_riovspt(inst);
    SolveReport slow = brute_force_riovspt(inst, 22'000'000);
    CHECK(fast.status == slow.status);
    CHECK(fast.objective == slow.objective);

    InterdictionReport fast_i = solve_mcspit(inst);
    InterdictionReport slow_i = brute_force_mcspit(inst, 22'000'000);
    CHECK(fast_i.status == slow_i.status);
    CHECK(fast_i.objective == slow_i.objective);
  }
}

TEST_CASE("oracle runs the full bundled interdiction instance") {
  // 2^16 upgrade subsets fit the default budget, so the reference result for
  // the bundled instance is exact.
  Instance inst = treeinv::testing::bandwidth17();
  InterdictionReport report = brute_force_mcspit(inst);
  REQUIRE(report.status == SolveStatus::Solved);
  CHECK(report.objective == 2);
  CHECK(report.achieved_shortest == 40);
}
