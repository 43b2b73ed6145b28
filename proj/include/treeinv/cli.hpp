#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace treeinv {

// Wall-clock statistics for one (size, algorithm) cell of a benchmark run.
struct BenchRecord {
  int n = 0;
  std::string algorithm;
  int trials = 0;
  double t_avg = 0;
  double t_max = 0;
  double t_min = 0;
};

// Times both solvers on freshly generated random trees. Generation is not
// timed. Deterministic instances per (size, trial, seed).
std::vector<BenchRecord> run_bench(const std::vector<int>& sizes, int trials, std::uint64_t seed);

// Entry point behind the `treeinv` binary. Exit codes: 0 on success
// (including already-optimal results), 2 when a solved instance is
// infeasible, 1 on any usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treeinv
