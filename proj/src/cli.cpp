#include "treeinv/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "treeinv/interdiction.hpp"
#include "treeinv/io.hpp"
#include "treeinv/oracle.hpp"
#include "treeinv/riovspt.hpp"

namespace treeinv {

namespace {

// Budget large enough to enumerate any n <= 8 instance with attributes in
// [0, 10] (worst case 11^7 combinations).
constexpr std::int64_t kVerifyBudget = 22'000'000;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + output_path + "'");
  file << text;
}

TreeShape shape_by_name(const std::string& name) {
  if (name == "random-attachment") return TreeShape::RandomAttachment;
  if (name == "path") return TreeShape::Path;
  if (name == "star") return TreeShape::Star;
  if (name == "caterpillar") return TreeShape::Caterpillar;
  throw InputError("unknown shape '" + name +
                   "' (expected random-attachment, path, star or caterpillar)");
}

int exit_code_for(SolveStatus status) {
  return status == SolveStatus::Infeasible ? 2 : 0;
}

int run_solve(const std::string& path, const std::string& output_path, bool interdiction,
              std::ostream& out) {
  Instance inst = parse_instance(read_file(path));
  if (interdiction) {
    InterdictionReport report = solve_mcspit(inst);
    write_output(serialize_report(inst, report), output_path, out);
    return exit_code_for(report.status);
  }
  SolveReport report = solve_riovspt(inst);
  write_output(serialize_report(inst, report), output_path, out);
  return exit_code_for(report.status);
}

int run_gen(int n, std::uint64_t seed, const std::string& shape, Value scale,
            const std::string& output_path, std::ostream& out) {
  GeneratorConfig config;
  config.node_count = n;
  config.seed = seed;
  config.shape = shape_by_name(shape);
  Instance inst = generate_instance(config);
  // The generated integers are interpreted at the requested scale, so the
  // emitted document carries decimals on a 1/scale grid.
  InstanceDocument doc = document_from_instance(inst);
  doc.scale = scale;
  write_output(document_to_json(doc), output_path, out);
  return 0;
}

struct VerifyMismatch {
  std::string problem;
  std::string solver_status;
  Value solver_objective = 0;
  std::string oracle_status;
  Value oracle_objective = 0;
};

int run_verify(int count, int max_n, std::uint64_t seed, std::ostream& out) {
  std::mt19937_64 rng(seed);
  const TreeShape shapes[] = {TreeShape::RandomAttachment, TreeShape::Path, TreeShape::Star,
                              TreeShape::Caterpillar};
  for (int i = 0; i < count; ++i) {
    GeneratorConfig config;
    config.node_count = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    config.seed = rng();
    config.shape = shapes[i % 4];

    Instance inst = generate_instance(config);
    std::optional<VerifyMismatch> mismatch;

    SolveReport fast = solve_riovspt(inst);
    SolveReport slow = brute_force_riovspt(inst, kVerifyBudget);
    if (fast.status != slow.status || fast.objective != slow.objective) {
      mismatch = VerifyMismatch{"riovspt", to_string(fast.status), fast.objective,
                                to_string(slow.status), slow.objective};
    }
    if (!mismatch.has_value()) {
      InterdictionReport fast_i = solve_mcspit(inst);
      InterdictionReport slow_i = brute_force_mcspit(inst, kVerifyBudget);
      if (fast_i.status != slow_i.status || fast_i.objective != slow_i.objective) {
        mismatch = VerifyMismatch{"mcspit", to_string(fast_i.status), fast_i.objective,
                                  to_string(slow_i.status), slow_i.objective};
      }
    }
    if (mismatch.has_value()) {
      out << "mismatch on case " << i << " (" << mismatch->problem << "): solver "
          << mismatch->solver_status << "/" << mismatch->solver_objective << ", oracle "
          << mismatch->oracle_status << "/" << mismatch->oracle_objective << "\n";
      out << "replay instance:\n" << serialize_instance(inst);
      return 1;
    }
  }
  out << "verified " << count << "/" << count << " cases: solver and oracle agree\n";
  return 0;
}

int run_bench_command(const std::vector<int>& sizes, int trials, std::uint64_t seed,
                      const std::string& output_path, std::ostream& out) {
  std::vector<BenchRecord> records = run_bench(sizes, trials, seed);
  out << "algorithm      n  trials      t_avg      t_max      t_min\n";
  char line[128];
  for (const BenchRecord& r : records) {
    std::snprintf(line, sizeof(line), "%-9s %6d %7d %10.6f %10.6f %10.6f\n", r.algorithm.c_str(),
                  r.n, r.trials, r.t_avg, r.t_max, r.t_min);
    out << line;
  }
  if (!output_path.empty()) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const BenchRecord& r : records) {
      nlohmann::ordered_json rj;
      rj["n"] = r.n;
      rj["algorithm"] = r.algorithm;
      rj["trials"] = r.trials;
      rj["t_avg"] = r.t_avg;
      rj["t_max"] = r.t_max;
      rj["t_min"] = r.t_min;
      j.push_back(std::move(rj));
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + output_path + "'");
    file << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<int>& sizes, int trials,
                                   std::uint64_t seed) {
  if (trials < 1) throw InputError("bench needs at least one trial");
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (int n : sizes) {
    BenchRecord rio{n, "riovspt", trials, 0, 0, 0};
    BenchRecord mc{n, "mcspit", trials, 0, 0, 0};
    bool first = true;
    for (int t = 0; t < trials; ++t) {
      GeneratorConfig config;
      config.node_count = n;
      config.seed = seed + static_cast<std::uint64_t>(t) * 0x9e3779b97f4a7c15ull +
                    static_cast<std::uint64_t>(n);
      config.infeasible_percent = 0;
      config.zero_cost_percent = 0;
      Instance inst = generate_instance(config);

      auto t0 = clock::now();
      SolveReport report = solve_riovspt(inst);
      auto t1 = clock::now();
      InterdictionReport report_i = solve_mcspit(inst);
      auto t2 = clock::now();
      (void)report;
      (void)report_i;

      const double rio_s = std::chrono::duration<double>(t1 - t0).count();
      const double mc_s = std::chrono::duration<double>(t2 - t1).count();
      rio.t_avg += rio_s;
      mc.t_avg += mc_s;
      if (first) {
        rio.t_max = rio.t_min = rio_s;
        mc.t_max = mc.t_min = mc_s;
        first = false;
      } else {
        rio.t_max = std::max(rio.t_max, rio_s);
        rio.t_min = std::min(rio.t_min, rio_s);
        mc.t_max = std::max(mc.t_max, mc_s);
        mc.t_min = std::min(mc.t_min, mc_s);
      }
    }
    rio.t_avg /= trials;
    mc.t_avg /= trials;
    records.push_back(std::move(rio));
    records.push_back(std::move(mc));
  }
  return records;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverse shortest-path and interdiction solvers on rooted trees"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string output_path;

  CLI::App* solve_rio = app.add_subcommand(
      "solve-riovspt", "Meet the target shortest path exactly along the designated leaf path");
  solve_rio->add_option("instance", instance_path, "instance file")->required();
  solve_rio->add_option("--output", output_path, "write the result document here");

  CLI::App* solve_mc = app.add_subcommand(
      "solve-mcspit", "Raise the shortest root-leaf path to the target by upgrading edges");
  solve_mc->add_option("instance", instance_path, "instance file")->required();
  solve_mc->add_option("--output", output_path, "write the result document here");

  int gen_n = 8;
  std::uint64_t gen_seed = 0;
  std::string gen_shape = "random-attachment";
  Value gen_scale = 1;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_n, "node count")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--shape", gen_shape, "random-attachment, path, star or caterpillar");
  gen->add_option("--scale", gen_scale, "decimal scale of the emitted document");
  gen->add_option("--output", output_path, "write the instance here");

  int verify_count = 100;
  int verify_max_n = 8;
  std::uint64_t verify_seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "Check both solvers against brute force");
  verify->add_option("--count", verify_count, "number of random cases");
  verify->add_option("--max-n", verify_max_n, "largest node count")->check(CLI::Range(2, 10));
  verify->add_option("--seed", verify_seed, "seed for the case stream");

  std::vector<int> bench_sizes{1000, 3000, 5000};
  int bench_trials = 5;
  std::uint64_t bench_seed = 1;
  CLI::App* bench = app.add_subcommand("bench", "Time both solvers on random trees");
  bench->add_option("--sizes", bench_sizes, "node counts")->delimiter(',');
  bench->add_option("--trials", bench_trials, "trials per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "seed for instance generation");
  bench->add_option("--output", output_path, "write machine-readable records here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve_rio->parsed()) return run_solve(instance_path, output_path, false, out);
    if (solve_mc->parsed()) return run_solve(instance_path, output_path, true, out);
    if (gen->parsed()) return run_gen(gen_n, gen_seed, gen_shape, gen_scale, output_path, out);
    if (verify->parsed()) return run_verify(verify_count, verify_max_n, verify_seed, out);
    if (bench->parsed())
      return run_bench_command(bench_sizes, bench_trials, bench_seed, output_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand given\n";
  return 1;
}

}  // namespace treeinv
