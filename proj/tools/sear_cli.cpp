// Command-line harness: generate instances, solve them, sweep benchmarks,
// and render SVG snapshots.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sear/bench.hpp"
#include "sear/errors.hpp"
#include "sear/geometry.hpp"
#include "sear/json_io.hpp"
#include "sear/pipeline.hpp"
#include "sear/svg.hpp"
#include "sear/validate.hpp"

namespace {

int exit_code_for(const sear::Error& e) {
  switch (e.kind()) {
    case sear::ErrorKind::Schema: return 2;
    case sear::ErrorKind::Contract:
    case sear::ErrorKind::InvalidInstance:
    case sear::ErrorKind::UndefinedStatistic: return 3;
    case sear::ErrorKind::Validation: return 5;
    case sear::ErrorKind::Io: return 6;
    default: return 4;  // solver-side failures
  }
}

std::vector<sear::GridKind> parse_grids(const std::vector<std::string>& names) {
  std::vector<sear::GridKind> out;
  for (const auto& name : names) out.push_back(sear::grid_kind_from_name(name));
  return out;
}

int cmd_generate(int n, double delta, double d, int k, double r, std::uint64_t seed,
                 const std::string& out_path) {
  sear::SamplerParams params{n, r, delta, d, k, seed};
  sear::ProblemInstance instance = sear::sample_instance(params);
  std::string text = sear::instance_to_json(instance);
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
  } else {
    sear::write_text_file(out_path, text);
  }
  return 0;
}

int cmd_solve(const std::string& instance_path, const std::string& grid,
              double edge_length, const std::string& router, double clearance_tol,
              double lambda, const std::string& out_prefix) {
  sear::ProblemInstance instance =
      sear::instance_from_json(sear::read_text_file(instance_path));
  sear::PipelineConfig config;
  config.grid_kind = sear::grid_kind_from_name(grid);
  if (edge_length > 0.0) config.edge_length = edge_length;
  if (lambda > 0.0) config.lambda_override = lambda;
  config.router = router;
  config.clearance_tol = clearance_tol;

  sear::SolveResult result = sear::solve(instance, config);

  std::string prefix = out_prefix.empty() ? instance_path : out_prefix;
  sear::write_text_file(prefix + ".plan.json",
                        sear::plan_to_json(result.plan, instance.start.dimension));
  sear::write_text_file(prefix + ".trace.json", sear::trace_to_json(result.trace));
  sear::write_text_file(prefix + ".metrics.json",
                        sear::metrics_to_json(result.metrics, result.trace));
  std::printf("makespan %.6f lower_bound %.6f ratio %s wall %.3fs\n",
              result.metrics.makespan, result.metrics.lower_bound,
              result.metrics.optimality_ratio
                  ? std::to_string(*result.metrics.optimality_ratio).c_str()
                  : "n/a",
              result.metrics.wall_time_seconds);
  return 0;
}

int cmd_bench(const std::vector<int>& ns, const std::vector<double>& deltas,
              const std::vector<double>& ds, const std::vector<std::string>& grids,
              const std::vector<std::string>& routers, int reps, std::uint64_t seed,
              int k, double edge_length, const std::string& keep_plans,
              const std::string& out_path) {
  sear::SweepSpec spec;
  for (int n : ns) {
    for (double delta : deltas) {
      for (double d : ds) spec.points.push_back({n, delta, d});
    }
  }
  spec.grids = parse_grids(grids);
  spec.routers = routers;
  spec.repetitions = reps;
  spec.base_seed = seed;
  spec.dimension = k;
  if (edge_length > 0.0) spec.edge_length = edge_length;
  spec.keep_plans_dir = keep_plans;

  std::string csv = sear::sweep_to_csv(sear::run_sweep(spec));
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
  } else {
    sear::write_text_file(out_path, csv);
  }
  return 0;
}

int cmd_render(const std::string& instance_path, const std::string& plan_path,
               const std::vector<double>& times, bool grid_overlay,
               const std::string& grid_name, double edge_length,
               const std::string& out_prefix) {
  sear::ProblemInstance instance =
      sear::instance_from_json(sear::read_text_file(instance_path));
  sear::Plan plan = sear::plan_from_json(sear::read_text_file(plan_path));

  sear::SvgOptions options;
  sear::GridGraph grid;
  if (grid_overlay) {
    sear::EnclosingBall ball = sear::min_enclosing_ball(instance.start);
    double l = edge_length > 0.0
                   ? edge_length
                   : sear::default_edge_length(sear::grid_kind_from_name(grid_name),
                                               instance.start.radius);
    grid = sear::build_covering_grid(sear::grid_kind_from_name(grid_name), l, ball.center,
                                     ball.radius * 2.0, instance.start.radius);
    options.grid = &grid;
    options.grid_overlay = true;
  }
  std::string prefix = out_prefix.empty() ? plan_path : out_prefix;
  for (double t : times) {
    sear::SvgSnapshot snap = sear::render_snapshot(instance, plan, t, options);
    char suffix[48];
    std::snprintf(suffix, sizeof(suffix), "_t%.3f.svg", t);
    sear::write_text_file(prefix + suffix, snap.svg);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SEAR: shift-expand-assign-route planning for disc robots"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "sample a random instance");
  int n = 10, k = 2;
  double delta = 0.0, d = 0.0, r = 1.0;
  std::uint64_t seed = 0;
  std::string out;
  generate->add_option("--n", n, "robot count");
  generate->add_option("--delta", delta, "extra pairwise gap");
  generate->add_option("--d", d, "center offset between start and goal regions");
  generate->add_option("--k", k, "dimension (2 or 3)");
  generate->add_option("--r", r, "robot radius");
  generate->add_option("--seed", seed, "sampler seed");
  generate->add_option("--out", out, "output path (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "run the pipeline on an instance file");
  std::string instance_path, grid = "hex", router = "sag", out_prefix;
  double edge_length = 0.0, clearance_tol = -1.0, lambda = 0.0;
  solve->add_option("instance", instance_path, "instance JSON path")->required();
  solve->add_option("--grid", grid, "grid kind: hex, square, cube");
  solve->add_option("--edge-length", edge_length, "grid edge length override");
  solve->add_option("--router", router, "router name (sag, bfs-oracle, registered)");
  solve->add_option("--clearance-tol", clearance_tol, "validator clearance tolerance");
  solve->add_option("--lambda", lambda, "explicit expansion factor override");
  solve->add_option("--out", out_prefix, "output prefix for plan/trace/metrics files");

  // bench
  auto* bench = app.add_subcommand("bench", "sweep (n, delta, d) points to CSV");
  std::vector<int> ns{10};
  std::vector<double> deltas{0.0}, ds{0.0};
  std::vector<std::string> grids{"hex"}, routers{"sag"};
  int reps = 10;
  std::string keep_plans, bench_out;
  bench->add_option("--n", ns, "robot counts")->delimiter(',');
  bench->add_option("--delta", deltas, "gap values")->delimiter(',');
  bench->add_option("--d", ds, "center offsets")->delimiter(',');
  bench->add_option("--grid", grids, "grid kinds")->delimiter(',');
  bench->add_option("--router", routers, "router names")->delimiter(',');
  bench->add_option("--reps", reps, "repetitions per point (default 10)");
  bench->add_option("--seed", seed, "base seed; repetition i uses base+i");
  bench->add_option("--k", k, "dimension");
  bench->add_option("--edge-length", edge_length, "grid edge length override");
  bench->add_option("--keep-plans", keep_plans, "directory for per-repetition plan files");
  bench->add_option("--out", bench_out, "CSV path (default stdout)");

  // render
  auto* render = app.add_subcommand("render", "SVG snapshots of a plan");
  std::string plan_path;
  std::vector<double> render_times{0.0};
  bool grid_overlay = false;
  render->add_option("instance", instance_path, "instance JSON path")->required();
  render->add_option("plan", plan_path, "plan JSON path")->required();
  render->add_option("--render-times", render_times, "snapshot times")->delimiter(',');
  render->add_flag("--grid-overlay", grid_overlay, "draw the lattice");
  render->add_option("--grid", grid, "grid kind for the overlay");
  render->add_option("--edge-length", edge_length, "overlay edge length");
  render->add_option("--out", out_prefix, "output prefix (default plan path)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return cmd_generate(n, delta, d, k, r, seed, out);
    if (*solve) {
      return cmd_solve(instance_path, grid, edge_length, router, clearance_tol, lambda,
                       out_prefix);
    }
    if (*bench) {
      return cmd_bench(ns, deltas, ds, grids, routers, reps, seed, k, edge_length,
                       keep_plans, bench_out);
    }
    if (*render) {
      return cmd_render(instance_path, plan_path, render_times, grid_overlay, grid,
                        edge_length, out_prefix);
    }
  } catch (const sear::Error& e) {
    std::cerr << "error (" << sear::error_kind_name(e.kind()) << "): " << e.what() << "\n";
    if (!e.payload().empty()) std::cerr << "payload: " << e.payload() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
