#include "sear/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "sear/errors.hpp"
#include "sear/geometry.hpp"
#include "sear/json_io.hpp"

namespace sear {

namespace {

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  if (const char* env = std::getenv("SEAR_WORKERS")) {
    int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

struct Combo {
  SweepPoint point;
  GridKind grid;
  std::string router;
};

SweepRow run_combo(const SweepSpec& spec, const Combo& combo, int combo_index) {
  SweepRow row;
  row.point = combo.point;
  row.grid = combo.grid;
  row.router = combo.router;
  row.repetitions = spec.repetitions;

  std::vector<double> makespans, ratios;
  double lb_sum = 0.0, dist_sum = 0.0, wall_sum = 0.0;
  double disc_sum = 0.0, side_sum = 0.0, lambda_sum = 0.0;
  for (int rep = 0; rep < spec.repetitions; ++rep) {
    SamplerParams params{combo.point.n, spec.robot_radius, combo.point.delta,
                         combo.point.d, spec.dimension, spec.base_seed + static_cast<std::uint64_t>(rep)};
    try {
      ProblemInstance instance = sample_instance(params);
      PipelineConfig config;
      config.grid_kind = combo.grid;
      config.edge_length = spec.edge_length;
      config.router = combo.router;
      config.clearance_tol = spec.clearance_tol;
      SolveResult result = solve(instance, config);

      ++row.success_count;
      makespans.push_back(result.metrics.makespan);
      lb_sum += result.metrics.lower_bound;
      dist_sum += result.metrics.total_distance;
      wall_sum += result.metrics.wall_time_seconds;
      if (result.metrics.optimality_ratio) ratios.push_back(*result.metrics.optimality_ratio);
      disc_sum += result.trace.discrete_steps;
      side_sum += result.trace.longer_side_vertices;
      lambda_sum += 0.5 * (result.trace.lambda_start + result.trace.lambda_goal);

      if (!spec.keep_plans_dir.empty()) {
        std::string stem = spec.keep_plans_dir + "/combo" + std::to_string(combo_index) +
                           "_rep" + std::to_string(rep);
        write_text_file(stem + ".instance.json", instance_to_json(instance));
        write_text_file(stem + ".plan.json",
                        plan_to_json(result.plan, instance.start.dimension));
      }
    } catch (const Error&) {
      // Failure shows up as success_count < repetitions on the row.
    }
  }
  int ok = row.success_count;
  if (ok > 0) {
    double mks_sum = 0.0;
    for (double m : makespans) mks_sum += m;
    row.makespan_mean = mks_sum / ok;
    row.lb_mean = lb_sum / ok;
    row.total_distance_mean = dist_sum / ok;
    row.wall_time_mean_s = wall_sum / ok;
    row.discrete_makespan_mean = disc_sum / ok;
    row.longer_side_mean = side_sum / ok;
    row.lambda_mean = lambda_sum / ok;
    double var = 0.0;
    for (double m : makespans) var += (m - row.makespan_mean) * (m - row.makespan_mean);
    row.makespan_std = std::sqrt(var / ok);
  }
  if (!ratios.empty()) {
    double sum = 0.0;
    for (double v : ratios) sum += v;
    row.opt_ratio_mean = sum / static_cast<double>(ratios.size());
    double var = 0.0;
    for (double v : ratios) var += (v - row.opt_ratio_mean) * (v - row.opt_ratio_mean);
    row.opt_ratio_std = std::sqrt(var / static_cast<double>(ratios.size()));
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int workers) {
  if (spec.repetitions < 1) throw Error(ErrorKind::Contract, "repetitions must be >= 1");
  std::vector<Combo> combos;
  for (const SweepPoint& point : spec.points) {
    for (GridKind grid : spec.grids) {
      for (const std::string& router : spec.routers) {
        combos.push_back({point, grid, router});
      }
    }
  }
  std::vector<SweepRow> rows(combos.size());
  int pool = std::min<int>(resolve_workers(workers), static_cast<int>(combos.size()));
  if (pool <= 1) {
    for (std::size_t k = 0; k < combos.size(); ++k) {
      rows[k] = run_combo(spec, combos[k], static_cast<int>(k));
    }
    return rows;
  }
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t k = cursor.fetch_add(1);
      if (k >= combos.size()) return;
      rows[k] = run_combo(spec, combos[k], static_cast<int>(k));
    }
  };
  std::vector<std::thread> threads;
  for (int w = 0; w < pool; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,delta,d,grid,router,lb_mean,makespan_mean,total_distance_mean,"
         "opt_ratio_mean,wall_time_mean_s,success_count,makespan_std,opt_ratio_std\n";
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return std::string(buf);
  };
  for (const SweepRow& row : rows) {
    out << row.point.n << ',' << num(row.point.delta) << ',' << num(row.point.d) << ','
        << grid_kind_name(row.grid) << ',' << row.router << ',' << num(row.lb_mean) << ','
        << num(row.makespan_mean) << ',' << num(row.total_distance_mean) << ','
        << num(row.opt_ratio_mean) << ',' << num(row.wall_time_mean_s) << ','
        << row.success_count << ',' << num(row.makespan_std) << ',' << num(row.opt_ratio_std)
        << '\n';
  }
  return out.str();
}

}  // namespace sear
