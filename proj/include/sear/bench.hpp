#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sear/grid.hpp"
#include "sear/pipeline.hpp"

namespace sear {

struct SweepPoint {
  int n = 1;
  double delta = 0.0;
  double d = 0.0;
};

struct SweepSpec {
  std::vector<SweepPoint> points;
  std::vector<GridKind> grids{GridKind::Hex};
  std::vector<std::string> routers{"sag"};
  int repetitions = 10;  // 10 instances per point, averaged
  std::uint64_t base_seed = 0;
  int dimension = 2;
  double robot_radius = 1.0;
  std::optional<double> edge_length;
  double clearance_tol = -1.0;
  std::string keep_plans_dir;  // when set, per-repetition plan files are written
};

struct SweepRow {
  SweepPoint point;
  GridKind grid = GridKind::Hex;
  std::string router;
  int success_count = 0;
  int repetitions = 0;
  double lb_mean = 0.0;
  double makespan_mean = 0.0;
  double total_distance_mean = 0.0;
  double opt_ratio_mean = 0.0;
  double wall_time_mean_s = 0.0;
  double makespan_std = 0.0;
  double opt_ratio_std = 0.0;
  // Extra aggregates used by the trend tests (not part of the CSV).
  double discrete_makespan_mean = 0.0;
  double longer_side_mean = 0.0;
  double lambda_mean = 0.0;
};

// Executes every (point, grid, router) combination; per-repetition seeds are
// base_seed + repetition index. Rows come back in input order regardless of
// worker scheduling. workers <= 0 reads SEAR_WORKERS, defaulting to the
// hardware concurrency.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int workers = 0);

// Header plus one row per combination; byte-deterministic for a fixed spec.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace sear
