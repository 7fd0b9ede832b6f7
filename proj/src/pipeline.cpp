#include "sear/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "sear/errors.hpp"
#include "sear/geometry.hpp"
#include "sear/json_io.hpp"
#include "sear/validate.hpp"

namespace sear {

double PipelineConfig::resolved_edge_length(double robot_radius) const {
  if (edge_length) return *edge_length;
  return default_edge_length(grid_kind, robot_radius);
}

std::pair<SubPlan, ProblemInstance> shift(const ProblemInstance& instance) {
  EnclosingBall start_ball = min_enclosing_ball(instance.start);
  EnclosingBall goal_ball = min_enclosing_ball(instance.goal);
  Vec offset = goal_ball.center - start_ball.center;
  double d = offset.norm();

  SubPlan sub;
  sub.duration = d;
  sub.robots.resize(static_cast<std::size_t>(instance.size()));
  ProblemInstance shifted = instance;
  if (d > 0.0) {
    for (int i = 0; i < instance.size(); ++i) {
      const Vec& from = instance.start.positions[static_cast<std::size_t>(i)];
      Vec to = from + offset;
      sub.robots[static_cast<std::size_t>(i)] = {{0.0, from}, {d, to}};
      shifted.start.positions[static_cast<std::size_t>(i)] = to;
    }
  }
  shifted.meta.d = 0.0;
  return {std::move(sub), std::move(shifted)};
}

double resolve_lambda(const Configuration& config, double edge_length) {
  if (config.size() < 2) return 1.0;
  return std::max(1.0, 2.0 * edge_length / min_pairwise_distance(config));
}

std::pair<SubPlan, Configuration> expand(const Configuration& config, Vec center,
                                         double lambda) {
  if (lambda < 1.0) {
    throw Error(ErrorKind::Contract, "expansion factor must be at least 1");
  }
  SubPlan sub;
  sub.robots.resize(static_cast<std::size_t>(config.size()));
  Configuration out = config;
  if (lambda == 1.0) return {std::move(sub), std::move(out)};

  for (int i = 0; i < config.size(); ++i) {
    const Vec& from = config.positions[static_cast<std::size_t>(i)];
    Vec to = center + (from - center) * lambda;
    double travel = (lambda - 1.0) * (from - center).norm();
    out.positions[static_cast<std::size_t>(i)] = to;
    if (travel > 0.0) {
      sub.robots[static_cast<std::size_t>(i)] = {{0.0, from}, {travel, to}};
      sub.duration = std::max(sub.duration, travel);
    }
  }
  return {std::move(sub), std::move(out)};
}

std::pair<SubPlan, std::vector<int>> assign(const Configuration& config,
                                            const GridGraph& grid) {
  SubPlan sub;
  sub.robots.resize(static_cast<std::size_t>(config.size()));
  std::vector<int> injection(static_cast<std::size_t>(config.size()), -1);
  std::vector<int> owner(static_cast<std::size_t>(grid.num_vertices()), -1);
  for (int i = 0; i < config.size(); ++i) {
    const Vec& from = config.positions[static_cast<std::size_t>(i)];
    int vertex = grid.nearest_vertex(from);
    if (owner[static_cast<std::size_t>(vertex)] >= 0) {
      throw Error(ErrorKind::AssignmentConflict,
                  "robots " + std::to_string(owner[static_cast<std::size_t>(vertex)]) + " and " +
                      std::to_string(i) + " snap to vertex " + std::to_string(vertex));
    }
    owner[static_cast<std::size_t>(vertex)] = i;
    injection[static_cast<std::size_t>(i)] = vertex;
    Vec to = grid.vertex_pos(vertex);
    double travel = distance(from, to);
    if (travel > 0.0) {
      sub.robots[static_cast<std::size_t>(i)] = {{0.0, from}, {travel, to}};
      sub.duration = std::max(sub.duration, travel);
    }
  }
  return {std::move(sub), std::move(injection)};
}

namespace {

// Concatenates phase fragments into one plan; stationary runs collapse.
class PlanStitcher {
 public:
  explicit PlanStitcher(int n) : trajectories_(static_cast<std::size_t>(n)) {}

  void append_phase(const SubPlan& sub, double offset) {
    for (std::size_t i = 0; i < sub.robots.size(); ++i) {
      for (const Waypoint& w : sub.robots[i]) {
        append(static_cast<int>(i), offset + w.t, w.p);
      }
    }
  }

  Plan finish(double makespan, const Configuration& start, const Configuration& goal) {
    Plan plan;
    plan.makespan = makespan;
    plan.robots.resize(trajectories_.size());
    for (std::size_t i = 0; i < trajectories_.size(); ++i) {
      auto& traj = trajectories_[i];
      if (traj.empty()) traj.push_back({0.0, start.positions[i]});
      if (traj.back().t < makespan) {
        append(static_cast<int>(i), makespan, goal.positions[i]);
      }
      plan.robots[i].waypoints = std::move(traj);
    }
    return plan;
  }

 private:
  void append(int robot, double t, const Vec& p) {
    auto& traj = trajectories_[static_cast<std::size_t>(robot)];
    if (traj.empty()) {
      traj.push_back({t > 0.0 ? 0.0 : t, p});
      if (t > 0.0) traj.push_back({t, p});
      return;
    }
    Waypoint& last = traj.back();
    if (t <= last.t) {
      return;  // phase boundary echo; positions agree by construction
    }
    if (last.p == p && traj.size() >= 2 && traj[traj.size() - 2].p == p) {
      last.t = t;  // extend a stationary run
      return;
    }
    traj.push_back({t, p});
  }

  std::vector<std::vector<Waypoint>> trajectories_;
};

}  // namespace

SolveResult solve(const ProblemInstance& instance, const PipelineConfig& config) {
  auto t_begin = std::chrono::steady_clock::now();
  instance.check_valid(config.clearance_tol);
  const double r = instance.start.radius;
  const double edge_length = config.resolved_edge_length(r);
  const int n = instance.size();

  SolveResult result;
  PipelineTrace& trace = result.trace;

  // Shift so both enclosing-ball centers coincide.
  auto [shift_sub, shifted] = shift(instance);
  Vec center = min_enclosing_ball(shifted.goal).center;

  // Expansion factors are resolved per side from each configuration.
  double lambda_start = config.lambda_override
                            ? std::max(1.0, *config.lambda_override)
                            : resolve_lambda(shifted.start, edge_length);
  double lambda_goal = config.lambda_override
                           ? std::max(1.0, *config.lambda_override)
                           : resolve_lambda(shifted.goal, edge_length);
  trace.lambda_start = lambda_start;
  trace.lambda_goal = lambda_goal;

  auto [expand_start_sub, expanded_start] = expand(shifted.start, center, lambda_start);
  auto [expand_goal_sub, expanded_goal] = expand(shifted.goal, center, lambda_goal);

  double reach = edge_length;
  for (const Vec& p : expanded_start.positions) reach = std::max(reach, distance(p, center));
  for (const Vec& p : expanded_goal.positions) reach = std::max(reach, distance(p, center));
  auto grid = std::make_shared<const GridGraph>(
      build_covering_grid(config.grid_kind, edge_length, center, reach + edge_length, r));
  trace.grid = grid;
  trace.longer_side_vertices = std::max(grid->m_w, std::max(grid->m_h, grid->m_d));

  auto [assign_start_sub, start_vertices] = assign(expanded_start, *grid);
  auto [assign_goal_sub, goal_vertices] = assign(expanded_goal, *grid);
  trace.start_vertices = start_vertices;
  trace.goal_vertices = goal_vertices;

  // Route on the grid.
  DiscreteInstance discrete{grid, start_vertices, goal_vertices};
  Router router = find_router(config.router);
  DiscretePlan discrete_plan;
  try {
    discrete_plan = router(discrete);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Routing || e.kind() == ErrorKind::OracleTooLarge) {
      throw Error(ErrorKind::Routing, std::string("router failed: ") + e.what(),
                  discrete_instance_to_json(discrete));
    }
    throw;
  }
  ConversionResult route = discrete_to_continuous(discrete_plan, *grid, config.speed);
  trace.discrete_steps = discrete_plan.makespan() + route.serialized_substeps;
  trace.serialized_substeps = route.serialized_substeps;

  // Contract: the goal-side expand+assign, played backwards.
  SubPlan contract_assign = assign_goal_sub.reversed();
  SubPlan contract_expand = expand_goal_sub.reversed();

  const SubPlan* phases[] = {&shift_sub,      &expand_start_sub, &assign_start_sub,
                             &route.fragment, &contract_assign,  &contract_expand};
  const char* names[] = {"shift", "expand", "assign", "route", "contract-assign",
                         "contract-expand"};
  PlanStitcher stitcher(n);
  double offset = 0.0;
  for (int k = 0; k < 6; ++k) {
    stitcher.append_phase(*phases[k], offset);
    trace.phases.push_back({names[k], offset, offset + phases[k]->duration});
    offset += phases[k]->duration;
  }
  result.plan = stitcher.finish(offset, instance.start, instance.goal);

  ValidationReport report = validate_plan(instance, result.plan, config.clearance_tol);
  if (!report.pass) {
    const Violation& v = report.violations.front();
    throw Error(ErrorKind::Validation,
                "emitted plan failed validation at t=" + std::to_string(v.time) +
                    " (robots " + std::to_string(v.robot_a) + "," +
                    std::to_string(v.robot_b) + ", distance " + std::to_string(v.distance) + ")");
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();
  result.metrics = evaluate_metrics(instance, result.plan, wall);
  return result;
}

}  // namespace sear
