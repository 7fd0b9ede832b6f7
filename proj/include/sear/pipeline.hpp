#pragma once

#include <memory>
#include <optional>
#include <string>

#include "sear/grid.hpp"
#include "sear/routing.hpp"
#include "sear/types.hpp"

namespace sear {

struct PipelineConfig {
  GridKind grid_kind = GridKind::Hex;
  std::optional<double> edge_length;      // default: kind bound (hex) or bound + 1e-3 r
  std::optional<double> lambda_override;  // default: max(1, 2l/d_min) per side
  double speed = 1.0;
  double clearance_tol = -1.0;  // default 1e-6 r
  std::string router = "sag";

  double resolved_edge_length(double robot_radius) const;
};

struct PhaseSpan {
  std::string name;
  double t0 = 0.0;
  double t1 = 0.0;
};

struct PipelineTrace {
  std::vector<PhaseSpan> phases;  // partition of [0, T]
  double lambda_start = 1.0;
  double lambda_goal = 1.0;
  std::shared_ptr<const GridGraph> grid;
  std::vector<int> start_vertices;  // V^I
  std::vector<int> goal_vertices;   // V^G
  int discrete_steps = 0;
  int serialized_substeps = 0;
  int longer_side_vertices = 0;
};

struct SolveResult {
  Plan plan;
  PipelineTrace trace;
  Metrics metrics;
};

// Translates every robot by o^G - o^I along straight lines at unit speed;
// the sub-plan lasts exactly d = ||o^I - o^G||.
std::pair<SubPlan, ProblemInstance> shift(const ProblemInstance& instance);

// max(1, 2 * edge_length / d_min); 1 for single-robot configurations.
double resolve_lambda(const Configuration& config, double edge_length);

// Radial scaling about `center` by lambda >= 1: robots start simultaneously
// at unit speed and stop individually after (lambda-1) * ||x_i - center||.
std::pair<SubPlan, Configuration> expand(const Configuration& config, Vec center,
                                         double lambda);

// Straight-line moves to nearest vertices; the returned map is the injection
// label -> vertex. Throws Error(AssignmentConflict) when two robots share a
// nearest vertex (possible only when the expansion precondition is broken).
std::pair<SubPlan, std::vector<int>> assign(const Configuration& config,
                                            const GridGraph& grid);

// Full composition: shift, expand+assign on both sides, discrete routing,
// contract as the time-reversed goal-side expand+assign. The emitted plan is
// validated before returning; failures raise Error(Validation).
SolveResult solve(const ProblemInstance& instance, const PipelineConfig& config);

}  // namespace sear
