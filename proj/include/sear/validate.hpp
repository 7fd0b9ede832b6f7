#pragma once

#include "sear/types.hpp"

namespace sear {

// Checks endpoint match, the unit speed bound, and continuous pairwise
// clearance min_t ||x_i(t) - x_j(t)|| >= 2r - clearance_tol. Clearance is
// evaluated analytically per pair of overlapping linear segments by
// minimizing the relative-position quadratic in closed form.
// Negative clearance_tol selects the default 1e-6 * r.
// Throws Error(Contract) on robot count mismatch and Error(MalformedPlan)
// on non-monotone waypoint times.
ValidationReport validate_plan(const ProblemInstance& instance, const Plan& plan,
                               double clearance_tol = -1.0);

// Closest approach of two trajectories over [0, makespan]; exposed for the
// renderer overlap check and tests.
struct PairApproach {
  double distance;
  double time;
};
PairApproach closest_pair_approach(const Trajectory& a, const Trajectory& b,
                                   double horizon);

Metrics evaluate_metrics(const ProblemInstance& instance, const Plan& plan,
                         double wall_time_seconds = 0.0);

}  // namespace sear
