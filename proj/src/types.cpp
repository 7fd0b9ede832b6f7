#include "sear/types.hpp"

#include <algorithm>
#include <cmath>

#include "sear/errors.hpp"

namespace sear {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Contract: return "contract";
    case ErrorKind::MalformedPlan: return "malformed-plan";
    case ErrorKind::InvalidInstance: return "invalid-instance";
    case ErrorKind::UndefinedStatistic: return "undefined-statistic";
    case ErrorKind::InfeasibleDensity: return "infeasible-density";
    case ErrorKind::InvalidEdgeLength: return "invalid-edge-length";
    case ErrorKind::OutOfCoverage: return "out-of-coverage";
    case ErrorKind::Partition: return "partition";
    case ErrorKind::AssignmentConflict: return "assignment-conflict";
    case ErrorKind::Routing: return "routing";
    case ErrorKind::OracleTooLarge: return "oracle-too-large";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

void Configuration::check_valid(double clearance_tol) const {
  if (radius <= 0.0 || !std::isfinite(radius)) {
    throw Error(ErrorKind::InvalidInstance, "robot radius must be positive and finite");
  }
  if (dimension != 2 && dimension != 3) {
    throw Error(ErrorKind::InvalidInstance, "dimension must be 2 or 3");
  }
  if (positions.empty()) {
    throw Error(ErrorKind::InvalidInstance, "configuration must contain at least one robot");
  }
  if (clearance_tol < 0.0) clearance_tol = default_clearance_tol(radius);
  for (const Vec& p : positions) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw Error(ErrorKind::InvalidInstance, "non-finite robot coordinate");
    }
    if (dimension == 2 && p.z != 0.0) {
      throw Error(ErrorKind::InvalidInstance, "planar configuration has a nonzero z coordinate");
    }
  }
  const double limit = 2.0 * radius - clearance_tol;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double dist = distance(positions[i], positions[j]);
      if (dist < limit) {
        throw Error(ErrorKind::InvalidInstance,
                    "robots " + std::to_string(i) + " and " + std::to_string(j) +
                        " overlap: center distance " + std::to_string(dist) +
                        " < " + std::to_string(limit));
      }
    }
  }
}

void ProblemInstance::check_valid(double clearance_tol) const {
  if (start.size() != goal.size()) {
    throw Error(ErrorKind::InvalidInstance, "start and goal robot counts differ");
  }
  if (start.radius != goal.radius) {
    throw Error(ErrorKind::InvalidInstance, "start and goal radii differ");
  }
  if (start.dimension != goal.dimension) {
    throw Error(ErrorKind::InvalidInstance, "start and goal dimensions differ");
  }
  start.check_valid(clearance_tol);
  goal.check_valid(clearance_tol);
}

Vec Trajectory::position_at(double t) const {
  if (waypoints.empty()) return {};
  if (t <= waypoints.front().t) return waypoints.front().p;
  if (t >= waypoints.back().t) return waypoints.back().p;
  // First waypoint with time > t.
  auto it = std::upper_bound(waypoints.begin(), waypoints.end(), t,
                             [](double v, const Waypoint& w) { return v < w.t; });
  const Waypoint& b = *it;
  const Waypoint& a = *(it - 1);
  double u = (t - a.t) / (b.t - a.t);
  return a.p + (b.p - a.p) * u;
}

double Trajectory::arc_length() const {
  double total = 0.0;
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    total += distance(waypoints[i - 1].p, waypoints[i].p);
  }
  return total;
}

SubPlan SubPlan::reversed() const {
  SubPlan out;
  out.duration = duration;
  out.robots.resize(robots.size());
  for (std::size_t i = 0; i < robots.size(); ++i) {
    out.robots[i].reserve(robots[i].size());
    for (auto it = robots[i].rbegin(); it != robots[i].rend(); ++it) {
      out.robots[i].push_back({duration - it->t, it->p});
    }
  }
  return out;
}

}  // namespace sear
