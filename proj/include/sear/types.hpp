#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sear/geom.hpp"

namespace sear {

// Joint placement of n disc/ball robots with uniform radius.
struct Configuration {
  std::vector<Vec> positions;
  double radius = 1.0;
  int dimension = 2;

  int size() const { return static_cast<int>(positions.size()); }

  // Throws Error(InvalidInstance) when coordinates are non-finite or two
  // centers come closer than 2r - tol. Negative tol selects the default
  // 1e-6 * radius.
  void check_valid(double clearance_tol = -1.0) const;
};

struct InstanceMeta {
  std::uint64_t seed = 0;
  double delta = 0.0;
  double d = 0.0;
};

struct ProblemInstance {
  Configuration start;
  Configuration goal;
  InstanceMeta meta;

  int size() const { return start.size(); }
  void check_valid(double clearance_tol = -1.0) const;
};

// Ball containing all robots (not just centers) of one configuration.
struct EnclosingBall {
  Vec center;
  double radius = 0.0;
};

struct Waypoint {
  double t = 0.0;
  Vec p;
};

// Piecewise-linear trajectory; position is constant before the first and
// after the last waypoint.
struct Trajectory {
  std::vector<Waypoint> waypoints;

  Vec position_at(double t) const;
  double arc_length() const;
};

struct Plan {
  double makespan = 0.0;
  std::vector<Trajectory> robots;
};

// Plan fragment of one pipeline phase. Waypoint times are phase-relative;
// robots without waypoints hold their position for the whole phase.
struct SubPlan {
  double duration = 0.0;
  std::vector<std::vector<Waypoint>> robots;

  // Time-reversal: positions at mirrored times agree with the original.
  SubPlan reversed() const;
};

enum class ViolationKind { Endpoint, Speed, Clearance };

struct Violation {
  ViolationKind kind;
  double time = 0.0;
  int robot_a = -1;
  int robot_b = -1;  // -1 for single-robot violations
  double distance = 0.0;
  std::string detail;
};

struct ValidationReport {
  bool pass = true;
  std::vector<Violation> violations;  // capped at kMaxViolations

  // Closest approach over all robot pairs (meaningful when n >= 2).
  double min_pair_distance = std::numeric_limits<double>::infinity();
  double min_pair_time = 0.0;
  int min_pair_a = -1;
  int min_pair_b = -1;

  static constexpr int kMaxViolations = 100;
};

struct Metrics {
  double makespan = 0.0;
  double total_distance = 0.0;
  double max_single_distance = 0.0;
  double lower_bound = 0.0;  // max_i ||start_i - goal_i||
  std::optional<double> optimality_ratio;
  double wall_time_seconds = 0.0;
};

inline double default_clearance_tol(double radius) { return 1e-6 * radius; }

}  // namespace sear
