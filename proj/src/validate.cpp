#include "sear/validate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "sear/errors.hpp"

namespace sear {

namespace {

constexpr double kEndpointTol = 1e-9;
constexpr double kSpeedSlack = 1e-9;  // relative slack on the unit speed bound

struct SegmentPose {
  Vec p;   // position at interval start
  Vec v;   // velocity
};

// Position and velocity of the linear piece active over [t, next break).
SegmentPose pose_at(const Trajectory& traj, double t) {
  const auto& w = traj.waypoints;
  if (w.size() < 2 || t >= w.back().t) return {traj.position_at(t), {}};
  if (t < w.front().t) return {w.front().p, {}};
  auto it = std::upper_bound(w.begin(), w.end(), t,
                             [](double v, const Waypoint& wp) { return v < wp.t; });
  const Waypoint& b = *it;
  const Waypoint& a = *(it - 1);
  double h = b.t - a.t;
  Vec vel = (b.p - a.p) * (1.0 / h);
  double u = t - a.t;
  return {a.p + vel * u, vel};
}

// Closest approach of two linearly moving points over [0, h].
// Returns {distance, time offset in [0, h]}.
PairApproach segment_pair_min(const Vec& dp0, const Vec& dv, double h) {
  double vv = dv.norm_sq();
  double tstar = 0.0;
  if (vv > 0.0) {
    tstar = -dp0.dot(dv) / vv;
    tstar = std::clamp(tstar, 0.0, h);
  }
  Vec dp = dp0 + dv * tstar;
  return {dp.norm(), tstar};
}

struct PairResult {
  double min_distance = std::numeric_limits<double>::infinity();
  double min_time = 0.0;
  std::vector<Violation> violations;
};

PairResult check_pair(const Trajectory& ta, const Trajectory& tb, int ia, int ib,
                      double horizon, double limit, int max_violations) {
  PairResult out;
  // Merged breakpoints of both trajectories, clipped to [0, horizon].
  std::vector<double> breaks;
  breaks.push_back(0.0);
  for (const auto& w : ta.waypoints)
    if (w.t > 0.0 && w.t < horizon) breaks.push_back(w.t);
  for (const auto& w : tb.waypoints)
    if (w.t > 0.0 && w.t < horizon) breaks.push_back(w.t);
  breaks.push_back(horizon);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const std::size_t intervals = std::max<std::size_t>(breaks.size() - 1, 1);
  for (std::size_t s = 0; s < intervals; ++s) {
    double t0 = breaks[s];
    double h = (s + 1 < breaks.size()) ? breaks[s + 1] - t0 : 0.0;
    SegmentPose pa = pose_at(ta, t0);
    SegmentPose pb = pose_at(tb, t0);
    PairApproach m = segment_pair_min(pa.p - pb.p, pa.v - pb.v, h);
    double at = t0 + m.time;
    if (m.distance < out.min_distance) {
      out.min_distance = m.distance;
      out.min_time = at;
    }
    if (m.distance < limit &&
        static_cast<int>(out.violations.size()) < max_violations) {
      out.violations.push_back({ViolationKind::Clearance, at, ia, ib, m.distance,
                                "pairwise clearance below 2r"});
    }
  }
  return out;
}

}  // namespace

PairApproach closest_pair_approach(const Trajectory& a, const Trajectory& b,
                                   double horizon) {
  PairResult r = check_pair(a, b, 0, 1, horizon,
                            -std::numeric_limits<double>::infinity(), 0);
  return {r.min_distance, r.min_time};
}

ValidationReport validate_plan(const ProblemInstance& instance, const Plan& plan,
                               double clearance_tol) {
  const int n = instance.size();
  if (static_cast<int>(plan.robots.size()) != n) {
    throw Error(ErrorKind::Contract,
                "plan has " + std::to_string(plan.robots.size()) + " robots, instance has " +
                    std::to_string(n));
  }
  if (plan.makespan < 0.0 || !std::isfinite(plan.makespan)) {
    throw Error(ErrorKind::MalformedPlan, "makespan must be finite and non-negative");
  }
  for (int i = 0; i < n; ++i) {
    const auto& w = plan.robots[i].waypoints;
    if (w.empty()) {
      throw Error(ErrorKind::MalformedPlan, "robot " + std::to_string(i) + " has no waypoints");
    }
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (!(w[k].t > w[k - 1].t)) {
        throw Error(ErrorKind::MalformedPlan,
                    "robot " + std::to_string(i) + " has non-increasing waypoint times");
      }
    }
  }
  const double r = instance.start.radius;
  if (clearance_tol < 0.0) clearance_tol = default_clearance_tol(r);
  const double limit = 2.0 * r - clearance_tol;

  ValidationReport report;
  auto add_violation = [&report](const Violation& v) {
    if (static_cast<int>(report.violations.size()) < ValidationReport::kMaxViolations) {
      report.violations.push_back(v);
    }
    report.pass = false;
  };

  for (int i = 0; i < n; ++i) {
    const Trajectory& traj = plan.robots[i];
    Vec at0 = traj.position_at(0.0);
    if (distance(at0, instance.start.positions[i]) > kEndpointTol) {
      add_violation({ViolationKind::Endpoint, 0.0, i, -1,
                     distance(at0, instance.start.positions[i]),
                     "trajectory start differs from instance start"});
    }
    Vec atT = traj.position_at(plan.makespan);
    if (distance(atT, instance.goal.positions[i]) > kEndpointTol) {
      add_violation({ViolationKind::Endpoint, plan.makespan, i, -1,
                     distance(atT, instance.goal.positions[i]),
                     "trajectory end differs from instance goal"});
    }
    for (std::size_t k = 1; k < traj.waypoints.size(); ++k) {
      double dt = traj.waypoints[k].t - traj.waypoints[k - 1].t;
      double dist = distance(traj.waypoints[k].p, traj.waypoints[k - 1].p);
      if (dist > dt * (1.0 + kSpeedSlack)) {
        add_violation({ViolationKind::Speed, traj.waypoints[k - 1].t, i, -1, dist,
                       "segment exceeds unit speed"});
      }
    }
  }

  // Pairwise clearance. Independent pairs are distributed across a small
  // worker pool; results merge in deterministic pair order.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                        pairs.size() > 4096 ? 8u : 1u);
  if (workers < 1) workers = 1;
  std::vector<PairResult> results(pairs.size());
  std::atomic<std::size_t> cursor{0};
  auto run = [&]() {
    for (;;) {
      std::size_t idx = cursor.fetch_add(64);
      if (idx >= pairs.size()) return;
      std::size_t end = std::min(idx + 64, pairs.size());
      for (std::size_t k = idx; k < end; ++k) {
        auto [i, j] = pairs[k];
        results[k] = check_pair(plan.robots[i], plan.robots[j], i, j, plan.makespan,
                                limit, ValidationReport::kMaxViolations);
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run);
    for (auto& t : threads) t.join();
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const PairResult& pr = results[k];
    if (pr.min_distance < report.min_pair_distance) {
      report.min_pair_distance = pr.min_distance;
      report.min_pair_time = pr.min_time;
      report.min_pair_a = pairs[k].first;
      report.min_pair_b = pairs[k].second;
    }
    for (const auto& v : pr.violations) add_violation(v);
  }

  // Earliest violation first; report order is part of the contract.
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.time < b.time; });
  return report;
}

Metrics evaluate_metrics(const ProblemInstance& instance, const Plan& plan,
                         double wall_time_seconds) {
  Metrics m;
  m.makespan = plan.makespan;
  m.wall_time_seconds = wall_time_seconds;
  for (const Trajectory& traj : plan.robots) {
    double len = traj.arc_length();
    m.total_distance += len;
    m.max_single_distance = std::max(m.max_single_distance, len);
  }
  for (int i = 0; i < instance.size(); ++i) {
    m.lower_bound = std::max(
        m.lower_bound, distance(instance.start.positions[i], instance.goal.positions[i]));
  }
  if (m.lower_bound > 1e-12) {
    m.optimality_ratio = m.makespan / m.lower_bound;
  }
  return m;
}

}  // namespace sear
