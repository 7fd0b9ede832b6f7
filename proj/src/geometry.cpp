#include "sear/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sear/errors.hpp"

namespace sear {

namespace {

struct Ball {
  Vec c;
  double r2 = -1.0;  // squared radius; negative marks "empty"

  bool contains(const Vec& p) const {
    if (r2 < 0.0) return false;
    return distance_sq(c, p) <= r2 * (1.0 + 1e-12) + 1e-24;
  }
};

Ball ball_from_1(const Vec& a) { return {a, 0.0}; }

Ball ball_from_2(const Vec& a, const Vec& b) {
  Vec c = (a + b) * 0.5;
  return {c, distance_sq(c, a)};
}

// Circumball of three points (2D or embedded in 3D); degenerate triples fall
// back to the best two-point ball covering all three.
Ball ball_from_3(const Vec& a, const Vec& b, const Vec& c) {
  Vec ab = b - a, ac = c - a;
  double abab = ab.norm_sq(), acac = ac.norm_sq(), abac = ab.dot(ac);
  double det = 2.0 * (abab * acac - abac * abac);
  if (std::abs(det) < 1e-14 * abab * acac + 1e-30) {
    Ball best;
    for (const Ball& cand : {ball_from_2(a, b), ball_from_2(a, c), ball_from_2(b, c)}) {
      if (cand.contains(a) && cand.contains(b) && cand.contains(c)) {
        if (best.r2 < 0.0 || cand.r2 < best.r2) best = cand;
      }
    }
    return best;
  }
  double s = (acac * (abab - abac)) / det;
  double t = (abab * (acac - abac)) / det;
  Vec center = a + ab * s + ac * t;
  return {center, distance_sq(center, a)};
}

Ball ball_from_4(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  // Solve for the point equidistant from all four (3x3 linear system).
  Vec ab = b - a, ac = c - a, ad = d - a;
  double m[3][4] = {
      {ab.x, ab.y, ab.z, 0.5 * ab.norm_sq()},
      {ac.x, ac.y, ac.z, 0.5 * ac.norm_sq()},
      {ad.x, ad.y, ad.z, 0.5 * ad.norm_sq()},
  };
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    if (std::abs(m[pivot][col]) < 1e-12) return {};  // coplanar; caller retries smaller sets
    std::swap(m[col], m[pivot]);
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      double f = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
    }
  }
  Vec offset{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
  Vec center = a + offset;
  return {center, distance_sq(center, a)};
}

Ball ball_of_boundary(const std::vector<Vec>& boundary) {
  switch (boundary.size()) {
    case 0: return {};
    case 1: return ball_from_1(boundary[0]);
    case 2: return ball_from_2(boundary[0], boundary[1]);
    case 3: return ball_from_3(boundary[0], boundary[1], boundary[2]);
    default: return ball_from_4(boundary[0], boundary[1], boundary[2], boundary[3]);
  }
}

// Welzl's algorithm with move-to-front; deterministic for a given input order.
Ball welzl(std::vector<Vec>& pts, std::size_t limit, std::vector<Vec>& boundary,
           std::size_t max_boundary) {
  Ball ball = ball_of_boundary(boundary);
  if (boundary.size() == max_boundary) return ball;
  for (std::size_t i = 0; i < limit; ++i) {
    if (ball.contains(pts[i])) continue;
    boundary.push_back(pts[i]);
    ball = welzl(pts, i, boundary, max_boundary);
    boundary.pop_back();
    // Move-to-front keeps hard points early on subsequent passes.
    Vec p = pts[i];
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
    pts.insert(pts.begin(), p);
  }
  return ball;
}

}  // namespace

EnclosingBall min_ball_of_points(const std::vector<Vec>& points, int dimension) {
  if (points.empty()) {
    throw Error(ErrorKind::Contract, "min_ball_of_points needs at least one point");
  }
  std::vector<Vec> work = points;
  std::vector<Vec> boundary;
  Ball ball = welzl(work, work.size(), boundary,
                    static_cast<std::size_t>(dimension) + 1);
  return {ball.c, std::sqrt(std::max(ball.r2, 0.0))};
}

EnclosingBall min_enclosing_ball(const Configuration& config) {
  EnclosingBall ball = min_ball_of_points(config.positions, config.dimension);
  ball.radius += config.radius;
  return ball;
}

double min_pairwise_distance(const Configuration& config) {
  const int n = config.size();
  if (n < 2) {
    throw Error(ErrorKind::UndefinedStatistic,
                "min_pairwise_distance needs at least two robots");
  }
  // Classic sweep over x with an active window ordered by y.
  std::vector<Vec> pts = config.positions;
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  });
  auto by_y = [](const Vec& a, const Vec& b) {
    if (a.y != b.y) return a.y < b.y;
    if (a.x != b.x) return a.x < b.x;
    return a.z < b.z;
  };
  std::multiset<Vec, decltype(by_y)> active(by_y);
  double best = std::numeric_limits<double>::max();
  std::size_t tail = 0;
  for (const Vec& p : pts) {
    double bestd = std::sqrt(best);
    while (tail < pts.size() && pts[tail].x < p.x - bestd) {
      active.erase(active.find(pts[tail]));
      ++tail;
    }
    auto lo = active.lower_bound(Vec{-std::numeric_limits<double>::infinity(),
                                     p.y - bestd, 0.0});
    for (auto it = lo; it != active.end() && it->y <= p.y + bestd; ++it) {
      best = std::min(best, distance_sq(p, *it));
      bestd = std::sqrt(best);
    }
    active.insert(p);
  }
  return std::sqrt(best);
}

double packing_radius(int n, double r, double delta, int k) {
  double unit = r + 0.5 * delta;
  if (k == 2) {
    const double eta = M_PI / (2.0 * std::sqrt(3.0));  // hexagonal packing density
    return unit * (1.0 + std::sqrt(static_cast<double>(n) / eta));
  }
  const double eta3 = M_PI / (3.0 * std::sqrt(2.0));  // FCC packing density
  return unit * (1.0 + std::cbrt(static_cast<double>(n) / eta3));
}

namespace {

std::vector<Vec> sample_centers(Rng& rng, const SamplerParams& params, Vec region_center) {
  const double region_radius = 1.5 * packing_radius(params.n, params.r, params.delta, params.k);
  const double min_dist_sq =
      (2.0 * params.r + params.delta) * (2.0 * params.r + params.delta);
  std::vector<Vec> centers;
  centers.reserve(params.n);
  int consecutive_failures = 0;
  while (static_cast<int>(centers.size()) < params.n) {
    Vec candidate = region_center + rng.in_ball(region_radius, params.k);
    bool ok = true;
    for (const Vec& c : centers) {
      if (distance_sq(candidate, c) < min_dist_sq) {
        ok = false;
        break;
      }
    }
    if (ok) {
      centers.push_back(candidate);
      consecutive_failures = 0;
    } else if (++consecutive_failures >= 1000000) {
      throw Error(ErrorKind::InfeasibleDensity,
                  "rejection sampling stalled after 1e6 consecutive failures (n=" +
                      std::to_string(params.n) + ", delta=" + std::to_string(params.delta) + ")");
    }
  }
  return centers;
}

}  // namespace

ProblemInstance sample_instance(const SamplerParams& params) {
  if (params.n < 1) throw Error(ErrorKind::Contract, "sampler needs n >= 1");
  if (params.k != 2 && params.k != 3) throw Error(ErrorKind::Contract, "k must be 2 or 3");
  if (params.r <= 0.0 || params.delta < 0.0 || params.d < 0.0) {
    throw Error(ErrorKind::Contract, "sampler parameters out of range");
  }
  Rng rng(params.seed);
  ProblemInstance instance;
  instance.start.radius = instance.goal.radius = params.r;
  instance.start.dimension = instance.goal.dimension = params.k;
  instance.meta = {params.seed, params.delta, params.d};

  instance.start.positions = sample_centers(rng, params, Vec{});
  Vec goal_center{params.d, 0.0, 0.0};
  std::vector<Vec> goals = sample_centers(rng, params, goal_center);

  // Random labeling: permute which goal each label receives.
  std::vector<int> labels(params.n);
  for (int i = 0; i < params.n; ++i) labels[i] = i;
  rng.shuffle(labels);
  instance.goal.positions.resize(params.n);
  for (int i = 0; i < params.n; ++i) instance.goal.positions[i] = goals[labels[i]];

  instance.check_valid();
  return instance;
}

}  // namespace sear
