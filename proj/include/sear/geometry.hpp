#pragma once

#include <cstdint>

#include "sear/types.hpp"

namespace sear {

// Smallest ball enclosing the robot discs: the minimum ball of the centers
// with the robot radius added. Deterministic for a given input.
EnclosingBall min_enclosing_ball(const Configuration& config);

// Smallest ball of a raw point set (radius of the centers only).
EnclosingBall min_ball_of_points(const std::vector<Vec>& points, int dimension);

// min over i<j of ||x_i - x_j||. Plane-sweep, O(n log n).
// Throws Error(UndefinedStatistic) for n < 2.
double min_pairwise_distance(const Configuration& config);

struct SamplerParams {
  int n = 1;
  double r = 1.0;
  double delta = 0.0;  // extra gap: min center distance is 2r + delta
  double d = 0.0;      // center offset between start and goal regions (+x)
  int k = 2;
  std::uint64_t seed = 0;
};

// Radius of the smallest ball that n balls of radius r + delta/2 fit in,
// approximated from the hexagonal (2D) / FCC (3D) packing density.
double packing_radius(int n, double r, double delta, int k);

// Rejection-samples start centers uniformly in a ball of radius
// 1.5 * packing_radius about the origin and goal centers about (d, 0[, 0]),
// both subject to pairwise distance >= 2r + delta; the goal ordering gets a
// uniformly random permutation. Deterministic for a fixed seed.
// Throws Error(InfeasibleDensity) after 1e6 consecutive rejections.
ProblemInstance sample_instance(const SamplerParams& params);

}  // namespace sear
