#pragma once

#include <string>
#include <vector>

#include "sear/grid.hpp"
#include "sear/types.hpp"

namespace sear {

struct SvgOptions {
  bool grid_overlay = false;
  const GridGraph* grid = nullptr;
  double scale = 24.0;  // pixels per workspace unit
};

struct SvgSnapshot {
  std::vector<Vec> centers;  // interpolated robot centers at the snapshot time
  double radius = 0.0;
  std::string svg;
};

// Discs at plan positions interpolated at time t (projected to the xy plane
// for k=3). Throws Error(Contract) when t is outside [0, makespan].
SvgSnapshot render_snapshot(const ProblemInstance& instance, const Plan& plan, double t,
                            const SvgOptions& options = {});

}  // namespace sear
