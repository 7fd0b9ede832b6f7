#include "sear/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "sear/errors.hpp"

namespace sear {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

// Distinguishable fill colors, cycled by robot index.
const char* kPalette[] = {"#f46528", "#f15095", "#50a8e3", "#b8d604", "#7f4233",
                          "#3f7d20", "#6457a6", "#ffb400", "#0aa"};

}  // namespace

SvgSnapshot render_snapshot(const ProblemInstance& instance, const Plan& plan, double t,
                            const SvgOptions& options) {
  if (t < 0.0 || t > plan.makespan) {
    throw Error(ErrorKind::Contract, "snapshot time outside [0, makespan]");
  }
  SvgSnapshot snap;
  snap.radius = instance.start.radius;
  for (const Trajectory& traj : plan.robots) {
    snap.centers.push_back(traj.position_at(t));
  }

  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  bool first = true;
  auto grow = [&](const Vec& p, double pad) {
    min_x = first ? p.x - pad : std::min(min_x, p.x - pad);
    max_x = first ? p.x + pad : std::max(max_x, p.x + pad);
    min_y = first ? p.y - pad : std::min(min_y, p.y - pad);
    max_y = first ? p.y + pad : std::max(max_y, p.y + pad);
    first = false;
  };
  for (const Vec& c : snap.centers) grow(c, 2.0 * snap.radius);
  if (options.grid_overlay && options.grid) {
    for (const Vec& p : options.grid->positions) grow(p, snap.radius);
  }

  const double s = options.scale;
  auto px = [&](double x) { return fmt((x - min_x) * s); };
  auto py = [&](double y) { return fmt((max_y - y) * s); };  // y grows upward

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt((max_x - min_x) * s)
      << "\" height=\"" << fmt((max_y - min_y) * s) << "\">\n";
  if (options.grid_overlay && options.grid) {
    const GridGraph& grid = *options.grid;
    out << "<g stroke=\"#ccc\" stroke-width=\"1\">\n";
    for (int u = 0; u < grid.num_vertices(); ++u) {
      for (int v : grid.adjacency[static_cast<std::size_t>(u)]) {
        if (v <= u) continue;
        const Vec& a = grid.vertex_pos(u);
        const Vec& b = grid.vertex_pos(v);
        out << "<line x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\"" << px(b.x)
            << "\" y2=\"" << py(b.y) << "\"/>\n";
      }
    }
    out << "</g>\n";
  }
  for (std::size_t i = 0; i < snap.centers.size(); ++i) {
    const Vec& c = snap.centers[i];
    const char* fill = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "<circle cx=\"" << px(c.x) << "\" cy=\"" << py(c.y) << "\" r=\""
        << fmt(snap.radius * s) << "\" fill=\"" << fill
        << "\" fill-opacity=\"0.85\" stroke=\"#333\"/>\n";
  }
  out << "</svg>\n";
  snap.svg = out.str();
  return snap;
}

}  // namespace sear
