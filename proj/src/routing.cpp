#include "sear/routing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <queue>
#include <set>

#include "sear/errors.hpp"
#include "sear/figure8_canon.hpp"
#include "sear/swap_tables.hpp"

namespace sear {

void DiscreteInstance::check_valid() const {
  if (!grid) throw Error(ErrorKind::Contract, "discrete instance has no grid");
  if (start.size() != goal.size()) {
    throw Error(ErrorKind::Contract, "start and goal label counts differ");
  }
  auto check_injective = [&](const std::vector<int>& m, const char* name) {
    std::set<int> seen;
    for (int v : m) {
      if (v < 0 || v >= grid->num_vertices()) {
        throw Error(ErrorKind::Contract, std::string(name) + " references a missing vertex");
      }
      if (!seen.insert(v).second) {
        throw Error(ErrorKind::Contract, std::string(name) + " is not injective");
      }
    }
  };
  check_injective(start, "V^I");
  check_injective(goal, "V^G");
}

std::vector<int> rotation_cycle(const GridGraph& grid, const Rotation& rotation) {
  if (rotation.face_b < 0) {
    return grid.faces[static_cast<std::size_t>(rotation.face_a)].cycle;
  }
  return make_figure8(grid, rotation.face_a, rotation.face_b).outer;
}

namespace {

void apply_rotation_cycle(std::vector<int>& token_at, std::vector<int>& vertex_of,
                          const std::vector<int>& cycle, int direction) {
  const int m = static_cast<int>(cycle.size());
  std::vector<int> moved(cycle.size());
  for (int k = 0; k < m; ++k) {
    moved[static_cast<std::size_t>(k)] = token_at[static_cast<std::size_t>(cycle[static_cast<std::size_t>(k)])];
  }
  for (int k = 0; k < m; ++k) {
    int to = cycle[static_cast<std::size_t>(((k + direction) % m + m) % m)];
    int token = moved[static_cast<std::size_t>(k)];
    token_at[static_cast<std::size_t>(to)] = token;
    if (token >= 0 && token < static_cast<int>(vertex_of.size())) {
      vertex_of[static_cast<std::size_t>(token)] = to;
    }
  }
}

// Cache of outer cycles; face cycles come straight from the grid.
class CycleCache {
 public:
  explicit CycleCache(const GridGraph& grid) : grid_(grid) {}

  const std::vector<int>& get(const Rotation& rot) {
    if (rot.face_b < 0) {
      return grid_.faces[static_cast<std::size_t>(rot.face_a)].cycle;
    }
    auto key = std::make_pair(rot.face_a, rot.face_b);
    auto it = outers_.find(key);
    if (it == outers_.end()) {
      it = outers_.emplace(key, make_figure8(grid_, rot.face_a, rot.face_b).outer).first;
    }
    return it->second;
  }

 private:
  const GridGraph& grid_;
  std::map<std::pair<int, int>, std::vector<int>> outers_;
};

}  // namespace

std::vector<std::vector<Move>> discrete_plan_moves(const GridGraph& grid,
                                                   const DiscretePlan& plan) {
  std::vector<int> token_at(static_cast<std::size_t>(grid.num_vertices()), -1);
  std::vector<int> vertex_of = plan.initial_tokens;
  for (std::size_t t = 0; t < vertex_of.size(); ++t) {
    token_at[static_cast<std::size_t>(vertex_of[t])] = static_cast<int>(t);
  }
  CycleCache cycles(grid);
  std::vector<std::vector<Move>> out;
  out.reserve(plan.steps.size());
  for (const auto& step : plan.steps) {
    std::vector<Move> moves;
    for (const Rotation& rot : step) {
      const auto& cycle = cycles.get(rot);
      const int m = static_cast<int>(cycle.size());
      for (int k = 0; k < m; ++k) {
        int from = cycle[static_cast<std::size_t>(k)];
        int to = cycle[static_cast<std::size_t>(((k + rot.direction) % m + m) % m)];
        moves.push_back({token_at[static_cast<std::size_t>(from)], from, to});
      }
      apply_rotation_cycle(token_at, vertex_of, cycle, rot.direction);
    }
    out.push_back(std::move(moves));
  }
  return out;
}

std::vector<int> apply_discrete_plan(const GridGraph& grid, const DiscretePlan& plan) {
  std::vector<int> token_at(static_cast<std::size_t>(grid.num_vertices()), -1);
  std::vector<int> vertex_of = plan.initial_tokens;
  for (std::size_t t = 0; t < vertex_of.size(); ++t) {
    token_at[static_cast<std::size_t>(vertex_of[t])] = static_cast<int>(t);
  }
  CycleCache cycles(grid);
  for (const auto& step : plan.steps) {
    for (const Rotation& rot : step) {
      apply_rotation_cycle(token_at, vertex_of, cycles.get(rot), rot.direction);
    }
  }
  return vertex_of;
}

PaddedInstance pad_with_virtual_robots(const DiscreteInstance& instance) {
  instance.check_valid();
  PaddedInstance out;
  out.num_real = instance.size();
  out.token_vertex = instance.start;
  std::vector<char> occupied(static_cast<std::size_t>(instance.grid->num_vertices()), 0);
  for (int v : instance.start) occupied[static_cast<std::size_t>(v)] = 1;
  for (int v = 0; v < instance.grid->num_vertices(); ++v) {
    if (!occupied[static_cast<std::size_t>(v)]) out.token_vertex.push_back(v);
  }
  return out;
}

std::vector<Rotation> swap_in_figure8(const GridGraph& grid, const Figure8Cell& cell,
                                      int a, int b) {
  if (a == b) return {};
  int la = cell.local_of(a);
  int lb = cell.local_of(b);
  if (la < 0 || lb < 0) {
    throw Error(ErrorKind::Contract, "swap endpoints must be core vertices of the cell");
  }
  // The table exchanges locals (la, lb); generator ids map onto the cell's
  // stored faces. A reversed face_b cycle flips the direction of B moves.
  SwapSequenceView seq = swap_table_sequence(grid.kind, la, lb);
  std::vector<Rotation> out;
  out.reserve(static_cast<std::size_t>(seq.size));
  for (int k = 0; k < seq.size; ++k) {
    switch (seq.data[k]) {
      case kGenA: out.push_back({cell.face_a, -1, 1}); break;
      case kGenARev: out.push_back({cell.face_a, -1, -1}); break;
      case kGenB: out.push_back({cell.face_b, -1, cell.flipped_b ? -1 : 1}); break;
      case kGenBRev: out.push_back({cell.face_b, -1, cell.flipped_b ? 1 : -1}); break;
      case kGenOuter: out.push_back({cell.face_a, cell.face_b, 1}); break;
      default: out.push_back({cell.face_a, cell.face_b, -1}); break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// SplitAndGroup
// ---------------------------------------------------------------------------

namespace {

struct Box {
  std::array<int, 3> lo{}, hi{};

  bool contains(const std::array<int, 3>& c) const {
    for (int a = 0; a < 3; ++a) {
      if (c[a] < lo[a] || c[a] > hi[a]) return false;
    }
    return true;
  }
};

class SagPlanner {
 public:
  explicit SagPlanner(const DiscreteInstance& instance)
      : grid_(*instance.grid), instance_(instance), part_(figure8_partition(grid_)) {
    padded_ = pad_with_virtual_robots(instance);
    num_real_ = padded_.num_real;
    vertex_of_ = padded_.token_vertex;
    token_at_.assign(static_cast<std::size_t>(grid_.num_vertices()), -1);
    for (std::size_t t = 0; t < vertex_of_.size(); ++t) {
      token_at_[static_cast<std::size_t>(vertex_of_[t])] = static_cast<int>(t);
    }
    placed_.assign(static_cast<std::size_t>(num_real_), 0);
    goal_cell_.assign(static_cast<std::size_t>(num_real_), -1);
    for (int t = 0; t < num_real_; ++t) {
      goal_cell_[static_cast<std::size_t>(t)] =
          part_.cell_of_vertex[static_cast<std::size_t>(instance_.goal[static_cast<std::size_t>(t)])];
    }
  }

  DiscretePlan plan() {
    Box all{part_.coord_min, part_.coord_max};
    recurse(all);
    for (int t = 0; t < num_real_; ++t) {
      if (vertex_of_[static_cast<std::size_t>(t)] != instance_.goal[static_cast<std::size_t>(t)]) {
        throw Error(ErrorKind::Routing, "SAG failed to place robot " + std::to_string(t));
      }
    }
    return compile();
  }

 private:
  const GridGraph& grid_;
  const DiscreteInstance& instance_;
  Figure8Partition part_;
  PaddedInstance padded_;
  int num_real_ = 0;
  std::vector<int> token_at_;
  std::vector<int> vertex_of_;
  std::vector<char> placed_;
  std::vector<int> goal_cell_;

  struct Action {
    std::vector<int> footprint;  // sorted core vertex ids
    std::vector<Rotation> rotations;
  };
  std::vector<Action> actions_;
  std::map<std::pair<int, int>, Figure8Cell> transients_;

  const Figure8Cell& transient(int fa, int fb) {
    auto key = std::make_pair(fa, fb);
    auto it = transients_.find(key);
    if (it == transients_.end()) {
      it = transients_.emplace(key, make_figure8(grid_, fa, fb)).first;
    }
    return it->second;
  }

  bool in_box(const Box& box, int vertex) const {
    return box.contains(part_.cells[static_cast<std::size_t>(
        part_.cell_of_vertex[static_cast<std::size_t>(vertex)])].coord);
  }

  bool placed_at(int vertex) const {
    int token = token_at_[static_cast<std::size_t>(vertex)];
    return token >= 0 && token < num_real_ && placed_[static_cast<std::size_t>(token)];
  }

  void emit_swap(const Figure8Cell& cell, int u, int v) {
    if (u == v) return;
    Action action;
    action.rotations = swap_in_figure8(grid_, cell, u, v);
    action.footprint = cell.locals;
    std::sort(action.footprint.begin(), action.footprint.end());
    actions_.push_back(std::move(action));
    int tu = token_at_[static_cast<std::size_t>(u)];
    int tv = token_at_[static_cast<std::size_t>(v)];
    token_at_[static_cast<std::size_t>(u)] = tv;
    token_at_[static_cast<std::size_t>(v)] = tu;
    if (tu >= 0) vertex_of_[static_cast<std::size_t>(tu)] = v;
    if (tv >= 0) vertex_of_[static_cast<std::size_t>(tv)] = u;
  }

  // Deterministic BFS over swap stops: consecutive stops are one or two
  // edges apart (a distance-2 swap jumps its intermediate vertex, which the
  // rotation schedule restores, so placed robots do not block). Returns {}
  // when no path exists.
  std::vector<int> find_stop_path(int from, int to, const std::function<bool(int)>& allowed) {
    if (from == to) return {from};
    std::vector<int> parent(static_cast<std::size_t>(grid_.num_vertices()), -2);
    parent[static_cast<std::size_t>(from)] = -1;
    std::deque<int> queue{from};
    auto visit = [&](int nb, int via) {
      if (parent[static_cast<std::size_t>(nb)] != -2) return false;
      if (nb != to && (!allowed(nb) || placed_at(nb))) return false;
      parent[static_cast<std::size_t>(nb)] = via;
      queue.push_back(nb);
      return nb == to;
    };
    bool done = false;
    while (!queue.empty() && !done) {
      int v = queue.front();
      queue.pop_front();
      for (int nb : grid_.adjacency[static_cast<std::size_t>(v)]) {
        if ((done = visit(nb, v))) break;
        for (int nb2 : grid_.adjacency[static_cast<std::size_t>(nb)]) {
          if (nb2 == v || parent[static_cast<std::size_t>(nb2)] != -2) continue;
          if (!grid_.spans_figure8(v, nb2)) continue;
          if ((done = visit(nb2, v))) break;
        }
        if (done) break;
      }
    }
    if (!done) return {};
    std::vector<int> path{to};
    for (int cur = parent[static_cast<std::size_t>(to)]; cur != -1;
         cur = parent[static_cast<std::size_t>(cur)]) {
      path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Nearest vertex matching pred by BFS layers, lowest id within a layer.
  int bfs_nearest(int from, const std::function<bool(int)>& allowed,
                  const std::function<bool(int)>& pred) {
    std::vector<char> seen(static_cast<std::size_t>(grid_.num_vertices()), 0);
    seen[static_cast<std::size_t>(from)] = 1;
    std::vector<int> layer{from};
    while (!layer.empty()) {
      for (int v : layer) {
        if (pred(v)) return v;
      }
      std::vector<int> next;
      for (int v : layer) {
        for (int nb : grid_.adjacency[static_cast<std::size_t>(v)]) {
          if (seen[static_cast<std::size_t>(nb)] || !allowed(nb)) continue;
          seen[static_cast<std::size_t>(nb)] = 1;
          next.push_back(nb);
        }
      }
      std::sort(next.begin(), next.end());
      layer = std::move(next);
    }
    return -1;
  }

  // Moves a token to a target vertex through a chain of figure-8 swaps.
  // Stop vertices obey `allowed` and avoid placed robots; each swap restores
  // every cell token except its two endpoints.
  void journey(int token, int target, const std::function<bool(int)>& allowed) {
    int cur = vertex_of_[static_cast<std::size_t>(token)];
    if (cur == target) return;
    std::vector<int> path = find_stop_path(cur, target, allowed);
    if (path.empty()) {
      path = find_stop_path(cur, target, [](int) { return true; });
    }
    if (path.empty()) {
      throw Error(ErrorKind::Routing, "no swap path between vertices " +
                                          std::to_string(cur) + " and " + std::to_string(target));
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      emit_swap(*hop_cell(path[k], path[k + 1]), path[k], path[k + 1]);
    }
  }

  // Lowest-id figure-8 whose core holds both stops (one or two edges apart).
  const Figure8Cell* hop_cell(int u, int v) {
    for (int f : grid_.vertex_faces[static_cast<std::size_t>(u)]) {
      for (int f2 : grid_.face_neighbors[static_cast<std::size_t>(f)]) {
        const Figure8Cell& cell = transient(f, f2);
        if (cell.local_of(v) >= 0) return &cell;
      }
    }
    throw Error(ErrorKind::Routing, "no figure-8 spans a swap hop");
  }

  std::vector<int> cells_in(const Box& box) const {
    std::vector<int> out;
    for (std::size_t c = 0; c < part_.cells.size(); ++c) {
      if (box.contains(part_.cells[c].coord)) out.push_back(static_cast<int>(c));
    }
    return out;
  }

  double axis_span(GridKind kind, int axis) const {
    if (kind == GridKind::Hex) return axis == 0 ? 3.0 * 1.7320508075688772 : 3.0;
    return axis == 0 ? 2.0 : (axis == 1 ? 3.0 : 1.0);
  }

  // Brings every real token whose goal lies in the box back inside it.
  void retrieve_strays(const Box& box) {
    for (int guard = 0; guard < num_real_ + 8; ++guard) {
      int stray = -1;
      for (int t = 0; t < num_real_; ++t) {
        if (placed_[static_cast<std::size_t>(t)]) continue;
        if (!box.contains(part_.cells[static_cast<std::size_t>(goal_cell_[static_cast<std::size_t>(t)])].coord))
          continue;
        if (!in_box(box, vertex_of_[static_cast<std::size_t>(t)])) {
          stray = t;
          break;
        }
      }
      if (stray < 0) return;
      // Target: nearest in-box vertex whose occupant does not belong in the
      // box (virtual, or a real robot whose goal lies outside).
      auto displaceable = [&](int v) {
        if (!in_box(box, v)) return false;
        int occ = token_at_[static_cast<std::size_t>(v)];
        if (occ >= num_real_) return true;
        return !box.contains(
            part_.cells[static_cast<std::size_t>(goal_cell_[static_cast<std::size_t>(occ)])].coord);
      };
      int target = bfs_nearest(vertex_of_[static_cast<std::size_t>(stray)],
                               [&](int v) { return !placed_at(v); }, displaceable);
      if (target < 0) {
        throw Error(ErrorKind::Routing, "stray token could not re-enter its region");
      }
      journey(stray, target, [](int) { return true; });
    }
    throw Error(ErrorKind::Routing, "stray retrieval did not converge");
  }

  void cross(const Box& box, int axis, int mid) {
    auto side1 = [&](int vertex) {
      return part_.cells[static_cast<std::size_t>(
                             part_.cell_of_vertex[static_cast<std::size_t>(vertex)])]
                 .coord[static_cast<std::size_t>(axis)] <= mid;
    };
    auto perp_key = [&](int vertex) {
      const Vec& p = grid_.vertex_pos(vertex);
      double primary = (axis == 0) ? p.y : p.x;
      double secondary = (axis == 2) ? p.y : p.z;
      return std::make_tuple(primary, secondary, vertex);
    };

    std::vector<int> a_side, b_side;
    for (int t = 0; t < num_real_; ++t) {
      if (placed_[static_cast<std::size_t>(t)]) continue;
      const auto& gcoord = part_.cells[static_cast<std::size_t>(goal_cell_[static_cast<std::size_t>(t)])].coord;
      if (!box.contains(gcoord)) continue;
      bool goal_side1 = gcoord[static_cast<std::size_t>(axis)] <= mid;
      int pos = vertex_of_[static_cast<std::size_t>(t)];
      bool pos_side1 = side1(pos);
      if (pos_side1 && !goal_side1) a_side.push_back(t);
      if (!pos_side1 && goal_side1) b_side.push_back(t);
    }
    auto by_boundary = [&](int t1, int t2) {
      return perp_key(vertex_of_[static_cast<std::size_t>(t1)]) <
             perp_key(vertex_of_[static_cast<std::size_t>(t2)]);
    };
    std::sort(a_side.begin(), a_side.end(), by_boundary);
    std::sort(b_side.begin(), b_side.end(), by_boundary);

    // Crossing ports: edges straddling the split line.
    std::vector<std::pair<int, int>> ports;
    for (int u = 0; u < grid_.num_vertices(); ++u) {
      if (!in_box(box, u) || !side1(u)) continue;
      for (int v : grid_.adjacency[static_cast<std::size_t>(u)]) {
        if (in_box(box, v) && !side1(v)) ports.emplace_back(u, v);
      }
    }
    if (ports.empty() && !(a_side.empty() && b_side.empty())) {
      throw Error(ErrorKind::Routing, "split boundary has no crossing edge");
    }
    std::sort(ports.begin(), ports.end(), [&](const auto& p1, const auto& p2) {
      return std::make_pair(perp_key(p1.first), p1.second) <
             std::make_pair(perp_key(p2.first), p2.second);
    });

    auto in_side = [&](int v, bool want_side1) {
      return in_box(box, v) && side1(v) == want_side1;
    };
    // Crossers and ports are both sorted along the boundary; a proportional
    // assignment keeps each swap chain near its own row so that chains in
    // different rows schedule in parallel.
    const std::size_t crossings = std::max(a_side.size(), b_side.size());
    for (std::size_t k = 0; k < crossings; ++k) {
      auto [pu, pv] = ports[k * ports.size() / crossings];
      if (k < a_side.size()) {
        journey(a_side[k], pu, [&](int v) { return in_side(v, true); });
      } else {
        ensure_displaceable(pu, true, box, side1);
      }
      if (k < b_side.size()) {
        journey(b_side[k], pv, [&](int v) { return in_side(v, false); });
      } else {
        ensure_displaceable(pv, false, box, side1);
      }
      // Swap across the seam through a figure-8 containing the port edge.
      const Figure8Cell* cell = nullptr;
      for (int f : grid_.vertex_faces[static_cast<std::size_t>(pu)]) {
        const auto& cyc = grid_.faces[static_cast<std::size_t>(f)].cycle;
        if (std::find(cyc.begin(), cyc.end(), pv) == cyc.end()) continue;
        for (int f2 : grid_.face_neighbors[static_cast<std::size_t>(f)]) {
          cell = &transient(f, f2);
          break;
        }
        if (cell) break;
      }
      if (!cell) throw Error(ErrorKind::Routing, "port edge is not on any face");
      emit_swap(*cell, pu, pv);
    }
  }

  // Makes the token at a port endpoint displaceable: a virtual robot or a
  // token that wants the other side. Journeys the nearest such token in.
  void ensure_displaceable(int port_vertex, bool port_side1, const Box& box,
                           const std::function<bool(int)>& side1) {
    int occ = token_at_[static_cast<std::size_t>(port_vertex)];
    auto is_virtual = [&](int token) { return token >= num_real_; };
    if (occ >= 0 && is_virtual(occ)) return;
    auto allowed = [&](int v) { return in_box(box, v) && side1(v) == port_side1; };
    int source = bfs_nearest(port_vertex, allowed, [&](int v) {
      return is_virtual(token_at_[static_cast<std::size_t>(v)]);
    });
    if (source < 0) {
      throw Error(ErrorKind::Routing, "no virtual robot available for an excess crossing");
    }
    journey(token_at_[static_cast<std::size_t>(source)], port_vertex, allowed);
  }

  void finalize_cell(int cell_index) {
    const Figure8Cell& cell = part_.cells[static_cast<std::size_t>(cell_index)];
    std::vector<std::pair<int, int>> goals;  // (goal vertex, token)
    for (int t = 0; t < num_real_; ++t) {
      if (goal_cell_[static_cast<std::size_t>(t)] == cell_index &&
          !placed_[static_cast<std::size_t>(t)]) {
        goals.emplace_back(instance_.goal[static_cast<std::size_t>(t)], t);
      }
    }
    std::sort(goals.begin(), goals.end());
    for (auto [goal_v, t] : goals) {
      if (vertex_of_[static_cast<std::size_t>(t)] != goal_v) {
        journey(t, goal_v, [&](int v) {
          return part_.cell_of_vertex[static_cast<std::size_t>(v)] == cell_index;
        });
      }
      placed_[static_cast<std::size_t>(t)] = 1;
    }
  }

  void recurse(const Box& box) {
    std::vector<int> cells = cells_in(box);
    if (cells.empty()) return;
    retrieve_strays(box);
    if (cells.size() == 1) {
      finalize_cell(cells[0]);
      return;
    }
    // Split along the longer side; ties go to the horizontal axis.
    int axis = -1;
    double best = -1.0;
    for (int a = 0; a < 3; ++a) {
      if (box.hi[static_cast<std::size_t>(a)] <= box.lo[static_cast<std::size_t>(a)]) continue;
      double span = (box.hi[static_cast<std::size_t>(a)] - box.lo[static_cast<std::size_t>(a)] + 1) *
                    axis_span(grid_.kind, a);
      if (span > best + 1e-12) {
        best = span;
        axis = a;
      }
    }
    if (axis < 0) {
      // Multiple cells share every splittable axis range; solve them one by one.
      for (int c : cells) finalize_cell(c);
      return;
    }
    // Floor division keeps mid strictly below hi for negative ranges too.
    int mid = static_cast<int>(std::floor(
        0.5 * (box.lo[static_cast<std::size_t>(axis)] + box.hi[static_cast<std::size_t>(axis)])));
    Box r1 = box, r2 = box;
    r1.hi[static_cast<std::size_t>(axis)] = mid;
    r2.lo[static_cast<std::size_t>(axis)] = mid + 1;
    if (cells_in(r1).empty()) {
      recurse(r2);
      return;
    }
    if (cells_in(r2).empty()) {
      recurse(r1);
      return;
    }
    cross(box, axis, mid);
    recurse(r1);
    recurse(r2);
  }

  DiscretePlan compile() {
    DiscretePlan plan;
    plan.num_real = num_real_;
    plan.initial_tokens = padded_.token_vertex;

    // Dependency levels: an action waits for every earlier action sharing a
    // vertex; actions on one level have disjoint footprints and run in
    // parallel, padded to the longest rotation sequence.
    std::vector<int> last_level(static_cast<std::size_t>(grid_.num_vertices()), 0);
    std::vector<int> level(actions_.size(), 0);
    int max_level = 0;
    for (std::size_t a = 0; a < actions_.size(); ++a) {
      int lvl = 1;
      for (int v : actions_[a].footprint) {
        lvl = std::max(lvl, last_level[static_cast<std::size_t>(v)] + 1);
      }
      for (int v : actions_[a].footprint) last_level[static_cast<std::size_t>(v)] = lvl;
      level[a] = lvl;
      max_level = std::max(max_level, lvl);
    }
    std::vector<std::vector<int>> batches(static_cast<std::size_t>(max_level));
    for (std::size_t a = 0; a < actions_.size(); ++a) {
      batches[static_cast<std::size_t>(level[a] - 1)].push_back(static_cast<int>(a));
    }
    for (const auto& batch : batches) {
      std::size_t longest = 0;
      for (int a : batch) longest = std::max(longest, actions_[static_cast<std::size_t>(a)].rotations.size());
      for (std::size_t t = 0; t < longest; ++t) {
        std::vector<Rotation> step;
        for (int a : batch) {
          const auto& rots = actions_[static_cast<std::size_t>(a)].rotations;
          if (t < rots.size()) step.push_back(rots[t]);
        }
        plan.steps.push_back(std::move(step));
      }
    }

    std::vector<int> final_state = apply_discrete_plan(grid_, plan);
    for (int t = 0; t < num_real_; ++t) {
      if (final_state[static_cast<std::size_t>(t)] != instance_.goal[static_cast<std::size_t>(t)]) {
        throw Error(ErrorKind::Routing, "compiled plan replay diverged from the planner state");
      }
    }
    return plan;
  }
};

}  // namespace

DiscretePlan solve_sag(const DiscreteInstance& instance) {
  instance.check_valid();
  SagPlanner planner(instance);
  return planner.plan();
}

// ---------------------------------------------------------------------------
// Optimal oracle
// ---------------------------------------------------------------------------

namespace {

struct OracleNode {
  std::uint64_t parent = 0;
  int g = 0;
  std::vector<Rotation> step;  // step applied to reach this node
};

}  // namespace

DiscretePlan solve_optimal_bfs(const DiscreteInstance& instance, std::int64_t max_states) {
  instance.check_valid();
  if (max_states <= 0) max_states = 1000000;
  const GridGraph& grid = *instance.grid;
  const int n = instance.size();
  const int num_vertices = grid.num_vertices();

  int bits = 1;
  while ((1 << bits) < num_vertices) ++bits;
  if (bits * n > 62) {
    throw Error(ErrorKind::OracleTooLarge, "joint configuration does not fit the state encoding");
  }
  auto encode = [&](const std::vector<int>& pos) {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i) {
      out |= static_cast<std::uint64_t>(pos[static_cast<std::size_t>(i)])
             << (bits * i);
    }
    return out;
  };
  auto decode = [&](std::uint64_t code) {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      pos[static_cast<std::size_t>(i)] =
          static_cast<int>((code >> (bits * i)) & ((1u << bits) - 1));
    }
    return pos;
  };

  // Per-robot BFS distance to goal; h = max over robots (each step moves a
  // robot at most one edge, so h is admissible and consistent).
  std::vector<std::vector<int>> dist_to_goal(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& dist = dist_to_goal[static_cast<std::size_t>(i)];
    dist.assign(static_cast<std::size_t>(num_vertices), -1);
    std::deque<int> queue{instance.goal[static_cast<std::size_t>(i)]};
    dist[static_cast<std::size_t>(instance.goal[static_cast<std::size_t>(i)])] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int nb : grid.adjacency[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(nb)] < 0) {
          dist[static_cast<std::size_t>(nb)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(nb);
        }
      }
    }
  }
  auto heuristic = [&](const std::vector<int>& pos) {
    int h = 0;
    for (int i = 0; i < n; ++i) {
      int d = dist_to_goal[static_cast<std::size_t>(i)][static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
      if (d < 0) {
        throw Error(ErrorKind::Routing, "goal unreachable in the grid graph");
      }
      h = std::max(h, d);
    }
    return h;
  };

  CycleCache cycles(grid);
  std::uint64_t start_code = encode(instance.start);
  std::uint64_t goal_code = encode(instance.goal);

  std::unordered_map<std::uint64_t, OracleNode> nodes;
  nodes[start_code] = {start_code, 0, {}};
  using QueueEntry = std::tuple<int, int, std::uint64_t>;  // (f, seq, state)
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> open;
  int seq = 0;
  open.emplace(heuristic(instance.start), seq++, start_code);

  std::vector<char> vertex_used(static_cast<std::size_t>(num_vertices), 0);

  while (!open.empty()) {
    auto [f, _, code] = open.top();
    open.pop();
    if (code == goal_code) break;
    const OracleNode& node = nodes.at(code);
    int g = node.g;
    if (g + heuristic(decode(code)) < f) continue;  // stale entry
    std::vector<int> pos = decode(code);

    // Candidate rotations: cycles holding at least one robot.
    std::vector<char> on_robot(static_cast<std::size_t>(num_vertices), 0);
    for (int v : pos) on_robot[static_cast<std::size_t>(v)] = 1;
    std::vector<Rotation> candidates;
    std::set<std::pair<int, int>> seen_faces;
    for (int v : pos) {
      for (int fa : grid.vertex_faces[static_cast<std::size_t>(v)]) {
        if (seen_faces.insert({fa, -1}).second) {
          candidates.push_back({fa, -1, 1});
          candidates.push_back({fa, -1, -1});
        }
        for (int fb : grid.face_neighbors[static_cast<std::size_t>(fa)]) {
          auto key = std::minmax(fa, fb);
          if (seen_faces.insert({key.first, key.second}).second) {
            candidates.push_back({key.first, key.second, 1});
            candidates.push_back({key.first, key.second, -1});
          }
        }
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Rotation& a, const Rotation& b) {
      return std::tie(a.face_a, a.face_b, a.direction) <
             std::tie(b.face_a, b.face_b, b.direction);
    });

    // Enumerate non-empty sets of vertex-disjoint rotations (at most one
    // useful rotation per robot).
    std::vector<Rotation> chosen;
    std::vector<int> used_list;
    auto expand_successor = [&]() {
      std::vector<int> next = pos;
      std::vector<int> token_at(static_cast<std::size_t>(num_vertices), -1);
      for (int i = 0; i < n; ++i) token_at[static_cast<std::size_t>(next[static_cast<std::size_t>(i)])] = i;
      for (const Rotation& rot : chosen) {
        const auto& cycle = cycles.get(rot);
        apply_rotation_cycle(token_at, next, cycle, rot.direction);
      }
      std::uint64_t nc = encode(next);
      auto it = nodes.find(nc);
      int ng = g + 1;
      if (it == nodes.end() || ng < it->second.g) {
        if (it == nodes.end() && static_cast<std::int64_t>(nodes.size()) >= max_states) {
          throw Error(ErrorKind::OracleTooLarge, "optimal search exceeded the state budget");
        }
        nodes[nc] = {code, ng, chosen};
        open.emplace(ng + heuristic(next), seq++, nc);
      }
    };
    std::function<void(std::size_t)> enumerate = [&](std::size_t idx) {
      if (!chosen.empty()) expand_successor();
      if (static_cast<int>(chosen.size()) >= n) return;
      for (std::size_t c = idx; c < candidates.size(); ++c) {
        const auto& cycle = cycles.get(candidates[c]);
        bool ok = false, disjoint = true;
        for (int v : cycle) {
          if (vertex_used[static_cast<std::size_t>(v)]) {
            disjoint = false;
            break;
          }
          if (on_robot[static_cast<std::size_t>(v)]) ok = true;
        }
        if (!disjoint || !ok) continue;
        for (int v : cycle) vertex_used[static_cast<std::size_t>(v)] = 1;
        chosen.push_back(candidates[c]);
        enumerate(c + 1);
        chosen.pop_back();
        for (int v : cycle) vertex_used[static_cast<std::size_t>(v)] = 0;
      }
    };
    enumerate(0);
  }

  auto goal_it = nodes.find(goal_code);
  if (goal_it == nodes.end()) {
    throw Error(ErrorKind::Routing, "optimal search exhausted without reaching the goal");
  }

  DiscretePlan plan;
  plan.num_real = n;
  PaddedInstance padded = pad_with_virtual_robots(instance);
  plan.initial_tokens = padded.token_vertex;
  std::vector<std::vector<Rotation>> steps;
  for (std::uint64_t code = goal_code; code != start_code;) {
    const OracleNode& node = nodes.at(code);
    steps.push_back(node.step);
    code = node.parent;
  }
  std::reverse(steps.begin(), steps.end());
  plan.steps = std::move(steps);
  return plan;
}

// ---------------------------------------------------------------------------
// Continuous conversion
// ---------------------------------------------------------------------------

namespace {

// Closest approach of two unit-time linear motions.
double moving_pair_min_distance(const Vec& a0, const Vec& a1, const Vec& b0, const Vec& b1) {
  Vec dp = a0 - b0;
  Vec dv = (a1 - a0) - (b1 - b0);
  double vv = dv.norm_sq();
  double t = 0.0;
  if (vv > 0.0) t = std::clamp(-dp.dot(dv) / vv, 0.0, 1.0);
  return (dp + dv * t).norm();
}

struct RotationMotion {
  std::vector<int> from;
  std::vector<int> to;
  Vec center;
  double reach = 0.0;
};

}  // namespace

ConversionResult discrete_to_continuous(const DiscretePlan& plan, const GridGraph& grid,
                                        double speed) {
  if (speed <= 0.0) throw Error(ErrorKind::Contract, "speed must be positive");
  ConversionResult result;
  result.fragment.robots.resize(static_cast<std::size_t>(plan.num_real));

  std::vector<int> token_at(static_cast<std::size_t>(grid.num_vertices()), -1);
  std::vector<int> vertex_of = plan.initial_tokens;
  for (std::size_t t = 0; t < vertex_of.size(); ++t) {
    token_at[static_cast<std::size_t>(vertex_of[t])] = static_cast<int>(t);
  }
  CycleCache cycles(grid);

  auto append_wp = [&](int robot, double t, const Vec& p) {
    auto& traj = result.fragment.robots[static_cast<std::size_t>(robot)];
    if (!traj.empty() && traj.back().t == t) {
      return;  // same instant; position is identical by construction
    }
    traj.push_back({t, p});
  };

  const double h = grid.edge_length / speed;
  const double clearance_limit = 2.0 * grid.robot_radius;
  double tau = 0.0;

  for (const auto& step : plan.steps) {
    // Deterministic order for the serialization rule.
    std::vector<Rotation> rots = step;
    std::sort(rots.begin(), rots.end(), [](const Rotation& a, const Rotation& b) {
      return std::tie(a.face_a, a.face_b, a.direction) <
             std::tie(b.face_a, b.face_b, b.direction);
    });

    std::vector<RotationMotion> motions(rots.size());
    for (std::size_t k = 0; k < rots.size(); ++k) {
      const auto& cycle = cycles.get(rots[k]);
      const int m = static_cast<int>(cycle.size());
      for (int c = 0; c < m; ++c) {
        int from = cycle[static_cast<std::size_t>(c)];
        int to = cycle[static_cast<std::size_t>(((c + rots[k].direction) % m + m) % m)];
        motions[k].from.push_back(from);
        motions[k].to.push_back(to);
        motions[k].center += grid.vertex_pos(from);
      }
      motions[k].center = motions[k].center * (1.0 / m);
      for (int v : motions[k].from) {
        motions[k].reach = std::max(motions[k].reach, distance(motions[k].center, grid.vertex_pos(v)));
      }
    }

    // Greedy first-fit grouping into sub-steps: rotations whose simultaneous
    // motion would dip below 2r go to a later sub-step.
    auto conflict = [&](const RotationMotion& a, const RotationMotion& b) {
      if (clearance_limit <= 0.0) return false;
      if (distance(a.center, b.center) > a.reach + b.reach + clearance_limit) return false;
      for (std::size_t i = 0; i < a.from.size(); ++i) {
        for (std::size_t j = 0; j < b.from.size(); ++j) {
          double d = moving_pair_min_distance(
              grid.vertex_pos(a.from[i]), grid.vertex_pos(a.to[i]),
              grid.vertex_pos(b.from[j]), grid.vertex_pos(b.to[j]));
          if (d < clearance_limit - 1e-12) return true;
        }
      }
      return false;
    };
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < rots.size(); ++k) {
      bool put = false;
      for (auto& group : groups) {
        bool ok = true;
        for (std::size_t other : group) {
          if (conflict(motions[k], motions[other])) {
            ok = false;
            break;
          }
        }
        if (ok) {
          group.push_back(k);
          put = true;
          break;
        }
      }
      if (!put) groups.push_back({k});
    }
    result.serialized_substeps += static_cast<int>(groups.size()) - 1;

    for (const auto& group : groups) {
      for (std::size_t k : group) {
        const auto& motion = motions[k];
        for (std::size_t c = 0; c < motion.from.size(); ++c) {
          int token = token_at[static_cast<std::size_t>(motion.from[c])];
          if (token >= 0 && token < plan.num_real) {
            append_wp(token, tau, grid.vertex_pos(motion.from[c]));
            append_wp(token, tau + h, grid.vertex_pos(motion.to[c]));
          }
        }
        apply_rotation_cycle(token_at, vertex_of, cycles.get(rots[k]), rots[k].direction);
      }
      tau += h;
    }
  }
  result.fragment.duration = tau;
  return result;
}

// ---------------------------------------------------------------------------
// Router registry
// ---------------------------------------------------------------------------

namespace {

std::map<std::string, Router>& router_map() {
  static std::map<std::string, Router> routers;
  static std::once_flag init;
  std::call_once(init, [] {
    routers["sag"] = [](const DiscreteInstance& inst) { return solve_sag(inst); };
    routers["bfs-oracle"] = [](const DiscreteInstance& inst) {
      return solve_optimal_bfs(inst);
    };
  });
  return routers;
}

std::mutex router_mutex;

}  // namespace

void register_router(const std::string& name, Router router) {
  std::lock_guard<std::mutex> lock(router_mutex);
  router_map()[name] = std::move(router);
}

Router find_router(const std::string& name) {
  std::lock_guard<std::mutex> lock(router_mutex);
  auto& routers = router_map();
  auto it = routers.find(name);
  if (it == routers.end()) {
    throw Error(ErrorKind::Routing, "unknown router: " + name);
  }
  return it->second;
}

std::vector<std::string> router_names() {
  std::lock_guard<std::mutex> lock(router_mutex);
  std::vector<std::string> names;
  for (const auto& [name, router] : router_map()) names.push_back(name);
  return names;
}

}  // namespace sear
