#include "sear/grid.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sear/errors.hpp"
#include "sear/figure8_canon.hpp"

namespace sear {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

inline int mod3(int v) { return ((v % 3) + 3) % 3; }
inline bool even(int v) { return (v & 1) == 0; }

// 20 bits per coordinate plus 2 plane bits: 62 bits total.
std::uint64_t pack_key(int a, int b, int c, int d = 0) {
  auto enc = [](int v) -> std::uint64_t {
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + (1 << 19)) & 0xFFFFF;
  };
  return enc(a) | (enc(b) << 20) | (enc(c) << 40) | (static_cast<std::uint64_t>(d) << 60);
}

bool hex_vertex_exists(int i, int j) {
  int jm = mod3(j);
  if (jm == 0) return false;
  if (jm == 1) {
    int r = (j - 1) / 3;
    return !even(i + r);
  }
  int r = (j - 2) / 3;
  return even(i + r);
}

std::vector<std::array<int, 3>> hex_neighbors(const std::array<int, 3>& k) {
  int i = k[0], j = k[1];
  if (mod3(j) == 2) return {{i - 1, j - 1, 0}, {i + 1, j - 1, 0}, {i, j + 2, 0}};
  return {{i - 1, j + 1, 0}, {i + 1, j + 1, 0}, {i, j - 2, 0}};
}

// Corner keys of hex face (fi, fj), counterclockwise from the bottom corner.
std::vector<std::array<int, 3>> hex_face_corners(int fi, int fj) {
  return {{fi, fj - 2, 0}, {fi + 1, fj - 1, 0}, {fi + 1, fj + 1, 0},
          {fi, fj + 2, 0}, {fi - 1, fj + 1, 0}, {fi - 1, fj - 1, 0}};
}

std::vector<std::array<int, 3>> face_corners(GridKind kind, const std::array<int, 4>& f) {
  int i = f[0], j = f[1], k = f[2];
  switch (kind) {
    case GridKind::Hex:
      return hex_face_corners(i, j);
    case GridKind::Square:
      return {{i, j, 0}, {i + 1, j, 0}, {i + 1, j + 1, 0}, {i, j + 1, 0}};
    case GridKind::Cube:
      switch (f[3]) {
        case 0:  // xy plane
          return {{i, j, k}, {i + 1, j, k}, {i + 1, j + 1, k}, {i, j + 1, k}};
        case 1:  // xz plane
          return {{i, j, k}, {i + 1, j, k}, {i + 1, j, k + 1}, {i, j, k + 1}};
        default:  // yz plane
          return {{i, j, k}, {i, j + 1, k}, {i, j + 1, k + 1}, {i, j, k + 1}};
      }
  }
  return {};
}

}  // namespace

const char* grid_kind_name(GridKind kind) {
  switch (kind) {
    case GridKind::Hex: return "hex";
    case GridKind::Square: return "square";
    case GridKind::Cube: return "cube";
  }
  return "unknown";
}

GridKind grid_kind_from_name(const std::string& name) {
  if (name == "hex") return GridKind::Hex;
  if (name == "square") return GridKind::Square;
  if (name == "cube") return GridKind::Cube;
  throw Error(ErrorKind::Schema, "unknown grid kind: " + name);
}

double edge_length_bound(GridKind kind, double robot_radius) {
  if (kind == GridKind::Hex) return 4.0 / kSqrt3 * robot_radius;
  return 4.0 / std::sqrt(2.0) * robot_radius;
}

double default_edge_length(GridKind kind, double robot_radius) {
  if (kind == GridKind::Hex) return edge_length_bound(kind, robot_radius);
  // Square/cube bound is strict; epsilon = 1e-3 r.
  return edge_length_bound(kind, robot_radius) + 1e-3 * robot_radius;
}

struct GridBuilder {
  GridKind kind;
  double edge_length;
  Vec origin;
  double robot_radius;
  std::vector<std::array<int, 4>> face_keys;

  Vec key_position(const std::array<int, 3>& k) const {
    if (kind == GridKind::Hex) {
      return origin + Vec{k[0] * (kSqrt3 / 2.0) * edge_length, k[1] * 0.5 * edge_length};
    }
    return origin + Vec{k[0] * edge_length, k[1] * edge_length, k[2] * edge_length};
  }

  GridGraph finish(double cover_radius) {
    GridGraph g;
    g.kind = kind;
    g.dimension = (kind == GridKind::Cube) ? 3 : 2;
    g.edge_length = edge_length;
    g.robot_radius = robot_radius;
    g.origin = origin;
    g.cover_radius = cover_radius;

    std::vector<std::array<int, 3>> vkeys;
    for (const auto& f : face_keys) {
      for (const auto& c : face_corners(kind, f)) vkeys.push_back(c);
    }
    auto by_zyx = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
      if (a[2] != b[2]) return a[2] < b[2];
      if (a[1] != b[1]) return a[1] < b[1];
      return a[0] < b[0];
    };
    std::sort(vkeys.begin(), vkeys.end(), by_zyx);
    vkeys.erase(std::unique(vkeys.begin(), vkeys.end()), vkeys.end());

    g.vertex_keys = vkeys;
    g.positions.reserve(vkeys.size());
    for (std::size_t id = 0; id < vkeys.size(); ++id) {
      g.positions.push_back(key_position(vkeys[id]));
      g.vertex_lookup_[pack_key(vkeys[id][0], vkeys[id][1], vkeys[id][2])] =
          static_cast<int>(id);
    }

    // Edges are face sides: robots sit on corners and move along sides, and
    // every edge then borders at least one face of the grid.
    g.adjacency.resize(vkeys.size());

    std::sort(face_keys.begin(), face_keys.end());
    face_keys.erase(std::unique(face_keys.begin(), face_keys.end()), face_keys.end());
    g.vertex_faces.resize(vkeys.size());
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (const auto& fk : face_keys) {
      GridGraph::Face face;
      face.key = fk;
      bool complete = true;
      for (const auto& ck : face_corners(kind, fk)) {
        int vid = g.vertex_id(ck);
        if (vid < 0) {
          complete = false;
          break;
        }
        face.cycle.push_back(vid);
      }
      if (!complete) continue;
      int fid = static_cast<int>(g.faces.size());
      g.face_lookup_[pack_key(fk[0], fk[1], fk[2], fk[3])] = fid;
      for (std::size_t c = 0; c < face.cycle.size(); ++c) {
        int u = face.cycle[c];
        int v = face.cycle[(c + 1) % face.cycle.size()];
        edge_faces[{std::min(u, v), std::max(u, v)}].push_back(fid);
        g.vertex_faces[static_cast<std::size_t>(u)].push_back(fid);
      }
      g.faces.push_back(std::move(face));
    }
    g.face_neighbors.resize(g.faces.size());
    for (const auto& [edge, fids] : edge_faces) {
      g.adjacency[static_cast<std::size_t>(edge.first)].push_back(edge.second);
      g.adjacency[static_cast<std::size_t>(edge.second)].push_back(edge.first);
      for (int a : fids)
        for (int b : fids)
          if (a != b) g.face_neighbors[static_cast<std::size_t>(a)].push_back(b);
    }
    for (auto& adj : g.adjacency) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    for (auto& fn : g.face_neighbors) {
      std::sort(fn.begin(), fn.end());
      fn.erase(std::unique(fn.begin(), fn.end()), fn.end());
    }
    for (auto& vf : g.vertex_faces) {
      std::sort(vf.begin(), vf.end());
      vf.erase(std::unique(vf.begin(), vf.end()), vf.end());
    }

    if (!vkeys.empty()) {
      std::array<int, 3> lo = vkeys.front(), hi = vkeys.front();
      for (const auto& k : vkeys) {
        for (int a = 0; a < 3; ++a) {
          lo[a] = std::min(lo[a], k[a]);
          hi[a] = std::max(hi[a], k[a]);
        }
      }
      if (kind == GridKind::Hex) {
        g.m_w = (hi[0] - lo[0]) / 2 + 1;
        g.m_h = (hi[1] - lo[1]) / 3 + 1;
        g.m_d = 1;
        g.extent_lengths = {(hi[0] - lo[0]) * (kSqrt3 / 2.0) * edge_length,
                            (hi[1] - lo[1]) * 0.5 * edge_length, 0.0};
      } else {
        g.m_w = hi[0] - lo[0] + 1;
        g.m_h = hi[1] - lo[1] + 1;
        g.m_d = hi[2] - lo[2] + 1;
        g.extent_lengths = {(hi[0] - lo[0]) * edge_length, (hi[1] - lo[1]) * edge_length,
                            (hi[2] - lo[2]) * edge_length};
      }
    }
    return g;
  }
};

int GridGraph::vertex_id(const std::array<int, 3>& key) const {
  auto it = vertex_lookup_.find(pack_key(key[0], key[1], key[2]));
  return it == vertex_lookup_.end() ? -1 : it->second;
}

int GridGraph::face_id(const std::array<int, 4>& key) const {
  auto it = face_lookup_.find(pack_key(key[0], key[1], key[2], key[3]));
  return it == face_lookup_.end() ? -1 : it->second;
}

bool GridGraph::has_edge(int a, int b) const {
  const auto& adj = adjacency[static_cast<std::size_t>(a)];
  return std::binary_search(adj.begin(), adj.end(), b);
}

bool GridGraph::spans_figure8(int a, int b) const {
  const auto& fa = vertex_faces[static_cast<std::size_t>(a)];
  const auto& fb = vertex_faces[static_cast<std::size_t>(b)];
  for (int f : fa) {
    if (std::binary_search(fb.begin(), fb.end(), f)) return true;
  }
  for (int f : fa) {
    const auto& nbrs = face_neighbors[static_cast<std::size_t>(f)];
    for (int f2 : fb) {
      if (std::binary_search(nbrs.begin(), nbrs.end(), f2)) return true;
    }
  }
  return false;
}

int GridGraph::nearest_vertex(const Vec& p) const {
  Vec rel = p - origin;
  double fi, fj, fk = 0.0;
  if (kind == GridKind::Hex) {
    fi = rel.x / ((kSqrt3 / 2.0) * edge_length);
    fj = rel.y / (0.5 * edge_length);
  } else {
    fi = rel.x / edge_length;
    fj = rel.y / edge_length;
    fk = rel.z / edge_length;
  }
  int ci = static_cast<int>(std::floor(fi));
  int cj = static_cast<int>(std::floor(fj));
  int ck = static_cast<int>(std::floor(fk));
  int window = (kind == GridKind::Hex) ? 3 : 2;
  int wk = (kind == GridKind::Cube) ? 2 : 0;

  int best = -1;
  double best_d2 = std::numeric_limits<double>::max();
  const double tie = 1e-9 * edge_length * edge_length;
  for (int dk = -wk; dk <= wk; ++dk) {
    for (int dj = -window; dj <= window; ++dj) {
      for (int di = -window; di <= window; ++di) {
        int id = vertex_id({ci + di, cj + dj, ck + dk});
        if (id < 0) continue;
        double d2 = distance_sq(p, positions[static_cast<std::size_t>(id)]);
        if (d2 < best_d2 - tie || (std::abs(d2 - best_d2) <= tie && id < best)) {
          best = id;
          best_d2 = d2;
        }
      }
    }
  }
  if (best < 0 || std::sqrt(best_d2) > edge_length * (1.0 + 1e-9)) {
    throw Error(ErrorKind::OutOfCoverage, "point is outside the covered region");
  }
  return best;
}

namespace {

void check_edge_length(GridKind kind, double edge_length, double robot_radius) {
  if (robot_radius <= 0.0) return;  // no bound to enforce for abstract grids
  double bound = edge_length_bound(kind, robot_radius);
  bool ok = (kind == GridKind::Hex) ? edge_length >= bound * (1.0 - 1e-12)
                                    : edge_length > bound;
  if (!ok) {
    throw Error(ErrorKind::InvalidEdgeLength,
                std::string("edge length ") + std::to_string(edge_length) + " below the " +
                    grid_kind_name(kind) + " bound " + std::to_string(bound));
  }
}

}  // namespace

GridGraph build_covering_grid(GridKind kind, double edge_length, Vec center,
                              double cover_radius, double robot_radius) {
  check_edge_length(kind, edge_length, robot_radius);
  if (cover_radius <= 0.0) {
    throw Error(ErrorKind::Contract, "cover_radius must be positive");
  }
  GridBuilder builder{kind, edge_length, center, robot_radius, {}};
  if (kind == GridKind::Hex) {
    // Faces whose centers are within one padding ring of the covered ball;
    // every point of a hexagon is within edge_length of one of its corners.
    double reach = cover_radius + 2.0 * edge_length;
    int jmax = static_cast<int>(std::ceil(reach / (0.5 * edge_length))) + 3;
    int imax = static_cast<int>(std::ceil(reach / ((kSqrt3 / 2.0) * edge_length))) + 2;
    for (int fj = -jmax; fj <= jmax; ++fj) {
      if (mod3(fj) != 0) continue;
      int row = fj / 3;
      for (int fi = -imax; fi <= imax; ++fi) {
        if (!even(fi - row)) continue;
        Vec c = builder.key_position({fi, fj, 0});
        if (distance(c, center) <= reach) builder.face_keys.push_back({fi, fj, 0, 0});
      }
    }
  } else {
    int m = static_cast<int>(std::ceil(cover_radius / edge_length)) + 1;
    if (kind == GridKind::Square) {
      for (int j = -m; j < m; ++j)
        for (int i = -m; i < m; ++i) builder.face_keys.push_back({i, j, 0, 0});
    } else {
      for (int k = -m; k <= m; ++k) {
        for (int j = -m; j <= m; ++j) {
          for (int i = -m; i <= m; ++i) {
            if (i < m && j < m) builder.face_keys.push_back({i, j, k, 0});
            if (i < m && k < m) builder.face_keys.push_back({i, j, k, 1});
            if (j < m && k < m) builder.face_keys.push_back({i, j, k, 2});
          }
        }
      }
    }
  }
  return builder.finish(cover_radius);
}

GridGraph make_square_grid(int width_vertices, int height_vertices, double edge_length,
                           Vec origin, double robot_radius) {
  check_edge_length(GridKind::Square, edge_length, robot_radius);
  GridBuilder builder{GridKind::Square, edge_length, origin, robot_radius, {}};
  for (int j = 0; j + 1 < height_vertices; ++j)
    for (int i = 0; i + 1 < width_vertices; ++i) builder.face_keys.push_back({i, j, 0, 0});
  if (builder.face_keys.empty()) {
    throw Error(ErrorKind::Contract, "square grid needs at least 2x2 vertices");
  }
  return builder.finish(0.0);
}

GridGraph make_hex_grid(int face_cols, int face_rows, double edge_length, Vec origin,
                        double robot_radius) {
  check_edge_length(GridKind::Hex, edge_length, robot_radius);
  GridBuilder builder{GridKind::Hex, edge_length, origin, robot_radius, {}};
  for (int row = 0; row < face_rows; ++row)
    for (int col = 0; col < face_cols; ++col)
      builder.face_keys.push_back({2 * col + (row & 1), 3 * row, 0, 0});
  if (builder.face_keys.empty()) {
    throw Error(ErrorKind::Contract, "hex grid needs at least one face");
  }
  return builder.finish(0.0);
}

GridGraph make_cube_grid(int nx, int ny, int nz, double edge_length, Vec origin,
                         double robot_radius) {
  check_edge_length(GridKind::Cube, edge_length, robot_radius);
  GridBuilder builder{GridKind::Cube, edge_length, origin, robot_radius, {}};
  for (int k = 0; k < nz; ++k) {
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        if (i + 1 < nx && j + 1 < ny) builder.face_keys.push_back({i, j, k, 0});
        if (i + 1 < nx && k + 1 < nz) builder.face_keys.push_back({i, j, k, 1});
        if (j + 1 < ny && k + 1 < nz) builder.face_keys.push_back({i, j, k, 2});
      }
    }
  }
  if (builder.face_keys.empty()) {
    throw Error(ErrorKind::Contract, "cube grid needs at least one face");
  }
  return builder.finish(0.0);
}

namespace {

std::vector<int> rotate_cycle(const std::vector<int>& cycle, int start) {
  std::vector<int> out(cycle.size());
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    out[k] = cycle[(start + k) % cycle.size()];
  }
  return out;
}

}  // namespace

int Figure8Cell::local_of(int vertex) const {
  for (std::size_t k = 0; k < locals.size(); ++k) {
    if (locals[k] == vertex) return static_cast<int>(k);
  }
  return -1;
}

Figure8Cell make_figure8(const GridGraph& grid, int face_a, int face_b) {
  const auto& fa = grid.faces[static_cast<std::size_t>(face_a)];
  const auto& fb = grid.faces[static_cast<std::size_t>(face_b)];
  std::vector<int> shared;
  for (int v : fa.cycle) {
    if (std::find(fb.cycle.begin(), fb.cycle.end(), v) != fb.cycle.end()) {
      shared.push_back(v);
    }
  }
  if (shared.size() != 2) {
    throw Error(ErrorKind::Contract, "figure-8 faces must share exactly one edge");
  }
  const CanonicalFigure8& canon = canonical_figure8_shape(grid.kind == GridKind::Hex);
  const int la = static_cast<int>(fa.cycle.size());

  // Directed traversal of the shared edge in face_a's cycle.
  int pa = -1;
  for (int k = 0; k < la; ++k) {
    int u = fa.cycle[static_cast<std::size_t>(k)];
    int v = fa.cycle[static_cast<std::size_t>((k + 1) % la)];
    if ((u == shared[0] && v == shared[1]) || (u == shared[1] && v == shared[0])) {
      pa = k;
      break;
    }
  }
  if (pa < 0) {
    throw Error(ErrorKind::Contract, "shared vertices are not an edge of face_a");
  }
  int x = fa.cycle[static_cast<std::size_t>(pa)];
  int y = fa.cycle[static_cast<std::size_t>((pa + 1) % la)];

  Figure8Cell cell;
  cell.face_a = face_a;
  cell.face_b = face_b;
  cell.shared_edge = {x, y};
  cell.locals.assign(static_cast<std::size_t>(canon.size), -1);

  std::vector<int> rot_a = rotate_cycle(fa.cycle, ((pa - canon.offset_a) % la + la) % la);
  for (int k = 0; k < la; ++k) {
    cell.locals[static_cast<std::size_t>(canon.cycle_a[static_cast<std::size_t>(k)])] =
        rot_a[static_cast<std::size_t>(k)];
  }

  // face_b must traverse the shared edge in the opposite direction (y -> x);
  // reverse its cycle when both faces were stored with the same orientation
  // along that edge (possible for non-coplanar cube faces).
  std::vector<int> cb = fb.cycle;
  const int lb = static_cast<int>(cb.size());
  auto find_directed = [&](int u, int v) {
    for (int k = 0; k < lb; ++k) {
      if (cb[static_cast<std::size_t>(k)] == u &&
          cb[static_cast<std::size_t>((k + 1) % lb)] == v) {
        return k;
      }
    }
    return -1;
  };
  int pb = find_directed(y, x);
  if (pb < 0) {
    std::reverse(cb.begin(), cb.end());
    cell.flipped_b = true;
    pb = find_directed(y, x);
  }
  if (pb < 0) {
    throw Error(ErrorKind::Contract, "shared vertices are not an edge of face_b");
  }
  std::vector<int> rot_b = rotate_cycle(cb, ((pb - canon.offset_b) % lb + lb) % lb);
  for (int k = 0; k < lb; ++k) {
    int local = canon.cycle_b[static_cast<std::size_t>(k)];
    int vid = rot_b[static_cast<std::size_t>(k)];
    int& slot = cell.locals[static_cast<std::size_t>(local)];
    if (slot >= 0 && slot != vid) {
      throw Error(ErrorKind::Contract, "inconsistent shared edge between faces");
    }
    slot = vid;
  }

  auto map_locals = [&cell](const std::vector<int>& seq) {
    std::vector<int> out;
    out.reserve(seq.size());
    for (int local : seq) out.push_back(cell.locals[static_cast<std::size_t>(local)]);
    return out;
  };
  cell.cycle_a = map_locals(canon.cycle_a);
  cell.cycle_b = map_locals(canon.cycle_b);
  cell.outer = map_locals(canon.outer);
  return cell;
}

Figure8Partition figure8_partition(const GridGraph& grid) {
  Figure8Partition part;
  auto add_cell = [&](int fa, int fb, std::array<int, 3> coord) {
    Figure8Cell cell = make_figure8(grid, fa, fb);
    cell.coord = coord;
    part.by_coord[coord] = static_cast<int>(part.cells.size());
    part.cells.push_back(std::move(cell));
  };

  std::array<int, 3> lo{}, hi{};
  bool first = true;
  for (const auto& k : grid.vertex_keys) {
    for (int a = 0; a < 3; ++a) {
      lo[a] = first ? k[a] : std::min(lo[a], k[a]);
      hi[a] = first ? k[a] : std::max(hi[a], k[a]);
    }
    first = false;
  }

  if (grid.kind == GridKind::Hex) {
    // Cores on even face rows, two faces plus a one-face gap per period.
    for (int fj = lo[1]; fj <= hi[1]; ++fj) {
      if (fj % 6 != 0) continue;
      for (int fi = lo[0]; fi <= hi[0]; ++fi) {
        if (fi % 6 != 0) continue;
        int fa = grid.face_id({fi, fj, 0, 0});
        int fb = grid.face_id({fi + 2, fj, 0, 0});
        if (fa >= 0 && fb >= 0) add_cell(fa, fb, {fi / 6, fj / 6, 0});
      }
    }
  } else {
    // 2x3x1 vertex blocks anchored at the grid's minimum corner.
    int zmax = (grid.kind == GridKind::Cube) ? hi[2] : lo[2];
    for (int z = lo[2]; z <= zmax; ++z) {
      for (int by = 0; lo[1] + 3 * by + 2 <= hi[1]; ++by) {
        for (int bx = 0; lo[0] + 2 * bx + 1 <= hi[0]; ++bx) {
          int i = lo[0] + 2 * bx, j = lo[1] + 3 * by;
          int fa = grid.face_id({i, j, z, 0});
          int fb = grid.face_id({i, j + 1, z, 0});
          if (fa >= 0 && fb >= 0) add_cell(fa, fb, {bx, by, z - lo[2]});
        }
      }
    }
  }
  if (part.cells.empty()) {
    throw Error(ErrorKind::Partition, "grid too small to form one figure-8 cell");
  }

  part.cell_of_vertex.assign(static_cast<std::size_t>(grid.num_vertices()), -1);
  for (std::size_t c = 0; c < part.cells.size(); ++c) {
    for (int v : part.cells[c].locals) {
      if (part.cell_of_vertex[static_cast<std::size_t>(v)] >= 0) {
        throw Error(ErrorKind::Partition, "figure-8 cores overlap");
      }
      part.cell_of_vertex[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
  }

  // Remainder vertices join the nearest assigned neighbor, lowest cell id
  // first; repeated passes keep the rule order-independent.
  for (;;) {
    std::vector<std::pair<int, int>> claims;
    for (int v = 0; v < grid.num_vertices(); ++v) {
      if (part.cell_of_vertex[static_cast<std::size_t>(v)] >= 0) continue;
      int best = -1;
      for (int nb : grid.adjacency[static_cast<std::size_t>(v)]) {
        int cell = part.cell_of_vertex[static_cast<std::size_t>(nb)];
        if (cell >= 0 && (best < 0 || cell < best)) best = cell;
      }
      if (best >= 0) claims.emplace_back(v, best);
    }
    if (claims.empty()) break;
    for (auto [v, cell] : claims) {
      part.cell_of_vertex[static_cast<std::size_t>(v)] = cell;
      part.cells[static_cast<std::size_t>(cell)].extras.push_back(v);
    }
  }
  for (int v = 0; v < grid.num_vertices(); ++v) {
    if (part.cell_of_vertex[static_cast<std::size_t>(v)] < 0) {
      throw Error(ErrorKind::Partition, "disconnected vertex could not join any cell");
    }
  }

  part.coord_min = part.cells.front().coord;
  part.coord_max = part.cells.front().coord;
  for (const auto& cell : part.cells) {
    for (int a = 0; a < 3; ++a) {
      part.coord_min[a] = std::min(part.coord_min[a], cell.coord[a]);
      part.coord_max[a] = std::max(part.coord_max[a], cell.coord[a]);
    }
  }
  return part;
}

}  // namespace sear
