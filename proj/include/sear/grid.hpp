#pragma once

#include <array>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "sear/geom.hpp"

namespace sear {

enum class GridKind { Hex, Square, Cube };

const char* grid_kind_name(GridKind kind);
GridKind grid_kind_from_name(const std::string& name);

// Minimum edge length for collision-free motion along edges.
// Hex honeycomb: (4/sqrt(3)) r, boundary contact allowed.
// Square/cube: (4/sqrt(2)) r plus a strictly positive epsilon.
double edge_length_bound(GridKind kind, double robot_radius);
double default_edge_length(GridKind kind, double robot_radius);

// Lattice graph. Hex grids are honeycombs: robots sit on hexagon corners and
// move along hexagon sides, so interior vertices have degree 3. Vertices and
// faces are keyed by integers; for hex the key (i, j) maps to the position
// origin + (i * sqrt(3)/2, j * 1/2) * edge_length.
struct GridGraph {
  GridKind kind = GridKind::Square;
  int dimension = 2;
  double edge_length = 1.0;
  double robot_radius = 0.0;
  Vec origin;
  double cover_radius = 0.0;

  std::vector<std::array<int, 3>> vertex_keys;
  std::vector<Vec> positions;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor ids

  struct Face {
    std::array<int, 4> key;  // integer key; key[3] = plane (cube only)
    std::vector<int> cycle;  // boundary vertex ids, counterclockwise
  };
  std::vector<Face> faces;
  std::vector<std::vector<int>> vertex_faces;   // vertex -> incident face ids
  std::vector<std::vector<int>> face_neighbors; // faces sharing an edge

  // Vertex counts per axis (hex: column / face-row counts).
  int m_w = 0, m_h = 0, m_d = 1;
  std::array<double, 3> extent_lengths{};  // planar extents of the vertex set

  int num_vertices() const { return static_cast<int>(positions.size()); }
  int vertex_id(const std::array<int, 3>& key) const;  // -1 when absent
  int face_id(const std::array<int, 4>& key) const;
  const Vec& vertex_pos(int id) const { return positions[static_cast<std::size_t>(id)]; }
  bool has_edge(int a, int b) const;

  // Vertex minimizing Euclidean distance, ties to the lowest id. Throws
  // Error(OutOfCoverage) when the nearest vertex is farther than edge_length.
  int nearest_vertex(const Vec& p) const;

  // True when one face or a pair of adjacent faces holds both vertices, so
  // a single figure-8 cell can exchange them.
  bool spans_figure8(int a, int b) const;

 private:
  friend struct GridBuilder;
  std::unordered_map<std::uint64_t, int> vertex_lookup_;
  std::unordered_map<std::uint64_t, int> face_lookup_;
};

// Grid whose vertices are within edge_length of every point of the ball
// (cover_radius around center); extent minimal up to one ring of padding.
// Throws Error(InvalidEdgeLength) when edge_length is below the kind bound.
GridGraph build_covering_grid(GridKind kind, double edge_length, Vec center,
                              double cover_radius, double robot_radius);

// Fixed-extent grids for tests and discrete routing experiments.
GridGraph make_square_grid(int width_vertices, int height_vertices, double edge_length,
                           Vec origin = {}, double robot_radius = 0.0);
GridGraph make_hex_grid(int face_cols, int face_rows, double edge_length,
                        Vec origin = {}, double robot_radius = 0.0);
GridGraph make_cube_grid(int nx, int ny, int nz, double edge_length, Vec origin = {},
                         double robot_radius = 0.0);

// Two adjacent faces sharing one edge, with the canonical local labelling
// used by the swap tables. Square cells have 6 distinct vertices, hex cells
// 10. `extras` lists absorbed vertices owned by the cell in a partition but
// outside the two-face core.
struct Figure8Cell {
  int face_a = -1;
  int face_b = -1;
  std::array<int, 2> shared_edge{-1, -1};
  std::vector<int> locals;   // canonical local index -> vertex id
  std::vector<int> cycle_a;  // vertex ids along face_a, canonical order
  std::vector<int> cycle_b;
  std::vector<int> outer;    // boundary cycle of the union
  std::vector<int> extras;
  std::array<int, 3> coord{0, 0, 0};
  // True when face_b's stored cycle was reversed during canonicalization
  // (non-coplanar cube pairs); rotations on face_b then flip direction.
  bool flipped_b = false;

  int local_of(int vertex) const;  // -1 when not a core vertex
  int core_size() const { return static_cast<int>(locals.size()); }
};

// Canonicalizes any two adjacent faces into a Figure8Cell.
// Throws Error(Contract) when the faces do not share exactly one edge.
Figure8Cell make_figure8(const GridGraph& grid, int face_a, int face_b);

struct Figure8Partition {
  std::vector<Figure8Cell> cells;
  std::vector<int> cell_of_vertex;  // every vertex -> owning cell index
  std::array<int, 3> coord_min{}, coord_max{};
  std::map<std::array<int, 3>, int> by_coord;

  int cell_at(const std::array<int, 3>& coord) const {
    auto it = by_coord.find(coord);
    return it == by_coord.end() ? -1 : it->second;
  }
};

// Vertex-disjoint figure-8 cells covering every vertex: cores tile the
// interior; remainder vertices merge into the nearest cell by flood order.
// Throws Error(Partition) when the grid has no complete cell.
Figure8Partition figure8_partition(const GridGraph& grid);

}  // namespace sear
