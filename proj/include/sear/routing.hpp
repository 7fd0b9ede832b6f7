#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sear/grid.hpp"
#include "sear/types.hpp"

namespace sear {

// Calibration constant for the SplitAndGroup step-count bound: on random
// fully-mixed instances, step count stays below
// kSagStepBoundFactor * (m_w + m_h). Measured over the routing test sweep;
// see tests/test_routing.cpp.
inline constexpr double kSagStepBoundFactor = 40.0;

struct DiscreteInstance {
  std::shared_ptr<const GridGraph> grid;
  std::vector<int> start;  // label -> vertex id (V^I)
  std::vector<int> goal;   // label -> vertex id (V^G)

  int size() const { return static_cast<int>(start.size()); }
  void check_valid() const;  // injective maps, vertices in range
};

// One rotation: a face boundary cycle, or the outer boundary cycle of the
// figure-8 formed by face_a and face_b. direction +1 moves the token at
// cycle[k] to cycle[k+1] of the stored counterclockwise cycle.
struct Rotation {
  int face_a = -1;
  int face_b = -1;  // >= 0 selects the outer cycle of the pair
  int direction = 1;
};

// Directed vertex cycle of a rotation (canonical orientation; direction is
// applied by the caller or the helpers below).
std::vector<int> rotation_cycle(const GridGraph& grid, const Rotation& rotation);

struct DiscretePlan {
  int num_real = 0;
  std::vector<int> initial_tokens;  // token -> vertex; real tokens first
  std::vector<std::vector<Rotation>> steps;
  int serialized_substeps = 0;  // sub-steps added by the conversion fallback

  int makespan() const { return static_cast<int>(steps.size()); }
};

struct Move {
  int token;
  int from;
  int to;
};

// Token motions per step, by replay.
std::vector<std::vector<Move>> discrete_plan_moves(const GridGraph& grid,
                                                   const DiscretePlan& plan);
// Final token -> vertex map after all steps.
std::vector<int> apply_discrete_plan(const GridGraph& grid, const DiscretePlan& plan);

struct PaddedInstance {
  std::vector<int> token_vertex;  // token -> vertex; real tokens first
  int num_real = 0;
};

// Fills every free vertex with a virtual robot (unconstrained goal).
PaddedInstance pad_with_virtual_robots(const DiscreteInstance& instance);

// Rotation sequence exchanging the tokens at two core vertices of the cell
// while restoring every other token. a == b yields an empty sequence.
// Throws Error(Contract) when a or b is not a core vertex.
std::vector<Rotation> swap_in_figure8(const GridGraph& grid, const Figure8Cell& cell,
                                      int a, int b);

// SplitAndGroup: recursive bisection along the longer side, figure-8 swap
// chains across each split boundary, terminal cells solved by table swaps.
DiscretePlan solve_sag(const DiscreteInstance& instance);

// Optimal parallel-step search (A* with an admissible max-graph-distance
// heuristic) over real-robot configurations; the step semantics match
// solve_sag (sets of vertex-disjoint rotations).
// Throws Error(OracleTooLarge) past the state budget.
DiscretePlan solve_optimal_bfs(const DiscreteInstance& instance,
                               std::int64_t max_states = 1000000);

// Executes each step in edge_length/speed time; robots on a rotating cycle
// move simultaneously along their edges, others hold. Steps whose rotations
// would dip below 2r clearance are split into consecutive sub-steps in
// face-id order (counted in serialized_substeps of the returned plan copy).
struct ConversionResult {
  SubPlan fragment;
  int serialized_substeps = 0;
};
ConversionResult discrete_to_continuous(const DiscretePlan& plan, const GridGraph& grid,
                                        double speed = 1.0);

// Pluggable router registry; "sag" and "bfs-oracle" are built in.
using Router = std::function<DiscretePlan(const DiscreteInstance&)>;
void register_router(const std::string& name, Router router);
Router find_router(const std::string& name);  // throws Error(Routing) if unknown
std::vector<std::string> router_names();

}  // namespace sear
