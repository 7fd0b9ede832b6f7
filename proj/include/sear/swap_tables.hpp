#pragma once

#include <cstdint>

#include "sear/grid.hpp"

namespace sear {

// Rotation schedules generated at build time by BFS over the figure-8
// rotation group (tools/swap_table_gen.cpp). Sequences are generator ids in
// canonical local space; see figure8_canon.hpp.
struct SwapSequenceView {
  const std::uint8_t* data = nullptr;
  int size = 0;
};

// Shortest generator sequence exchanging canonical locals a and b (a != b).
SwapSequenceView swap_table_sequence(GridKind kind, int local_a, int local_b);

// Upper bound on sequence length over all pairs, per cell kind.
int swap_table_s_max(GridKind kind);

}  // namespace sear
