#include "sear/swap_tables.hpp"

#include "sear/errors.hpp"

namespace sear::swap_tables_generated {
extern const int kSquareSMax;
extern const int kSquareSize;
extern const int kSquareOffsets[];
extern const unsigned char kSquareGens[];
extern const int kHexSMax;
extern const int kHexSize;
extern const int kHexOffsets[];
extern const unsigned char kHexGens[];
}  // namespace sear::swap_tables_generated

namespace sear {

namespace {

using namespace swap_tables_generated;

int pair_index(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 0 || b >= n || a == b) {
    throw Error(ErrorKind::Contract, "swap table pair out of range");
  }
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

}  // namespace

SwapSequenceView swap_table_sequence(GridKind kind, int local_a, int local_b) {
  const bool hex = (kind == GridKind::Hex);
  const int n = hex ? kHexSize : kSquareSize;
  const int* offsets = hex ? kHexOffsets : kSquareOffsets;
  const unsigned char* gens = hex ? kHexGens : kSquareGens;
  int pi = pair_index(n, local_a, local_b);
  return {gens + offsets[pi], offsets[pi + 1] - offsets[pi]};
}

int swap_table_s_max(GridKind kind) {
  return kind == GridKind::Hex ? kHexSMax : kSquareSMax;
}

}  // namespace sear
