#pragma once

#include <array>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace sear {

// Canonical figure-8 graphs: two faces sharing one edge. Local indices are
// assigned by sorting the lattice keys of the cell's vertices; both face
// cycles run counterclockwise and the shared edge is traversed in opposite
// directions. The outer cycle is the boundary of the union; it is a valid
// rotation on the fully occupied cell and is required for the square cell,
// where the two face cycles alone generate a group without transpositions.
struct CanonicalFigure8 {
  int size;
  std::vector<int> cycle_a;
  std::vector<int> cycle_b;
  std::vector<int> outer;
  int offset_a;  // position in cycle_a where the shared edge is traversed
  int offset_b;
};

inline const CanonicalFigure8& canonical_figure8_shape(bool hex) {
  static const CanonicalFigure8 square{
      6, {0, 1, 3, 2}, {2, 3, 5, 4}, {0, 1, 3, 5, 4, 2}, 2, 0};
  static const CanonicalFigure8 hexagon{
      10, {0, 3, 6, 8, 5, 2}, {1, 4, 7, 9, 6, 3}, {0, 3, 1, 4, 7, 9, 6, 8, 5, 2}, 1, 4};
  return hex ? hexagon : square;
}

// Rotation generators in canonical local space. Generator g rotates one of
// the three cycles; even g moves the token at cycle[k] to cycle[k+1].
enum : int {
  kGenA = 0,       // cycle_a forward
  kGenARev = 1,
  kGenB = 2,
  kGenBRev = 3,
  kGenOuter = 4,
  kGenOuterRev = 5,
  kNumGenerators = 6,
};

namespace figure8_detail {

using State = std::vector<std::uint8_t>;  // position -> token

inline State apply_cycle(const State& s, const std::vector<int>& cycle, bool forward) {
  State out = s;
  const int m = static_cast<int>(cycle.size());
  for (int k = 0; k < m; ++k) {
    int from = cycle[static_cast<std::size_t>(k)];
    int to = cycle[static_cast<std::size_t>((k + (forward ? 1 : m - 1)) % m)];
    out[static_cast<std::size_t>(to)] = s[static_cast<std::size_t>(from)];
  }
  return out;
}

inline State apply_generator(const CanonicalFigure8& shape, const State& s, int gen) {
  switch (gen) {
    case kGenA: return apply_cycle(s, shape.cycle_a, true);
    case kGenARev: return apply_cycle(s, shape.cycle_a, false);
    case kGenB: return apply_cycle(s, shape.cycle_b, true);
    case kGenBRev: return apply_cycle(s, shape.cycle_b, false);
    case kGenOuter: return apply_cycle(s, shape.outer, true);
    default: return apply_cycle(s, shape.outer, false);
  }
}

inline std::uint64_t encode(const State& s) {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    out |= static_cast<std::uint64_t>(s[k]) << (4 * k);
  }
  return out;
}

}  // namespace figure8_detail

// Breadth-first search over the rotation group: shortest generator sequences
// exchanging the tokens at each unordered local pair while restoring all
// other tokens. Result is indexed [a][b] (a < b). Also reports the number of
// states visited and the depth bound S_max over all pairs.
struct SwapSearchResult {
  std::vector<std::vector<std::vector<std::uint8_t>>> sequences;  // [a][b] -> gens
  int s_max = 0;
  std::size_t states_visited = 0;
};

inline SwapSearchResult find_swap_sequences(bool hex) {
  using namespace figure8_detail;
  const CanonicalFigure8& shape = canonical_figure8_shape(hex);
  const int n = shape.size;

  State ident(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) ident[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k);

  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint8_t>> parent;
  parent.reserve(hex ? 4000000 : 1024);
  std::queue<State> queue;
  parent[encode(ident)] = {encode(ident), 255};
  queue.push(ident);

  SwapSearchResult result;
  result.sequences.assign(static_cast<std::size_t>(n),
                          std::vector<std::vector<std::uint8_t>>(static_cast<std::size_t>(n)));
  int remaining = n * (n - 1) / 2;

  auto try_target = [&](const State& s) {
    int a = -1, b = -1;
    for (int k = 0; k < n; ++k) {
      if (s[static_cast<std::size_t>(k)] != k) {
        if (a < 0) {
          a = k;
        } else if (b < 0) {
          b = k;
        } else {
          return;
        }
      }
    }
    if (a < 0 || b < 0) return;
    if (s[static_cast<std::size_t>(a)] != b || s[static_cast<std::size_t>(b)] != a) return;
    auto& slot = result.sequences[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    if (!slot.empty()) return;
    // Backtrack the generator sequence.
    std::vector<std::uint8_t> seq;
    std::uint64_t cur = encode(s);
    while (true) {
      auto [prev, gen] = parent.at(cur);
      if (gen == 255) break;
      seq.push_back(gen);
      cur = prev;
    }
    std::reverse(seq.begin(), seq.end());
    result.s_max = std::max(result.s_max, static_cast<int>(seq.size()));
    slot = std::move(seq);
    --remaining;
  };

  while (!queue.empty() && remaining > 0) {
    State s = queue.front();
    queue.pop();
    std::uint64_t code = encode(s);
    for (int g = 0; g < kNumGenerators; ++g) {
      State t = apply_generator(shape, s, g);
      std::uint64_t tc = encode(t);
      if (parent.emplace(tc, std::make_pair(code, static_cast<std::uint8_t>(g))).second) {
        try_target(t);
        queue.push(t);
      }
    }
  }
  result.states_visited = parent.size();
  if (remaining > 0) {
    throw std::logic_error("figure-8 rotation group does not reach every transposition");
  }
  return result;
}

}  // namespace sear
