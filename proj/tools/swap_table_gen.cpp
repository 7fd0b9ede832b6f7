// Generates the figure-8 swap schedules compiled into the library.
// Writes a C++ source file to stdout; see CMakeLists for the custom command.

#include <cstdio>

#include "sear/figure8_canon.hpp"

namespace {

void emit_table(const char* prefix, bool hex) {
  sear::SwapSearchResult result = sear::find_swap_sequences(hex);
  const int n = hex ? 10 : 6;

  std::printf("extern const int %sSMax = %d;\n", prefix, result.s_max);
  std::printf("extern const int %sSize = %d;\n", prefix, n);

  std::vector<int> offsets;
  std::vector<std::uint8_t> gens;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      offsets.push_back(static_cast<int>(gens.size()));
      const auto& seq = result.sequences[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      gens.insert(gens.end(), seq.begin(), seq.end());
    }
  }
  offsets.push_back(static_cast<int>(gens.size()));

  std::printf("extern const int %sOffsets[] = {", prefix);
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    std::printf("%s%d", k ? "," : "", offsets[k]);
  }
  std::printf("};\n");
  std::printf("extern const unsigned char %sGens[] = {", prefix);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::printf("%s%d", k ? "," : "", static_cast<int>(gens[k]));
  }
  std::printf("};\n");
  std::fprintf(stderr, "%s: S_max=%d, states visited=%zu\n", prefix, result.s_max,
               result.states_visited);
}

}  // namespace

int main() {
  std::printf("// Generated by swap_table_gen; do not edit.\n");
  std::printf("namespace sear::swap_tables_generated {\n");
  emit_table("kSquare", false);
  emit_table("kHex", true);
  std::printf("}  // namespace sear::swap_tables_generated\n");
  return 0;
}
