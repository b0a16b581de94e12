#pragma once

#include <array>
#include <cstdint>

namespace brik {

// Resource caps shared by every module. All are overridable from the CLI.
struct Options {
  // Largest block index build_block() will materialize; |B_30| is about 2^29 bits.
  std::uint64_t block_cap = 30;
  // Longest window() / big-access read, in symbols.
  std::uint64_t window_cap = std::uint64_t{1} << 20;
  // Longest materialized prefix of b, in symbols.
  std::uint64_t memory_cap = std::uint64_t{1} << 31;
  // B_1. Only ever changed to build negative controls for the verifier.
  std::array<int, 3> seed = {1, 0, 1};
};

}  // namespace brik
