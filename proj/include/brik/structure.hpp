#pragma once

// Borders of blocks, the good-index chain q_0 = 1, q_{i+1} = l_{q_i}, and the
// decomposition B_{n+1} = u_n v_n v_n with u_n = b[1..n], v_n = b[n+1..l_n].
//
// Suffix reads go through big-access, so blocks far beyond the
// materialization cap (B_137 has about 2^136 symbols) can be checked.

#include <cstdint>
#include <string>
#include <vector>

#include "brik/access.hpp"
#include "brik/bigint.hpp"
#include "brik/blocks.hpp"
#include "brik/error.hpp"
#include "brik/factors.hpp"
#include "brik/options.hpp"
#include "brik/word.hpp"

namespace brik {

inline constexpr std::uint64_t kMaxGoodIndex = 10'000;
inline constexpr std::uint64_t kMaxChainLength = 4;

// B_i has a border of length i: b[1..i] = b[l_i - i + 1 .. l_i].
inline bool is_good(std::uint64_t i, const Options& opts = {}) {
  if (i < 1) throw DomainError("is_good: index must be >= 1");
  if (i > kMaxGoodIndex) throw CapExceeded("good_index_cap", kMaxGoodIndex, "i = " + std::to_string(i));
  return prefix(i, opts) == window(block_length(i) - i + 1, i, opts);
}

inline std::vector<std::uint64_t> good_indices(std::uint64_t max_index, const Options& opts = {}) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 1; i <= max_index; ++i)
    if (is_good(i, opts)) out.push_back(i);
  return out;
}

// [q_0, ..., q_k].
inline std::vector<BigIndex> good_chain(std::uint64_t k) {
  if (k > kMaxChainLength)
    throw RepresentationError("q_5 = l_{q_4} is not representable: it has about 2^136 bits");
  std::vector<BigIndex> chain{1};
  for (std::uint64_t j = 0; j < k; ++j)
    chain.push_back(block_length(chain.back().convert_to<std::uint64_t>()));
  return chain;
}

// The last l_i symbols of B_s equal B_i.
inline bool ends_with_block(std::uint64_t s, std::uint64_t i, const Options& opts = {}) {
  if (i < 1 || i >= s) throw DomainError("ends_with_block: need 1 <= i < s");
  if (s > kMaxGoodIndex) throw CapExceeded("good_index_cap", kMaxGoodIndex, "s = " + std::to_string(s));
  const BigIndex block_i = block_length(i);
  if (block_i > opts.window_cap)
    throw CapExceeded("window_cap", opts.window_cap, "l_" + std::to_string(i) + " = " + block_i.str());
  const auto len = block_i.convert_to<std::uint64_t>();
  return window(block_length(s) - block_i + 1, len, opts) == prefix(len, opts);
}

// Start positions of w in b[1..L], overlapping occurrences included.
inline std::uint64_t count_occurrences(const Word& w, std::uint64_t scan_length, const Options& opts = {}) {
  if (w.empty()) throw DomainError("count_occurrences: word must be non-empty");
  if (w.size() > scan_length) throw DomainError("count_occurrences: need |w| <= L");
  std::uint64_t count = 0;
  for_each_occurrence(w, prefix(scan_length, opts), [&](std::uint64_t) {
    ++count;
    return true;
  });
  return count;
}

// |u_n| / |v_n| = n / (2^(n-1) + 1).
inline Rational witness_ratio(std::uint64_t n) {
  if (n < 1) throw DomainError("witness_ratio: n must be >= 1");
  return Rational(BigIndex(n), pow2(n - 1) + 1);
}

struct WitnessRecord {
  std::uint64_t n;
  Word u;  // b[1..n]
  Word v;  // b[n+1..l_n]
  Rational ratio;
  bool prefix_ok;  // u v v = B_{n+1}
};

inline WitnessRecord witness(std::uint64_t n, const Options& opts = {}) {
  if (n < 1) throw DomainError("witness: n must be >= 1");
  if (n + 1 > opts.block_cap)
    throw CapExceeded("block_cap", opts.block_cap, "witness n = " + std::to_string(n) + " needs B_" +
                                                       std::to_string(n + 1));
  const Word block = build_block(n, opts);
  const Word next = build_block(n + 1, opts);
  Word u = block.slice(1, n);
  Word v = block.slice(n + 1, block.size());
  const bool ok = u + v + v == next;
  return {n, std::move(u), std::move(v), witness_ratio(n), ok};
}

}  // namespace brik
