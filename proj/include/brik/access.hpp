#pragma once

// Random access to b at arbitrary-precision positions.
//
// For l_n < N <= l_{n+1}, the prefix of length N is B_n . B_n[n+1 .. n+t] with
// t = N - l_n, so b[N] = b[n + t] = b[N - 2^(n-1) - 1]. Each reduction strips
// roughly one bit from N; positions 1..3 are read from B_1.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <type_traits>

#include "brik/bigint.hpp"
#include "brik/blocks.hpp"
#include "brik/error.hpp"
#include "brik/options.hpp"
#include "brik/word.hpp"

namespace brik {

namespace detail {

// Positions below this bound are reduced in native arithmetic.
inline constexpr std::uint64_t kNativeLimit = std::uint64_t{1} << 62;

template <typename Index>
Index ell(std::uint64_t n) {
  if constexpr (std::is_same_v<Index, std::uint64_t>)
    return block_length_u64(n);
  else
    return block_length(n);
}

template <typename Index>
Index half_shift(std::uint64_t n) {  // 2^(n-1) + 1 = l_n - n
  if constexpr (std::is_same_v<Index, std::uint64_t>)
    return (std::uint64_t{1} << (n - 1)) + 1;
  else
    return pow2(n - 1) + 1;
}

template <typename Index>
std::uint64_t top_bit(const Index& x) {
  if constexpr (std::is_same_v<Index, std::uint64_t>)
    return static_cast<std::uint64_t>(std::bit_width(x)) - 1;
  else
    return boost::multiprecision::msb(x);
}

template <typename Index>
std::uint64_t block_index_of(const Index& pos) {
  if (pos <= 3) throw DomainError("find_block_index: position must be >= 4 (1..3 lie in B_1)");
  // l_{m} < 2^m <= pos < 2^{m+1} < l_{m+2} for m >= 3, so n is within one of m.
  const std::uint64_t m = top_bit(pos);
  std::uint64_t n = m >= 2 ? m - 1 : 1;
  while (ell<Index>(n + 1) < pos) ++n;
  while (n > 1 && ell<Index>(n) >= pos) --n;
  return n;
}

template <typename Index>
Index reduce_once(const Index& pos) {
  return pos - half_shift<Index>(block_index_of(pos));
}

// Appends b[start .. start+len-1] to out. Runs that stay inside one tier
// l_n < p <= l_{n+1} are shifted down together.
template <typename Index>
void append_window(Index start, std::uint64_t len, Word& out, const Options& opts) {
  while (len > 0) {
    if (start <= 3) {
      out.push_back(opts.seed[static_cast<std::size_t>(start) - 1]);
      start += 1;
      --len;
      continue;
    }
    if constexpr (!std::is_same_v<Index, std::uint64_t>) {
      if (start + len <= kNativeLimit) {
        append_window<std::uint64_t>(start.template convert_to<std::uint64_t>(), len, out, opts);
        return;
      }
    }
    const std::uint64_t n = block_index_of(start);
    const Index room = ell<Index>(n + 1) - start + 1;
    const std::uint64_t seg =
        room < len ? static_cast<std::uint64_t>(room) : len;  // room < len fits u64
    append_window<Index>(start - half_shift<Index>(n), seg, out, opts);
    start += seg;
    len -= seg;
  }
}

}  // namespace detail

// The unique n >= 1 with l_n < N <= l_{n+1}. Requires N >= 4.
inline std::uint64_t find_block_index(const BigIndex& pos) { return detail::block_index_of(pos); }
inline std::uint64_t find_block_index(std::uint64_t pos) { return detail::block_index_of(pos); }

// N' = N - 2^(n-1) - 1 with n = find_block_index(N); b[N'] = b[N] and
// n + 1 <= N' <= l_n.
inline BigIndex reduce_index(const BigIndex& pos) { return detail::reduce_once(pos); }
inline std::uint64_t reduce_index(std::uint64_t pos) { return detail::reduce_once(pos); }

struct TracedBit {
  int bit;
  std::uint64_t steps;  // reductions applied before reaching B_1
};

inline TracedBit bit_at_traced(BigIndex pos, const Options& opts = {}) {
  if (pos < 1) throw DomainError("bit_at: position must be >= 1");
  std::uint64_t steps = 0;
  while (pos >= detail::kNativeLimit) {
    pos = detail::reduce_once(pos);
    ++steps;
  }
  auto p = pos.convert_to<std::uint64_t>();
  while (p > 3) {
    p = detail::reduce_once(p);
    ++steps;
  }
  return {opts.seed[p - 1], steps};
}

inline int bit_at(std::uint64_t pos, const Options& opts = {}) {
  if (pos < 1) throw DomainError("bit_at: position must be >= 1");
  if (pos >= detail::kNativeLimit) return bit_at_traced(BigIndex(pos), opts).bit;
  while (pos > 3) pos = detail::reduce_once(pos);
  return opts.seed[pos - 1];
}

inline int bit_at(const BigIndex& pos, const Options& opts = {}) { return bit_at_traced(pos, opts).bit; }

// b[N .. N+len-1].
inline Word window(const BigIndex& start, std::uint64_t len, const Options& opts = {}) {
  if (start < 1) throw DomainError("window: position must be >= 1");
  if (len < 1) throw DomainError("window: length must be >= 1");
  if (len > opts.window_cap)
    throw CapExceeded("window_cap", opts.window_cap, "len = " + std::to_string(len));
  Word out;
  out.reserve(len);
  detail::append_window<BigIndex>(start, len, out, opts);
  return out;
}

}  // namespace brik
