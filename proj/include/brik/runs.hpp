#pragma once

// First occurrences of the runs 1^n.
//
// r_1 = 1, r_2 = 5 and r_{n+1} = 2^(r_n - 2) + r_n. r_5 = 2^2059 + 2061 is the
// last one that fits in memory; r_6 already needs about 2^2059 bits.

#include <cstdint>
#include <optional>
#include <string>

#include "brik/access.hpp"
#include "brik/bigint.hpp"
#include "brik/blocks.hpp"
#include "brik/error.hpp"
#include "brik/options.hpp"

namespace brik {

inline constexpr std::uint64_t kMaxRunLength = 5;

struct RunRecord {
  std::uint64_t n;
  BigIndex start;
  bool exact;
};

inline RunRecord run_start(std::uint64_t n) {
  if (n < 1) throw DomainError("run_start: n must be >= 1");
  if (n > kMaxRunLength)
    throw RepresentationError("r_" + std::to_string(n) +
                              " is not representable: it needs at least 2^2059 bits");
  BigIndex r = n == 1 ? 1 : 5;
  for (std::uint64_t k = 2; k < n; ++k) {
    const auto shift = r.convert_to<std::uint64_t>() - 2;  // r_k <= 2061 here
    r = pow2(shift) + r;
  }
  return {n, r, true};
}

// window(r_n, n) = 1^n with zeros on both flanks (for n = 1: b starts "10").
inline bool verify_run(std::uint64_t n, const Options& opts = {}) {
  const RunRecord rec = run_start(n);
  if (n == 1) return bit_at(std::uint64_t{1}, opts) == 1 && bit_at(std::uint64_t{2}, opts) == 0;
  const Word run = window(rec.start, n, opts);
  if (run.count_ones() != n) return false;
  return bit_at(BigIndex(rec.start - 1), opts) == 0 && bit_at(BigIndex(rec.start + n), opts) == 0;
}

struct ScanResult {
  std::optional<std::uint64_t> position;  // empty when not found
  std::uint64_t cutoff;

  bool found() const noexcept { return position.has_value(); }
};

// Least p with b[p .. p+n-1] = 1^n and p+n-1 <= cutoff, scanning the stream.
inline ScanResult scan_first_run(std::uint64_t n, std::uint64_t cutoff, const Options& opts = {}) {
  if (n < 1) throw DomainError("scan_first_run: n must be >= 1");
  if (cutoff > opts.memory_cap)
    throw CapExceeded("memory_cap", opts.memory_cap, "cutoff = " + std::to_string(cutoff));
  PrefixStream stream(cutoff, opts);
  std::uint64_t run = 0;
  while (!stream.done()) {
    const std::uint64_t p = stream.position();
    run = stream.next() ? run + 1 : 0;
    if (run == n) return {p - n + 1, cutoff};
  }
  return {std::nullopt, cutoff};
}

// 2^^h: 2^^0 = 1, 2^^h = 2^(2^^(h-1)).
inline BigIndex tetration(std::uint64_t height) {
  if (height > 5)
    throw RepresentationError("2^^" + std::to_string(height) + " is not representable (2^^6 has 2^65536 bits)");
  BigIndex t = 1;
  for (std::uint64_t k = 0; k < height; ++k) t = pow2(t.convert_to<std::uint64_t>());
  return t;
}

// r_n >= 2^^(n-1) + 3. Stated for n >= 3; n = 2 is accepted too and holds with
// equality (see tetration_bound_is_tight).
inline bool check_tetration_bound(std::uint64_t n) {
  if (n < 2) throw DomainError("check_tetration_bound: n must be >= 2");
  return run_start(n).start >= tetration(n - 1) + 3;
}

inline bool tetration_bound_is_tight(std::uint64_t n) {
  if (n < 2) throw DomainError("tetration_bound_is_tight: n must be >= 2");
  return run_start(n).start == tetration(n - 1) + 3;
}

}  // namespace brik
