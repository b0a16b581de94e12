#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "brik/bigint.hpp"
#include "brik/error.hpp"
#include "brik/options.hpp"
#include "brik/word.hpp"

namespace brik {

// l_i = |B_i| = 2^(i-1) + i + 1, exact for any i.
inline BigIndex block_length(std::uint64_t i) {
  if (i < 1) throw DomainError("block_length: index must be >= 1");
  return pow2(i - 1) + (i + 1);
}

// Native-width l_i; valid for 1 <= i <= 62.
constexpr std::uint64_t block_length_u64(std::uint64_t i) noexcept {
  return (std::uint64_t{1} << (i - 1)) + i + 1;
}

struct BlockMeta {
  std::uint64_t index;
  BigIndex length;
};

inline BlockMeta block_meta(std::uint64_t i) { return {i, block_length(i)}; }

inline Word seed_word(const Options& opts) {
  Word w;
  for (int bit : opts.seed) w.push_back(bit);
  return w;
}

// B_i, built by the copy rule B_{i+1} = B_i . B_i[i+1 .. l_i].
inline Word build_block(std::uint64_t i, const Options& opts = {}) {
  if (i < 1) throw DomainError("build_block: index must be >= 1");
  if (i > opts.block_cap) throw CapExceeded("block_cap", opts.block_cap, "i = " + std::to_string(i));
  Word w = seed_word(opts);
  w.reserve(block_length_u64(i));
  for (std::uint64_t j = 1; j < i; ++j) w.append_slice(w, j + 1, block_length_u64(j));
  return w;
}

// b[1..N].
inline Word prefix(std::uint64_t length, const Options& opts = {}) {
  if (length < 1) throw DomainError("prefix: length must be >= 1");
  if (length > opts.memory_cap)
    throw CapExceeded("memory_cap", opts.memory_cap, "N = " + std::to_string(length));
  Word w = seed_word(opts);
  if (length <= w.size()) return w.slice(1, length);
  w.reserve(length);
  for (std::uint64_t j = 1; w.size() < length; ++j) {
    const std::uint64_t want = length - w.size();
    const std::uint64_t avail = block_length_u64(j) - j;
    w.append_slice(w, j + 1, j + (want < avail ? want : avail));
  }
  return w;
}

// Incremental generator of b_1, b_2, ...
//
// Keeps the whole generated prefix and produces b[p] = b[p - l_n + n] for
// l_n < p <= l_{n+1}, so each symbol costs O(1). Single owner; movable.
class PrefixStream {
 public:
  explicit PrefixStream(std::optional<std::uint64_t> limit = std::nullopt, Options opts = {})
      : limit_(limit), opts_(opts) {}

  bool done() const noexcept { return limit_ && buffer_.size() >= *limit_; }

  // Position of the symbol the next call to next() returns.
  std::uint64_t position() const noexcept { return buffer_.size() + 1; }

  int next() {
    if (done()) throw std::out_of_range("PrefixStream: limit " + std::to_string(*limit_) + " reached");
    const std::uint64_t p = buffer_.size() + 1;
    if (p > opts_.memory_cap)
      throw CapExceeded("memory_cap", opts_.memory_cap, "stream position " + std::to_string(p));
    int bit;
    if (p <= 3) {
      bit = opts_.seed[p - 1];
    } else {
      while (p > block_length_u64(tier_ + 1)) ++tier_;
      bit = buffer_[p - block_length_u64(tier_) + tier_];
    }
    buffer_.push_back(bit);
    return bit;
  }

  // Everything generated so far, i.e. b[1 .. position()-1].
  const Word& buffer() const noexcept { return buffer_; }

 private:
  std::optional<std::uint64_t> limit_;
  Options opts_;
  Word buffer_;
  // Largest n with l_n < position() once position() > 3.
  std::uint64_t tier_ = 1;
};

}  // namespace brik
