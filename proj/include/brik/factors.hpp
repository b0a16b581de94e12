#pragma once

// Factors of b: a binary word is a factor iff it avoids "00", so there are
// F_{n+2} factors of each length n.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "brik/bigint.hpp"
#include "brik/blocks.hpp"
#include "brik/error.hpp"
#include "brik/options.hpp"
#include "brik/runs.hpp"
#include "brik/word.hpp"

namespace brik {

inline constexpr unsigned kMaxFactorLength = 25;

inline bool is_factor(const Word& w) {
  if (w.empty()) throw DomainError("is_factor: word must be non-empty");
  for (Word::size_type p = 1; p < w.size(); ++p)
    if (w[p] == 0 && w[p + 1] == 0) return false;
  return true;
}

inline BigIndex fibonacci(std::uint64_t n) {
  BigIndex prev = 0, cur = 1;
  if (n == 0) return prev;
  for (std::uint64_t k = 1; k < n; ++k) {
    BigIndex next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Number of distinct factors of length n.
inline BigIndex complexity(std::uint64_t n) {
  if (n < 1) throw DomainError("complexity: n must be >= 1");
  return fibonacci(n + 2);
}

// Set of equal-length words, kept as sorted MSB-first codes (lexicographic,
// 0 < 1).
class FactorSet {
 public:
  enum class Source { characterization, scan };

  FactorSet(unsigned length, std::vector<std::uint32_t> sorted_codes, Source source,
            std::uint64_t scan_length = 0)
      : length_(length), codes_(std::move(sorted_codes)), source_(source), scan_length_(scan_length) {}

  unsigned length() const noexcept { return length_; }
  std::size_t size() const noexcept { return codes_.size(); }
  Source source() const noexcept { return source_; }
  // Prefix length scanned; zero for characterization-sourced sets.
  std::uint64_t scan_length() const noexcept { return scan_length_; }
  const std::vector<std::uint32_t>& codes() const noexcept { return codes_; }

  std::vector<Word> members() const {
    std::vector<Word> out;
    out.reserve(codes_.size());
    for (std::uint32_t c : codes_) out.push_back(Word::from_code(c, length_));
    return out;
  }

  bool contains(const Word& w) const {
    return w.size() == length_ && std::binary_search(codes_.begin(), codes_.end(), code_of(w));
  }

  bool subset_of(const FactorSet& other) const {
    return length_ == other.length_ &&
           std::includes(other.codes_.begin(), other.codes_.end(), codes_.begin(), codes_.end());
  }

  // Members of this set that are missing from other.
  std::vector<Word> difference(const FactorSet& other) const {
    std::vector<std::uint32_t> diff;
    std::set_difference(codes_.begin(), codes_.end(), other.codes_.begin(), other.codes_.end(),
                        std::back_inserter(diff));
    std::vector<Word> out;
    for (std::uint32_t c : diff) out.push_back(Word::from_code(c, length_));
    return out;
  }

  friend bool operator==(const FactorSet& a, const FactorSet& b) noexcept {
    return a.length_ == b.length_ && a.codes_ == b.codes_;
  }

 private:
  static std::uint32_t code_of(const Word& w) {
    return static_cast<std::uint32_t>(w.code(1, static_cast<unsigned>(w.size())));
  }

  unsigned length_;
  std::vector<std::uint32_t> codes_;
  Source source_;
  std::uint64_t scan_length_;
};

namespace detail {
inline void check_factor_length(std::uint64_t n) {
  if (n < 1) throw DomainError("factor length must be >= 1");
  if (n > kMaxFactorLength)
    throw CapExceeded("factor_length_cap", kMaxFactorLength, "n = " + std::to_string(n));
}
}  // namespace detail

// All length-n words without "00", in lexicographic order.
inline FactorSet enumerate_admissible(std::uint64_t n) {
  detail::check_factor_length(n);
  const auto len = static_cast<unsigned>(n);
  std::vector<std::uint32_t> codes;
  // Depth-first in 0-before-1 order emits codes already sorted.
  std::function<void(unsigned, std::uint32_t, bool)> grow = [&](unsigned depth, std::uint32_t code,
                                                                bool last_zero) {
    if (depth == len) {
      codes.push_back(code);
      return;
    }
    if (!last_zero) grow(depth + 1, code << 1, true);
    grow(depth + 1, (code << 1) | 1u, false);
  };
  grow(0, 0, false);
  return FactorSet(len, std::move(codes), FactorSet::Source::characterization);
}

// Distinct length-n windows of b[1..L].
inline FactorSet scan_factors(std::uint64_t scan_length, std::uint64_t n, const Options& opts = {}) {
  detail::check_factor_length(n);
  if (scan_length < n) throw DomainError("scan_factors: need n <= L");
  const Word text = prefix(scan_length, opts);
  const auto len = static_cast<unsigned>(n);
  const std::uint32_t mask = (std::uint32_t{1} << len) - 1;
  std::vector<bool> seen(std::size_t{1} << len, false);
  std::uint32_t code = 0;
  for (Word::size_type p = 1; p <= text.size(); ++p) {
    code = ((code << 1) | static_cast<std::uint32_t>(text[p])) & mask;
    if (p >= len) seen[code] = true;
  }
  std::vector<std::uint32_t> codes;
  for (std::uint32_t c = 0; c <= mask; ++c)
    if (seen[c]) codes.push_back(c);
  return FactorSet(len, std::move(codes), FactorSet::Source::scan, scan_length);
}

// Admissible words of length n that do not occur in b[1..L]. For n >= 5 and
// any feasible L this is nonempty, since 1^5 first appears at 2^2059 + 2061.
struct RecurrenceGapReport {
  std::uint64_t n;
  std::uint64_t scan_length;
  std::size_t admissible;
  std::size_t scanned;
  std::vector<Word> missing;
};

inline RecurrenceGapReport recurrence_gap_report(std::uint64_t scan_length, std::uint64_t n,
                                                 const Options& opts = {}) {
  const FactorSet all = enumerate_admissible(n);
  const FactorSet seen = scan_factors(scan_length, n, opts);
  return {n, scan_length, all.size(), seen.size(), all.difference(seen)};
}

// Border array: border[j] is the length of the longest proper border of
// pattern[1..j], for j = 0..|pattern|.
inline std::vector<std::uint64_t> border_array(const Word& pattern) {
  const std::uint64_t m = pattern.size();
  std::vector<std::uint64_t> border(m + 1, 0);
  std::uint64_t k = 0;
  for (std::uint64_t j = 2; j <= m; ++j) {
    while (k > 0 && pattern[k + 1] != pattern[j]) k = border[k];
    if (pattern[k + 1] == pattern[j]) ++k;
    border[j] = k;
  }
  return border;
}

// Calls visit(p) for each start p of pattern in text (overlaps included), in
// increasing order; stops early when visit returns false.
template <typename Visit>
void for_each_occurrence(const Word& pattern, const Word& text, Visit&& visit) {
  const std::uint64_t m = pattern.size();
  if (m == 0 || m > text.size()) return;
  const auto border = border_array(pattern);
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j <= text.size(); ++j) {
    while (k > 0 && pattern[k + 1] != text[j]) k = border[k];
    if (pattern[k + 1] == text[j]) ++k;
    if (k == m) {
      if (!visit(j - m + 1)) return;
      k = border[k];
    }
  }
}

// Least start of w in b[1..cutoff]. Words containing "00" are never found.
inline ScanResult first_occurrence(const Word& w, std::uint64_t cutoff, const Options& opts = {}) {
  if (w.empty()) throw DomainError("first_occurrence: word must be non-empty");
  if (cutoff > opts.memory_cap)
    throw CapExceeded("memory_cap", opts.memory_cap, "cutoff = " + std::to_string(cutoff));
  if (w.size() > cutoff) return {std::nullopt, cutoff};
  ScanResult result{std::nullopt, cutoff};
  for_each_occurrence(w, prefix(cutoff, opts), [&](std::uint64_t p) {
    result.position = p;
    return false;
  });
  return result;
}

}  // namespace brik
