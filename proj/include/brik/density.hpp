#pragma once

// Density of 1's in b.
//
// With a(N) the number of 1's in b[1..N] and s(n) = a(l_n):
//   s(1) = 2,  s(n) = 2 s(n-1) - a(n-1)
//   a(l_n + t) = s(n) + a(n+t) - a(n)       for 0 <= t <= l_n - n
//   alpha = lim a(N)/N = 2 - 2 beta,  beta = sum b_i 2^-i
// Every quantity here is an exact rational with a power-of-two denominator;
// floating point appears only in display code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brik/bigint.hpp"
#include "brik/blocks.hpp"
#include "brik/error.hpp"
#include "brik/options.hpp"
#include "brik/word.hpp"

namespace brik {

// Prefix ones-counts a(1..N) over a materialized prefix, O(1) per query.
class CountTable {
 public:
  explicit CountTable(std::uint64_t max_length, const Options& opts = {})
      : bits_(prefix(max_length, opts)), seed_ones_(0) {
    for (int b : opts.seed) seed_ones_ += static_cast<std::uint64_t>(b);
    const auto& limbs = bits_.limbs();
    before_.resize(limbs.size() + 1, 0);
    for (std::size_t j = 0; j < limbs.size(); ++j)
      before_[j + 1] = before_[j] + static_cast<std::uint64_t>(std::popcount(limbs[j]));
  }

  std::uint64_t max_length() const noexcept { return bits_.size(); }
  const Word& bits() const noexcept { return bits_; }

  // a(N); a(0) = 0.
  std::uint64_t ones(std::uint64_t n) const {
    if (n > bits_.size())
      throw std::out_of_range("CountTable: a(" + std::to_string(n) + ") beyond table of length " +
                              std::to_string(bits_.size()));
    const std::uint64_t full = n >> 6;
    const unsigned rem = static_cast<unsigned>(n & 63);
    std::uint64_t total = before_[full];
    if (rem != 0) total += static_cast<std::uint64_t>(std::popcount(bits_.limbs()[full] & ((std::uint64_t{1} << rem) - 1)));
    return total;
  }

  // s(n) by the block recursion; needs a(n-1) from the table.
  std::uint64_t block_ones(std::uint64_t n) const {
    if (n < 1) throw DomainError("block_ones: n must be >= 1");
    std::uint64_t s = seed_ones_;
    for (std::uint64_t j = 1; j < n; ++j) s = 2 * s - ones(j);
    return s;
  }

 private:
  Word bits_;
  std::uint64_t seed_ones_;
  std::vector<std::uint64_t> before_;  // ones in limbs [0, j)
};

inline std::uint64_t ones_prefix_count(std::uint64_t n, const Options& opts = {}) {
  return prefix(n, opts).count_ones();
}

inline std::uint64_t block_ones(std::uint64_t n, const Options& opts = {}) {
  if (n < 1) throw DomainError("block_ones: n must be >= 1");
  if (n > opts.block_cap) throw CapExceeded("block_cap", opts.block_cap, "n = " + std::to_string(n));
  return CountTable(std::max<std::uint64_t>(n, 3), opts).block_ones(n);
}

// Closed or half-open interval with rational endpoints, computed from the
// first `bits` symbols of b.
struct DensityInterval {
  Rational lower;
  Rational upper;
  std::uint64_t bits;
  bool lower_closed;
  bool upper_closed;

  Rational width() const { return upper - lower; }
  Rational midpoint() const { return (lower + upper) / 2; }

  bool contains(const Rational& x) const {
    const bool above = lower_closed ? x >= lower : x > lower;
    const bool below = upper_closed ? x <= upper : x < upper;
    return above && below;
  }

  // Every point of *this lies in outer.
  bool inside(const DensityInterval& outer) const {
    const bool lo_ok = lower > outer.lower || (lower == outer.lower && (outer.lower_closed || !lower_closed));
    const bool hi_ok = upper < outer.upper || (upper == outer.upper && (outer.upper_closed || !upper_closed));
    return lo_ok && hi_ok;
  }
};

namespace detail {
// sum_{i<=k} b_i 2^(k-i), i.e. b[1..k] read as a binary numeral.
inline BigIndex prefix_numeral(std::uint64_t k, const Options& opts) {
  const Word w = prefix(k, opts);
  std::vector<unsigned char> bytes((k + 7) / 8, 0);
  for (std::uint64_t p = 1; p <= k; ++p)
    if (w[p]) bytes[(p - 1) / 8] |= static_cast<unsigned char>(0x80u >> ((p - 1) % 8));
  BigIndex v;
  boost::multiprecision::import_bits(v, bytes.begin(), bytes.end(), 8, true);
  return v >> (8 * bytes.size() - k);
}
}  // namespace detail

// beta in [sum_{i<=k} b_i 2^-i, that + 2^-k).
inline DensityInterval beta_bounds(std::uint64_t k, const Options& opts = {}) {
  if (k < 1) throw DomainError("beta_bounds: k must be >= 1");
  const BigIndex denom = pow2(k);
  Rational lower(detail::prefix_numeral(k, opts), denom);
  Rational upper = lower + Rational(BigIndex(1), denom);
  return {std::move(lower), std::move(upper), k, true, false};
}

// alpha = 2 - 2 beta in (2 - 2 beta_upper, 2 - 2 beta_lower].
inline DensityInterval alpha_bounds(std::uint64_t k, const Options& opts = {}) {
  const DensityInterval beta = beta_bounds(k, opts);
  return {2 - 2 * beta.upper, 2 - 2 * beta.lower, k, false, true};
}

// s(n) / l_n.
inline Rational alpha_block_estimate(std::uint64_t n, const Options& opts = {}) {
  if (n > opts.block_cap) throw CapExceeded("block_cap", opts.block_cap, "n = " + std::to_string(n));
  const std::uint64_t len = block_length_u64(n);
  return Rational(BigIndex(CountTable(len, opts).block_ones(n)), BigIndex(len));
}

// a(l_n + t) = s(n) + a(n+t) - a(n), against a table covering l_n + t.
inline bool count_identity_check(const CountTable& table, std::uint64_t n, std::uint64_t t) {
  if (n < 2) throw DomainError("count_identity_check: n must be >= 2");
  const std::uint64_t len = block_length_u64(n);
  if (t > len - n)
    throw DomainError("count_identity_check: t = " + std::to_string(t) + " outside [0, " +
                      std::to_string(len - n) + "]");
  return table.ones(len + t) == table.block_ones(n) + table.ones(n + t) - table.ones(n);
}

inline bool count_identity_check(std::uint64_t n, std::uint64_t t, const Options& opts = {}) {
  if (n < 2) throw DomainError("count_identity_check: n must be >= 2");
  if (n + 1 > opts.block_cap) throw CapExceeded("block_cap", opts.block_cap, "n = " + std::to_string(n));
  const std::uint64_t len = block_length_u64(n);
  if (t > len - n)
    throw DomainError("count_identity_check: t = " + std::to_string(t) + " outside [0, " +
                      std::to_string(len - n) + "]");
  return count_identity_check(CountTable(len + t, opts), n, t);
}

// ---------------------------------------------------------------------------
// Decimal rendering that prints only digits fixed by the interval.

struct PinnedDecimal {
  std::string digits;            // e.g. "0.6450587849345243", empty if not even the integer part is fixed
  std::size_t fractional_digits;

  std::string text() const { return digits + "…"; }
};

inline PinnedDecimal pinned_decimal(const DensityInterval& iv, std::size_t max_fraction_digits = 400) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  auto floor_of = [](const Rational& q) {
    BigIndex n = numerator(q), d = denominator(q);
    BigIndex f = n / d;
    if (n.sign() < 0 && f * d != n) f -= 1;
    return f;
  };
  auto ceil_of = [&](const Rational& q) {
    BigIndex f = floor_of(q);
    return f * denominator(q) == numerator(q) ? f : f + 1;
  };
  // floor(x * 10^d) is constant on the interval iff the smallest and largest
  // attainable values agree.
  auto pinned_at = [&](const BigIndex& scale, BigIndex& out) {
    const Rational lo = iv.lower * scale, hi = iv.upper * scale;
    BigIndex least = floor_of(lo);
    BigIndex most = iv.upper_closed ? floor_of(hi) : ceil_of(hi) - 1;
    if (least != most) return false;
    out = least;
    return true;
  };

  PinnedDecimal result{"", 0};
  BigIndex value;
  if (!pinned_at(BigIndex(1), value)) return result;
  result.digits = value.str() + ".";
  BigIndex scale = 1;
  for (std::size_t d = 1; d <= max_fraction_digits; ++d) {
    scale *= 10;
    if (!pinned_at(scale, value)) break;
    result.digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    result.fractional_digits = d;
  }
  return result;
}

// Decimal approximation for display only.
inline std::string approximate(const Rational& q, int digits = 20) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigIndex n = numerator(q), d = denominator(q);
  std::string sign;
  if (n.sign() < 0) {
    sign = "-";
    n = -n;
  }
  BigIndex scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigIndex scaled = (n * scale + d / 2) / d;
  std::string s = scaled.str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return sign + s;
}

// ---------------------------------------------------------------------------
// Error term E(N) = a(N) - alpha N.

struct ErrorSample {
  std::uint64_t n;
  std::uint64_t ones;
  Rational lower;  // a(N) - alpha_upper N
  Rational upper;  // a(N) - alpha_lower N

  // Upper bound on |E(N)|.
  Rational magnitude() const {
    const Rational lo = abs(lower), hi = abs(upper);
    return lo > hi ? lo : hi;
  }
};

namespace detail {
inline void check_error_precision(std::uint64_t n_max, std::uint64_t k) {
  // Enclosure width 2^(1-k) N must stay below 1/2.
  if (k < 2 || BigIndex(n_max) * 4 >= pow2(k))
    throw PrecisionError("error term: alpha depth k = " + std::to_string(k) + " is too shallow for N up to " +
                         std::to_string(n_max) + " (need 2^(1-k) N < 1/2)");
}
}  // namespace detail

inline ErrorSample error_sample(const CountTable& table, std::uint64_t n, const DensityInterval& alpha) {
  if (n < 1) throw DomainError("error term: N must be >= 1");
  const std::uint64_t a = table.ones(n);
  const Rational big_n(n);
  return {n, a, a - alpha.upper * big_n, a - alpha.lower * big_n};
}

// Default sample grid for N <= n_max: 1..9, every l_n, powers of ten, n_max.
inline std::vector<std::uint64_t> error_sample_points(std::uint64_t n_max) {
  std::vector<std::uint64_t> pts;
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(9, n_max); ++n) pts.push_back(n);
  for (std::uint64_t i = 1; i < 62 && block_length_u64(i) <= n_max; ++i) pts.push_back(block_length_u64(i));
  for (std::uint64_t p = 10; p <= n_max; p *= 10) pts.push_back(p);
  pts.push_back(n_max);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

inline std::vector<ErrorSample> error_profile(const CountTable& table, std::span<const std::uint64_t> points,
                                              std::uint64_t k, const Options& opts = {}) {
  const std::uint64_t n_max = points.empty() ? 1 : *std::max_element(points.begin(), points.end());
  detail::check_error_precision(n_max, k);
  const DensityInterval alpha = alpha_bounds(k, opts);
  std::vector<ErrorSample> out;
  out.reserve(points.size());
  for (std::uint64_t n : points) out.push_back(error_sample(table, n, alpha));
  return out;
}

inline std::vector<ErrorSample> error_profile(std::uint64_t n_max, std::uint64_t k, const Options& opts = {}) {
  detail::check_error_precision(n_max, k);
  const CountTable table(n_max, opts);
  const auto pts = error_sample_points(n_max);
  return error_profile(table, pts, k, opts);
}

struct RelativeErrorMax {
  Rational bound;      // max over the range of (upper bound on |E(N)|) / N
  std::uint64_t at;    // an N attaining it
};

// Sweeps every N in [n_from, n_to] in exact integer arithmetic scaled by 2^k.
inline RelativeErrorMax max_relative_error(const CountTable& table, std::uint64_t n_from, std::uint64_t n_to,
                                           std::uint64_t k, const Options& opts = {}) {
  if (n_from < 1 || n_from > n_to) throw DomainError("max_relative_error: need 1 <= from <= to");
  detail::check_error_precision(n_to, k);
  const DensityInterval alpha = alpha_bounds(k, opts);
  const BigIndex scale = pow2(k);
  auto scaled = [&](const Rational& q) {
    return BigIndex(boost::multiprecision::numerator(q) * (scale / boost::multiprecision::denominator(q)));
  };
  const BigIndex alpha_lo = scaled(alpha.lower), alpha_hi = scaled(alpha.upper);
  BigIndex best_num = -1;
  std::uint64_t best_n = n_from;
  for (std::uint64_t n = n_from; n <= n_to; ++n) {
    const BigIndex a_scaled = BigIndex(table.ones(n)) << static_cast<unsigned>(k);
    BigIndex lo = a_scaled - alpha_hi * n;
    BigIndex hi = a_scaled - alpha_lo * n;
    if (lo.sign() < 0) lo = -lo;
    if (hi.sign() < 0) hi = -hi;
    const BigIndex& mag = lo > hi ? lo : hi;
    // mag / n > best_num / best_n
    if (best_num.sign() < 0 || mag * best_n > best_num * n) {
      best_num = mag;
      best_n = n;
    }
  }
  return {Rational(best_num, scale * best_n), best_n};
}

}  // namespace brik
