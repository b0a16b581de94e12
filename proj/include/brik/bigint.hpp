#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "brik/error.hpp"

namespace brik {

// Arbitrary-precision non-negative integer used for positions and lengths.
using BigIndex = boost::multiprecision::cpp_int;
// Exact rational; every density quantity has a power-of-two denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigIndex pow2(std::uint64_t k) {
  BigIndex r = 0;
  boost::multiprecision::bit_set(r, static_cast<unsigned>(k));
  return r;
}

// Number of binary digits of x; zero for x == 0.
inline std::uint64_t bit_length(const BigIndex& x) {
  if (x.is_zero()) return 0;
  return boost::multiprecision::msb(x) + 1;
}

inline std::optional<std::uint64_t> to_u64(const BigIndex& x) {
  if (x.sign() < 0 || x > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return x.convert_to<std::uint64_t>();
}

inline std::string to_string(const BigIndex& x) { return x.str(); }

inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

// Compact rendering for values near a power of two: "2^k+m" when x = 2^k + m
// with 0 <= m < 2^20 and k >= 64, decimal otherwise.
inline std::string to_pretty_string(const BigIndex& x) {
  if (x.sign() <= 0) return x.str();
  const std::uint64_t k = bit_length(x) - 1;
  if (k < 64) return x.str();
  BigIndex rest = x - pow2(k);
  if (rest >= BigIndex(1) << 20) return x.str();
  return rest.is_zero() ? "2^" + std::to_string(k) : "2^" + std::to_string(k) + "+" + rest.str();
}

// Parses a position expression: a '+'-separated sum of terms, each either a
// decimal integer or "2^k" with decimal k. Whitespace is ignored.
//   position := term ('+' term)*
//   term     := digits | '2' '^' digits
inline BigIndex parse_position(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty position expression");

  auto digits = [&](std::size_t& i) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start)
      throw ParseError("expected digits at offset " + std::to_string(start) + " in '" +
                       std::string(text) + "'");
    return std::string_view(s).substr(start, i - start);
  };

  BigIndex total = 0;
  std::size_t i = 0;
  for (;;) {
    const std::string_view lead = digits(i);
    if (i < s.size() && s[i] == '^') {
      if (lead != "2") throw ParseError("only powers of two are supported, got base " + std::string(lead));
      ++i;
      const std::string_view exp = digits(i);
      if (exp.size() > 9) throw ParseError("exponent too large: " + std::string(exp));
      total += pow2(std::stoull(std::string(exp)));
    } else {
      // Strip leading zeros: the string constructor reads them as an octal prefix.
      const std::size_t nz = std::min(lead.find_first_not_of('0'), lead.size() - 1);
      total += BigIndex(std::string(lead.substr(nz)));
    }
    if (i == s.size()) break;
    if (s[i] != '+') throw ParseError("unexpected '" + std::string(1, s[i]) + "' in '" + std::string(text) + "'");
    ++i;
  }
  return total;
}

}  // namespace brik
