#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brik/access.hpp"
#include "oracle.hpp"

using namespace brik;

namespace {

// Linear search over l_n; independent of the top-bit estimate.
std::uint64_t brute_block_index(const BigIndex& n) {
  std::uint64_t i = 1;
  while (!(block_length(i) < n && n <= block_length(i + 1))) ++i;
  return i;
}

BigIndex random_big(std::mt19937_64& rng, unsigned bits) {
  BigIndex v = 0;
  for (unsigned got = 0; got < bits; got += 64) v = (v << 64) | BigIndex(rng());
  v &= pow2(bits) - 1;
  boost::multiprecision::bit_set(v, bits - 1);
  return v;
}

}  // namespace

TEST_CASE("find_block_index", "[big-access]") {
  CHECK(find_block_index(std::uint64_t{4}) == 1);
  CHECK(find_block_index(std::uint64_t{14}) == 4);
  CHECK(find_block_index(BigIndex(14)) == 4);
  CHECK_THROWS_AS(find_block_index(std::uint64_t{3}), DomainError);
  CHECK_THROWS_AS(find_block_index(BigIndex(1)), DomainError);
}

TEST_CASE("find_block_index at r_5 = l_2060", "[big-access]") {
  // 2^2059 + 2061 is exactly l_2060, so the tier with l_n < N <= l_{n+1} is 2059.
  const BigIndex r5 = pow2(2059) + 2061;
  REQUIRE(r5 == block_length(2060));
  CHECK(find_block_index(r5) == 2059);
  CHECK(find_block_index(BigIndex(r5 + 1)) == 2060);
  CHECK(block_length(2059) < r5);
}

TEST_CASE("find_block_index agrees with linear search", "[big-access][property]") {
  for (std::uint64_t n = 4; n <= 5000; ++n) REQUIRE(find_block_index(n) == brute_block_index(BigIndex(n)));
  for (std::uint64_t i = 1; i <= 200; ++i) {
    const BigIndex l = block_length(i);
    for (int d = -1; d <= 1; ++d) {
      const BigIndex n = l + d;
      if (n < 4) continue;
      REQUIRE(find_block_index(n) == brute_block_index(n));
      REQUIRE(find_block_index(n) < bit_length(n) + 2);
    }
  }
}

TEST_CASE("reduce_index", "[big-access]") {
  CHECK(reduce_index(std::uint64_t{4}) == 2);
  CHECK(reduce_index(std::uint64_t{14}) == 5);
  CHECK(reduce_index(std::uint64_t{8}) == 5);
  CHECK(reduce_index(BigIndex(14)) == 5);
  CHECK_THROWS_AS(reduce_index(std::uint64_t{2}), DomainError);

  const std::string b = oracle::prefix(100'000);
  for (std::uint64_t n = 4; n <= 100'000; ++n) {
    const std::uint64_t r = reduce_index(n);
    const std::uint64_t tier = find_block_index(n);
    REQUIRE(r < n);
    REQUIRE(tier + 1 <= r);
    REQUIRE(r <= block_length_u64(tier));
    REQUIRE(b[r - 1] == b[n - 1]);
  }
}

TEST_CASE("bit_at", "[big-access]") {
  CHECK(bit_at(std::uint64_t{1}) == 1);
  CHECK(bit_at(std::uint64_t{4}) == 0);
  CHECK(bit_at(std::uint64_t{2061}) == 1);
  CHECK(bit_at(parse_position("2^2059+2061")) == 1);
  CHECK_THROWS_AS(bit_at(std::uint64_t{0}), DomainError);
}

TEST_CASE("bit_at equals the materialized prefix up to 10^5", "[big-access]") {
  const std::string b = oracle::prefix(100'000);
  for (std::uint64_t n = 1; n <= 100'000; ++n) REQUIRE(bit_at(n) == b[n - 1] - '0');
}

TEST_CASE("native and bignum paths agree", "[big-access][property]") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() >> (rng() % 60 + 3);
    if (n == 0) continue;
    REQUIRE(bit_at(n) == bit_at_traced(BigIndex(n)).bit);
  }
}

TEST_CASE("reduction steps stay within bit-length + 2", "[big-access][property]") {
  std::mt19937_64 rng(11);
  for (std::uint64_t n = 1; n <= 50'000; ++n) REQUIRE(bit_at_traced(BigIndex(n)).steps <= bit_length(n) + 2);
  for (int i = 0; i < 200; ++i) {
    const BigIndex n = random_big(rng, 3 + static_cast<unsigned>(rng() % 3000));
    const TracedBit tb = bit_at_traced(n);
    REQUIRE(tb.steps <= bit_length(n) + 2);
    const BigIndex r = reduce_index(n);
    REQUIRE(r < n);
    REQUIRE(2 * r <= n + 2 * bit_length(n));
  }
}

TEST_CASE("window", "[big-access]") {
  CHECK(window(13, 3).to_string() == "111");
  CHECK(window(1, 8).to_string() == "10101101");
  CHECK(window(parse_position("2^2059+2060"), 7).to_string() == "0111110");
  Options small;
  small.window_cap = 16;
  CHECK_THROWS_AS(window(1, 17, small), CapExceeded);
  CHECK_THROWS_AS(window(0, 1), DomainError);
}

TEST_CASE("window agrees with prefix and with per-symbol bit_at", "[big-access][property]") {
  const std::string b = oracle::prefix(200'000);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = rng() % 190'000 + 1;
    const std::uint64_t len = rng() % 5000 + 1;
    REQUIRE(window(n, len).to_string() == b.substr(n - 1, len));
  }
  for (int i = 0; i < 60; ++i) {
    const BigIndex n = random_big(rng, 3 + static_cast<unsigned>(rng() % 2500));
    const std::uint64_t a = rng() % 300 + 1, c = rng() % 300 + 1;
    const Word w = window(n, a + c);
    REQUIRE(w == window(n, a) + window(n + a, c));
    for (std::uint64_t p = 1; p <= w.size(); ++p) {
      REQUIRE(w[p] == bit_at(BigIndex(n + p - 1)));
      if (p > 1) REQUIRE(!(w[p] == 0 && w[p - 1] == 0));
    }
  }
}

TEST_CASE("position expressions", "[big-access]") {
  CHECK(parse_position("13") == 13);
  CHECK(parse_position("013") == 13);
  CHECK(parse_position("0") == 0);
  CHECK(parse_position("0009+2^03") == 17);
  CHECK(parse_position("2^2059+2061") == pow2(2059) + 2061);
  CHECK(parse_position(" 2^3 + 2^1 + 1 ") == 11);
  CHECK(to_pretty_string(pow2(2059) + 2061) == "2^2059+2061");
  CHECK(to_pretty_string(BigIndex(2061)) == "2061");
  CHECK_THROWS_AS(parse_position(""), ParseError);
  CHECK_THROWS_AS(parse_position("3^4"), ParseError);
  CHECK_THROWS_AS(parse_position("2^"), ParseError);
  CHECK_THROWS_AS(parse_position("12-1"), ParseError);
  CHECK_THROWS_AS(parse_position("1++2"), ParseError);
}
