#include <catch2/catch_amalgamated.hpp>

#include "brik/access.hpp"
#include "brik/density.hpp"
#include "oracle.hpp"

using namespace brik;

namespace {

// 100-digit expansion of alpha, computed independently from 2^21 symbols of b
// with Python's decimal module; the enclosure width there is 2^-(2^21 - 1).
const std::string kAlphaDigits =
    "0.6450587849345243052734552738687634874067612929859206340351652850108208159443226320201789858209562252";

Rational decimal_value(const std::string& s) {
  const auto dot = s.find('.');
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  // A leading zero would make the parser read octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  BigIndex scale = 1;
  for (std::size_t i = dot + 1; i < s.size(); ++i) scale *= 10;
  return Rational(BigIndex(digits), scale);
}

// sum_{i<=k} b_i 2^-i by direct summation over the string oracle.
Rational naive_beta_lower(std::uint64_t k) {
  const std::string b = oracle::prefix(k);
  Rational sum = 0;
  Rational weight(1, 2);
  for (char c : b) {
    if (c == '1') sum += weight;
    weight /= 2;
  }
  return sum;
}

}  // namespace

TEST_CASE("ones_prefix_count", "[density]") {
  CHECK(ones_prefix_count(3) == 2);
  CHECK(ones_prefix_count(8) == 5);
  CHECK(ones_prefix_count(13) == 8);
}

TEST_CASE("CountTable matches direct counting", "[density]") {
  const std::string b = oracle::prefix(20'000);
  const CountTable table(20'000);
  std::uint64_t running = 0;
  CHECK(table.ones(0) == 0);
  for (std::uint64_t n = 1; n <= 20'000; ++n) {
    running += b[n - 1] == '1';
    REQUIRE(table.ones(n) == running);
  }
  CHECK_THROWS_AS(table.ones(20'001), std::out_of_range);
}

TEST_CASE("block_ones", "[density]") {
  CHECK(block_ones(1) == 2);
  CHECK(block_ones(2) == 3);
  CHECK(block_ones(3) == 5);
  for (std::uint64_t n = 1; n <= 22; ++n) REQUIRE(block_ones(n) == oracle::ones(oracle::block(n)));
  Options opts;
  opts.block_cap = 5;
  CHECK_THROWS_AS(block_ones(6, opts), CapExceeded);
}

TEST_CASE("beta_bounds", "[density]") {
  const DensityInterval b1 = beta_bounds(1);
  CHECK(b1.lower == Rational(1, 2));
  CHECK(b1.upper == 1);
  CHECK(b1.lower_closed);
  CHECK_FALSE(b1.upper_closed);
  const DensityInterval b3 = beta_bounds(3);
  CHECK(b3.lower == Rational(5, 8));
  CHECK(b3.upper == Rational(6, 8));

  const DensityInterval b60 = beta_bounds(60);
  CHECK(b60.width() == Rational(BigIndex(1), pow2(60)));
  // beta = 1 - alpha/2 ~ 0.67747060753274 to 14 digits.
  const Rational target = decimal_value("0.67747060753274");
  const Rational tol(BigIndex(1), BigIndex("100000000000000"));
  CHECK(abs(b60.lower - target) < tol);
  CHECK(b60.contains(1 - decimal_value(kAlphaDigits) / 2));
}

TEST_CASE("beta_bounds agrees with direct summation", "[density]") {
  for (std::uint64_t k : {1u, 2u, 7u, 64u, 65u, 200u, 1000u}) REQUIRE(beta_bounds(k).lower == naive_beta_lower(k));
}

TEST_CASE("alpha_bounds", "[density]") {
  const DensityInterval a1 = alpha_bounds(1);
  CHECK(a1.lower == 0);
  CHECK(a1.upper == 1);
  CHECK_FALSE(a1.lower_closed);
  CHECK(a1.upper_closed);

  const DensityInterval a60 = alpha_bounds(60);
  CHECK(a60.width() == Rational(BigIndex(1), pow2(59)));
  CHECK(pinned_decimal(a60).digits.rfind("0.64505878493452", 0) == 0);

  const DensityInterval a64 = alpha_bounds(64);
  CHECK(a64.width() <= Rational(BigIndex(1), pow2(63)));
  CHECK(a64.contains(decimal_value(kAlphaDigits)));
  // The 14-digit value is a truncation: alpha lies in [0.64505878493452, 0.64505878493453).
  CHECK(a64.lower >= decimal_value("0.64505878493452"));
  CHECK(a64.upper < decimal_value("0.64505878493453"));

  const DensityInterval a200 = alpha_bounds(200);
  CHECK(a200.width() == Rational(BigIndex(1), pow2(199)));
  const PinnedDecimal p = pinned_decimal(a200);
  CHECK(p.fractional_digits >= 55);
  CHECK(kAlphaDigits.rfind(p.digits, 0) == 0);
}

TEST_CASE("alpha enclosures are nested", "[density][property]") {
  DensityInterval prev = alpha_bounds(1);
  for (std::uint64_t k = 2; k <= 200; ++k) {
    const DensityInterval cur = alpha_bounds(k);
    REQUIRE(cur.inside(prev));
    REQUIRE(cur.width() <= Rational(BigIndex(1), pow2(k - 1)));
    prev = cur;
  }
}

TEST_CASE("pinned_decimal prints only fixed digits", "[density]") {
  CHECK(pinned_decimal(alpha_bounds(1)).digits.empty());
  CHECK(pinned_decimal(alpha_bounds(1)).text() == "…");
  CHECK(pinned_decimal(alpha_bounds(64)).text().rfind("0.64505878493452", 0) == 0);
  CHECK(pinned_decimal(alpha_bounds(64)).text().ends_with("…"));

  DensityInterval half_open{Rational(25, 100), Rational(26, 100), 0, true, false};
  CHECK(pinned_decimal(half_open).digits == "0.25");
  DensityInterval closed_top{Rational(25, 100), Rational(26, 100), 0, false, true};
  CHECK(pinned_decimal(closed_top).digits == "0.2");
}

TEST_CASE("alpha_block_estimate", "[density]") {
  CHECK(alpha_block_estimate(1) == Rational(2, 3));
  CHECK(alpha_block_estimate(3) == Rational(5, 8));
  const Rational est = alpha_block_estimate(25);
  CHECK(abs(est - decimal_value("0.64505878493452")) < Rational(1, 100000));
}

TEST_CASE("block estimates converge like 2n / l_n", "[density]") {
  const DensityInterval a = alpha_bounds(60);
  for (std::uint64_t n = 15; n <= 25; ++n) {
    const Rational est = alpha_block_estimate(n);
    const Rational slack(BigIndex(2 * n), BigIndex(block_length_u64(n)));
    REQUIRE(est >= a.lower - slack);
    REQUIRE(est <= a.upper + slack);
  }
}

TEST_CASE("count_identity_check", "[density]") {
  CHECK(count_identity_check(2, 0));
  CHECK(count_identity_check(3, 5));
  CHECK(count_identity_check(10, 300));
  CHECK_THROWS_AS(count_identity_check(3, 6), DomainError);
  CHECK_THROWS_AS(count_identity_check(1, 0), DomainError);
}

TEST_CASE("count identity over every valid t for n <= 15", "[density]") {
  const CountTable table(2 * block_length_u64(15));
  const std::string b = oracle::prefix(2 * block_length_u64(15));
  for (std::uint64_t n = 2; n <= 15; ++n) {
    for (std::uint64_t t = 0; t <= block_length_u64(n) - n; ++t) REQUIRE(count_identity_check(table, n, t));
  }
  // The frozen n = 3, t = 5 instance from direct counts: a(13) = 8, s(3) = 5, a(8) = 5, a(3) = 2.
  CHECK(oracle::ones(b.substr(0, 13)) == 8);
  CHECK(oracle::ones(b.substr(0, 8)) == 5);
  CHECK(oracle::ones(b.substr(0, 3)) == 2);
}

TEST_CASE("a(N) - a(N-1) = b[N]", "[density]") {
  const CountTable table(100'000);
  for (std::uint64_t n = 1; n <= 100'000; ++n)
    REQUIRE(table.ones(n) - table.ones(n - 1) == static_cast<std::uint64_t>(bit_at(n)));
}

TEST_CASE("error term enclosures", "[density]") {
  const CountTable table(100);
  const std::vector<std::uint64_t> pts{1, 21};
  const auto samples = error_profile(table, pts, 64);
  REQUIRE(samples.size() == 2);
  const Rational alpha = decimal_value(kAlphaDigits);

  CHECK(samples[0].ones == 1);
  CHECK(samples[0].lower <= 1 - alpha);
  CHECK(samples[0].upper >= 1 - alpha);
  CHECK(abs(samples[0].lower - decimal_value("0.355")) < Rational(1, 1000));

  CHECK(samples[1].ones == 13);
  CHECK(samples[1].upper - samples[1].lower < 1);
  CHECK(samples[1].lower <= 13 - 21 * alpha);
  CHECK(samples[1].upper >= 13 - 21 * alpha);
  CHECK(abs(samples[1].lower + decimal_value("0.546")) < Rational(1, 1000));

  CHECK_THROWS_AS(error_profile(1000, 10), PrecisionError);
  CHECK_NOTHROW(error_profile(1000, 12));
}

TEST_CASE("|E(l_n)| <= 2n for n <= 20", "[density]") {
  const CountTable table(block_length_u64(20));
  for (std::uint64_t n = 1; n <= 20; ++n) {
    const ErrorSample s = error_sample(table, block_length_u64(n), alpha_bounds(64));
    REQUIRE(s.magnitude() <= 2 * n);
  }
}

TEST_CASE("relative error sweep", "[density]") {
  const CountTable table(1'000'000);
  const RelativeErrorMax from_one = max_relative_error(table, 1, 1'000'000, 64);
  // N = 1 dominates: |E(1)| = 1 - alpha.
  CHECK(from_one.at == 1);
  CHECK(from_one.bound > Rational(35, 100));
  const RelativeErrorMax tail = max_relative_error(table, 1000, 1'000'000, 64);
  CHECK(tail.bound < Rational(2, 1000));
  CHECK_THROWS_AS(max_relative_error(table, 1, 1'000'000, 20), PrecisionError);
}
