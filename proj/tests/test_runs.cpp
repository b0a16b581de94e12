#include <catch2/catch_amalgamated.hpp>

#include "brik/runs.hpp"
#include "oracle.hpp"

using namespace brik;

TEST_CASE("run_start", "[runs]") {
  CHECK(run_start(1).start == 1);
  CHECK(run_start(2).start == 5);
  CHECK(run_start(3).start == 13);
  CHECK(run_start(4).start == 2061);
  CHECK(run_start(5).start == pow2(2059) + 2061);
  CHECK(run_start(5).exact);
  CHECK_THROWS_AS(run_start(0), DomainError);
  try {
    run_start(6);
    FAIL("expected RepresentationError");
  } catch (const RepresentationError& e) {
    CHECK(std::string(e.what()).find("2^2059 bits") != std::string::npos);
  }
}

TEST_CASE("recursion r_{n+1} = 2^(r_n - 2) + r_n", "[runs]") {
  for (std::uint64_t n = 2; n < 5; ++n) {
    const BigIndex r = run_start(n).start;
    REQUIRE(run_start(n + 1).start == pow2(r.convert_to<std::uint64_t>() - 2) + r);
    REQUIRE(run_start(n).start < run_start(n + 1).start);
  }
}

TEST_CASE("verify_run", "[runs]") {
  for (std::uint64_t n = 1; n <= 5; ++n) CHECK(verify_run(n));
  CHECK_THROWS_AS(verify_run(6), RepresentationError);
}

TEST_CASE("scan_first_run", "[runs]") {
  CHECK(*scan_first_run(2, 100).position == 5);
  CHECK(*scan_first_run(4, 10'000).position == 2061);
  const ScanResult miss = scan_first_run(5, 1'000'000);
  CHECK_FALSE(miss.found());
  CHECK(miss.cutoff == 1'000'000);
  // The run must end inside the cutoff.
  CHECK_FALSE(scan_first_run(3, 14).found());
  CHECK(*scan_first_run(3, 15).position == 13);
}

TEST_CASE("scan and recursion agree with the string oracle", "[runs]") {
  const std::string b = oracle::prefix(10'000);
  for (std::uint64_t n = 1; n <= 4; ++n) {
    const auto p = b.find(std::string(n, '1')) + 1;
    REQUIRE(scan_first_run(n, 10'000).position == p);
    REQUIRE(run_start(n).start == p);
  }
}

TEST_CASE("tetration", "[runs]") {
  CHECK(tetration(0) == 1);
  CHECK(tetration(1) == 2);
  CHECK(tetration(3) == 16);
  CHECK(tetration(4) == 65536);
  CHECK(tetration(5) == pow2(65536));
  CHECK_THROWS_AS(tetration(6), RepresentationError);
}

TEST_CASE("tetration lower bound on r_n", "[runs]") {
  CHECK(check_tetration_bound(3));
  CHECK(check_tetration_bound(4));
  CHECK(check_tetration_bound(5));
  CHECK(check_tetration_bound(2));
  CHECK(tetration_bound_is_tight(2));
  CHECK_FALSE(tetration_bound_is_tight(3));
  CHECK_THROWS_AS(check_tetration_bound(6), RepresentationError);
}
