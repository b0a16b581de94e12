#pragma once

// Self-check suites: every module invariant, runnable from the CLI.
//
// fast uses reduced sample sizes and stops at the first failure; full runs
// every check at its stated size and reports all failures.

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "brik/access.hpp"
#include "brik/bigint.hpp"
#include "brik/blocks.hpp"
#include "brik/density.hpp"
#include "brik/factors.hpp"
#include "brik/io.hpp"
#include "brik/options.hpp"
#include "brik/runs.hpp"
#include "brik/structure.hpp"
#include "brik/word.hpp"

namespace brik {

enum class Suite { fast, full };

struct CheckResult {
  std::string module;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct VerifyReport {
  std::vector<CheckResult> results;

  bool passed() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.passed ? 0 : 1;
    return n;
  }
};

namespace verify_detail {

struct Outcome {
  bool passed;
  std::string detail;
};

inline Outcome ok(std::string detail = {}) { return {true, std::move(detail)}; }
inline Outcome fail(std::string detail) { return {false, std::move(detail)}; }

struct Check {
  const char* module;
  const char* name;
  std::function<Outcome()> run;
};

// Reference words displayed with the original construction.
inline constexpr const char* kTable[] = {"101", "10101", "10101101", "1010110101101",
                                         "1010110101101110101101"};
inline constexpr const char* kPrefix72 =
    "101011010110111010110110101101110101101010110111010110110101101110101101";

inline BigIndex random_position(std::mt19937_64& rng, unsigned max_bits) {
  std::uniform_int_distribution<unsigned> bits_dist(3, max_bits);
  const unsigned bits = bits_dist(rng);
  BigIndex v = 0;
  for (unsigned produced = 0; produced < bits; produced += 64) v = (v << 64) | BigIndex(rng());
  v &= pow2(bits) - 1;
  boost::multiprecision::bit_set(v, bits - 1);
  return v;
}

inline std::vector<Check> build_checks(Suite suite, const Options& opts) {
  const bool full = suite == Suite::full;
  std::vector<Check> checks;
  auto add = [&](const char* module, const char* name, std::function<Outcome()> fn) {
    checks.push_back({module, name, std::move(fn)});
  };

  // --- word-core -----------------------------------------------------------
  add("word-core", "blocks B_1..B_5 and b[1..72] match the reference table", [opts] {
    for (std::uint64_t i = 1; i <= 5; ++i)
      if (build_block(i, opts).to_string() != kTable[i - 1])
        return fail("B_" + std::to_string(i) + " = " + build_block(i, opts).to_string());
    if (prefix(72, opts).to_string() != kPrefix72) return fail("b[1..72] = " + prefix(72, opts).to_string());
    return ok();
  });
  add("word-core", "copy rule, lengths and trailing 01 for every block up to the cap", [opts, full] {
    const std::uint64_t top = full ? opts.block_cap : std::min<std::uint64_t>(opts.block_cap, 22);
    Word prev = build_block(1, opts);
    for (std::uint64_t i = 1; i <= top; ++i) {
      if (BigIndex(prev.size()) != block_length(i)) return fail("|B_" + std::to_string(i) + "| != l_i");
      if (prev.size() < 2 || prev[prev.size() - 1] != 0 || prev[prev.size()] != 1)
        return fail("B_" + std::to_string(i) + " does not end in 01");
      if (block_length(i + 1) != 2 * block_length(i) - i) return fail("l_{i+1} != 2 l_i - i at i = " + std::to_string(i));
      if (i == top) break;
      Word next = build_block(i + 1, opts);
      if (next != prev + prev.slice(i + 1, prev.size()))
        return fail("B_" + std::to_string(i + 1) + " != B_i C_i");
      prev = std::move(next);
    }
    return ok("i <= " + std::to_string(top));
  });
  add("word-core", "prefix(N) equals the first N streamed symbols", [opts, full] {
    const std::uint64_t limit = 100'000;
    PrefixStream stream(limit, opts);
    while (!stream.done()) stream.next();
    const Word& streamed = stream.buffer();
    const std::uint64_t step = full ? 1 : 997;
    for (std::uint64_t n = 1; n <= limit; n += step)
      if (prefix(n, opts) != streamed.slice(1, n)) return fail("mismatch at N = " + std::to_string(n));
    if (prefix(limit, opts) != streamed) return fail("mismatch at N = 100000");
    return ok();
  });
  add("word-core", "self-similarity b[l_n + t] = b[n + t] for n in [2,20]", [opts] {
    const Word w = prefix(block_length_u64(21), opts);
    for (std::uint64_t n = 2; n <= 20; ++n) {
      const std::uint64_t len = block_length_u64(n);
      for (std::uint64_t t = 1; t <= len - n; ++t)
        if (w[len + t] != w[n + t]) return fail("n = " + std::to_string(n) + ", t = " + std::to_string(t));
    }
    return ok();
  });

  // --- big-access ----------------------------------------------------------
  add("big-access", "b[reduce_index(N)] = b[N] and bit_at(N) = b[N] for N <= 10^5", [opts] {
    const std::uint64_t limit = 100'000;
    const Word w = prefix(limit, opts);
    for (std::uint64_t n = 1; n <= limit; ++n) {
      if (bit_at(n, opts) != w[n]) return fail("bit_at(" + std::to_string(n) + ")");
      if (n >= 4) {
        const std::uint64_t r = reduce_index(n);
        if (r >= n || w[r] != w[n]) return fail("reduce_index(" + std::to_string(n) + ") = " + std::to_string(r));
      }
    }
    return ok();
  });
  add("big-access", "reduction halves N and finishes within bit-length + 2 steps", [opts, full] {
    std::mt19937_64 rng(20180101);
    const int samples = full ? 400 : 40;
    auto check_one = [&](const BigIndex& n) -> std::string {
      const TracedBit tb = bit_at_traced(n, opts);
      if (tb.steps > bit_length(n) + 2) return "steps " + std::to_string(tb.steps) + " at N = " + to_pretty_string(n);
      if (n >= 4) {
        const BigIndex r = reduce_index(n);
        if (2 * r > n + 2 * bit_length(n)) return "reduce_index(" + to_pretty_string(n) + ") too large";
      }
      return {};
    };
    for (std::uint64_t n = 1; n <= 20'000; ++n)
      if (auto msg = check_one(BigIndex(n)); !msg.empty()) return fail(msg);
    for (int s = 0; s < samples; ++s)
      if (auto msg = check_one(random_position(rng, 3000)); !msg.empty()) return fail(msg);
    return ok();
  });
  add("big-access", "window splits, agrees with bit_at and never contains 00", [opts, full] {
    std::mt19937_64 rng(7);
    const int samples = full ? 300 : 30;
    std::uniform_int_distribution<std::uint64_t> len_dist(1, 200);
    for (int s = 0; s < samples; ++s) {
      const BigIndex n = s % 3 == 0 ? BigIndex(rng() % 1'000'000 + 1) : random_position(rng, 2200);
      const std::uint64_t a = len_dist(rng), b = len_dist(rng);
      const Word whole = window(n, a + b, opts);
      if (whole != window(n, a, opts) + window(n + a, b, opts))
        return fail("window split at N = " + to_pretty_string(n));
      for (std::uint64_t p = 1; p <= whole.size(); ++p) {
        if (whole[p] != bit_at(BigIndex(n + p - 1), opts)) return fail("window vs bit_at at " + to_pretty_string(n));
        if (p > 1 && whole[p] == 0 && whole[p - 1] == 0) return fail("00 in window at " + to_pretty_string(n));
      }
    }
    return ok();
  });

  // --- runs ----------------------------------------------------------------
  add("runs", "scan_first_run(n, 10^4) = r_n for n = 1..4", [opts] {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      const ScanResult r = scan_first_run(n, 10'000, opts);
      if (!r.found() || BigIndex(*r.position) != run_start(n).start) return fail("n = " + std::to_string(n));
    }
    return ok();
  });
  add("runs", "verify_run(n) for n = 1..5", [opts] {
    for (std::uint64_t n = 1; n <= 5; ++n)
      if (!verify_run(n, opts)) return fail("n = " + std::to_string(n));
    return ok();
  });
  add("runs", "r_n >= 2^^(n-1) + 3 for n = 3..5 and r_1 < ... < r_5", [] {
    for (std::uint64_t n = 3; n <= 5; ++n)
      if (!check_tetration_bound(n)) return fail("bound fails at n = " + std::to_string(n));
    for (std::uint64_t n = 1; n < 5; ++n)
      if (!(run_start(n).start < run_start(n + 1).start)) return fail("not increasing at n = " + std::to_string(n));
    return ok(tetration_bound_is_tight(2) ? "n = 2 holds with equality" : "");
  });

  // --- factors -------------------------------------------------------------
  add("factors", "|admissible(n)| = complexity(n) = F_{n+2} for n <= 20", [] {
    for (std::uint64_t n = 1; n <= 20; ++n) {
      const FactorSet set = enumerate_admissible(n);
      if (BigIndex(set.size()) != complexity(n) || complexity(n) != fibonacci(n + 2))
        return fail("n = " + std::to_string(n));
    }
    return ok();
  });
  add("factors", "scanned factors of b[1..6000] equal the admissible words for n <= 4", [opts] {
    for (std::uint64_t n = 1; n <= 4; ++n)
      if (!(scan_factors(6000, n, opts) == enumerate_admissible(n))) return fail("n = " + std::to_string(n));
    return ok();
  });
  add("factors", "scanned sets are admissible subsets", [opts, full] {
    const std::uint64_t lengths[] = {1, 2, 7, 40, 137, 1000, 30'000};
    const std::uint64_t max_n = full ? 16 : 10;
    for (std::uint64_t len : lengths)
      for (std::uint64_t n = 1; n <= std::min(max_n, len); ++n) {
        const FactorSet seen = scan_factors(len, n, opts);
        if (!seen.subset_of(enumerate_admissible(n)))
          return fail("L = " + std::to_string(len) + ", n = " + std::to_string(n));
        for (const Word& w : seen.members())
          if (!is_factor(w)) return fail("non-factor " + w.to_string());
      }
    return ok();
  });
  add("factors", "complexity(20) = 17711 exceeds 4 n^2", [] {
    return complexity(20) == 17711 && complexity(20) > 4 * 20 * 20 ? ok() : fail(complexity(20).str());
  });
  add("factors", "1^5 is the only length-5 factor missing from b[1..10^6]", [opts, full] {
    const std::uint64_t len = full ? 1'000'000 : 100'000;
    const RecurrenceGapReport rep = recurrence_gap_report(len, 5, opts);
    if (rep.admissible != 13 || rep.scanned != 12 || rep.missing.size() != 1 || rep.missing[0].to_string() != "11111")
      return fail("scanned " + std::to_string(rep.scanned) + " of " + std::to_string(rep.admissible));
    return ok("L = " + std::to_string(len));
  });

  // --- structure -----------------------------------------------------------
  add("structure", "good i <= 30 satisfy: B_{i+1} ends with B_i", [opts] {
    std::string good;
    for (std::uint64_t i = 1; i <= 30; ++i) {
      if (!is_good(i, opts)) continue;
      good += std::to_string(i) + " ";
      if (!build_block(i + 1, opts).ends_with(build_block(i, opts))) return fail("i = " + std::to_string(i));
    }
    return ok("good: " + good);
  });
  add("structure", "every element of the chain 1, 3, 8, 137 is good", [opts] {
    for (const BigIndex& q : good_chain(3))
      if (!is_good(q.convert_to<std::uint64_t>(), opts)) return fail("q = " + q.str());
    return ok();
  });
  add("structure", "witness u_n v_n v_n = B_{n+1} with |v_n| = 2^(n-1) + 1 for n <= 18", [opts] {
    for (std::uint64_t n = 1; n <= 18; ++n) {
      const WitnessRecord w = witness(n, opts);
      if (!w.prefix_ok || BigIndex(w.v.size()) != pow2(n - 1) + 1 || w.u.size() != n)
        return fail("n = " + std::to_string(n));
    }
    return ok();
  });
  add("structure", "|u_n|/|v_n| peaks at 2/3 for n = 2, then decreases; |v_n| increases", [] {
    for (std::uint64_t n = 1; n <= 30; ++n) {
      if (n != 2 && witness_ratio(n) >= Rational(2, 3)) return fail("ratio at n = " + std::to_string(n));
      if (n >= 2 && n < 30 && !(witness_ratio(n + 1) < witness_ratio(n))) return fail("not decreasing at " + std::to_string(n));
      if (n < 30 && !(block_length(n + 1) - (n + 1) > block_length(n) - n)) return fail("|v| not increasing at " + std::to_string(n));
    }
    return witness_ratio(2) == Rational(2, 3) ? ok() : fail("ratio(2)");
  });
  add("structure", "every factor of B_3 occurs at least twice in b[1..137]", [opts] {
    const Word b3 = build_block(3, opts);
    for (std::uint64_t i = 1; i <= b3.size(); ++i)
      for (std::uint64_t j = i; j <= b3.size(); ++j)
        if (count_occurrences(b3.slice(i, j), 137, opts) < 2) return fail(b3.slice(i, j).to_string());
    return ok();
  });

  // --- density -------------------------------------------------------------
  add("density", "s(n) recursion equals direct counts for n <= 22", [opts] {
    const CountTable table(block_length_u64(22), opts);
    for (std::uint64_t n = 1; n <= 22; ++n)
      if (table.block_ones(n) != table.ones(block_length_u64(n))) return fail("n = " + std::to_string(n));
    return ok();
  });
  add("density", "a(l_n + t) = s(n) + a(n+t) - a(n) for n <= 15 and all t", [opts] {
    const CountTable table(2 * block_length_u64(15), opts);
    for (std::uint64_t n = 2; n <= 15; ++n)
      for (std::uint64_t t = 0; t <= block_length_u64(n) - n; ++t)
        if (!count_identity_check(table, n, t)) return fail("n = " + std::to_string(n) + ", t = " + std::to_string(t));
    return ok();
  });
  add("density", "alpha enclosures are nested", [opts, full] {
    const std::uint64_t top = full ? 200 : 64;
    DensityInterval prev = alpha_bounds(1, opts);
    for (std::uint64_t k = 2; k <= top; ++k) {
      DensityInterval cur = alpha_bounds(k, opts);
      if (!cur.inside(prev)) return fail("k = " + std::to_string(k));
      if (cur.width() > Rational(BigIndex(1), pow2(k - 1))) return fail("width at k = " + std::to_string(k));
      prev = std::move(cur);
    }
    return ok();
  });
  add("density", "alpha_bounds(64) pins 0.64505878493452 with width <= 2^-63", [opts] {
    const DensityInterval a = alpha_bounds(64, opts);
    if (a.width() > Rational(BigIndex(1), pow2(63))) return fail("width");
    const Rational lo(BigIndex(64505878493452), BigIndex("100000000000000"));
    const Rational hi = lo + Rational(BigIndex(1), BigIndex("100000000000000"));
    if (!(a.lower >= lo && a.upper < hi)) return fail("interval leaves [0.64505878493452, 0.64505878493453)");
    return ok(pinned_decimal(a).text());
  });
  add("density", "s(n)/l_n is within 2n/l_n of alpha for n in [15,25]", [opts] {
    const DensityInterval a = alpha_bounds(60, opts);
    for (std::uint64_t n = 15; n <= 25; ++n) {
      const Rational est = alpha_block_estimate(n, opts);
      const Rational slack(BigIndex(2 * n), BigIndex(block_length_u64(n)));
      if (!(est >= a.lower - slack && est <= a.upper + slack)) return fail("n = " + std::to_string(n));
    }
    return ok();
  });
  add("density", "a(N) - a(N-1) = bit_at(N) for N <= 10^5", [opts] {
    const CountTable table(100'000, opts);
    for (std::uint64_t n = 1; n <= 100'000; ++n)
      if (table.ones(n) - table.ones(n - 1) != static_cast<std::uint64_t>(bit_at(n, opts)))
        return fail("N = " + std::to_string(n));
    return ok();
  });
  add("density", "|E(l_n)| <= 2n for n <= 20", [opts] {
    const CountTable table(block_length_u64(20), opts);
    std::vector<std::uint64_t> pts;
    for (std::uint64_t n = 1; n <= 20; ++n) pts.push_back(block_length_u64(n));
    const auto samples = error_profile(table, pts, 64, opts);
    for (std::uint64_t n = 1; n <= 20; ++n)
      if (samples[n - 1].magnitude() > 2 * n) return fail("n = " + std::to_string(n));
    return ok();
  });

  // --- cli -----------------------------------------------------------------
  add("cli", "b-file output parses back to the prefix under both offsets", [opts] {
    for (std::uint64_t len : {1u, 2u, 5u, 72u, 4096u}) {
      const Word w = prefix(len, opts);
      for (Offset off : {Offset::full, Offset::oeis})
        if (parse_bfile(to_bfile(w, off), off) != w)
          return fail("length " + std::to_string(len) + ", offset " + std::string(to_string(off)));
    }
    return ok();
  });
  add("cli", "JSON records are byte-identical across runs", [opts] {
    auto make = [&] {
      const DensityInterval a = alpha_bounds(64, opts);
      return output_record("density", {{"bits", 64}},
                           {{"bits", 64},
                            {"alpha_lower", to_string(a.lower)},
                            {"alpha_upper", to_string(a.upper)},
                            {"pinned_decimal", pinned_decimal(a).text()}})
          .dump();
    };
    return make() == make() ? ok() : fail("differs");
  });

  return checks;
}

}  // namespace verify_detail

// Runs a suite; log (if non-null) receives one line per check.
inline VerifyReport run_verify(Suite suite, const Options& opts = {}, std::ostream* log = nullptr) {
  VerifyReport report;
  for (auto& check : verify_detail::build_checks(suite, opts)) {
    const auto t0 = std::chrono::steady_clock::now();
    verify_detail::Outcome outcome;
    try {
      outcome = check.run();
    } catch (const std::exception& e) {
      outcome = verify_detail::fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.results.push_back({check.module, check.name, outcome.passed, outcome.detail, secs});
    if (log) {
      *log << (outcome.passed ? "[PASS] " : "[FAIL] ") << check.module << ": " << check.name;
      if (!outcome.detail.empty()) *log << " (" << outcome.detail << ")";
      *log << " [" << static_cast<long long>(secs * 1000) << " ms]\n";
    }
    if (!outcome.passed && suite == Suite::fast) break;
  }
  return report;
}

}  // namespace brik
