#pragma once

// Command implementations behind the `brik` executable. Each command writes
// to the given stream and returns a process exit code; library errors
// propagate and are mapped by exit_code_for().

#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "brik/brik.hpp"
#include "brik/io.hpp"
#include "brik/verify.hpp"

namespace brik::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResourceCap = 3 };

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const CapExceeded*>(&e)) return kResourceCap;
  return kUsage;
}

enum class Format { text, json, bits, bfile };

inline Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "bits") return Format::bits;
  if (s == "bfile") return Format::bfile;
  throw ParseError("unknown format '" + std::string(s) + "'");
}

namespace detail {
inline void emit(std::ostream& os, std::string_view command, nlohmann::json params, nlohmann::json result) {
  os << output_record(command, std::move(params), std::move(result)).dump() << '\n';
}
inline void require_text_or_json(Format f, std::string_view command) {
  if (f != Format::text && f != Format::json)
    throw ParseError(std::string(command) + ": format must be text or json");
}
}  // namespace detail

inline int cmd_generate(std::ostream& os, std::uint64_t length, Format format, Offset offset,
                        const Options& opts = {}) {
  const Word w = prefix(length, opts);
  switch (format) {
    case Format::bits:
    case Format::text:
      os << w << '\n';
      break;
    case Format::bfile:
      os << to_bfile(w, offset);
      break;
    case Format::json:
      detail::emit(os, "generate", {{"length", length}, {"offset", to_string(offset)}}, w.to_string());
      break;
  }
  return kOk;
}

inline int cmd_bit(std::ostream& os, std::string_view position, Format format, const Options& opts = {}) {
  detail::require_text_or_json(format, "bit");
  const BigIndex pos = parse_position(position);
  const TracedBit tb = bit_at_traced(pos, opts);
  if (format == Format::json) {
    detail::emit(os, "bit", {{"position", pos.str()}}, {{"bit", tb.bit}, {"steps", tb.steps}});
  } else {
    os << tb.bit << '\n' << "steps: " << tb.steps << '\n';
  }
  return kOk;
}

inline int cmd_window(std::ostream& os, std::string_view position, std::uint64_t length, Format format,
                      const Options& opts = {}) {
  detail::require_text_or_json(format, "window");
  const BigIndex pos = parse_position(position);
  const Word w = window(pos, length, opts);
  if (format == Format::json)
    detail::emit(os, "window", {{"position", pos.str()}, {"length", length}}, w.to_string());
  else
    os << w << '\n';
  return kOk;
}

inline nlohmann::json density_report(const DensityInterval& alpha) {
  return {{"bits", alpha.bits},
          {"alpha_lower", to_string(alpha.lower)},
          {"alpha_upper", to_string(alpha.upper)},
          {"pinned_decimal", pinned_decimal(alpha).text()}};
}

inline int cmd_density(std::ostream& os, std::uint64_t bits, std::optional<std::uint64_t> empirical,
                       Format format, const Options& opts = {}) {
  detail::require_text_or_json(format, "density");
  const DensityInterval alpha = alpha_bounds(bits, opts);
  const PinnedDecimal pinned = pinned_decimal(alpha);
  std::optional<Rational> ratio;
  std::uint64_t ones = 0;
  if (empirical) {
    ones = ones_prefix_count(*empirical, opts);
    ratio = Rational(BigIndex(ones), BigIndex(*empirical));
  }
  if (format == Format::json) {
    nlohmann::json params = {{"bits", bits}};
    nlohmann::json result = density_report(alpha);
    if (empirical) {
      params["empirical"] = *empirical;
      result["empirical_ones"] = ones;
      result["empirical_ratio"] = to_string(*ratio);
    }
    detail::emit(os, "density", std::move(params), std::move(result));
    return kOk;
  }
  os << "alpha = " << pinned.text() << '\n'
     << "pinned digits: " << pinned.fractional_digits << '\n'
     << "bits: " << bits << '\n'
     << "interval: (" << to_string(alpha.lower) << ", " << to_string(alpha.upper) << "]\n"
     << "width: 2^-" << (bits - 1) << '\n';
  if (empirical) {
    os << "a(" << *empirical << ") = " << ones << '\n'
       << "a(N)/N ~ " << approximate(*ratio, 12) << '\n'
       << "a(N)/N - midpoint ~ " << approximate(*ratio - alpha.midpoint(), 12) << '\n';
  }
  return kOk;
}

inline int cmd_verify(std::ostream& os, Suite suite, const Options& opts = {}) {
  const VerifyReport report = run_verify(suite, opts, &os);
  os << (report.passed() ? "all checks passed" : std::to_string(report.failures()) + " check(s) failed") << " ("
     << report.results.size() << " run)\n";
  return report.passed() ? kOk : kCheckFailed;
}

inline int cmd_block(std::ostream& os, std::uint64_t i, Format format, const Options& opts = {}) {
  detail::require_text_or_json(format, "block");
  const Word w = build_block(i, opts);
  if (format == Format::json)
    detail::emit(os, "block", {{"index", i}}, {{"length", w.size()}, {"word", w.to_string()}});
  else
    os << "B_" << i << " (length " << w.size() << "): " << w << '\n';
  return kOk;
}

inline int cmd_runs(std::ostream& os, std::uint64_t n, std::uint64_t scan_limit, Format format,
                    const Options& opts = {}) {
  detail::require_text_or_json(format, "runs");
  const RunRecord rec = run_start(n);
  const bool verified = verify_run(n, opts);
  const ScanResult scan = scan_first_run(n, scan_limit, opts);
  const bool scan_consistent = scan.found() ? BigIndex(*scan.position) == rec.start : rec.start + n - 1 > scan_limit;
  std::optional<bool> bound, tight;
  if (n >= 2) {
    bound = check_tetration_bound(n);
    tight = tetration_bound_is_tight(n);
  }
  const bool good = verified && scan_consistent && bound.value_or(true);

  if (format == Format::json) {
    nlohmann::json result = {{"start", rec.start.str()},
                             {"exact", rec.exact},
                             {"verified", verified},
                             {"scan", scan.found() ? nlohmann::json(*scan.position) : nlohmann::json(nullptr)},
                             {"scan_consistent", scan_consistent}};
    if (bound) {
      result["tetration_bound"] = *bound;
      result["tetration_bound_equality"] = *tight;
    }
    detail::emit(os, "runs", {{"n", n}, {"scan_limit", scan_limit}}, std::move(result));
  } else {
    os << "r_" << n << " = " << to_pretty_string(rec.start) << '\n'
       << "verified: " << (verified ? "yes" : "no") << '\n'
       << "scan up to " << scan_limit << ": "
       << (scan.found() ? std::to_string(*scan.position) : std::string("not found")) << '\n';
    if (bound) {
      os << "r_" << n << " >= 2^^" << (n - 1) << " + 3: " << (*bound ? "holds" : "FAILS")
         << (*tight ? " (with equality)" : "") << '\n';
    }
  }
  return good ? kOk : kCheckFailed;
}

inline int cmd_factors(std::ostream& os, std::uint64_t n, std::optional<std::uint64_t> scan_length, Format format,
                       const Options& opts = {}) {
  detail::require_text_or_json(format, "factors");
  const FactorSet admissible = enumerate_admissible(n);
  const BigIndex count = complexity(n);
  std::optional<RecurrenceGapReport> gap;
  if (scan_length) gap = recurrence_gap_report(*scan_length, n, opts);

  constexpr std::size_t kListLimit = 64;
  if (format == Format::json) {
    nlohmann::json params = {{"n", n}};
    nlohmann::json result = {{"complexity", count.str()}};
    nlohmann::json members = nlohmann::json::array();
    for (const Word& w : admissible.members()) members.push_back(w.to_string());
    result["admissible"] = std::move(members);
    if (gap) {
      params["scan_length"] = *scan_length;
      nlohmann::json missing = nlohmann::json::array();
      for (const Word& w : gap->missing) missing.push_back(w.to_string());
      result["scanned"] = gap->scanned;
      result["missing"] = std::move(missing);
    }
    detail::emit(os, "factors", std::move(params), std::move(result));
    return kOk;
  }
  os << "complexity(" << n << ") = F_" << (n + 2) << " = " << count << '\n';
  if (admissible.size() <= kListLimit) {
    os << "admissible:";
    for (const Word& w : admissible.members()) os << ' ' << w;
    os << '\n';
  }
  if (gap) {
    os << "distinct in b[1.." << gap->scan_length << "]: " << gap->scanned << '\n';
    if (!gap->missing.empty()) {
      os << "missing (non-uniform recurrence witness): " << gap->missing.size();
      if (gap->missing.size() <= kListLimit) {
        os << " ->";
        for (const Word& w : gap->missing) os << ' ' << w;
      }
      os << '\n';
    }
  }
  return kOk;
}

inline int cmd_good(std::ostream& os, std::uint64_t max_index, Format format, const Options& opts = {}) {
  detail::require_text_or_json(format, "good");
  const auto good = good_indices(max_index, opts);
  if (format == Format::json) {
    detail::emit(os, "good", {{"max", max_index}}, good);
  } else {
    os << "good indices <= " << max_index << ':';
    for (auto i : good) os << ' ' << i;
    os << '\n';
  }
  return kOk;
}

inline int cmd_witness(std::ostream& os, std::uint64_t n, Format format, const Options& opts = {}) {
  detail::require_text_or_json(format, "witness");
  const WitnessRecord w = witness(n, opts);
  if (format == Format::json) {
    detail::emit(os, "witness", {{"n", n}},
                 {{"u", w.u.to_string()},
                  {"v", w.v.to_string()},
                  {"u_length", w.u.size()},
                  {"v_length", w.v.size()},
                  {"ratio", to_string(w.ratio)},
                  {"prefix_ok", w.prefix_ok}});
  } else {
    constexpr std::uint64_t kShow = 200;
    os << "u = " << (w.u.size() <= kShow ? w.u.to_string() : "(" + std::to_string(w.u.size()) + " symbols)") << '\n'
       << "v = " << (w.v.size() <= kShow ? w.v.to_string() : "(" + std::to_string(w.v.size()) + " symbols)") << '\n'
       << "|u|/|v| = " << to_string(w.ratio) << '\n'
       << "u v v = B_" << (n + 1) << ": " << (w.prefix_ok ? "yes" : "no") << '\n';
  }
  return w.prefix_ok ? kOk : kCheckFailed;
}

inline int cmd_chain(std::ostream& os, std::uint64_t k, Format format, const Options& opts = {}) {
  detail::require_text_or_json(format, "chain");
  const auto chain = good_chain(k);
  std::vector<bool> good;
  for (const BigIndex& q : chain) {
    const auto small = to_u64(q);
    good.push_back(small && *small <= kMaxGoodIndex ? is_good(*small, opts) : false);
  }
  if (format == Format::json) {
    nlohmann::json items = nlohmann::json::array();
    for (std::size_t j = 0; j < chain.size(); ++j) {
      const auto small = to_u64(chain[j]);
      items.push_back({{"q", chain[j].str()},
                       {"good", small && *small <= kMaxGoodIndex ? nlohmann::json(good[j]) : nlohmann::json(nullptr)}});
    }
    detail::emit(os, "chain", {{"k", k}}, std::move(items));
  } else {
    for (std::size_t j = 0; j < chain.size(); ++j) {
      const auto small = to_u64(chain[j]);
      os << "q_" << j << " = " << to_pretty_string(chain[j]);
      if (small && *small <= kMaxGoodIndex) os << (good[j] ? "  good" : "  NOT good");
      os << '\n';
    }
  }
  return kOk;
}

}  // namespace brik::cli
