// brik: command-line front end for the brik library.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "brik/cli.hpp"

namespace {

std::array<int, 3> parse_seed(const std::string& s) {
  if (s.size() != 3 || s.find_first_not_of("01") != std::string::npos)
    throw brik::ParseError("--seed must be three binary symbols, got '" + s + "'");
  return {s[0] - '0', s[1] - '0', s[2] - '0'};
}

}  // namespace

int main(int argc, char** argv) {
  using namespace brik;
  CLI::App app{"Blocks, random access, factors, runs and density of the sequence b = 10101101..."};
  app.require_subcommand(1);

  Options opts;
  std::string seed = "101";
  std::uint64_t scan_limit = 1'000'000;
  std::string format_name;
  app.add_option("--cap-block", opts.block_cap, "Largest block index to materialize")->capture_default_str();
  app.add_option("--cap-window", opts.window_cap, "Longest big-access window, in symbols")->capture_default_str();
  app.add_option("--cap-memory", opts.memory_cap, "Longest materialized prefix, in symbols")->capture_default_str();
  app.add_option("--scan-limit", scan_limit, "Prefix length scanned by runs")->capture_default_str();
  app.add_option("--seed", seed, "Replacement for B_1 (negative controls only)")->group("");

  auto* generate = app.add_subcommand("generate", "Print b[1..length]");
  std::uint64_t gen_length = 0;
  std::string gen_format = "bits", offset_name = "full";
  generate->add_option("length,--length", gen_length, "Number of symbols")->required();
  generate->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"bits", "bfile", "json"}));
  generate->add_option("--offset", offset_name, "b-file index convention")->check(CLI::IsMember({"full", "oeis"}));

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* bit = app.add_subcommand("bit", "Print b[N] and the number of reduction steps");
  std::string position;
  bit->add_option("position,--position", position, "Decimal or sum of 2^k terms, e.g. 2^2059+2061")->required();
  add_format(bit);

  auto* win = app.add_subcommand("window", "Print b[N .. N+len-1]");
  std::uint64_t win_length = 1;
  win->add_option("position,--position", position, "Start position")->required();
  win->add_option("length,--length", win_length, "Number of symbols")->required();
  add_format(win);

  auto* density = app.add_subcommand("density", "Rigorous enclosure of the density of 1's");
  std::uint64_t bits = 64;
  std::optional<std::uint64_t> empirical;
  density->add_option("--bits", bits, "Number of symbols of b used")->capture_default_str();
  density->add_option("--empirical", empirical, "Also report a(N)/N for this N");
  add_format(density);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  std::string suite_name = "fast";
  verify->add_option("--suite", suite_name, "fast or full")->check(CLI::IsMember({"fast", "full"}));

  auto* block = app.add_subcommand("block", "Print B_i");
  std::uint64_t index = 1;
  block->add_option("index,--index", index, "Block index")->required();
  add_format(block);

  auto* runs = app.add_subcommand("runs", "First occurrence of 1^n");
  std::uint64_t n = 1;
  runs->add_option("n,--n", n, "Run length (1..5)")->required();
  add_format(runs);

  auto* factors = app.add_subcommand("factors", "Factor complexity and scanned factor sets");
  std::optional<std::uint64_t> factor_scan;
  factors->add_option("n,--n", n, "Factor length (1..25)")->required();
  factors->add_option("--length", factor_scan, "Scan b[1..L] and report missing factors");
  add_format(factors);

  auto* good = app.add_subcommand("good", "Good indices up to a bound");
  std::uint64_t max_index = 200;
  good->add_option("max,--max", max_index, "Largest index tested")->capture_default_str();
  add_format(good);

  auto* wit = app.add_subcommand("witness", "Decomposition B_{n+1} = u v v");
  wit->add_option("n,--n", n, "n >= 1")->required();
  add_format(wit);

  auto* chain = app.add_subcommand("chain", "The chain q_0 = 1, q_{i+1} = l_{q_i}");
  std::uint64_t k = 4;
  chain->add_option("k,--k", k, "Last chain index (<= 4)")->capture_default_str();
  add_format(chain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  try {
    opts.seed = parse_seed(seed);
    const cli::Format format = format_name.empty() ? cli::Format::text : cli::parse_format(format_name);
    std::ostream& os = std::cout;
    if (*generate) return cli::cmd_generate(os, gen_length, cli::parse_format(gen_format), parse_offset(offset_name), opts);
    if (*bit) return cli::cmd_bit(os, position, format, opts);
    if (*win) return cli::cmd_window(os, position, win_length, format, opts);
    if (*density) return cli::cmd_density(os, bits, empirical, format, opts);
    if (*verify) return cli::cmd_verify(os, suite_name == "full" ? Suite::full : Suite::fast, opts);
    if (*block) return cli::cmd_block(os, index, format, opts);
    if (*runs) return cli::cmd_runs(os, n, scan_limit, format, opts);
    if (*factors) return cli::cmd_factors(os, n, factor_scan, format, opts);
    if (*good) return cli::cmd_good(os, max_index, format, opts);
    if (*wit) return cli::cmd_witness(os, n, format, opts);
    if (*chain) return cli::cmd_chain(os, k, format, opts);
  } catch (const std::exception& e) {
    std::cerr << "brik: " << e.what() << '\n';
    return cli::exit_code_for(e);
  }
  return cli::kUsage;
}
