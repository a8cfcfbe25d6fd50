// gapmatch command line: scan texts against a gapped-pattern dictionary,
// inspect index statistics, run the randomized self-test or a benchmark.
//
// Exit codes: 0 success, 2 input/validation error, 3 I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gapmatch/engine.hpp"
#include "gapmatch/generator.hpp"
#include "gapmatch/marking.hpp"
#include "gapmatch/oracle.hpp"
#include "gapmatch/selftest.hpp"

namespace {

using namespace gapmatch;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    if (std::cin.bad()) throw IoError("failed to read standard input");
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed to read '" + path + "'");
  return buf.str();
}

Dictionary load_dictionary(const std::string& path) {
  const std::string data = read_file(path);
  try {
    return parse_dictionary(data);
  } catch (const ParseError& e) {
    throw ParseError(e.line, std::string(path == "-" ? "dictionary" : path) + ": " + e.what());
  }
}

int cmd_scan(const std::string& dict_path, const std::string& text_path, const std::string& engine,
             bool chunked, bool all_gaps, bool one_based, const std::string& format) {
  if (engine == "oracle" && chunked) {
    std::cerr << "error: --chunked is not available with --engine oracle (oracle is whole-text only)\n";
    return 2;
  }
  const Dictionary dict = load_dictionary(dict_path);
  const std::string text_bytes = read_file(text_path);
  const QueryText text = QueryText::from(text_bytes);

  ScanOptions opts;
  opts.all_gaps = all_gaps;
  std::vector<Occurrence> occs;
  if (engine == "oracle") {
    occs = naive_scan(dict, text, all_gaps);
  } else {
    BuildOptions build;
    build.build_grid = engine == "grid";
    build.build_lookup = engine == "lookup";
    const MatchIndex index = build_index(dict, build);
    const Backend backend = engine == "grid" ? Backend::Grid : Backend::Lookup;
    occs = chunked ? scan_chunked(index, text, backend, opts) : scan(index, text, backend, opts);
  }

  std::string out;
  for (const Occurrence& o : occs) {
    out += format == "jsonl" ? format_jsonl(o, one_based) : format_tsv(o, one_based);
    out += '\n';
  }
  std::cout << out;
  return 0;
}

int cmd_stats(const std::string& dict_path) {
  const Dictionary dict = load_dictionary(dict_path);
  const MatchIndex index = build_index(dict);

  std::ostringstream out;
  out << "d: " << dict.d() << "\n";
  out << "original_patterns: " << dict.original_count << "\n";
  out << "alpha: " << dict.bounds.alpha << "\n";
  out << "beta: " << dict.bounds.beta << "\n";
  out << "total_len: " << dict.total_len << "\n";
  out << "min_p1: " << dict.min_p1 << "\n";
  out << "max_span: " << dict.max_span << "\n";
  out << "tree_s_nodes: " << index.tree_s.node_count() << "\n";
  out << "tree_fr_nodes: " << index.tree_fr.node_count() << "\n";
  out << "tree_s_marked: " << index.vp_s.count << "\n";
  out << "tree_fr_marked: " << index.vp_fr.count << "\n";
  out << "tree_s_vertical_paths: " << index.decomp_s.path_count() << "\n";
  out << "tree_fr_vertical_paths: " << index.decomp_fr.path_count() << "\n";
  out << "tree_s_max_crossings: " << max_root_path_crossings(index.tree_s, index.decomp_s) << "\n";
  out << "tree_fr_max_crossings: " << max_root_path_crossings(index.tree_fr, index.decomp_fr) << "\n";
  out << "inter_rows: " << index.inter->rows() << "\n";
  out << "inter_cols: " << index.inter->cols() << "\n";
  out << "inter_fill_ops: " << index.inter->fill_ops() << "\n";
  std::cout << out.str();
  return 0;
}

int cmd_bench(uint64_t seed, int32_t d, int64_t n, int32_t sigma, int32_t max_len, int32_t alpha,
              int32_t beta) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int32_t> len_dist(1, max_len);
  std::uniform_int_distribution<int32_t> sym(0, sigma - 1);
  auto rand_str = [&](int32_t len) {
    std::string s(static_cast<size_t>(len), 'a');
    for (auto& c : s) c = static_cast<char>('a' + sym(rng));
    return s;
  };
  std::string dict_text = std::to_string(alpha) + " " + std::to_string(beta) + "\n";
  for (int32_t i = 0; i < d; ++i) dict_text += rand_str(len_dist(rng)) + "\t" + rand_str(len_dist(rng)) + "\n";
  const Dictionary dict = parse_dictionary(dict_text);
  std::string text_bytes(static_cast<size_t>(n), 'a');
  for (auto& c : text_bytes) c = static_cast<char>('a' + sym(rng));
  const QueryText text = QueryText::from(text_bytes);

  std::cout << "bench: seed=" << seed << " d=" << dict.d() << " total_len=" << dict.total_len
            << " n=" << n << " sigma=" << sigma << " alpha=" << alpha << " beta=" << beta << "\n";

  auto t0 = clock::now();
  const MatchIndex grid_index = build_index(dict, {.build_grid = true, .build_lookup = false});
  std::cout << "build_grid_ms: " << ms_since(t0) << "\n";
  t0 = clock::now();
  const MatchIndex lookup_index = build_index(dict, {.build_grid = false, .build_lookup = true});
  std::cout << "build_lookup_ms: " << ms_since(t0) << "\n";

  auto throughput = [&](double ms) { return ms > 0 ? static_cast<double>(n) / (ms / 1000.0) : 0.0; };
  t0 = clock::now();
  auto grid_occs = scan(grid_index, text, Backend::Grid);
  const double grid_ms = ms_since(t0);
  std::cout << "scan_grid_ms: " << grid_ms << " sym_per_s: " << throughput(grid_ms)
            << " occ: " << grid_occs.size() << "\n";
  t0 = clock::now();
  auto lookup_occs = scan(lookup_index, text, Backend::Lookup);
  const double lookup_ms = ms_since(t0);
  std::cout << "scan_lookup_ms: " << lookup_ms << " sym_per_s: " << throughput(lookup_ms)
            << " occ: " << lookup_occs.size() << "\n";
  t0 = clock::now();
  auto oracle_occs = naive_scan(dict, text);
  const double oracle_ms = ms_since(t0);
  std::cout << "scan_oracle_ms: " << oracle_ms << " sym_per_s: " << throughput(oracle_ms)
            << " occ: " << oracle_occs.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gapmatch: dictionary matching with a single bounded gap"};
  app.require_subcommand(1);

  std::string dict_path, text_path;
  std::string engine = "grid", format = "tsv";
  bool chunked = false, all_gaps = false, one_based = false;
  auto* scan_cmd = app.add_subcommand("scan", "report every dictionary pattern ending in a text");
  scan_cmd->add_option("--dict", dict_path, "dictionary file")->required();
  scan_cmd->add_option("--text", text_path, "text file, or '-' for standard input")->required();
  scan_cmd->add_option("--engine", engine, "grid|lookup|oracle (default grid)")
      ->check(CLI::IsMember({"grid", "lookup", "oracle"}));
  scan_cmd->add_flag("--chunked", chunked, "scan in staggered windows of twice the max span");
  scan_cmd->add_flag("--all-gaps", all_gaps, "report every qualifying gap, not just the smallest");
  scan_cmd->add_flag("--one-based", one_based, "print 1-based positions");
  scan_cmd->add_option("--format", format, "tsv|jsonl (default tsv)")
      ->check(CLI::IsMember({"tsv", "jsonl"}));

  std::string stats_dict;
  auto* stats_cmd = app.add_subcommand("stats", "print index statistics for a dictionary");
  stats_cmd->add_option("--dict", stats_dict, "dictionary file")->required();

  uint64_t st_seed = 42;
  int64_t st_trials = 100;
  bool inject_fault = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "randomized differential check of all engines");
  selftest_cmd->add_option("--seed", st_seed, "base seed (default 42)");
  selftest_cmd->add_option("--trials", st_trials, "number of random instances (default 100)");
  selftest_cmd->add_flag("--inject-fault", inject_fault)->group("");  // test hook, hidden

  uint64_t b_seed = 1;
  int32_t b_d = 256, b_sigma = 4, b_max_len = 8, b_alpha = 1, b_beta = 4;
  int64_t b_n = 200000;
  auto* bench_cmd = app.add_subcommand("bench", "build and scan timing on a seeded random instance");
  bench_cmd->add_option("--seed", b_seed, "seed (default 1)");
  bench_cmd->add_option("--d", b_d, "dictionary size (default 256)");
  bench_cmd->add_option("--n", b_n, "text length (default 200000)");
  bench_cmd->add_option("--sigma", b_sigma, "alphabet size (default 4)");
  bench_cmd->add_option("--max-len", b_max_len, "max subpattern length (default 8)");
  bench_cmd->add_option("--alpha", b_alpha, "gap lower bound (default 1)");
  bench_cmd->add_option("--beta", b_beta, "gap upper bound (default 4)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (scan_cmd->parsed())
      return cmd_scan(dict_path, text_path, engine, chunked, all_gaps, one_based, format);
    if (stats_cmd->parsed()) return cmd_stats(stats_dict);
    if (selftest_cmd->parsed()) {
      SelftestOptions opts;
      opts.seed = st_seed;
      opts.trials = st_trials;
      opts.inject_fault = inject_fault;
      return run_selftest(opts, std::cout);
    }
    if (bench_cmd->parsed()) return cmd_bench(b_seed, b_d, b_n, b_sigma, b_max_len, b_alpha, b_beta);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
