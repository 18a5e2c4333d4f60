#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "slpedit/engine.hpp"
#include "slpedit/partition.hpp"
#include "slpedit/scoring.hpp"
#include "slpedit/slp.hpp"

namespace slpedit::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_to(const std::string& path, const std::string& data, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << data;
}

/// One side of a distance query: an SLP file or raw text.
struct Side {
  std::optional<Slp> slp;
  std::string text;

  static Side load(const std::string& path, const std::optional<std::string>& raw, const char* name) {
    Side s;
    if (raw) {
      s.text = *raw;
    } else if (!path.empty()) {
      s.slp = parse_slp(read_file(path));
      s.text = s.slp->expand();
    } else {
      throw InputError(std::string("missing input ") + name);
    }
    return s;
  }

  Slp as_slp() const {
    if (slp) return *slp;
    if (text.empty()) throw InputError("block mode needs non-empty strings");
    return slp_from_text(text);
  }
};

std::string format_distance(Cost d, Cost scale) {
  std::ostringstream s;
  s << d;
  if (scale > 1) s << ' ' << d << '/' << scale;
  return s.str();
}

void print_stats(std::ostream& err, std::string_view algo, const RunStats& st) {
  err << "algo=" << algo << " N_a=" << st.N_a << " N_b=" << st.N_b << " n_a=" << st.n_a << " n_b=" << st.n_b
      << " x=" << st.x << " y_a=" << st.y_a << " y_b=" << st.y_b << " tables_built=" << st.tables_built
      << " merge_ops=" << st.merge_ops << " smawk_queries=" << st.smawk_queries
      << " dp_cells=" << st.dp_cells_touched << " wall_millis=" << st.wall_millis << '\n';
}

RepositoryStrategy parse_strategy(const std::string& s) {
  if (s == "merge") return RepositoryStrategy::RecursiveMerge;
  if (s == "direct") return RepositoryStrategy::Direct;
  throw InputError("unknown strategy '" + s + "'");
}

// ---------------------------------------------------------------- compress

struct CompressArgs {
  std::string input;
  std::string encoder = "naive";
  std::string output;
};

int cmd_compress(const CompressArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::string text = a.input.empty() || a.input == "-" ? read_all(in) : read_file(a.input);
  if (text.empty()) throw InputError("empty input");
  const Slp slp = gen::encode(gen::parse_encoder(a.encoder), text);
  write_to(a.output, serialize_slp(slp), out);
  std::ostream& info = a.output.empty() || a.output == "-" ? err : out;
  info << "n=" << slp.size() << " N=" << slp.length() << " depth=" << slp.depth()
       << " ratio=" << static_cast<double>(slp.length()) / static_cast<double>(slp.size()) << '\n';
  return 0;
}

// ------------------------------------------------------------------ expand

int cmd_expand(const std::string& input, const std::string& output, std::istream& in, std::ostream& out) {
  const std::string text = input.empty() || input == "-" ? read_all(in) : read_file(input);
  write_to(output, parse_slp(text).expand(), out);
  return 0;
}

// -------------------------------------------------------------------- dist

struct DistArgs {
  std::string path_a, path_b;
  std::optional<std::string> raw_a, raw_b;
  std::string scoring;
  bool levenshtein = false;
  std::string algo = "block";
  std::string strategy = "merge";
  std::optional<std::uint64_t> x;
  bool explain = false;
};

ScoringScheme resolve_scheme(const std::string& scoring_path, bool levenshtein, const std::string& a,
                             const std::string& b) {
  if (!scoring_path.empty() && levenshtein) throw InputError("--scoring and --levenshtein are exclusive");
  if (!scoring_path.empty()) return parse_scoring(read_file(scoring_path));
  if (!levenshtein) throw InputError("one of --scoring or --levenshtein is required");
  std::set<unsigned char> symbols(a.begin(), a.end());
  symbols.insert(b.begin(), b.end());
  std::string alphabet(symbols.begin(), symbols.end());
  if (alphabet.empty()) alphabet = "a";
  return levenshtein_scheme(alphabet);
}

int cmd_dist(const DistArgs& a, std::ostream& out, std::ostream& err) {
  const Side A = Side::load(a.path_a, a.raw_a, "A");
  const Side B = Side::load(a.path_b, a.raw_b, "B");
  const ScoringScheme scheme = resolve_scheme(a.scoring, a.levenshtein, A.text, B.text);

  EditResult r;
  if (a.algo == "naive") {
    r.distance = naive_edit_distance(A.text, B.text, scheme, &r.stats);
  } else if (a.algo == "four-russians") {
    r = four_russians_distance(A.text, B.text, scheme, a.x);
  } else if (a.algo == "block") {
    if (a.x && *a.x == 0) throw InputError("x out of range: must be at least 1");
    if (A.text.empty() || B.text.empty()) {
      r.distance = naive_edit_distance(A.text, B.text, scheme, &r.stats);
    } else {
      const Slp sa = A.as_slp(), sb = B.as_slp();
      BlockOptions opt;
      opt.x = a.x;
      opt.strategy = parse_strategy(a.strategy);
      r = block_edit_distance(sa, sb, scheme, opt);
      if (a.explain) err << plan_to_csv(make_partition_plan(sa, sb, r.stats.x));
    }
  } else {
    throw InputError("unknown algorithm '" + a.algo + "' (expected naive, block or four-russians)");
  }
  out << format_distance(r.distance, scheme.scale()) << '\n';
  print_stats(err, a.algo, r.stats);
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::uint64_t cases = 500;
  std::uint64_t seed = 1;
  std::uint64_t max_n = 300;
  std::vector<std::size_t> alphabets{2, 4, 20};
  bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.max_n == 0) throw InputError("--max-n must be at least 1");
  if (a.alphabets.empty()) throw InputError("--alphabet needs at least one size");
  const std::optional<std::uint64_t> block_x[] = {2, 5, 17, std::nullopt};
  for (std::uint64_t i = 0; i < a.cases; ++i) {
    std::seed_seq seq{a.seed, i};
    std::mt19937_64 rng(seq);
    const std::string alphabet = gen::alphabet_of_size(a.alphabets[rng() % a.alphabets.size()]);
    const std::string ta = gen::repetitive_text(rng, 1 + rng() % a.max_n, alphabet);
    const std::string tb = gen::repetitive_text(rng, 1 + rng() % a.max_n, alphabet);
    const ScoringScheme scheme = rng() % 4 == 0 ? levenshtein_scheme(alphabet) : gen::random_scheme(rng, alphabet);
    const auto enc_a = static_cast<gen::Encoder>(rng() % 3);
    const auto enc_b = static_cast<gen::Encoder>(rng() % 3);
    BlockOptions opt;
    opt.x = block_x[i % 4];
    opt.strategy = rng() % 8 == 0 ? RepositoryStrategy::Direct : RepositoryStrategy::RecursiveMerge;
    const std::optional<std::uint64_t> fr_x =
        rng() % 2 == 0 ? std::nullopt : std::optional<std::uint64_t>(1 + rng() % 6);

    const Cost naive = naive_edit_distance(ta, tb, scheme);
    Cost block = block_edit_distance(gen::encode(enc_a, ta), gen::encode(enc_b, tb), scheme, opt).distance;
    const Cost fr = four_russians_distance(ta, tb, scheme, fr_x).distance;
    if (a.inject_fault && i == 0) block += 1;

    if (block != naive || fr != naive) {
      out << "MISMATCH in case " << i << " (seed " << a.seed << ")\n"
          << "A (" << gen::encoder_name(enc_a) << "): " << ta << '\n'
          << "B (" << gen::encoder_name(enc_b) << "): " << tb << '\n'
          << "block x: " << (opt.x ? std::to_string(*opt.x) : "auto")
          << ", strategy: " << (opt.strategy == RepositoryStrategy::Direct ? "direct" : "merge") << '\n'
          << "four-russians x: " << (fr_x ? std::to_string(*fr_x) : "auto") << '\n'
          << "naive=" << naive << " block=" << block << " four-russians=" << fr << '\n'
          << "scoring:\n"
          << serialize_scoring(scheme);
      return 1;
    }
  }
  out << "verify: " << a.cases << " cases, seed " << a.seed << ", max-n " << a.max_n << ", alphabets";
  for (std::size_t i = 0; i < a.alphabets.size(); ++i) out << (i ? "," : " ") << a.alphabets[i];
  out << ": naive, block and four-russians agree\n";
  return 0;
}

// --------------------------------------------------------------------- gen

struct GenArgs {
  std::string kind;
  std::uint32_t order = 10;
  std::uint64_t length = 1024;
  std::string motif = "abc";
  std::uint64_t repeats = 10;
  std::string alphabet = "ACGT";
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<Slp> slp;
  if (a.kind == "fibonacci") {
    slp = gen::fibonacci(a.order);
  } else if (a.kind == "power") {
    slp = gen::power(a.length);
  } else if (a.kind == "motif") {
    slp = gen::motif(a.motif, a.repeats);
  } else if (a.kind == "random") {
    write_to(a.output, gen::random_text(a.length, a.alphabet, a.seed), out);
    err << "seed=" << a.seed << '\n';
    return 0;
  } else {
    throw InputError("unknown generator '" + a.kind + "' (expected fibonacci, power, motif or random)");
  }
  write_to(a.output, serialize_slp(*slp), out);
  err << "n=" << slp->size() << " N=" << slp->length() << '\n';
  return 0;
}

// ------------------------------------------------------------------- bench

struct BenchArgs {
  std::string suite;
  std::string out = "-";
  std::uint32_t min_order = 20, max_order = 30;
  std::uint32_t naive_max_order = 27;
  std::uint32_t fr_max_order = 26;
  std::uint32_t min_log = 12, max_log = 15;
  std::uint64_t seed = 1;
};

std::string bench_row(std::string_view algo, const RunStats& s) {
  std::ostringstream row;
  row << algo << ',' << s.N_a << ',' << s.N_b << ',' << s.n_a << ',' << s.n_b << ',' << s.x << ','
      << std::max(s.y_a, s.y_b) << ',' << s.distance << ',' << s.tables_built << ',' << s.dp_cells_touched << ','
      << s.smawk_queries << ',' << s.wall_millis << '\n';
  return row.str();
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::ostringstream csv;
  csv << kBenchHeader << '\n';
  bool agree = true;
  auto group = [&](const std::vector<std::pair<std::string, RunStats>>& runs) {
    for (const auto& [algo, st] : runs) {
      csv << bench_row(algo, st);
      if (st.distance != runs.front().second.distance) agree = false;
    }
  };
  if (a.suite == "fib-scaling") {
    if (a.min_order < 3 || a.max_order < a.min_order) throw InputError("bad order range");
    for (std::uint32_t k = a.min_order; k <= a.max_order; ++k) {
      const Slp A = gen::fibonacci(k, 'a', 'b');
      const Slp B = gen::fibonacci(k, 'b', 'a');
      const ScoringScheme scheme = levenshtein_scheme("ab");
      std::vector<std::pair<std::string, RunStats>> runs;
      if (k <= a.naive_max_order) {
        RunStats st;
        naive_edit_distance(A.expand(), B.expand(), scheme, &st);
        st.n_a = A.size();
        st.n_b = B.size();
        runs.emplace_back("naive", st);
      }
      runs.emplace_back("block", block_edit_distance(A, B, scheme).stats);
      if (k <= a.fr_max_order) runs.emplace_back("four-russians", four_russians_distance(A.expand(), B.expand(), scheme).stats);
      err << "order " << k << " done\n";
      group(runs);
    }
  } else if (a.suite == "fr-scaling") {
    if (a.max_log < a.min_log || a.max_log > 24) throw InputError("bad log range");
    const ScoringScheme scheme = levenshtein_scheme("ACGT");
    for (std::uint32_t lg = a.min_log; lg <= a.max_log; ++lg) {
      const std::uint64_t N = std::uint64_t{1} << lg;
      const std::string A = gen::random_text(N, "ACGT", a.seed * 2 + lg);
      const std::string B = gen::random_text(N, "ACGT", a.seed * 2 + lg + 1000);
      std::vector<std::pair<std::string, RunStats>> runs;
      RunStats st;
      naive_edit_distance(A, B, scheme, &st);
      runs.emplace_back("naive", st);
      runs.emplace_back("four-russians", four_russians_distance(A, B, scheme).stats);
      err << "N=" << N << " done\n";
      group(runs);
    }
  } else {
    throw InputError("unknown suite '" + a.suite + "' (expected fib-scaling or fr-scaling)");
  }
  write_to(a.out, csv.str(), out);
  if (!agree) {
    err << "distances disagree across algorithms\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edit distance between grammar-compressed strings", "slpedit"};
  app.require_subcommand(1);

  CompressArgs compress;
  auto* c = app.add_subcommand("compress", "Encode text as an SLP");
  c->add_option("input", compress.input, "Input file (default: stdin)");
  c->add_option("-e,--encoder", compress.encoder, "naive, lz78 or rle")->capture_default_str();
  c->add_option("-o,--output", compress.output, "Output SLP file (default: stdout)");

  std::string expand_in, expand_out;
  auto* e = app.add_subcommand("expand", "Print the string an SLP generates");
  e->add_option("input", expand_in, "SLP file (default: stdin)");
  e->add_option("-o,--output", expand_out, "Output file (default: stdout)");

  DistArgs dist;
  auto* d = app.add_subcommand("dist", "Edit distance between two inputs");
  d->add_option("a", dist.path_a, "SLP file for A");
  d->add_option("b", dist.path_b, "SLP file for B");
  d->add_option("--raw-a,--rawA", dist.raw_a, "Literal text for A");
  d->add_option("--raw-b,--rawB", dist.raw_b, "Literal text for B");
  d->add_option("-s,--scoring", dist.scoring, "Scoring file");
  d->add_flag("-l,--levenshtein", dist.levenshtein, "Unit costs over the symbols of both inputs");
  d->add_option("--algo", dist.algo, "naive, block or four-russians")->capture_default_str();
  d->add_option("--strategy", dist.strategy, "Repository strategy for block: merge or direct")->capture_default_str();
  d->add_option("--x", dist.x, "Block width");
  d->add_flag("--explain", dist.explain, "Write the partition plan CSV to stderr");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Randomized cross-check of all algorithms");
  v->add_option("--cases", verify.cases)->capture_default_str();
  v->add_option("--seed", verify.seed)->capture_default_str();
  v->add_option("--max-n", verify.max_n)->capture_default_str();
  v->add_option("--alphabet", verify.alphabets, "Alphabet sizes")->delimiter(',')->capture_default_str();
  v->add_flag("--inject-fault", verify.inject_fault)->group("");

  GenArgs gen_args;
  auto* g = app.add_subcommand("gen", "Generate benchmark inputs");
  g->add_option("kind", gen_args.kind, "fibonacci, power, motif or random")->required();
  g->add_option("--order", gen_args.order, "Fibonacci order")->capture_default_str();
  g->add_option("-N,--length", gen_args.length, "Length for power and random")->capture_default_str();
  g->add_option("--motif", gen_args.motif)->capture_default_str();
  g->add_option("--repeats", gen_args.repeats)->capture_default_str();
  g->add_option("--alphabet", gen_args.alphabet, "Symbols for random")->capture_default_str();
  g->add_option("--seed", gen_args.seed)->capture_default_str();
  g->add_option("-o,--output", gen_args.output);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a scaling suite and write CSV");
  b->add_option("--suite", bench.suite, "fib-scaling or fr-scaling")->required();
  b->add_option("--out", bench.out, "CSV path (default: stdout)")->capture_default_str();
  b->add_option("--min-order", bench.min_order)->capture_default_str();
  b->add_option("--max-order", bench.max_order)->capture_default_str();
  b->add_option("--naive-max-order", bench.naive_max_order)->capture_default_str();
  b->add_option("--fr-max-order", bench.fr_max_order)->capture_default_str();
  b->add_option("--min-log", bench.min_log)->capture_default_str();
  b->add_option("--max-log", bench.max_log)->capture_default_str();
  b->add_option("--seed", bench.seed)->capture_default_str();

  std::vector<std::string> argv_store{"slpedit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& pe) {
    const int code = app.exit(pe, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c) return cmd_compress(compress, in, out, err);
    if (*e) return cmd_expand(expand_in, expand_out, in, out);
    if (*d) return cmd_dist(dist, out, err);
    if (*v) return cmd_verify(verify, out);
    if (*g) return cmd_gen(gen_args, out, err);
    if (*b) return cmd_bench(bench, out, err);
  } catch (const GuardError& ex) {
    err << "error: " << ex.what() << '\n';
    return 3;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace slpedit::cli
