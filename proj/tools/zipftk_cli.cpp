// zipftk — command-line front end for the interval-covering / power-law
// toolkit.
//
// Conventions shared by every subcommand:
//   * outputs are CSV files (RFC 4180, UTF-8, '.' decimal separator) written
//     into --out DIR; when --out is absent the ZIPFTK_OUT_DIR environment
//     variable is used, and failing that the current directory;
//   * every run also writes a <name>_manifest.json recording the subcommand,
//     the full effective parameter map, the seed, the toolkit version, and
//     the files produced — the manifest alone suffices to repeat the run;
//   * reruns with identical parameters produce byte-identical files
//     (doubles are printed with "%.17g", so values round-trip exactly);
//   * stochastic subcommands take --seed with the fixed default 42;
//   * --jobs parallelizes only across independent replicates (each with its
//     own seed and its own output files), never inside a single run;
//   * exit status: 0 on success, 1 on a usage error (message plus a pointer
//     to --help on stderr), 2 when a computation fails.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "zipftk/baselines.hpp"
#include "zipftk/covering.hpp"
#include "zipftk/csv.hpp"
#include "zipftk/errors.hpp"
#include "zipftk/fixtures.hpp"
#include "zipftk/lexsem.hpp"
#include "zipftk/mandelbrot.hpp"
#include "zipftk/manifest.hpp"
#include "zipftk/meaning.hpp"
#include "zipftk/powerlaw.hpp"
#include "zipftk/version.hpp"
#include "zipftk/zeta.hpp"

namespace {

using zipftk::csv::Row;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf);
}

std::string fmt_int(std::uint64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// Output directory and manifest bookkeeping.

std::filesystem::path resolve_out_dir(const std::string& flag) {
  std::string dir = flag;
  if (dir.empty()) {
    const char* env = std::getenv("ZIPFTK_OUT_DIR");
    dir = (env != nullptr && *env != '\0') ? env : ".";
  }
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec)
    throw zipftk::Error("cannot create output directory " + p.string() + ": " +
                        ec.message());
  return p;
}

struct RunContext {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::filesystem::path dir;
  std::vector<std::string> outputs;  // file names relative to dir

  std::filesystem::path path(const std::string& name) {
    outputs.push_back(name);
    return dir / name;
  }

  void finish(const std::string& manifest_name) {
    zipftk::RunManifest m;
    m.subcommand = subcommand;
    m.parameters = parameters;
    m.seed = seed;
    m.output_paths = outputs;
    m.write(dir / manifest_name);
    outputs.push_back(manifest_name);
    std::cout << "wrote";
    for (const std::string& f : outputs) std::cout << ' ' << (dir / f).string();
    std::cout << '\n';
  }
};

// ---------------------------------------------------------------------------
// CSV writers and readers for the toolkit's file formats.

void write_covering_csv(const std::filesystem::path& p,
                        const zipftk::Covering& c) {
  std::vector<Row> rows;
  rows.push_back({"rank", "lo", "hi", "length"});
  for (std::size_t i = 0; i < c.size(); ++i) {
    const zipftk::Interval& iv = c.intervals[i];
    rows.push_back({fmt_int(i + 1), fmt(iv.lo), fmt(iv.hi), fmt(iv.length())});
  }
  std::string pre = "# interval covering, ranks ordered by decreasing length\n";
  pre += "# circular=" + std::string(c.circular ? "1" : "0") +
         " space_measure=" + fmt(c.space_measure) + "\n";
  zipftk::csv::write_file(p.string(), rows, pre);
}

zipftk::Covering read_covering_csv(const std::string& path) {
  const std::string text = zipftk::csv::slurp(path);
  bool circular = false;
  {
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line) && !line.empty() && line[0] == '#')
      if (line.find("circular=1") != std::string::npos) circular = true;
  }
  auto rows = zipftk::csv::parse(text, /*skip_comments=*/true);
  if (rows.empty() || rows[0] != Row{"rank", "lo", "hi", "length"})
    throw zipftk::ParseError("covering csv: expected header rank,lo,hi,length "
                             "in " + path);
  std::vector<zipftk::Interval> ivs;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 4)
      throw zipftk::ParseError("covering csv: row " + std::to_string(i + 1) +
                               " of " + path + " does not have 4 fields");
    zipftk::Interval iv;
    iv.lo = zipftk::csv::to_double(rows[i][1]);
    iv.hi = zipftk::csv::to_double(rows[i][2]);
    const double len = zipftk::csv::to_double(rows[i][3]);
    iv.wraps = circular && (iv.hi < iv.lo || (iv.hi == iv.lo && len > 0.5));
    ivs.push_back(iv);
  }
  return zipftk::make_covering(std::move(ivs), circular);
}

void write_rankfreq_csv(const std::filesystem::path& p,
                        const zipftk::RankFrequencyTable& t,
                        std::size_t top = 0) {
  const bool labeled = !t.labels.empty();
  std::vector<Row> rows;
  rows.push_back(labeled ? Row{"rank", "frequency", "label"}
                         : Row{"rank", "frequency"});
  const std::size_t n = (top != 0 && top < t.size()) ? top : t.size();
  for (std::size_t i = 0; i < n; ++i) {
    Row r{fmt_int(i + 1), fmt(t.frequency[i])};
    if (labeled) r.push_back(t.labels[i]);
    rows.push_back(std::move(r));
  }
  zipftk::csv::write_file(
      p.string(), rows,
      "# rank-frequency table, ranks ordered by decreasing frequency\n");
}

zipftk::RankFrequencyTable read_rankfreq_csv(const std::string& path) {
  auto rows = zipftk::csv::read_file(path, /*skip_comments=*/true);
  if (rows.empty())
    throw zipftk::ParseError("rank-frequency csv: empty file " + path);
  int freq_col = -1, label_col = -1;
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    if (rows[0][i] == "frequency") freq_col = static_cast<int>(i);
    if (rows[0][i] == "label") label_col = static_cast<int>(i);
  }
  if (freq_col < 0)
    throw zipftk::ParseError("rank-frequency csv: no 'frequency' column in " +
                             path);
  zipftk::RankFrequencyTable t;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) <= freq_col)
      throw zipftk::ParseError("rank-frequency csv: short row " +
                               std::to_string(i + 1) + " in " + path);
    t.frequency.push_back(zipftk::csv::to_double(rows[i][freq_col]));
    if (label_col >= 0 && static_cast<int>(rows[i].size()) > label_col)
      t.labels.push_back(rows[i][label_col]);
  }
  if (t.labels.size() != t.frequency.size()) t.labels.clear();
  zipftk::validate_rank_table(t);
  return t;
}

void write_spectrum_csv(const std::filesystem::path& p,
                        const zipftk::FrequencySpectrum& spec) {
  std::vector<Row> rows;
  rows.push_back({"lo", "hi", "center", "fraction"});
  for (const auto& b : spec.bins)
    rows.push_back({fmt(b.lo), fmt(b.hi), fmt(b.center), fmt(b.fraction)});
  zipftk::csv::write_file(
      p.string(), rows,
      "# log-binned frequency spectrum; fraction is the share of word types\n");
}

zipftk::FrequencySpectrum read_spectrum_csv(const std::string& path) {
  auto rows = zipftk::csv::read_file(path, /*skip_comments=*/true);
  if (rows.empty() || rows[0] != Row{"lo", "hi", "center", "fraction"})
    throw zipftk::ParseError("spectrum csv: expected header "
                             "lo,hi,center,fraction in " + path);
  zipftk::FrequencySpectrum spec;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 4)
      throw zipftk::ParseError("spectrum csv: row " + std::to_string(i + 1) +
                               " of " + path + " does not have 4 fields");
    spec.bins.push_back({zipftk::csv::to_double(rows[i][0]),
                         zipftk::csv::to_double(rows[i][1]),
                         zipftk::csv::to_double(rows[i][2]),
                         zipftk::csv::to_double(rows[i][3])});
  }
  return spec;
}

// Fit summary for console output; returns "" when the table is too small.
std::string fit_note(const zipftk::RankFrequencyTable& t, std::size_t k_min = 0,
                     std::size_t k_max = 0) {
  try {
    auto f = zipftk::fit_zipf_exponent(t, k_min, k_max);
    std::ostringstream ss;
    ss << "B=" << f.B << " (ranks " << f.k_min << ".." << f.k_max
       << ", r2=" << f.r_squared << ")";
    return ss.str();
  } catch (const zipftk::InsufficientData&) {
    return "B unavailable (too few ranks in the fit window)";
  }
}

// ---------------------------------------------------------------------------
// sim gen / sim spec

struct SimOpts {
  std::size_t n = 10000;
  double delta = 0.0;
  double gamma = 2.0;
  std::uint64_t seed = 42;
  std::size_t replicates = 1;
  std::size_t jobs = 1;
  bool line = false;
  std::string pair_order = "shuffled";
  std::string out;
};

void run_sim(bool specialization, const SimOpts& o) {
  RunContext ctx;
  ctx.subcommand = specialization ? "sim spec" : "sim gen";
  ctx.seed = o.seed;
  ctx.dir = resolve_out_dir(o.out);
  ctx.parameters["n"] = fmt_int(o.n);
  if (specialization) {
    ctx.parameters["gamma"] = fmt(o.gamma);
    ctx.parameters["pair_order"] = o.pair_order;
  } else {
    ctx.parameters["delta"] = fmt(o.delta);
  }
  ctx.parameters["seed"] = fmt_int(o.seed);
  ctx.parameters["replicates"] = fmt_int(o.replicates);
  ctx.parameters["jobs"] = fmt_int(o.jobs);
  ctx.parameters["topology"] = o.line ? "line" : "circle";

  const std::string prefix = specialization ? "spec" : "gen";
  struct Rep {
    std::string covering_name, rankfreq_name, summary;
    std::exception_ptr error;
  };
  std::vector<Rep> reps(o.replicates);

  auto work = [&](std::size_t idx) {
    Rep& rep = reps[idx];
    try {
      const std::uint64_t seed = o.seed + idx;
      zipftk::SimResult r;
      if (specialization) {
        zipftk::SpecParams p;
        p.n = o.n;
        p.gamma = o.gamma;
        p.seed = seed;
        p.pair_order = (o.pair_order == "largest-first")
                           ? zipftk::PairOrder::largest_first
                           : zipftk::PairOrder::shuffled;
        p.topology =
            o.line ? zipftk::Topology::line : zipftk::Topology::circle;
        r = zipftk::run_specialization(p);
      } else {
        zipftk::GenParams p;
        p.n = o.n;
        p.delta = o.delta;
        p.seed = seed;
        p.topology =
            o.line ? zipftk::Topology::line : zipftk::Topology::circle;
        r = zipftk::run_generalization(p);
      }
      rep.covering_name = prefix + "_covering_s" + fmt_int(seed) + ".csv";
      rep.rankfreq_name = prefix + "_rankfreq_s" + fmt_int(seed) + ".csv";
      write_covering_csv(ctx.dir / rep.covering_name, r.covering);
      auto t = zipftk::lengths_to_rank_freq(r.covering);
      write_rankfreq_csv(ctx.dir / rep.rankfreq_name, t);
      std::ostringstream ss;
      ss << prefix << " seed=" << seed << " n=" << o.n
         << " iterations=" << r.iterations << " intervals=" << r.covering.size()
         << " " << fit_note(t);
      for (const std::string& w : r.warnings) ss << "\n  warning: " << w;
      rep.summary = ss.str();
    } catch (...) {
      rep.error = std::current_exception();
    }
  };

  const std::size_t jobs = std::min(std::max<std::size_t>(o.jobs, 1),
                                    std::max<std::size_t>(o.replicates, 1));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < reps.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < reps.size(); i += jobs) work(i);
      });
    for (auto& th : pool) th.join();
  }

  for (Rep& rep : reps) {
    if (rep.error) std::rethrow_exception(rep.error);
    ctx.outputs.push_back(rep.covering_name);
    ctx.outputs.push_back(rep.rankfreq_name);
    std::cout << rep.summary << '\n';
  }
  ctx.finish(prefix + "_manifest.json");
}

// ---------------------------------------------------------------------------
// covering diag / covering hier

void run_covering_diag(const std::string& input,
                       const std::vector<std::size_t>& ks, double rho,
                       const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "covering diag";
  ctx.dir = resolve_out_dir(out);
  ctx.parameters["input"] = input;
  {
    std::string list;
    for (std::size_t k : ks) list += (list.empty() ? "" : ",") + fmt_int(k);
    ctx.parameters["ks"] = list;
  }
  ctx.parameters["rho"] = fmt(rho);

  zipftk::Covering c = read_covering_csv(input);
  auto diag = zipftk::layer_diagnostics(c, ks, rho);
  std::vector<Row> rows;
  rows.push_back({"k", "rho", "gap", "overlap", "length_sum"});
  for (const auto& r : diag) {
    rows.push_back({fmt_int(r.k), fmt(r.rho), fmt(r.gap), fmt(r.overlap),
                    fmt(r.length_sum)});
    std::cout << "k=" << r.k << " rho=" << r.rho << " gap=" << r.gap
              << " overlap=" << r.overlap << " length_sum=" << r.length_sum
              << '\n';
  }
  zipftk::csv::write_file(
      ctx.path("diag.csv").string(), rows,
      "# per-rank layer diagnostics; rho=0 on input means auto-chosen\n");
  ctx.finish("diag_manifest.json");
}

void run_covering_hier(int depth, const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "covering hier";
  ctx.dir = resolve_out_dir(out);
  ctx.parameters["depth"] = std::to_string(depth);

  zipftk::Covering c = zipftk::hierarchical_covering(depth);
  write_covering_csv(ctx.path("hier_covering.csv"), c);
  auto t = zipftk::lengths_to_rank_freq(c);
  write_rankfreq_csv(ctx.path("hier_rankfreq.csv"), t);
  std::cout << "hier depth=" << depth << " intervals=" << c.size() << " "
            << fit_note(t, 1, c.size()) << '\n';
  ctx.finish("hier_manifest.json");
}

// ---------------------------------------------------------------------------
// mandelbrot solve / dynamics / pmf

void run_mandelbrot_solve(const std::vector<double>& k0s, double b_max,
                          double tol, const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "mandelbrot solve";
  ctx.dir = resolve_out_dir(out);
  {
    std::string list;
    for (double k0 : k0s) list += (list.empty() ? "" : ",") + fmt(k0);
    ctx.parameters["k0"] = list;
  }
  ctx.parameters["b_max"] = fmt(b_max);
  ctx.parameters["tol"] = fmt(tol);

  std::vector<Row> rows;
  rows.push_back({"k0", "B"});
  for (double k0 : k0s) {
    const double B = zipftk::solve_exponent(k0, b_max, tol);
    rows.push_back({fmt(k0), fmt(B)});
    std::cout << "k0=" << k0 << " B=" << B << '\n';
  }
  zipftk::csv::write_file(
      ctx.path("solve.csv").string(), rows,
      "# exponent B solving zeta(B, 1 + k0) = 1 for each cost offset k0\n");
  ctx.finish("solve_manifest.json");
}

void run_mandelbrot_dynamics(std::size_t n, double k0, double c0, double band,
                             double step, std::size_t max_iters,
                             std::size_t stride, double p_floor,
                             std::uint64_t seed, const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "mandelbrot dynamics";
  ctx.seed = seed;
  ctx.dir = resolve_out_dir(out);
  ctx.parameters = {{"n", fmt_int(n)},
                    {"k0", fmt(k0)},
                    {"c0", fmt(c0)},
                    {"band", fmt(band)},
                    {"step", fmt(step)},
                    {"max_iters", fmt_int(max_iters)},
                    {"stride", fmt_int(stride)},
                    {"p_floor", fmt(p_floor)},
                    {"seed", fmt_int(seed)}};

  zipftk::DynamicsConfig cfg;
  cfg.n_words = n;
  cfg.cost_model.c0 = c0;
  cfg.cost_model.k0 = k0;
  cfg.band_gamma = band;
  cfg.step_factor = step;
  cfg.max_iters = max_iters;
  cfg.p_floor = p_floor;
  cfg.trajectory_stride = stride;
  zipftk::DynamicsResult res = zipftk::run_local_dynamics(cfg, seed);

  std::vector<Row> rows;
  rows.push_back({"iter", "C", "H", "Cstar", "n_changed"});
  for (const auto& r : res.trajectory)
    rows.push_back({fmt_int(r.iter), fmt(r.C), fmt(r.H), fmt(r.Cstar),
                    fmt_int(r.n_changed)});
  zipftk::csv::write_file(
      ctx.path("dynamics_trajectory.csv").string(), rows,
      "# average cost C (bits), entropy H (bits), ratio Cstar = C/H\n");

  zipftk::FrequencyVector ranked = zipftk::ranked(res.p);
  std::vector<Row> prows;
  prows.push_back({"rank", "probability"});
  for (std::size_t i = 0; i < ranked.size(); ++i)
    prows.push_back({fmt_int(i + 1), fmt(ranked[i])});
  zipftk::csv::write_file(ctx.path("dynamics_pmf.csv").string(), prows,
                          "# final word frequencies, ranked\n");

  zipftk::RankFrequencyTable t;
  for (double v : ranked)
    if (v > 0.0) t.frequency.push_back(v);
  std::cout << "dynamics n=" << n << " k0=" << k0
            << " converged=" << (res.converged ? "yes" : "no")
            << " iterations=" << res.iterations;
  if (!res.trajectory.empty()) {
    const auto& last = res.trajectory.back();
    std::cout << " C=" << last.C << " H=" << last.H << " C/H=" << last.Cstar;
  }
  std::cout << " " << fit_note(t) << '\n';
  ctx.finish("dynamics_manifest.json");
}

void run_mandelbrot_pmf(double B, double k0, std::size_t n,
                        const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "mandelbrot pmf";
  ctx.dir = resolve_out_dir(out);
  ctx.parameters = {{"b", fmt(B)}, {"k0", fmt(k0)}, {"n", fmt_int(n)}};

  zipftk::FrequencyVector p = zipftk::zipf_mandelbrot_pmf(B, k0, n);
  std::vector<Row> rows;
  rows.push_back({"rank", "probability"});
  for (std::size_t i = 0; i < p.size(); ++i)
    rows.push_back({fmt_int(i + 1), fmt(p[i])});
  zipftk::csv::write_file(
      ctx.path("pmf.csv").string(), rows,
      "# truncated distribution p_k proportional to (k + k0)^-B\n");
  std::cout << "pmf B=" << B << " k0=" << k0 << " n=" << n
            << " p1=" << p.front() << " pn=" << p.back() << '\n';
  ctx.finish("pmf_manifest.json");
}

// ---------------------------------------------------------------------------
// baseline typing / simon

void run_baseline_typing(std::size_t alphabet, std::size_t chars,
                         std::uint64_t seed, std::size_t top,
                         const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "baseline typing";
  ctx.seed = seed;
  ctx.dir = resolve_out_dir(out);
  ctx.parameters = {{"alphabet", fmt_int(alphabet)},
                    {"chars", fmt_int(chars)},
                    {"seed", fmt_int(seed)},
                    {"top", fmt_int(top)}};

  zipftk::TokenStream s = zipftk::random_typing(alphabet, chars, seed);
  auto t = zipftk::rank_frequency(s);
  write_rankfreq_csv(ctx.path("typing_rankfreq.csv"), t, top);
  std::cout << "typing alphabet=" << alphabet << " chars=" << chars
            << " tokens=" << s.tokens.size() << " types=" << t.size() << " "
            << fit_note(t, 1, std::min<std::size_t>(2000, t.size())) << '\n';
  ctx.finish("typing_manifest.json");
}

void run_baseline_simon(double p_new, std::size_t tokens, std::uint64_t seed,
                        std::size_t top, const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "baseline simon";
  ctx.seed = seed;
  ctx.dir = resolve_out_dir(out);
  ctx.parameters = {{"p_new", fmt(p_new)},
                    {"tokens", fmt_int(tokens)},
                    {"seed", fmt_int(seed)},
                    {"top", fmt_int(top)}};

  zipftk::TokenStream s = zipftk::simon_process(p_new, tokens, seed);
  auto t = zipftk::rank_frequency(s);
  write_rankfreq_csv(ctx.path("simon_rankfreq.csv"), t, top);
  auto spec = zipftk::frequency_spectrum(t);
  write_spectrum_csv(ctx.path("simon_spectrum.csv"), spec);
  std::cout << "simon p_new=" << p_new << " tokens=" << tokens
            << " types=" << t.size();
  try {
    auto f = zipftk::fit_spectrum_exponent(spec, 2.0, 1000.0);
    std::cout << " beta=" << f.beta << " (" << f.n_bins_used << " bins, r2="
              << f.r_squared << ")";
  } catch (const zipftk::InsufficientData&) {
    std::cout << " beta unavailable (too few populated bins)";
  }
  std::cout << '\n';
  ctx.finish("simon_manifest.json");
}

// ---------------------------------------------------------------------------
// corpus wordlen / newrate / rankfreq

zipftk::TokenStream load_corpus(const std::string& input) {
  return zipftk::tokenize_text(zipftk::csv::slurp(input));
}

void run_corpus_wordlen(const std::string& input, const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "corpus wordlen";
  ctx.dir = resolve_out_dir(out);
  ctx.parameters["input"] = input;

  zipftk::TokenStream s = load_corpus(input);
  auto hist = zipftk::word_length_distribution(s);
  std::vector<Row> rows;
  rows.push_back({"length", "types"});
  std::size_t types = 0;
  for (const auto& [len, cnt] : hist) {
    rows.push_back({fmt_int(len), fmt_int(cnt)});
    types += cnt;
  }
  zipftk::csv::write_file(ctx.path("wordlen.csv").string(), rows,
                          "# distinct word types per character length\n");
  std::cout << "wordlen tokens=" << s.tokens.size() << " types=" << types
            << " lengths=" << hist.size() << '\n';
  ctx.finish("wordlen_manifest.json");
}

void run_corpus_newrate(const std::string& input, std::size_t window,
                        const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "corpus newrate";
  ctx.dir = resolve_out_dir(out);
  ctx.parameters["input"] = input;
  ctx.parameters["window"] = fmt_int(window);

  zipftk::TokenStream s = load_corpus(input);
  auto series = zipftk::new_word_rate(s, window);
  std::vector<Row> rows;
  rows.push_back({"tokens", "rate"});
  for (const auto& [pos, rate] : series.points)
    rows.push_back({fmt_int(pos), fmt(rate)});
  zipftk::csv::write_file(
      ctx.path("newrate.csv").string(), rows,
      "# fraction of first-occurrence tokens per window, by stream position\n");
  std::cout << "newrate tokens=" << s.tokens.size() << " window=" << window
            << " decay_exponent=" << series.fitted_decay_exponent << '\n';
  ctx.finish("newrate_manifest.json");
}

void run_corpus_rankfreq(const std::string& input, std::size_t top,
                         const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "corpus rankfreq";
  ctx.dir = resolve_out_dir(out);
  ctx.parameters["input"] = input;
  ctx.parameters["top"] = fmt_int(top);

  zipftk::TokenStream s = load_corpus(input);
  auto t = zipftk::rank_frequency(s);
  write_rankfreq_csv(ctx.path("rankfreq.csv"), t, top);
  std::cout << "rankfreq tokens=" << s.tokens.size() << " types=" << t.size()
            << " " << fit_note(t) << '\n';
  ctx.finish("rankfreq_manifest.json");
}

// ---------------------------------------------------------------------------
// lex sum / lex pca

void run_lex_sum(const std::string& fixture, const std::string& config,
                 double tolerance, const std::string& fixtures_dir,
                 const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "lex sum";
  ctx.dir = resolve_out_dir(out);
  ctx.parameters = {{"fixture", fixture},
                    {"config", config},
                    {"tolerance", fmt(tolerance)},
                    {"fixtures_dir", fixtures_dir}};

  auto cat = zipftk::FixtureCatalog::load(
      fixtures_dir.empty() ? zipftk::default_fixture_dir()
                           : std::filesystem::path(fixtures_dir));
  const zipftk::FixtureInfo& fi = cat.info(fixture);
  if (fi.kind != "hyponym_table")
    throw zipftk::Error("fixture '" + fixture + "' is not a hyponym table");
  zipftk::HyponymTable base = cat.hyponym_table(fixture);
  const zipftk::FixtureConfig& cfg =
      config.empty() ? fi.configs.front() : zipftk::find_config(fi, config);
  zipftk::HyponymTable t = zipftk::apply_config(base, cfg);
  auto rep = zipftk::hyponym_sum_check(t, tolerance);

  std::vector<Row> rows;
  rows.push_back(
      {"fixture", "config", "head_sum", "hyponym_sum", "ratio", "pass"});
  rows.push_back({fixture, cfg.name, fmt(rep.head_sum), fmt(rep.hyponym_sum),
                  fmt(rep.ratio), rep.pass ? "1" : "0"});
  zipftk::csv::write_file(
      ctx.path("lex_sum.csv").string(), rows,
      "# hyponym frequency sum vs head frequency (per million tokens)\n");
  std::cout << "lex sum fixture=" << fixture << " config=" << cfg.name
            << " head=" << rep.head_sum << " hyponyms=" << rep.hyponym_sum
            << " ratio=" << rep.ratio << " pass=" << (rep.pass ? "yes" : "no")
            << '\n';
  ctx.finish("lex_sum_manifest.json");
}

void run_lex_pca(const std::string& fixture, const std::string& fixtures_dir,
                 const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "lex pca";
  ctx.dir = resolve_out_dir(out);
  ctx.parameters = {{"fixture", fixture}, {"fixtures_dir", fixtures_dir}};

  auto cat = zipftk::FixtureCatalog::load(
      fixtures_dir.empty() ? zipftk::default_fixture_dir()
                           : std::filesystem::path(fixtures_dir));
  const zipftk::FixtureInfo& fi = cat.info(fixture);
  if (fi.kind != "matrix")
    throw zipftk::Error("fixture '" + fixture + "' is not a matrix");
  zipftk::CompatibilityMatrix m = cat.matrix(fixture);
  zipftk::PcaResult r = zipftk::pca_classify(m);

  std::vector<Row> erows;
  erows.push_back({"column", "polarity", "component"});
  for (std::size_t j = 0; j < m.col_labels.size(); ++j)
    erows.push_back({m.col_labels[j], m.col_polarity[j] >= 0 ? "+" : "-",
                     fmt(r.eigenvector[j])});
  zipftk::csv::write_file(
      ctx.path("pca_eigenvector.csv").string(), erows,
      "# leading eigenvector of the column correlation matrix, unit norm\n");

  std::vector<Row> wrows;
  wrows.push_back({"row", "weight", "classification"});
  for (std::size_t i = 0; i < r.retained_rows.size(); ++i)
    wrows.push_back({r.retained_rows[i], fmt(r.weights[i]),
                     std::to_string(r.classification[i])});
  zipftk::csv::write_file(
      ctx.path("pca_weights.csv").string(), wrows,
      "# per-row projection weight and sign classification\n");

  std::cout << "lex pca fixture=" << fixture << " eigenvector=[";
  for (std::size_t j = 0; j < r.eigenvector.size(); ++j)
    std::cout << (j ? ", " : "") << r.eigenvector[j];
  std::cout << "]\n  positive:";
  for (std::size_t i = 0; i < r.retained_rows.size(); ++i)
    if (r.classification[i] > 0) std::cout << ' ' << r.retained_rows[i];
  std::cout << "\n  negative:";
  for (std::size_t i = 0; i < r.retained_rows.size(); ++i)
    if (r.classification[i] < 0) std::cout << ' ' << r.retained_rows[i];
  if (!r.dropped_rows.empty()) {
    std::cout << "\n  dropped:";
    for (const std::string& w : r.dropped_rows) std::cout << ' ' << w;
  }
  std::cout << '\n';
  ctx.finish("pca_manifest.json");
}

// ---------------------------------------------------------------------------
// fit

void run_fit(const std::string& input, bool spectrum, std::size_t k_min,
             std::size_t k_max, double center_min, double center_max,
             const std::string& out) {
  RunContext ctx;
  ctx.subcommand = "fit";
  ctx.dir = resolve_out_dir(out);
  ctx.parameters = {{"input", input},
                    {"kind", spectrum ? "spectrum" : "rank"}};

  std::vector<Row> rows;
  rows.push_back(
      {"kind", "window_lo", "window_hi", "exponent", "intercept", "r_squared"});
  if (spectrum) {
    ctx.parameters["center_min"] = fmt(center_min);
    ctx.parameters["center_max"] = fmt(center_max);
    auto spec = read_spectrum_csv(input);
    auto f = zipftk::fit_spectrum_exponent(spec, center_min, center_max);
    rows.push_back({"spectrum", fmt(center_min), fmt(center_max), fmt(f.beta),
                    fmt(f.intercept), fmt(f.r_squared)});
    std::cout << "fit spectrum beta=" << f.beta << " (" << f.n_bins_used
              << " bins, r2=" << f.r_squared << ")\n";
  } else {
    ctx.parameters["k_min"] = fmt_int(k_min);
    ctx.parameters["k_max"] = fmt_int(k_max);
    auto t = read_rankfreq_csv(input);
    auto f = zipftk::fit_zipf_exponent(t, k_min, k_max);
    rows.push_back({"rank", fmt_int(f.k_min), fmt_int(f.k_max), fmt(f.B),
                    fmt(f.intercept), fmt(f.r_squared)});
    std::cout << "fit rank B=" << f.B << " (ranks " << f.k_min << ".."
              << f.k_max << ", r2=" << f.r_squared << ")\n";
  }
  zipftk::csv::write_file(ctx.path("fit.csv").string(), rows,
                          "# least-squares power-law fit in log-log space\n");
  ctx.finish("fit_manifest.json");
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{
      "zipftk — interval-covering simulations, cost-ratio optimization, "
      "stochastic text baselines, and lexical statistics.\n"
      "Outputs are CSV (RFC 4180, UTF-8, '.' decimal); every run writes a "
      "manifest JSON that suffices to reproduce it bit-for-bit. Reruns with "
      "identical parameters are byte-identical. Exit status: 0 success, "
      "1 usage error, 2 computation error."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(zipftk::kVersion));
  app.get_formatter()->column_width(30);

  const std::string out_help =
      "output directory (default: $ZIPFTK_OUT_DIR, else '.')";
  const std::string seed_help =
      "RNG seed; the default 42 is fixed so unseeded runs reproduce";

  // --- sim ---------------------------------------------------------------
  auto* sim = app.add_subcommand(
      "sim", "interval-evolution simulations on the unit space");
  sim->require_subcommand(1);
  SimOpts gen_o, spec_o;

  auto* gen = sim->add_subcommand(
      "gen", "growth model: n intervals grow until each meets a neighbor");
  gen->add_option("--n", gen_o.n, "number of intervals (words)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000000}));
  gen->add_option("--delta", gen_o.delta,
                  "growth per step, in space units (0 = auto: 1e-3/n)")
      ->capture_default_str();
  gen->add_option("--seed", gen_o.seed, seed_help)->capture_default_str();
  gen->add_option("--replicates", gen_o.replicates,
                  "independent runs with seeds seed, seed+1, ...")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  gen->add_option("--jobs", gen_o.jobs,
                  "worker threads across replicates (never within a run)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  gen->add_flag("--line", gen_o.line,
                "use the line segment [0,1] instead of the circle");
  gen->add_option("--out", gen_o.out, out_help);
  gen->callback([&gen_o] { run_sim(false, gen_o); });

  auto* spc = sim->add_subcommand(
      "spec", "splitting model: the larger of a pair splits off a 1/gamma "
              "share until lengths stop changing");
  spc->add_option("--n", spec_o.n, "number of intervals (words)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
  spc->add_option("--gamma", spec_o.gamma,
                  "split ratio, dimensionless, > 1 (validated range 1.1..10)")
      ->capture_default_str();
  spc->add_option("--seed", spec_o.seed, seed_help)->capture_default_str();
  spc->add_option("--replicates", spec_o.replicates,
                  "independent runs with seeds seed, seed+1, ...")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  spc->add_option("--jobs", spec_o.jobs,
                  "worker threads across replicates (never within a run)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  spc->add_flag("--line", spec_o.line,
                "use the line segment [0,1] instead of the circle");
  spc->add_option("--pair-order", spec_o.pair_order,
                  "sweep order for interval pairs")
      ->capture_default_str()
      ->check(CLI::IsMember({"shuffled", "largest-first"}));
  spc->add_option("--out", spec_o.out, out_help);
  spc->callback([&spec_o] { run_sim(true, spec_o); });

  // --- covering ----------------------------------------------------------
  auto* cov = app.add_subcommand(
      "covering", "diagnostics and reference constructions for coverings");
  cov->require_subcommand(1);

  std::string diag_input, diag_out;
  std::vector<std::size_t> diag_ks{2, 20, 200};
  double diag_rho = 0.0;
  auto* diag = cov->add_subcommand(
      "diag", "per-rank layer diagnostics (gap, overlap, length sum) for a "
              "covering CSV");
  diag->add_option("--input", diag_input,
                   "covering CSV (rank,lo,hi,length) from sim or hier")
      ->required()
      ->check(CLI::ExistingFile);
  diag->add_option("--ks", diag_ks, "probe ranks, comma separated")
      ->capture_default_str()
      ->delimiter(',');
  diag->add_option("--rho", diag_rho,
                   "layer width ratio; 0 chooses rho per rank so the layer's "
                   "lengths sum to about the whole space")
      ->capture_default_str();
  diag->add_option("--out", diag_out, out_help);
  diag->callback([&] { run_covering_diag(diag_input, diag_ks, diag_rho,
                                         diag_out); });

  int hier_depth = 11;
  std::string hier_out;
  auto* hier = cov->add_subcommand(
      "hier", "dyadic hierarchical covering: 2^(depth+1) - 1 intervals, "
              "lengths 2^-floor(log2 k)");
  hier->add_option("--depth", hier_depth, "number of halving levels (1..20)")
      ->capture_default_str()
      ->check(CLI::Range(1, 20));
  hier->add_option("--out", hier_out, out_help);
  hier->callback([&] { run_covering_hier(hier_depth, hier_out); });

  // --- mandelbrot --------------------------------------------------------
  auto* mb = app.add_subcommand(
      "mandelbrot", "cost-ratio optimization with cost(k) = c0*log2(k + k0)");
  mb->require_subcommand(1);

  std::vector<double> solve_k0{10.0};
  double solve_bmax = 4.0, solve_tol = 1e-12;
  std::string solve_out;
  auto* solve = mb->add_subcommand(
      "solve", "exponent B solving zeta(B, 1 + k0) = 1 (no root at or above "
               "--b-max is an error)");
  solve->add_option("--k0", solve_k0,
                    "cost offsets (unused cheap addresses), comma separated")
      ->capture_default_str()
      ->delimiter(',');
  solve->add_option("--b-max", solve_bmax, "upper edge of the root bracket")
      ->capture_default_str();
  solve->add_option("--tol", solve_tol, "bisection tolerance on B")
      ->capture_default_str();
  solve->add_option("--out", solve_out, out_help);
  solve->callback([&] { run_mandelbrot_solve(solve_k0, solve_bmax, solve_tol,
                                             solve_out); });

  std::size_t dyn_n = 100, dyn_max = 100000, dyn_stride = 1;
  double dyn_k0 = 0.0, dyn_c0 = 1.0, dyn_band = 0.05, dyn_step = 1.05,
         dyn_floor = 1e-15;
  std::uint64_t dyn_seed = 42;
  std::string dyn_out;
  auto* dyn = mb->add_subcommand(
      "dynamics", "local dynamics: nudge word frequencies whose cost ratio "
                  "leaves the band around C/H");
  dyn->add_option("--n", dyn_n, "number of words")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  dyn->add_option("--k0", dyn_k0, "cost offset")->capture_default_str();
  dyn->add_option("--c0", dyn_c0, "cost scale, bits per log2 unit")
      ->capture_default_str();
  dyn->add_option("--band", dyn_band, "half-width of the acceptance band, "
                                      "fraction of C/H, in (0, 1]")
      ->capture_default_str();
  dyn->add_option("--step", dyn_step, "multiplicative update factor, > 1")
      ->capture_default_str();
  dyn->add_option("--max-iters", dyn_max, "iteration cap")
      ->capture_default_str();
  dyn->add_option("--stride", dyn_stride, "record every k-th trajectory row")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  dyn->add_option("--floor", dyn_floor,
                  "probability floor for extinct words, in (0, 1/n)")
      ->capture_default_str();
  dyn->add_option("--seed", dyn_seed, seed_help)->capture_default_str();
  dyn->add_option("--out", dyn_out, out_help);
  dyn->callback([&] {
    run_mandelbrot_dynamics(dyn_n, dyn_k0, dyn_c0, dyn_band, dyn_step, dyn_max,
                            dyn_stride, dyn_floor, dyn_seed, dyn_out);
  });

  double pmf_b = 1.5, pmf_k0 = 0.0;
  std::size_t pmf_n = 1000;
  std::string pmf_out;
  auto* pmf = mb->add_subcommand(
      "pmf", "truncated distribution p_k proportional to (k + k0)^-B");
  pmf->add_option("--b", pmf_b, "exponent B, > 1")
      ->required()
      ->check(CLI::Range(1.0 + 1e-9, 1e3));
  pmf->add_option("--k0", pmf_k0, "rank offset, >= 0")->capture_default_str();
  pmf->add_option("--n", pmf_n, "number of ranks")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
  pmf->add_option("--out", pmf_out, out_help);
  pmf->callback([&] { run_mandelbrot_pmf(pmf_b, pmf_k0, pmf_n, pmf_out); });

  // --- baseline ----------------------------------------------------------
  auto* base = app.add_subcommand(
      "baseline", "stochastic text processes with no semantic structure");
  base->require_subcommand(1);

  std::size_t typ_alpha = 26, typ_chars = 1000000, typ_top = 0;
  std::uint64_t typ_seed = 42;
  std::string typ_out;
  auto* typ = base->add_subcommand(
      "typing", "random typing: uniform characters plus space, words split "
                "on spaces");
  typ->add_option("--alphabet", typ_alpha, "letters in the alphabet (1..62)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{62}));
  typ->add_option("--chars", typ_chars, "characters to generate")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000000}));
  typ->add_option("--seed", typ_seed, seed_help)->capture_default_str();
  typ->add_option("--top", typ_top, "write only the top N ranks (0 = all)")
      ->capture_default_str();
  typ->add_option("--out", typ_out, out_help);
  typ->callback([&] { run_baseline_typing(typ_alpha, typ_chars, typ_seed,
                                          typ_top, typ_out); });

  double sim_p = 0.1;
  std::size_t sim_tokens = 100000, sim_top = 0;
  std::uint64_t sim_seed = 42;
  std::string sim_out;
  auto* simon = base->add_subcommand(
      "simon", "Simon process: new word with probability p-new, else copy a "
               "uniformly chosen earlier token");
  simon->add_option("--p-new", sim_p, "new-word probability, in [0, 1]")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  simon->add_option("--tokens", sim_tokens, "tokens to generate")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000000}));
  simon->add_option("--seed", sim_seed, seed_help)->capture_default_str();
  simon->add_option("--top", sim_top, "write only the top N ranks (0 = all)")
      ->capture_default_str();
  simon->add_option("--out", sim_out, out_help);
  simon->callback([&] { run_baseline_simon(sim_p, sim_tokens, sim_seed,
                                           sim_top, sim_out); });

  // --- corpus ------------------------------------------------------------
  auto* corpus = app.add_subcommand(
      "corpus", "measurements on a text file (ASCII tokenization: lowercase, "
                "split on non-letters)");
  corpus->require_subcommand(1);

  std::string wl_input, wl_out;
  auto* wl = corpus->add_subcommand("wordlen",
                                    "distinct word types per character length");
  wl->add_option("--input", wl_input, "text file")
      ->required()
      ->check(CLI::ExistingFile);
  wl->add_option("--out", wl_out, out_help);
  wl->callback([&] { run_corpus_wordlen(wl_input, wl_out); });

  std::string nr_input, nr_out;
  std::size_t nr_window = 10000;
  auto* nr = corpus->add_subcommand(
      "newrate", "fraction of first-occurrence tokens per window");
  nr->add_option("--input", nr_input, "text file")
      ->required()
      ->check(CLI::ExistingFile);
  nr->add_option("--window", nr_window, "window length in tokens (>= 100)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{100}, std::size_t{100000000}));
  nr->add_option("--out", nr_out, out_help);
  nr->callback([&] { run_corpus_newrate(nr_input, nr_window, nr_out); });

  std::string rf_input, rf_out;
  std::size_t rf_top = 0;
  auto* rf = corpus->add_subcommand("rankfreq",
                                    "rank-frequency table of the token stream");
  rf->add_option("--input", rf_input, "text file")
      ->required()
      ->check(CLI::ExistingFile);
  rf->add_option("--top", rf_top, "write only the top N ranks (0 = all)")
      ->capture_default_str();
  rf->add_option("--out", rf_out, out_help);
  rf->callback([&] { run_corpus_rankfreq(rf_input, rf_top, rf_out); });

  // --- lex ---------------------------------------------------------------
  auto* lex = app.add_subcommand(
      "lex", "lexical statistics over the bundled fixture tables");
  lex->require_subcommand(1);
  const std::string fixdir_help =
      "fixture directory (default: $ZIPFTK_FIXTURE_DIR, else the compiled-in "
      "path)";

  std::string ls_fixture, ls_config, ls_dir, ls_out;
  double ls_tol = 0.20;
  auto* ls = lex->add_subcommand(
      "sum", "compare summed hyponym frequencies with the head frequency");
  ls->add_option("--fixture", ls_fixture, "fixture id, e.g. table05_human")
      ->required();
  ls->add_option("--config", ls_config,
                 "named exclusion config (default: the fixture's first)");
  ls->add_option("--tolerance", ls_tol,
                 "symmetric pass tolerance on the ratio")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 10.0));
  ls->add_option("--fixtures-dir", ls_dir, fixdir_help);
  ls->add_option("--out", ls_out, out_help);
  ls->callback([&] { run_lex_sum(ls_fixture, ls_config, ls_tol, ls_dir,
                                 ls_out); });

  std::string lp_fixture, lp_dir, lp_out;
  auto* lp = lex->add_subcommand(
      "pca", "principal-component split of an adjective-noun count matrix");
  lp->add_option("--fixture", lp_fixture, "fixture id, e.g. table12_bad_matrix")
      ->required();
  lp->add_option("--fixtures-dir", lp_dir, fixdir_help);
  lp->add_option("--out", lp_out, out_help);
  lp->callback([&] { run_lex_pca(lp_fixture, lp_dir, lp_out); });

  // --- fit ---------------------------------------------------------------
  std::string fit_input, fit_out;
  bool fit_spectrum = false;
  std::size_t fit_kmin = 0, fit_kmax = 0;
  double fit_cmin = 2.0, fit_cmax = 1000.0;
  auto* fit = app.add_subcommand(
      "fit", "power-law fit of a rank-frequency CSV (or, with --spectrum, a "
             "spectrum CSV)");
  fit->add_option("--input", fit_input, "CSV produced by this tool")
      ->required()
      ->check(CLI::ExistingFile);
  fit->add_flag("--spectrum", fit_spectrum,
                "fit the frequency spectrum (exponent beta) instead of the "
                "rank law (exponent B)");
  fit->add_option("--k-min", fit_kmin, "lowest rank in the window (0 = auto)")
      ->capture_default_str();
  fit->add_option("--k-max", fit_kmax, "highest rank in the window (0 = auto)")
      ->capture_default_str();
  fit->add_option("--center-min", fit_cmin,
                  "lowest bin center in the spectrum window")
      ->capture_default_str();
  fit->add_option("--center-max", fit_cmax,
                  "highest bin center in the spectrum window")
      ->capture_default_str();
  fit->add_option("--out", fit_out, out_help);
  fit->callback([&] {
    run_fit(fit_input, fit_spectrum, fit_kmin, fit_kmax, fit_cmin, fit_cmax,
            fit_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 1;
  } catch (const zipftk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
