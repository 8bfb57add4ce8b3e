// Acceptance gate: one function per shipped claim, each printing a single
// [PASS]/[FAIL] line. Runs every criterion by default; criterion numbers on
// the command line select a subset (e.g. "zipftk_acceptance 3 5"). Exit
// status is 0 only when every selected criterion holds. Tolerances are
// pinned here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zipftk/baselines.hpp"
#include "zipftk/covering.hpp"
#include "zipftk/fixtures.hpp"
#include "zipftk/lexsem.hpp"
#include "zipftk/mandelbrot.hpp"
#include "zipftk/meaning.hpp"
#include "zipftk/powerlaw.hpp"
#include "zipftk/rng.hpp"
#include "zipftk/zeta.hpp"

namespace {

using namespace zipftk;

// Always-on check: never compiled out in Release. Failing checks report and
// mark the criterion red but let the remaining checks run, so one criterion
// yields one summary line with every violated clause listed above it.
#define CHECK(cond, msg)                                                      \
  do {                                                                        \
    if (!(cond)) {                                                            \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg     \
                << "\n";                                                      \
      ok = false;                                                             \
    }                                                                         \
  } while (0)

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

static RankFrequencyTable table_of(const FrequencyVector& p) {
  RankFrequencyTable t;
  t.frequency = p;
  std::sort(t.frequency.begin(), t.frequency.end(), std::greater<double>());
  while (!t.frequency.empty() && t.frequency.back() <= 0.0)
    t.frequency.pop_back();
  return t;
}

// Mid-range fit window for simulator output: skip the flattened head, stop
// well before the dust tail.
static PowerLawFit fit_sim(const SimResult& r) {
  auto t = lengths_to_rank_freq(r);
  const std::size_t hi = std::max<std::size_t>(30, t.frequency.size() / 3);
  return fit_zipf_exponent(t, 10, hi);
}

static const FixtureCatalog& catalog() {
  static FixtureCatalog cat = FixtureCatalog::load(default_fixture_dir());
  return cat;
}

/* =======================
 * 1. Generalization simulator: Zipf exponent 1
 * ======================= */

static bool c1_generalization_exponent() {
  bool ok = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenParams p;
    p.n = 10000;
    p.seed = seed;
    const auto t0 = Clock::now();
    auto r = run_generalization(p);
    const double secs = seconds_since(t0);
    auto fit = fit_zipf_exponent(lengths_to_rank_freq(r), 10, 1000);
    std::cout << "  generalization n=10000 seed=" << seed << ": B=" << fit.B
              << " over ranks [10,1000], " << secs << " s\n";
    CHECK(std::fabs(fit.B - 1.0) <= 0.1,
          "seed " << seed << ": B=" << fit.B << " outside 1.0 +- 0.1");
    CHECK(secs < 60.0, "seed " << seed << ": " << secs << " s, budget 60 s");
  }
  return ok;
}

/* =======================
 * 2. Specialization simulator: exponent robust in gamma
 * ======================= */

static bool c2_specialization_exponent() {
  bool ok = true;
  for (double gamma : {1.1, 2.0, 10.0}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      SpecParams p;
      p.n = 10000;
      p.gamma = gamma;
      p.seed = seed;
      const auto t0 = Clock::now();
      auto r = run_specialization(p);
      const double secs = seconds_since(t0);
      auto fit = fit_sim(r);
      std::cout << "  specialization n=10000 gamma=" << gamma
                << " seed=" << seed << ": B=" << fit.B << " over ranks ["
                << fit.k_min << "," << fit.k_max << "], " << secs << " s\n";
      CHECK(std::fabs(fit.B - 1.0) <= 0.1,
            "gamma=" << gamma << " seed " << seed << ": B=" << fit.B
                     << " outside 1.0 +- 0.1");
      CHECK(secs < 120.0,
            "gamma=" << gamma << " seed " << seed << ": " << secs
                     << " s, budget 120 s");
    }
  }
  return ok;
}

/* =======================
 * 3. Layer diagnostics: gaps shrink with rank, vanish at depth
 * ======================= */

static bool check_layer_profile(bool& ok, const char* name, const Covering& c,
                                const std::vector<std::size_t>& ks) {
  auto rows = layer_diagnostics(c, ks);  // auto rho per probe rank
  if (rows.empty()) {
    CHECK(false, name << ": no admissible layer at any probe rank");
    return false;
  }
  double g2 = -1.0, g200 = -1.0;
  for (const auto& r : rows) {
    std::cout << "  " << name << " layer k=" << r.k << " rho=" << r.rho
              << ": gap=" << r.gap << " overlap=" << r.overlap << "\n";
    if (r.k == 2) g2 = r.gap;
    if (r.k == 200) g200 = r.gap;
  }
  CHECK(g2 >= 0.0 && g200 >= 0.0,
        name << ": probe ranks 2 and 200 must both be admissible");
  if (g2 >= 0.0 && g200 >= 0.0)
    CHECK(g200 < g2, name << ": gap(k=200)=" << g200
                          << " not below gap(k=2)=" << g2);
  CHECK(rows.back().gap < 0.1, name << ": gap at k=" << rows.back().k << " is "
                                    << rows.back().gap << ", want < 0.1");
  return true;
}

static bool c3_layer_diagnostics() {
  bool ok = true;
  GenParams g;
  g.n = 10000;
  g.seed = 1;
  auto gr = run_generalization(g);
  check_layer_profile(ok, "generalization", gr.covering, {2, 20, 200});

  SpecParams s;
  s.n = 10000;
  s.gamma = 1.1;
  s.seed = 1;
  auto sr = run_specialization(s);
  check_layer_profile(ok, "specialization", sr.covering,
                      {2, 20, 200, 500, 1000});
  return ok;
}

/* =======================
 * 4. Hierarchical covering: exact staircase, exact dyadic tiling
 * ======================= */

static bool c4_hierarchical_covering() {
  bool ok = true;
  auto c = hierarchical_covering(11);
  CHECK(c.size() == 4095, "expected 4095 intervals, got " << c.size());

  std::size_t exact = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double want =
        std::exp2(-std::floor(std::log2(static_cast<double>(i + 1))));
    if (c.intervals[i].length() == want) ++exact;
  }
  CHECK(exact == c.size(),
        "only " << exact << "/" << c.size() << " lengths match 2^-floor(log2 k) exactly");

  for (int d = 0; d <= 11; ++d) {
    auto prof = coverage_profile(layer(c, std::size_t{1} << d, 2.0 - kRhoResolution));
    CHECK(prof.gap == 0.0 && prof.overlap == 0.0,
          "dyadic layer at k=2^" << d << ": gap=" << prof.gap
                                 << " overlap=" << prof.overlap
                                 << ", want exactly 0/0");
  }

  auto fit = fit_zipf_exponent(lengths_to_rank_freq(c), 1, 4095);
  std::cout << "  hierarchical depth=11: B=" << fit.B << " over ranks [1,4095]\n";
  CHECK(std::fabs(fit.B - 1.0) <= 0.05, "B=" << fit.B << " outside 1.0 +- 0.05");
  return ok;
}

/* =======================
 * 5. Exponent solver: zeta(B, 1+k0) = 1
 * ======================= */

static bool c5_exponent_solver() {
  bool ok = true;
  const auto t0 = Clock::now();

  const double b10 = solve_exponent(10.0);
  std::cout << "  solve_exponent(10) = " << b10 << "\n";
  CHECK(std::fabs(b10 - 1.4) <= 0.1, "B(10)=" << b10 << " outside 1.4 +- 0.1");

  for (double k0 : {0.01, 0.001}) {
    bool threw = false;
    try {
      solve_exponent(k0);
    } catch (const NoRootError&) {
      threw = true;
    }
    CHECK(threw, "solve_exponent(" << k0 << ") found a root below b_max; "
                                   << "expected the no-root condition");
  }

  double prev = std::numeric_limits<double>::infinity();
  double last = 0.0;
  for (double k0 : {0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1000.0, 10000.0}) {
    const double b = solve_exponent(k0);
    std::cout << "  solve_exponent(" << k0 << ") = " << b << "\n";
    CHECK(b < prev, "B(k0) not strictly decreasing at k0=" << k0 << ": " << b
                    << " vs " << prev);
    prev = b;
    last = b;
  }
  CHECK(last < 1.15, "B(10000)=" << last << " not below 1.15");

  const double secs = seconds_since(t0);
  CHECK(secs < 5.0, "solver sweep took " << secs << " s, budget 5 s");
  return ok;
}

/* =======================
 * 6. Local dynamics: collapse without costs, Zipf tail with them
 * ======================= */

static bool c6_local_dynamics() {
  bool ok = true;
  const auto t0 = Clock::now();

  DynamicsConfig flat;
  flat.n_words = 100;
  flat.cost_model.k0 = 0.0;
  flat.trajectory_stride = 1000;
  auto rf = run_local_dynamics(flat, 42);
  std::size_t dominant = 0;
  for (double v : rf.p)
    if (v > 0.99) ++dominant;
  std::cout << "  k0=0 N=100: " << dominant << " frequency above 0.99, top="
            << *std::max_element(rf.p.begin(), rf.p.end()) << "\n";
  CHECK(dominant == 1,
        "k0=0: " << dominant << " frequencies above 0.99, want exactly 1");

  DynamicsConfig zm;
  zm.n_words = 1000;
  zm.cost_model.k0 = 10.0;
  zm.trajectory_stride = 1000;
  auto rz = run_local_dynamics(zm, 42);
  CHECK(rz.converged, "k0=10 N=1000: no fixed point within "
                          << zm.max_iters << " iterations");
  auto fit = fit_zipf_exponent(table_of(rz.p), 100, 1000);
  const double target = solve_exponent(10.0);
  std::cout << "  k0=10 N=1000: converged after " << rz.iterations
            << " sweeps, tail B=" << fit.B << " vs solver " << target << "\n";
  CHECK(std::fabs(fit.B - target) <= 0.15,
        "tail B=" << fit.B << " further than 0.15 from " << target);

  const double secs = seconds_since(t0);
  CHECK(secs < 60.0, "dynamics runs took " << secs << " s, budget 60 s");
  return ok;
}

/* =======================
 * 7. Random typing: analytic exponents
 * ======================= */

static bool c7_random_typing() {
  bool ok = true;
  const auto t0 = Clock::now();

  auto t2 = rank_frequency(random_typing(2, 10000000, 42));
  auto f2 = fit_zipf_exponent(t2, 1, 2000);
  std::cout << "  alphabet 2, 1e7 chars: " << t2.size() << " types, B=" << f2.B
            << "\n";
  CHECK(std::fabs(f2.B - 1.585) <= 0.1,
        "alphabet 2: B=" << f2.B << " outside 1.585 +- 0.1");

  auto t26 = rank_frequency(random_typing(26, 10000000, 42));
  auto f26 = fit_zipf_exponent(t26, 1, 2000);
  std::cout << "  alphabet 26, 1e7 chars: " << t26.size() << " types, B="
            << f26.B << "\n";
  CHECK(std::fabs(f26.B - 1.01) <= 0.05,
        "alphabet 26: B=" << f26.B << " outside 1.01 +- 0.05");

  const double secs = seconds_since(t0);
  CHECK(secs < 60.0, "typing runs took " << secs << " s, budget 60 s");
  return ok;
}

/* =======================
 * 8. Simon process: spectrum exponent, constant innovation rate
 * ======================= */

static bool c8_simon_process() {
  bool ok = true;
  auto stream = simon_process(0.1, 1000000, 42);

  auto spec = frequency_spectrum(rank_frequency(stream));
  auto fit = fit_spectrum_exponent(spec, 2.0, 1000.0);
  std::cout << "  p=0.1, 1e6 tokens: spectrum beta=" << fit.beta << " over "
            << fit.n_bins_used << " bins\n";
  CHECK(std::fabs(fit.beta - 2.11) <= 0.15,
        "beta=" << fit.beta << " outside 2.11 +- 0.15");

  auto rate = new_word_rate(stream, 10000);
  std::cout << "  new-word rate decay exponent = " << rate.fitted_decay_exponent
            << "\n";
  CHECK(std::fabs(rate.fitted_decay_exponent) <= 0.05,
        "decay exponent " << rate.fitted_decay_exponent
                          << " outside 0 +- 0.05");
  return ok;
}

/* =======================
 * 9. Compatibility-matrix PCA against the reference block
 * ======================= */

static bool c9_matrix_pca() {
  bool ok = true;
  const auto t0 = Clock::now();
  const auto& cat = catalog();
  auto m = cat.matrix("table12_bad_matrix");
  auto res = pca_classify(m);

  const auto& printed = cat.info("table12_bad_matrix").printed;
  const auto ref = printed.at("eigenvector").get<std::vector<double>>();
  CHECK(res.eigenvector.size() == ref.size(),
        "eigenvector has " << res.eigenvector.size() << " components, reference "
                           << ref.size());
  double worst = 0.0;
  for (std::size_t j = 0; j < ref.size() && j < res.eigenvector.size(); ++j)
    worst = std::max(worst, std::fabs(res.eigenvector[j] - ref[j]));
  std::cout << "  eigenvector: worst component deviation " << worst << "\n";
  CHECK(worst <= 0.02, "component deviation " << worst << " exceeds 0.02");

  std::set<std::string> got, want;
  for (std::size_t i = 0; i < res.retained_rows.size(); ++i)
    if (res.weights[i] > 0.0) got.insert(res.retained_rows[i]);
  for (const auto& w : printed.at("positive_rows"))
    want.insert(w.get<std::string>());
  CHECK(got == want, "positive-weight rows differ from the reference set ("
                         << got.size() << " vs " << want.size() << " words)");

  const double sum = positive_weight_frequency_sum(res, m);
  std::cout << "  positive-weight frequency sum = " << sum << " vs head 102.22\n";
  CHECK(std::fabs(sum - 103.64) <= 0.01, "sum=" << sum << " outside 103.64 +- 0.01");
  CHECK(std::fabs(sum / 102.22 - 1.0) <= 0.02,
        "sum/head ratio " << sum / 102.22 << " further than 2% from 1");

  const double secs = seconds_since(t0);
  CHECK(secs < 1.0, "matrix PCA took " << secs << " s, budget 1 s");
  return ok;
}

/* =======================
 * 10. Hyponym-sum suite over the bundled tables
 * ======================= */

// Two-digit table number from ids of the form "tableNN_description".
static int table_number(const std::string& id) {
  if (id.size() < 7 || id.compare(0, 5, "table") != 0) return -1;
  return std::atoi(id.substr(5, 2).c_str());
}

static bool c10_hyponym_suite() {
  bool ok = true;
  const auto& cat = catalog();
  std::size_t sums_checked = 0, passing_checked = 0;
  for (const auto& [id, fi] : cat.entries) {
    if (fi.kind != "hyponym_table") continue;
    auto base = cat.hyponym_table(id);
    const int num = table_number(id);
    const bool in_tolerance_scope =
        (num >= 1 && num <= 10) || (num >= 13 && num <= 15);
    for (const auto& cfg : fi.configs) {
      auto r = hyponym_sum_check(apply_config(base, cfg));
      // Each printed total must be reproduced to its printed precision,
      // unless the source's own rows contradict it; those cases carry a
      // recorded recomputed value that must be reproduced instead.
      auto expect = [&](const char* field, double printed, double got) {
        if (std::isnan(printed)) return;
        ++sums_checked;
        for (const auto& d : fi.discrepancies)
          if (d.config == cfg.name && d.field == field) {
            CHECK(std::fabs(got - d.recomputed) <= 0.005,
                  id << "/" << cfg.name << " " << field << ": got " << got
                     << ", recorded recomputation " << d.recomputed);
            return;
          }
        CHECK(std::fabs(got - printed) <= 0.005,
              id << "/" << cfg.name << " " << field << ": got " << got
                 << ", printed " << printed);
      };
      expect("head_sum", cfg.printed_head_sum, r.head_sum);
      expect("hyponym_sum", cfg.printed_hyponym_sum, r.hyponym_sum);
      if (in_tolerance_scope && cfg.marked_passing) {
        ++passing_checked;
        CHECK(r.pass, id << "/" << cfg.name << ": ratio " << r.ratio
                         << " fails the 20% check");
      }
    }
  }
  std::cout << "  " << sums_checked << " printed sums reproduced, "
            << passing_checked << " marked-passing configs within 20%\n";
  CHECK(sums_checked >= 40, "only " << sums_checked << " printed sums found");
  CHECK(passing_checked >= 13, "only " << passing_checked
                                       << " marked-passing configs in scope");
  return ok;
}

/* =======================
 * 11. Property suites, >= 1000 randomized cases each
 * ======================= */

static std::size_t zeta_shift_failures(std::size_t cases) {
  Rng rng(11);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    const double s = 1.05 + 3.0 * rng.next_unit();
    const double q = 0.1 + 30.0 * rng.next_unit();
    const auto lhs = hurwitz_zeta(s, q);
    const auto rhs = hurwitz_zeta(s, q + 1.0);
    const double tol =
        lhs.abs_error_bound + rhs.abs_error_bound + 1e-12 * lhs.value;
    if (std::fabs(lhs.value - (rhs.value + std::pow(q, -s))) > tol) ++bad;
  }
  return bad;
}

static std::size_t partition_failures(std::size_t cases) {
  Rng rng(12);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    Covering c;
    c.circular = (rng.below(2) == 0);
    const std::size_t n = 1 + rng.below(40);
    for (std::size_t j = 0; j < n; ++j) {
      if (c.circular) {
        c.intervals.push_back(centered_interval(
            rng.next_unit(), 1e-6 + 0.9 * rng.next_unit()));
      } else {
        const double a = rng.next_unit();
        const double b = rng.next_unit();
        c.intervals.push_back({std::min(a, b), std::max(a, b), false});
      }
    }
    const auto prof = coverage_profile(make_covering(c.intervals, c.circular));
    if (std::fabs(prof.gap + prof.exactly_once + prof.overlap - 1.0) > 1e-12)
      ++bad;
  }
  return bad;
}

static std::size_t harmonic_failures(std::size_t cases, std::string& witness) {
  Rng rng(13);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    const long k = 2 + static_cast<long>(rng.below(500));
    const long n = k + 1 + static_cast<long>(rng.below(5000));
    const auto b = harmonic_sum_bounds(k, n);
    if (!(b.lower < b.sum && b.sum < b.upper)) {
      if (bad == 0) {
        std::ostringstream os;
        os << "first counterexample k=" << k << " n=" << n << ": sum "
           << b.sum << " vs upper " << b.upper;
        witness = os.str();
      }
      ++bad;
    }
  }
  return bad;
}

static std::size_t normalization_failures(std::size_t cases) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    DynamicsConfig cfg;
    cfg.n_words = 30;
    cfg.cost_model.k0 = static_cast<double>(i % 5);
    cfg.max_iters = 3;
    auto r = run_local_dynamics(cfg, 2000 + i);
    double sum = 0.0;
    for (double v : r.p) sum += v;
    if (std::fabs(sum - 1.0) > 1e-12) ++bad;
  }
  return bad;
}

static bool same_sim(const SimResult& a, const SimResult& b) {
  if (a.iterations != b.iterations) return false;
  if (a.rng_trace_hash != b.rng_trace_hash) return false;
  if (a.covering.size() != b.covering.size()) return false;
  for (std::size_t i = 0; i < a.covering.size(); ++i) {
    const auto& x = a.covering.intervals[i];
    const auto& y = b.covering.intervals[i];
    if (x.lo != y.lo || x.hi != y.hi || x.wraps != y.wraps) return false;
  }
  return true;
}

static std::size_t determinism_failures() {
  std::size_t bad = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    GenParams p;
    p.n = 20;
    p.seed = 3000 + i;
    if (!same_sim(run_generalization(p), run_generalization(p))) ++bad;
  }
  for (std::uint64_t i = 0; i < 300; ++i) {
    SpecParams p;
    p.n = 30;
    p.gamma = 1.2 + 0.01 * static_cast<double>(i);
    p.seed = 4000 + i;
    if (!same_sim(run_specialization(p), run_specialization(p))) ++bad;
  }
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t m = 2 + i % 25;
    if (random_typing(m, 5000, 5000 + i).tokens !=
        random_typing(m, 5000, 5000 + i).tokens)
      ++bad;
  }
  for (std::uint64_t i = 0; i < 200; ++i) {
    const double p = 0.05 + 0.001 * static_cast<double>(i % 100);
    if (simon_process(p, 2000, 6000 + i).tokens !=
        simon_process(p, 2000, 6000 + i).tokens)
      ++bad;
  }
  return bad;
}

static bool c11_property_suites() {
  bool ok = true;
  const std::size_t zs = zeta_shift_failures(1000);
  std::cout << "  zeta shift identity: " << 1000 - zs << "/1000\n";
  CHECK(zs == 0, "zeta shift identity failed in " << zs << "/1000 cases");

  const std::size_t pf = partition_failures(1000);
  std::cout << "  gap+once+overlap partition: " << 1000 - pf << "/1000\n";
  CHECK(pf == 0, "partition identity failed in " << pf << "/1000 cases");

  std::string witness;
  const std::size_t hf = harmonic_failures(1000, witness);
  std::cout << "  harmonic-sum strict bounds: " << 1000 - hf << "/1000\n";
  CHECK(hf == 0, "harmonic bounds ordering failed in " << hf
                     << "/1000 cases; " << witness);

  const std::size_t nf = normalization_failures(1000);
  std::cout << "  dynamics normalization: " << 1000 - nf << "/1000\n";
  CHECK(nf == 0, "normalization preservation failed in " << nf << "/1000 cases");

  const std::size_t df = determinism_failures();
  std::cout << "  determinism under seed: " << 1000 - df << "/1000\n";
  CHECK(df == 0, "seed determinism failed in " << df << "/1000 paired runs");
  return ok;
}

struct Criterion {
  int id;
  const char* label;
  bool (*fn)();
};

const Criterion kCriteria[] = {
    {1, "generalization simulator reaches B = 1.0 +- 0.1", c1_generalization_exponent},
    {2, "specialization simulator robust to gamma, B = 1.0 +- 0.1", c2_specialization_exponent},
    {3, "layer gaps shrink with rank and vanish at depth", c3_layer_diagnostics},
    {4, "hierarchical covering tiles exactly and fits B = 1", c4_hierarchical_covering},
    {5, "exponent solver matches known roots and tail behavior", c5_exponent_solver},
    {6, "local dynamics collapse without costs, Zipf tail with them", c6_local_dynamics},
    {7, "random typing reproduces analytic exponents", c7_random_typing},
    {8, "Simon process spectrum and constant innovation rate", c8_simon_process},
    {9, "matrix PCA reproduces the reference classification", c9_matrix_pca},
    {10, "hyponym sums reproduce printed totals and 20% checks", c10_hyponym_suite},
    {11, "property suites hold on 1000 randomized cases each", c11_property_suites},
};

}  // namespace

int main(int argc, char** argv) {
  std::cout << std::setprecision(6);
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    char* end = nullptr;
    const long v = std::strtol(arg.c_str(), &end, 10);
    if (end == arg.c_str() || *end != '\0' || v < 1 || v > 11) {
      std::cerr << "usage: zipftk_acceptance [criterion...]  (criteria 1..11)\n";
      return 2;
    }
    selected.push_back(static_cast<int>(v));
  }
  if (selected.empty())
    for (const auto& c : kCriteria) selected.push_back(c.id);

  bool all_ok = true;
  for (int id : selected) {
    const Criterion& c = kCriteria[id - 1];
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::cerr << "[FAIL] criterion " << id << " aborted: " << e.what() << "\n";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": "
              << c.label << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
